#include "entroscale/holo_tree.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "checked_math.hpp"
#include "entroscale/errors.hpp"

namespace entroscale {

namespace {

void require_dim(int dim) {
  if (dim < 1 || dim > 8) throw InvalidInput("dimension must lie in [1, 8], got " + std::to_string(dim));
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw InvalidInput("cannot parse " + what + " from '" + text + "'");
  return value;
}

}  // namespace

HolographicTree HolographicTree::generated(HolographicTree tree) {
  std::get<ExplicitKind>(tree.kind_).generated = true;
  return tree;
}

HolographicTree::HolographicTree(int dim, TreeKind kind, std::string label)
    : dim_(dim), kind_(std::move(kind)), label_(std::move(label)) {
  if (const auto* ex = std::get_if<ExplicitKind>(&kind_)) {
    const auto& last = ex->levels.back();
    last_prefix_.assign(last.size() + 1, 0);
    for (std::size_t i = 0; i < last.size(); ++i) last_prefix_[i + 1] = last_prefix_[i] + last[i];
  }
}

HolographicTree HolographicTree::regular(int dim, int branching) {
  require_dim(dim);
  if (branching < 1 || branching > (1 << dim)) {
    throw InvalidInput("branching ratio must lie in [1, 2^D] = [1, " + std::to_string(1 << dim) +
                       "], got " + std::to_string(branching));
  }
  return HolographicTree(dim, RegularKind{branching}, "regular:" + std::to_string(branching));
}

HolographicTree HolographicTree::polylog(int dim, int kappa) {
  require_dim(dim);
  if (kappa < 0) throw InvalidInput("polylog exponent kappa must be non-negative");
  return HolographicTree(dim, PolyLogKind{kappa}, "polylog:" + std::to_string(kappa));
}

HolographicTree HolographicTree::from_levels(int dim, std::vector<std::vector<int>> levels,
                                             std::string label) {
  require_dim(dim);
  if (levels.empty()) throw InvalidInput("explicit tree needs at least one level");
  if (levels.front().size() != 1) throw InvalidInput("level 0 of a holographic tree must have exactly one node");
  const int cap = 1 << dim;
  for (std::size_t z = 0; z < levels.size(); ++z) {
    for (int c : levels[z]) {
      if (c < 1 || c > cap) {
        throw InvalidInput("child count " + std::to_string(c) + " at level " + std::to_string(z) +
                           " outside [1, " + std::to_string(cap) + "]");
      }
    }
    if (z + 1 < levels.size()) {
      const auto expected = std::accumulate(levels[z].begin(), levels[z].end(), std::size_t{0});
      if (levels[z + 1].size() != expected) {
        throw InvalidInput("level " + std::to_string(z + 1) + " has " + std::to_string(levels[z + 1].size()) +
                           " nodes but level " + std::to_string(z) + " produces " + std::to_string(expected));
      }
    }
  }
  return HolographicTree(dim, ExplicitKind{std::move(levels)}, std::move(label));
}

HolographicTree HolographicTree::linear(int dim, int depth) {
  std::vector<std::vector<int>> levels;
  for (int z = 0; z < depth; ++z) {
    std::vector<int> level(static_cast<std::size_t>(z) + 1, 1);
    level[0] = 2;
    levels.push_back(std::move(level));
  }
  return generated(from_levels(dim, std::move(levels), "linear"));
}

HolographicTree HolographicTree::quadratic(int dim, int depth) {
  std::vector<std::vector<int>> levels;
  std::size_t nodes = 1;
  for (int z = 0; z < depth; ++z) {
    std::vector<int> level(nodes, 1);
    const auto splits = std::min(nodes, static_cast<std::size_t>(z) + 1);
    std::fill(level.begin(), level.begin() + static_cast<std::ptrdiff_t>(splits), 2);
    nodes += splits;
    levels.push_back(std::move(level));
  }
  return generated(from_levels(dim, std::move(levels), "quadratic"));
}

HolographicTree HolographicTree::parse(int dim, std::istream& in, std::string label) {
  std::vector<std::vector<int>> levels;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw InvalidInput("tree line " + std::to_string(line_no) + ": expected 'z: c_1 c_2 ...'");
    }
    const int z = parse_int(trim(line.substr(0, colon)), "scale index");
    if (z != static_cast<int>(levels.size())) {
      throw InvalidInput("tree line " + std::to_string(line_no) + ": expected level " +
                         std::to_string(levels.size()) + ", found " + std::to_string(z));
    }
    std::istringstream counts(line.substr(colon + 1));
    std::vector<int> level;
    std::string token;
    while (counts >> token) level.push_back(parse_int(token, "child count"));
    if (level.empty()) throw InvalidInput("tree line " + std::to_string(line_no) + ": no child counts");
    levels.push_back(std::move(level));
  }
  return from_levels(dim, std::move(levels), std::move(label));
}

HolographicTree HolographicTree::from_spec(int dim, const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
  if (head == "regular" && !arg.empty()) return regular(dim, parse_int(arg, "branching ratio"));
  if (head == "polylog" && !arg.empty()) return polylog(dim, parse_int(arg, "polylog exponent"));
  if (head == "linear" && arg.empty()) return linear(dim);
  if (head == "quadratic" && arg.empty()) return quadratic(dim);
  if (head == "file" && !arg.empty()) {
    std::ifstream in(arg);
    if (!in) throw InvalidInput("cannot open tree file '" + arg + "'");
    return parse(dim, in, spec);
  }
  throw InvalidInput("unknown tree spec '" + spec +
                     "' (expected regular:b, polylog:k, linear, quadratic or file:path)");
}

std::uint64_t HolographicTree::polylog_target(int z) const {
  const auto& kind = std::get<PolyLogKind>(kind_);
  return detail::checked_mul(detail::checked_pow(std::uint64_t{1} << (dim_ - 1), z),
                             detail::checked_pow(static_cast<std::uint64_t>(z), kind.kappa));
}

std::uint64_t HolographicTree::polylog_count(int z) const {
  std::uint64_t r = 1;
  for (int k = 1; k <= z; ++k) {
    const std::uint64_t hi = detail::checked_mul(r, static_cast<std::uint64_t>(max_children()));
    r = std::clamp(polylog_target(k), r, hi);
  }
  return r;
}

int HolographicTree::explicit_child(int z, std::size_t node) const {
  const auto& levels = std::get<ExplicitKind>(kind_).levels;
  if (static_cast<std::size_t>(z) < levels.size()) return levels[static_cast<std::size_t>(z)][node];
  const auto& last = levels.back();
  return last[node % last.size()];
}

std::uint64_t HolographicTree::branch_count(int z) const {
  if (z < 0) throw InvalidInput("scale index must be non-negative");
  if (const auto* reg = std::get_if<RegularKind>(&kind_)) {
    return detail::checked_pow(static_cast<std::uint64_t>(reg->branching), z);
  }
  if (std::holds_alternative<PolyLogKind>(kind_)) return polylog_count(z);

  const auto& levels = std::get<ExplicitKind>(kind_).levels;
  const auto defined = static_cast<int>(levels.size());
  if (z == 0) return 1;
  if (z <= defined) {
    const auto& level = levels[static_cast<std::size_t>(z - 1)];
    return std::accumulate(level.begin(), level.end(), std::uint64_t{0});
  }
  // Beyond the defined depth every node copies the child count found at the
  // same position (cyclically) in the last defined level.
  const auto len = static_cast<std::uint64_t>(last_prefix_.size() - 1);
  const auto total = static_cast<std::uint64_t>(last_prefix_.back());
  std::uint64_t r = branch_count(defined);
  for (int k = defined; k < z; ++k) {
    r = detail::checked_add(detail::checked_mul(r / len, total),
                            static_cast<std::uint64_t>(last_prefix_[static_cast<std::size_t>(r % len)]));
  }
  return r;
}

std::vector<int> HolographicTree::child_counts(int z) const {
  const std::uint64_t nodes = branch_count(z);
  if (const auto* reg = std::get_if<RegularKind>(&kind_)) {
    return std::vector<int>(static_cast<std::size_t>(nodes), reg->branching);
  }
  std::vector<int> counts(static_cast<std::size_t>(nodes), 1);
  if (std::holds_alternative<PolyLogKind>(kind_)) {
    std::uint64_t extra = polylog_count(z + 1) - nodes;
    for (auto& c : counts) {
      if (extra == 0) break;
      const auto add = std::min<std::uint64_t>(extra, static_cast<std::uint64_t>(max_children() - 1));
      c += static_cast<int>(add);
      extra -= add;
    }
    return counts;
  }
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] = explicit_child(z, i);
  return counts;
}

int HolographicTree::defined_depth() const {
  if (const auto* ex = std::get_if<ExplicitKind>(&kind_)) return ex->generated ? 0 : static_cast<int>(ex->levels.size());
  return 0;
}

std::string HolographicTree::to_text(int depth) const {
  std::ostringstream out;
  out << "# holographic tree " << label_ << ", D=" << dim_ << "\n";
  for (int z = 0; z < depth; ++z) {
    out << z << ":";
    for (int c : child_counts(z)) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace entroscale
