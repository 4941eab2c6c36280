#include "entroscale/cone.hpp"

#include <bit>
#include <string>

#include "entroscale/errors.hpp"

namespace entroscale {

namespace {

BigInt ipow(std::int64_t base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

bool is_special_size(std::int64_t l0) {
  if (l0 < 4) return false;
  const auto core = static_cast<std::uint64_t>(l0 - 2);
  return std::has_single_bit(core);
}

int crossover_scale(std::int64_t l0) {
  if (!is_special_size(l0)) {
    std::int64_t below = 0;
    std::int64_t above = 4;
    while (above < l0) {
      below = above;
      above = 2 * above - 2;
    }
    std::string msg = "block size " + std::to_string(l0) + " is not of the form 2^k + 2 (k >= 1); nearest valid size";
    if (below == 0) {
      msg += " is 4";
    } else {
      msg += "s are " + std::to_string(below) + " and " + std::to_string(above);
    }
    throw InvalidInput(msg);
  }
  return std::countr_zero(static_cast<std::uint64_t>(l0 - 2));
}

BigInt traced_sites(std::int64_t width, int dim) {
  return ipow(width + 2, dim) - ipow(width, dim);
}

ConeProfile cone_profile(std::int64_t l0, int dim) {
  if (dim < 1) throw InvalidInput("dimension must be positive");
  ConeProfile p;
  p.dim = dim;
  p.l0 = l0;
  p.zbar = crossover_scale(l0);
  p.widths.reserve(static_cast<std::size_t>(p.zbar) + 1);
  std::int64_t width = l0;
  for (int z = 0; z < p.zbar; ++z) {
    p.widths.push_back(width);
    p.traced.push_back(traced_sites(width, dim));
    width = (width + 2) / 2;
  }
  p.widths.push_back(width);
  return p;
}

BigInt cumulative_traced(const ConeProfile& profile, const HolographicTree& tree, int zprime) {
  if (tree.dim() != profile.dim) {
    throw InvalidInput("tree dimension " + std::to_string(tree.dim()) + " does not match profile dimension " +
                       std::to_string(profile.dim));
  }
  if (zprime < 0 || zprime > profile.zbar) {
    throw InvalidInput("cut scale " + std::to_string(zprime) + " outside [0, " + std::to_string(profile.zbar) + "]");
  }
  BigInt total = 0;
  for (int z = 0; z < zprime; ++z) total += exact_branch_count(tree, z) * profile.traced[static_cast<std::size_t>(z)];
  return total;
}

BigInt exact_branch_count(const HolographicTree& tree, int z) {
  if (const auto* reg = std::get_if<RegularKind>(&tree.kind())) {
    if (z < 0) throw InvalidInput("scale index must be non-negative");
    return boost::multiprecision::pow(BigInt(reg->branching), static_cast<unsigned>(z));
  }
  return BigInt(tree.branch_count(z));
}

ConeWidthBounds cone_width_bounds(std::int64_t l0, int scales) {
  if (l0 < 1) throw InvalidInput("block size must be positive");
  ConeWidthBounds b;
  std::int64_t lo = l0;
  std::int64_t hi = l0;
  for (int z = 0; z <= scales; ++z) {
    b.lower.push_back(lo);
    b.upper.push_back(hi);
    lo = (lo + 3) / 2;  // ceil((lo + 2) / 2)
    hi = (hi + 4) / 2;  // floor((hi + 4) / 2)
  }
  return b;
}

}  // namespace entroscale
