#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <variant>
#include <vector>

namespace entroscale {

/// Every node splits into the same number of branches, R_z = b^z.
struct RegularKind {
  int branching = 1;
};

/// R_z tracks (2^{D-1})^z * z^kappa as closely as integer child counts allow.
struct PolyLogKind {
  int kappa = 0;
};

/// Child counts given level by level. levels[z] lists, for every node at
/// scale z, how many branches it splits into at scale z + 1.
struct ExplicitKind {
  std::vector<std::vector<int>> levels;
  bool generated = false;  // built by linear() / quadratic() rather than given by the user
};

using TreeKind = std::variant<RegularKind, PolyLogKind, ExplicitKind>;

/// Branching structure of a (branching) MERA in scale space.
///
/// Scale z = 0 is the physical lattice, which is a single branch. Trees are
/// validated on construction and immutable afterwards.
class HolographicTree {
 public:
  static HolographicTree regular(int dim, int branching);
  static HolographicTree polylog(int dim, int kappa);
  static HolographicTree from_levels(int dim, std::vector<std::vector<int>> levels,
                                     std::string label = "explicit");

  /// Tree whose branch count grows linearly, R_z = z + 1: at every scale the
  /// first node splits in two and the others pass through.
  static HolographicTree linear(int dim, int depth = 48);

  /// Tree with R_z = z(z+1)/2 + 1: at scale z the first z + 1 nodes split.
  static HolographicTree quadratic(int dim, int depth = 48);

  /// Parses the plain-text tree format (`z: c_1 c_2 ...`, `#` comments).
  static HolographicTree parse(int dim, std::istream& in, std::string label = "explicit");

  /// Builds a tree from a CLI shorthand: `regular:b`, `polylog:k`, `linear`,
  /// `quadratic` or `file:<path>`.
  static HolographicTree from_spec(int dim, const std::string& spec);

  int dim() const { return dim_; }
  const TreeKind& kind() const { return kind_; }
  const std::string& label() const { return label_; }

  /// Number of decoupled branches at scale z. Throws std::overflow_error if
  /// the count does not fit in 64 bits.
  std::uint64_t branch_count(int z) const;

  /// Child count of every node at scale z, in node order.
  std::vector<int> child_counts(int z) const;

  /// Number of levels given explicitly (0 for the generated families).
  int defined_depth() const;

  /// Writes the tree down to `depth` levels in the plain-text format.
  std::string to_text(int depth) const;

 private:
  HolographicTree(int dim, TreeKind kind, std::string label);

  static HolographicTree generated(HolographicTree tree);
  int max_children() const { return 1 << dim_; }
  std::uint64_t polylog_target(int z) const;
  std::uint64_t polylog_count(int z) const;
  int explicit_child(int z, std::size_t node) const;

  int dim_;
  TreeKind kind_;
  std::string label_;
  std::vector<std::int64_t> last_prefix_;  // prefix sums of the last explicit level
};

}  // namespace entroscale
