#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "entroscale/holo_tree.hpp"

namespace entroscale {

using BigInt = boost::multiprecision::cpp_int;

/// Causal-cone geometry of a hypercubic block of linear size l0 = 2^zbar + 2
/// placed at the special location where no disentangler straddles the cone
/// boundary in the shrinking regime.
struct ConeProfile {
  int dim = 1;
  std::int64_t l0 = 0;
  int zbar = 0;
  std::vector<std::int64_t> widths;  // l_0 .. l_zbar, per branch
  std::vector<BigInt> traced;        // n^tra_0 .. n^tra_{zbar-1}, per branch
};

/// zbar = log2(l0 - 2). Rejects sizes not of the form 2^k + 2 (k >= 1).
int crossover_scale(std::int64_t l0);

/// True for 4, 6, 10, 18, 34, ...
bool is_special_size(std::int64_t l0);

/// Sites traced out per branch when the cone width at scale z is `width`:
/// (width + 2)^D - width^D.
BigInt traced_sites(std::int64_t width, int dim);

ConeProfile cone_profile(std::int64_t l0, int dim);

/// N^tra_{z'} = sum_{z < z'} R_z n^tra_z.
/// R_z without the 64-bit limit of HolographicTree::branch_count for regular trees.
BigInt exact_branch_count(const HolographicTree& tree, int z);

BigInt cumulative_traced(const ConeProfile& profile, const HolographicTree& tree, int zprime);

/// Widths allowed for a block at an arbitrary location, from the one-layer
/// bracket (l_z + 2)/2 <= l_{z+1} <= (l_z + 4)/2.
struct ConeWidthBounds {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
};

ConeWidthBounds cone_width_bounds(std::int64_t l0, int scales);

}  // namespace entroscale
