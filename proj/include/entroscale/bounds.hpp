#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "entroscale/cone.hpp"
#include "entroscale/holo_tree.hpp"

namespace entroscale {

using Rational = boost::multiprecision::cpp_rational;

/// Entropy upper bound obtained by descending the causal cone down from
/// scale z': F(z') = R_{z'} (l_{z'})^D + N^tra_{z'} indices, each worth at
/// most log2(chi) bits.
struct BoundResult {
  int zprime = 0;
  BigInt F;
  double bound_bits = 0.0;
  Rational f_correction;
};

BoundResult bound_at_scale(const HolographicTree& tree, std::int64_t l0, int chi, int zprime);

/// F(z') for every z' in [0, zbar].
std::vector<BigInt> bound_profile(const HolographicTree& tree, std::int64_t l0);

/// f(l0) = sum_{z < zbar} R_z (2^{1-D})^z, summed directly and kept exact.
Rational f_correction(const HolographicTree& tree, std::int64_t l0);

/// Change F(z'+1) - F(z') for a regular tree when the cone width at z' is lz:
/// b^{z'} [ (1 + b/2^D)(lz + 2)^D - 2 lz^D ].
Rational delta(const HolographicTree& tree, std::int64_t lz, int zprime);

struct OptimalCut {
  int zstar = 0;
  BoundResult result;
};

/// Exhaustive scan of z' in [0, zbar]; ties resolve to the smallest z'.
OptimalCut optimal_cut_scale(const HolographicTree& tree, std::int64_t l0, int chi);

enum class ScalingKind {
  Constant,
  Log,
  BoundaryLaw,
  BoundaryTimesLog,
  BoundaryTimesPolyLog,
  PowerLaw,
  BulkLaw,
  Unclassified,
};

/// Leading-order behaviour of the bound, S_l <= constant * shape(l).
struct ScalingClass {
  ScalingKind kind = ScalingKind::Unclassified;
  int dim = 1;
  double constant = 0.0;  // bits, already multiplied by log2(chi)
  double exponent = 0.0;  // alpha for power/bulk laws, log power for polylog corrections
  std::string matched_family;  // how an explicit tree was recognised, empty otherwise
  std::vector<std::pair<std::int64_t, double>> f_table;  // (l0, f(l0)) on 2^k + 2 sizes

  /// Short human-readable name, e.g. "boundary × log".
  std::string name() const;
  /// Leading-order formula, e.g. "S_l <= 4 l log2(l)".
  std::string formula() const;
};

ScalingClass classify_scaling(const HolographicTree& tree, int chi = 2);

double to_double(const BigInt& v);
double to_double(const Rational& v);

}  // namespace entroscale
