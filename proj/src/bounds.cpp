#include "entroscale/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "entroscale/errors.hpp"

namespace entroscale {

namespace {

BigInt ipow(std::int64_t base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_chi(int chi) {
  if (chi < 2) throw InvalidInput("bond dimension chi must be at least 2, got " + std::to_string(chi));
}

int regular_branching(const HolographicTree& tree, const char* op) {
  const auto* reg = std::get_if<RegularKind>(&tree.kind());
  if (reg == nullptr) throw InvalidInput(std::string(op) + " requires a regular holographic tree");
  return reg->branching;
}

// sum_{j >= 1} b^{-j} ((2^j + 4)^D - (2^j + 2)^D), expanded binomially so the
// difference never cancels.
long double power_law_tail(int dim, int b) {
  long double binom = 1.0L;
  std::vector<long double> coeff(static_cast<std::size_t>(dim) + 1, 0.0L);
  for (int k = 1; k <= dim; ++k) {
    binom = binom * (dim - k + 1) / k;
    coeff[static_cast<std::size_t>(k)] = binom * (std::pow(4.0L, k) - std::pow(2.0L, k));
  }
  const long double ln2 = std::log(2.0L);
  const long double lnb = std::log(static_cast<long double>(b));
  long double sum = 0.0L;
  for (int j = 1; j < 200000; ++j) {
    long double term = 0.0L;
    for (int k = 1; k <= dim; ++k) {
      term += coeff[static_cast<std::size_t>(k)] * std::exp((dim - k) * j * ln2 - j * lnb);
    }
    sum += term;
    if (term < 1e-19L * sum) break;
  }
  return sum;
}

std::string trim_number(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// Horizon up to which branch counts of an explicit tree stay representable.
int count_horizon(const HolographicTree& tree, int limit) {
  int h = 0;
  try {
    while (h < limit) {
      if (tree.branch_count(h + 1) > (std::uint64_t{1} << 60)) break;
      ++h;
    }
  } catch (const std::overflow_error&) {
  }
  return h;
}

}  // namespace

double to_double(const BigInt& v) { return v.convert_to<double>(); }
double to_double(const Rational& v) { return v.convert_to<double>(); }

std::vector<BigInt> bound_profile(const HolographicTree& tree, std::int64_t l0) {
  const ConeProfile profile = cone_profile(l0, tree.dim());
  std::vector<BigInt> out;
  out.reserve(profile.widths.size());
  BigInt traced = 0;
  for (int z = 0; z <= profile.zbar; ++z) {
    const BigInt r = exact_branch_count(tree, z);
    out.push_back(r * ipow(profile.widths[static_cast<std::size_t>(z)], tree.dim()) + traced);
    if (z < profile.zbar) traced += r * profile.traced[static_cast<std::size_t>(z)];
  }
  return out;
}

Rational f_correction(const HolographicTree& tree, std::int64_t l0) {
  const int zbar = crossover_scale(l0);
  const BigInt ratio_den = BigInt(1) << (tree.dim() - 1);
  Rational sum = 0;
  BigInt den = 1;
  for (int z = 0; z < zbar; ++z) {
    sum += Rational(exact_branch_count(tree, z), den);
    den *= ratio_den;
  }
  return sum;
}

BoundResult bound_at_scale(const HolographicTree& tree, std::int64_t l0, int chi, int zprime) {
  require_chi(chi);
  const ConeProfile profile = cone_profile(l0, tree.dim());
  if (zprime < 0 || zprime > profile.zbar) {
    throw InvalidInput("cut scale " + std::to_string(zprime) + " outside [0, " + std::to_string(profile.zbar) + "]");
  }
  BoundResult r;
  r.zprime = zprime;
  r.F = exact_branch_count(tree, zprime) * ipow(profile.widths[static_cast<std::size_t>(zprime)], tree.dim()) +
        cumulative_traced(profile, tree, zprime);
  r.bound_bits = std::log2(static_cast<double>(chi)) * to_double(r.F);
  r.f_correction = f_correction(tree, l0);
  return r;
}

Rational delta(const HolographicTree& tree, std::int64_t lz, int zprime) {
  const int b = regular_branching(tree, "delta");
  if (lz < 3) throw InvalidInput("cone width must be at least 3");
  if (zprime < 0) throw InvalidInput("cut scale must be non-negative");
  const int dim = tree.dim();
  const BigInt cells = BigInt(1) << dim;
  const BigInt numer = (cells + b) * ipow(lz + 2, dim) - 2 * cells * ipow(lz, dim);
  return Rational(ipow(b, zprime) * numer, cells);
}

OptimalCut optimal_cut_scale(const HolographicTree& tree, std::int64_t l0, int chi) {
  require_chi(chi);
  const auto profile = bound_profile(tree, l0);
  int best = 0;
  for (int z = 1; z < static_cast<int>(profile.size()); ++z) {
    if (profile[static_cast<std::size_t>(z)] < profile[static_cast<std::size_t>(best)]) best = z;
  }
  return {best, bound_at_scale(tree, l0, chi, best)};
}

std::string ScalingClass::name() const {
  switch (kind) {
    case ScalingKind::Constant: return "constant";
    case ScalingKind::Log: return "log";
    case ScalingKind::BoundaryLaw: return "boundary";
    case ScalingKind::BoundaryTimesLog: return "boundary × log";
    case ScalingKind::BoundaryTimesPolyLog: return "boundary × log^" + trim_number(exponent);
    case ScalingKind::PowerLaw: return "power l^" + trim_number(exponent);
    case ScalingKind::BulkLaw: return "bulk";
    case ScalingKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

std::string ScalingClass::formula() const {
  const std::string k = trim_number(constant);
  const std::string boundary = dim == 1 ? "" : (dim == 2 ? " l" : " l^" + std::to_string(dim - 1));
  switch (kind) {
    case ScalingKind::Constant: return "S_l <= " + k;
    case ScalingKind::Log: return "S_l <= " + k + " log2(l)";
    case ScalingKind::BoundaryLaw: return "S_l <= " + k + boundary;
    case ScalingKind::BoundaryTimesLog: return "S_l <= " + k + boundary + " log2(l)";
    case ScalingKind::BoundaryTimesPolyLog: return "S_l <= " + k + boundary + " log2(l)^" + trim_number(exponent);
    case ScalingKind::PowerLaw:
    case ScalingKind::BulkLaw: return "S_l <= " + k + " l^" + trim_number(exponent);
    case ScalingKind::Unclassified: return "no closed form; see f(l0) table";
  }
  return {};
}

namespace {

ScalingClass classify_regular(int dim, int b, double bits) {
  ScalingClass c;
  c.dim = dim;
  const int half = 1 << (dim - 1);
  const int full = 1 << dim;
  if (b < half) {
    c.kind = ScalingKind::BoundaryLaw;
    c.exponent = dim - 1;
    c.constant = bits * 2.0 * dim / (1.0 - static_cast<double>(b) / half);
  } else if (b == half) {
    c.kind = dim == 1 ? ScalingKind::Log : ScalingKind::BoundaryTimesLog;
    c.exponent = 1.0;
    c.constant = bits * 2.0 * dim;
  } else if (b < full) {
    c.kind = ScalingKind::PowerLaw;
    c.exponent = std::log2(static_cast<double>(b));
    c.constant = bits * static_cast<double>(std::pow(3.0L, dim) + power_law_tail(dim, b));
  } else {
    // Unitary limit: the z' = 0 bound l^D is already the tightest.
    c.kind = ScalingKind::BulkLaw;
    c.exponent = dim;
    c.constant = bits;
  }
  return c;
}

ScalingClass classify_polylog(int dim, int kappa, double bits) {
  if (kappa == 0) return classify_regular(dim, 1 << (dim - 1), bits);
  ScalingClass c;
  c.dim = dim;
  c.kind = ScalingKind::BoundaryTimesPolyLog;
  c.exponent = kappa + 1;
  c.constant = bits * 2.0 * dim / (kappa + 1);
  return c;
}

double shape(const ScalingClass& c, double l) {
  const double boundary = std::pow(l, c.dim - 1);
  switch (c.kind) {
    case ScalingKind::Constant:
    case ScalingKind::BoundaryLaw: return boundary;
    case ScalingKind::Log:
    case ScalingKind::BoundaryTimesLog: return boundary * std::log2(l);
    case ScalingKind::BoundaryTimesPolyLog: return boundary * std::pow(std::log2(l), c.exponent);
    case ScalingKind::PowerLaw:
    case ScalingKind::BulkLaw: return std::pow(l, c.exponent);
    case ScalingKind::Unclassified: return 1.0;
  }
  return 1.0;
}

ScalingClass classify_explicit(const HolographicTree& tree, int chi) {
  const int dim = tree.dim();
  const double bits = std::log2(static_cast<double>(chi));
  const int horizon = count_horizon(tree, 48);

  ScalingClass c;
  c.dim = dim;
  for (int k = 1; k <= std::min(horizon, 40); ++k) {
    const std::int64_t l0 = (std::int64_t{1} << k) + 2;
    c.f_table.emplace_back(l0, to_double(f_correction(tree, l0)));
  }
  if (horizon < 16) return c;

  std::vector<long double> r(static_cast<std::size_t>(horizon) + 1);
  for (int z = 0; z <= horizon; ++z) r[static_cast<std::size_t>(z)] = static_cast<long double>(tree.branch_count(z));

  // Geometric tail: R_{z+1} = b R_z over the second half of the horizon.
  const int mid = horizon / 2;
  const std::uint64_t base = tree.branch_count(mid);
  const std::uint64_t next = tree.branch_count(mid + 1);
  if (next % base == 0) {
    const auto b = next / base;
    bool geometric = b >= 1 && b <= (std::uint64_t{1} << dim);
    for (int z = mid; geometric && z < horizon; ++z) {
      geometric = tree.branch_count(z + 1) == b * tree.branch_count(z);
    }
    if (geometric) {
      ScalingClass m = classify_regular(dim, static_cast<int>(b), bits);
      m.matched_family = "regular:" + std::to_string(b) + " tail";
      c.kind = m.kind;
      c.exponent = m.exponent;
      c.matched_family = m.matched_family;
    }
  }
  if (c.kind == ScalingKind::Unclassified) {
    // R_z ~ (2^{D-1})^z z^kappa: the normalised ratio must settle.
    for (int kappa = 0; kappa <= 4; ++kappa) {
      auto normalised = [&](int z) {
        return r[static_cast<std::size_t>(z)] /
               (std::pow(2.0L, static_cast<long double>((dim - 1) * z)) * std::pow(static_cast<long double>(z), kappa));
      };
      const long double drift = normalised(horizon) / normalised(mid);
      if (drift > 0.9L && drift < 1.1L) {
        const ScalingClass m = classify_polylog(dim, kappa, bits);
        c.kind = m.kind;
        c.exponent = m.exponent;
        c.matched_family = "polylog:" + std::to_string(kappa) + " asymptotics";
        break;
      }
    }
  }
  if (c.kind != ScalingKind::Unclassified) {
    // Leading constant estimated at the largest block the horizon supports.
    const int k = std::min(horizon, 40);
    const std::int64_t l0 = (std::int64_t{1} << k) + 2;
    const auto profile = bound_profile(tree, l0);
    const BigInt& best = c.kind == ScalingKind::BulkLaw ? profile.front() : profile.back();
    c.constant = bits * to_double(best) / shape(c, static_cast<double>(l0));
  }
  return c;
}

}  // namespace

ScalingClass classify_scaling(const HolographicTree& tree, int chi) {
  require_chi(chi);
  const double bits = std::log2(static_cast<double>(chi));
  if (const auto* reg = std::get_if<RegularKind>(&tree.kind())) return classify_regular(tree.dim(), reg->branching, bits);
  if (const auto* poly = std::get_if<PolyLogKind>(&tree.kind())) return classify_polylog(tree.dim(), poly->kappa, bits);
  return classify_explicit(tree, chi);
}

}  // namespace entroscale
