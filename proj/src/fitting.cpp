#include "entroscale/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>

#include <Eigen/Dense>

#include "entroscale/errors.hpp"

namespace entroscale {

namespace {

constexpr int kAlphaGrid = 200;
constexpr double kGoldenTolerance = 1e-13;
constexpr double kRelativeNoise = 1e-12;

struct Samples {
  Eigen::VectorXd l;
  Eigen::VectorXd s;
};

bool uses_log(Family f) { return f == Family::AffineLog || f == Family::BoundaryLog || f == Family::PolyLog; }

double shape(const Candidate& cand, int dim, double alpha, double l) {
  switch (cand.family) {
    case Family::AffineLog:
      return std::log2(l);
    case Family::Boundary:
      return std::pow(l, dim - 1);
    case Family::BoundaryLog:
      return std::pow(l, dim - 1) * std::log2(l);
    case Family::PolyLog:
      return std::pow(std::log2(l), cand.q);
    case Family::Power:
      return std::pow(l, alpha);
  }
  return 0.0;
}

struct Linear {
  double a = 0.0;
  double c = 0.0;
  double rss = 0.0;
};

Linear solve_linear(const Samples& data, const Candidate& cand, int dim, double alpha) {
  const auto n = data.l.size();
  Eigen::MatrixXd design(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = shape(cand, dim, alpha, data.l(i));
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < 2) throw InvalidInput("fit of " + cand.name() + " is degenerate on these samples");
  const Eigen::Vector2d p = qr.solve(data.s);
  return {p(0), p(1), (design * p - data.s).squaredNorm()};
}

// Residuals below this per-sample variance are rounding noise; exact fits tie
// and fall through to the parameter-count and declaration-order rules.
double rss_floor(const Samples& data) {
  const double scale = std::max(data.s.cwiseAbs().maxCoeff(), 1.0);
  return std::max(1e-300, std::pow(kRelativeNoise * scale, 2));
}

std::string format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

Candidate Candidate::parse(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (t == "affinelog") return {Family::AffineLog, 1};
  if (t == "boundary") return {Family::Boundary, 1};
  if (t == "boundarylog") return {Family::BoundaryLog, 1};
  if (t == "power") return {Family::Power, 1};
  if (t.rfind("polylog:", 0) == 0) {
    const std::string arg = t.substr(8);
    std::size_t used = 0;
    int q = 0;
    try {
      q = std::stoi(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != arg.size() || q < 1) throw InvalidInput("polylog exponent must be an integer >= 1 in '" + text + "'");
    return {Family::PolyLog, q};
  }
  throw InvalidInput("unknown model family '" + text + "' (expected affinelog, boundary, boundarylog, polylog:q or power)");
}

std::string Candidate::name() const {
  switch (family) {
    case Family::AffineLog:
      return "AffineLog";
    case Family::Boundary:
      return "Boundary";
    case Family::BoundaryLog:
      return "BoundaryLog";
    case Family::PolyLog:
      return "PolyLog q=" + std::to_string(q);
    case Family::Power:
      return "Power";
  }
  return "?";
}

int FitModel::parameter_count() const { return candidate.family == Family::Power ? 3 : 2; }

double FitModel::evaluate(double l) const { return a + c * shape(candidate, dim, alpha, l); }

std::string FitModel::formula() const {
  const std::string head = format(a) + " + " + format(c);
  switch (candidate.family) {
    case Family::AffineLog:
      return head + " log2(l)";
    case Family::Boundary:
      return head + " l^" + std::to_string(dim - 1);
    case Family::BoundaryLog:
      return head + " l^" + std::to_string(dim - 1) + " log2(l)";
    case Family::PolyLog:
      return head + " log2(l)^" + std::to_string(candidate.q);
    case Family::Power:
      return head + " l^" + format(alpha);
  }
  return head;
}

FitResult fit(const EntropyCurve& curve, const Candidate& candidate, int dim, const FitOptions& options) {
  if (dim < 1) throw InvalidInput("dimension must be positive");
  if (candidate.family == Family::PolyLog && candidate.q < 1) throw InvalidInput("polylog exponent must be >= 1");
  if (candidate.family == Family::Boundary && dim == 1) {
    throw InvalidInput("Boundary is the constant law in D = 1 and cannot be fitted; use AffineLog");
  }

  std::vector<EntropySample> kept;
  for (const auto& s : curve.samples) {
    if (s.l >= options.lmin) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), [](const EntropySample& x, const EntropySample& y) { return x.l < y.l; });

  FitResult result;
  result.model.candidate = candidate;
  result.model.dim = dim;
  const int k = result.model.parameter_count();
  if (static_cast<int>(kept.size()) < k + 1) {
    throw InvalidInput(candidate.name() + " needs at least " + std::to_string(k + 1) + " samples with l >= " +
                       std::to_string(options.lmin) + ", got " + std::to_string(kept.size()));
  }
  for (const auto& s : kept) {
    if (s.l <= 0) throw InvalidInput("block sizes must be positive");
    if (uses_log(candidate.family) && s.l <= 2) throw InvalidInput("logarithmic families need l > 2");
  }

  Samples data{Eigen::VectorXd(static_cast<Eigen::Index>(kept.size())), Eigen::VectorXd(static_cast<Eigen::Index>(kept.size()))};
  for (std::size_t i = 0; i < kept.size(); ++i) {
    data.l(static_cast<Eigen::Index>(i)) = kept[i].l;
    data.s(static_cast<Eigen::Index>(i)) = kept[i].S;
  }

  Linear best;
  if (candidate.family == Family::Power) {
    // Grid scan for the basin, then golden-section refinement inside it.
    const double top = dim;
    auto rss_at = [&](double alpha) { return solve_linear(data, candidate, dim, alpha).rss; };
    int best_k = 1;
    double best_rss = rss_at(top / kAlphaGrid);
    for (int g = 2; g <= kAlphaGrid; ++g) {
      const double r = rss_at(top * g / kAlphaGrid);
      if (r < best_rss) {
        best_rss = r;
        best_k = g;
      }
    }
    double lo = top * (best_k - 1) / kAlphaGrid;
    double hi = top * std::min(best_k + 1, kAlphaGrid) / kAlphaGrid;
    lo = std::max(lo, top * 1e-9);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = rss_at(x1);
    double f2 = rss_at(x2);
    while (hi - lo > kGoldenTolerance) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = rss_at(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = rss_at(x2);
      }
    }
    // Compare the refined interior point against the grid optimum and the edge.
    double alpha = 0.5 * (lo + hi);
    for (double cand : {top * best_k / kAlphaGrid, top}) {
      if (rss_at(cand) < rss_at(alpha)) alpha = cand;
    }
    result.model.alpha = alpha;
    best = solve_linear(data, candidate, dim, alpha);
  } else {
    best = solve_linear(data, candidate, dim, 0.0);
  }

  result.model.a = best.a;
  result.model.c = best.c;
  result.rss = best.rss;
  result.samples = static_cast<int>(kept.size());
  const double n = result.samples;
  result.score = n * std::log(std::max(result.rss / n, rss_floor(data))) + 2.0 * k;
  const double noise = kRelativeNoise * std::max(data.s.cwiseAbs().maxCoeff(), 1.0);
  result.accepted = result.model.c >= -noise &&
                    (candidate.family != Family::Power || (result.model.alpha > 0.0 && result.model.alpha <= dim));
  return result;
}

std::vector<FitResult> select_model(const EntropyCurve& curve, const std::vector<Candidate>& candidates, int dim,
                                    const FitOptions& options) {
  if (candidates.size() < 2) throw InvalidInput("model selection needs at least two candidates");
  std::vector<FitResult> results;
  results.reserve(candidates.size());
  for (const auto& cand : candidates) results.push_back(fit(curve, cand, dim, options));
  std::stable_sort(results.begin(), results.end(), [](const FitResult& x, const FitResult& y) {
    return std::make_tuple(!x.accepted, x.score, x.model.parameter_count(), x.model.candidate.family, x.model.candidate.q) <
           std::make_tuple(!y.accepted, y.score, y.model.parameter_count(), y.model.candidate.family, y.model.candidate.q);
  });
  return results;
}

}  // namespace entroscale
