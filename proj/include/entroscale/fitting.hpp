#pragma once

#include <string>
#include <vector>

#include "entroscale/entropy_curve.hpp"

namespace entroscale {

/// Candidate scaling forms, in declaration (tie-break) order.
enum class Family {
  AffineLog,    // a + c log2 l
  Boundary,     // a + c l^{D-1}
  BoundaryLog,  // a + c l^{D-1} log2 l
  PolyLog,      // a + c (log2 l)^q, q fixed per candidate
  Power,        // a + c l^alpha, alpha free in (0, D]
};

struct Candidate {
  Family family = Family::AffineLog;
  int q = 1;  // PolyLog only

  /// Parses `affinelog`, `boundary`, `boundarylog`, `polylog:q` or `power`.
  static Candidate parse(const std::string& text);
  std::string name() const;
};

struct FitModel {
  Candidate candidate;
  int dim = 1;
  double a = 0.0;
  double c = 0.0;
  double alpha = 0.0;  // Power only

  int parameter_count() const;
  double evaluate(double l) const;
  std::string formula() const;
};

/// score = n ln(max(RSS / n, (1e-12 max|S|)^2)) + 2 k, with k the parameter
/// count and max|S| floored at 1.
struct FitResult {
  FitModel model;
  double rss = 0.0;
  int samples = 0;
  double score = 0.0;
  bool accepted = false;  // c >= 0 and parameters inside their domain
};

struct FitOptions {
  int lmin = 6;  // samples with l < lmin are ignored
};

FitResult fit(const EntropyCurve& curve, const Candidate& candidate, int dim, const FitOptions& options = {});

/// Fits every candidate and ranks them: accepted fits first, then by score,
/// then fewer parameters, then declaration order.
std::vector<FitResult> select_model(const EntropyCurve& curve, const std::vector<Candidate>& candidates, int dim,
                                    const FitOptions& options = {});

}  // namespace entroscale
