#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace entroscale {

struct EntropySample {
  int l = 0;
  double S = 0.0;  // bits
};

/// Block entropies S_l of one network, l strictly increasing.
struct EntropyCurve {
  int dim = 1;
  int L = 0;
  std::string tree;
  std::uint64_t seed = 0;
  bool homogeneous = false;
  std::vector<EntropySample> samples;
};

/// CSV with columns l,S_bits,seed,tree,D,L. Every entry of `metadata` is
/// written first as a `# ` comment line.
void write_csv(std::ostream& out, const EntropyCurve& curve, const std::vector<std::string>& metadata = {});

/// Reads a curve written by write_csv (comment lines are skipped).
EntropyCurve read_csv(std::istream& in);

}  // namespace entroscale
