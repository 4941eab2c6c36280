#include "entroscale/gaussian_sim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "entroscale/cone.hpp"
#include "entroscale/errors.hpp"

namespace entroscale {

namespace {

constexpr double kSpectrumTolerance = 1e-8;
constexpr double kTraceTolerance = 1e-10;

int log2_exact(int L) {
  if (L < 1 || (L & (L - 1)) != 0) return -1;
  int z = 0;
  while ((1 << z) < L) ++z;
  return z;
}

// Linear index of the point `x` on a periodic lattice of linear size n.
int site_index(const std::vector<int>& x, int n) {
  int idx = 0;
  for (int k = static_cast<int>(x.size()) - 1; k >= 0; --k) idx = idx * n + ((x[static_cast<std::size_t>(k)] % n) + n) % n;
  return idx;
}

std::vector<int> site_coords(int idx, int dim, int n) {
  std::vector<int> x(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    x[static_cast<std::size_t>(k)] = idx % n;
    idx /= n;
  }
  return x;
}

// Storage index of site 2y + shift + e_c of a branch lattice of size n.
int cell_member(const std::vector<int>& storage, const std::vector<int>& y, int shift, int corner, int n) {
  std::vector<int> x(y.size());
  for (std::size_t k = 0; k < y.size(); ++k) x[k] = 2 * y[k] + shift + ((corner >> k) & 1);
  return storage[static_cast<std::size_t>(site_index(x, n))];
}

int ipow_int(int base, int exp) {
  int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace

ModeUnitary random_mode_unitary(int m, std::mt19937_64& rng) {
  if (m < 1) throw InvalidInput("unitary size must be at least 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(m, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = std::complex<double>(re, im) / std::sqrt(2.0);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(m, m);
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int j = 0; j < m; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return ModeUnitary{std::move(q)};
}

NetworkLayout build_layout(int dim, int L, const HolographicTree& tree) {
  if (dim < 1 || dim > 3) throw InvalidInput("simulated dimension must be 1, 2 or 3, got " + std::to_string(dim));
  if (tree.dim() != dim) {
    throw InvalidInput("tree dimension " + std::to_string(tree.dim()) + " does not match D = " + std::to_string(dim));
  }
  const int Z = log2_exact(L);
  if (Z < 2) throw InvalidInput("lattice size L must be a power of 2 with L >= 4, got " + std::to_string(L));
  if (static_cast<double>(Z) * dim > 24) throw InvalidInput("lattice too large: L^D must not exceed 2^24");
  if (tree.defined_depth() > Z) {
    throw InvalidInput("tree defines " + std::to_string(tree.defined_depth()) + " levels but the network has only " +
                       std::to_string(Z) + " scales");
  }

  const int cell = 1 << dim;
  NetworkLayout out;
  out.dim = dim;
  out.L = L;
  out.Z = Z;
  const int N = ipow_int(L, dim);

  // storage[z][p][i]: storage index of site i of branch p at scale z.
  std::vector<std::vector<std::vector<int>>> storage(static_cast<std::size_t>(Z) + 1);
  std::vector<std::vector<int>> counts(static_cast<std::size_t>(Z));
  storage[0].emplace_back(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) storage[0][0][static_cast<std::size_t>(i)] = i;
  for (int z = 0; z < Z; ++z) {
    const int n = L >> z;
    const int coarse = n / 2;
    const int coarse_sites = ipow_int(coarse, dim);
    counts[static_cast<std::size_t>(z)] = tree.child_counts(z);
    const auto& level = counts[static_cast<std::size_t>(z)];
    for (std::size_t p = 0; p < level.size(); ++p) {
      for (int c = 0; c < level[p]; ++c) {
        std::vector<int> child(static_cast<std::size_t>(coarse_sites));
        for (int s = 0; s < coarse_sites; ++s) {
          child[static_cast<std::size_t>(s)] =
              cell_member(storage[static_cast<std::size_t>(z)][p], site_coords(s, dim, coarse), 0, c, n);
        }
        storage[static_cast<std::size_t>(z) + 1].push_back(std::move(child));
      }
    }
  }

  out.occupations.assign(static_cast<std::size_t>(N), -1);
  int injected = 0;
  auto inject = [&](int idx) {
    if (out.occupations[static_cast<std::size_t>(idx)] != -1) throw std::logic_error("storage index injected twice");
    out.occupations[static_cast<std::size_t>(idx)] = injected++ % 2;
  };
  for (const auto& top : storage[static_cast<std::size_t>(Z)]) {
    out.top_modes.push_back(top[0]);
    inject(top[0]);
  }

  for (int z = Z - 1; z >= 0; --z) {
    out.scale_begin.push_back(out.placements.size());
    const int n = L >> z;
    const int coarse_sites = ipow_int(n / 2, dim);
    const auto& branches = storage[static_cast<std::size_t>(z)];
    const auto& level = counts[static_cast<std::size_t>(z)];
    for (std::size_t p = 0; p < branches.size(); ++p) {
      for (int s = 0; s < coarse_sites; ++s) {
        const auto y = site_coords(s, dim, n / 2);
        Placement w;
        w.scale = z;
        w.kind = PlacementKind::Decoupler;
        w.branch = p;
        w.inputs = level[p];
        for (int c = 0; c < cell; ++c) {
          w.modes.push_back(cell_member(branches[p], y, 0, c, n));
          if (c >= level[p]) inject(w.modes.back());
        }
        out.placements.push_back(std::move(w));
      }
    }
    // With n <= 2 the shifted cell covers the decoupler cell again.
    if (n <= 2) continue;
    for (std::size_t p = 0; p < branches.size(); ++p) {
      for (int s = 0; s < coarse_sites; ++s) {
        const auto y = site_coords(s, dim, n / 2);
        Placement u;
        u.scale = z;
        u.kind = PlacementKind::Disentangler;
        u.branch = p;
        u.inputs = cell;
        for (int c = 0; c < cell; ++c) u.modes.push_back(cell_member(branches[p], y, 1, c, n));
        out.placements.push_back(std::move(u));
      }
    }
  }
  if (injected != N) throw std::logic_error("layout does not cover every storage index");
  return out;
}

GaussianNetwork build_network(int dim, int L, const HolographicTree& tree, bool homogeneous, std::uint64_t seed) {
  GaussianNetwork net{tree, homogeneous, seed, build_layout(dim, L, tree), {}};
  std::mt19937_64 rng(seed);
  const int cell = 1 << dim;
  if (homogeneous) {
    net.unitaries.push_back(random_mode_unitary(cell, rng));
    net.unitaries.push_back(random_mode_unitary(cell, rng));
    for (auto& p : net.layout.placements) p.unitary = p.kind == PlacementKind::Decoupler ? 0 : 1;
  } else {
    net.unitaries.reserve(net.layout.placements.size());
    for (auto& p : net.layout.placements) {
      p.unitary = net.unitaries.size();
      net.unitaries.push_back(random_mode_unitary(cell, rng));
    }
  }
  return net;
}

CorrelationMatrix vacuum_with_occupations(const std::vector<int>& occupations) {
  const auto n = static_cast<Eigen::Index>(occupations.size());
  CorrelationMatrix state{Eigen::MatrixXcd::Zero(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) state.c(i, i) = occupations[static_cast<std::size_t>(i)];
  return state;
}

void apply_mode_unitary(CorrelationMatrix& state, const std::vector<int>& modes, const Eigen::MatrixXcd& u) {
  const auto m = static_cast<Eigen::Index>(modes.size());
  if (u.rows() != m || u.cols() != m) throw InvalidInput("unitary size does not match its mode count");
  auto& c = state.c;
  const Eigen::Index n = c.rows();
  for (int mode : modes) {
    if (mode < 0 || mode >= n) throw InvalidInput("mode index out of range");
  }

  // Columns first: A = C[:, S] U^dag. Rows outside S follow by Hermiticity
  // and the S x S block is U A[S, :].
  Eigen::MatrixXcd a(n, m);
  for (Eigen::Index k = 0; k < m; ++k) a.col(k) = c.col(modes[static_cast<std::size_t>(k)]);
  a = (a * u.adjoint()).eval();
  Eigen::MatrixXcd a_rows(m, m);
  for (Eigen::Index k = 0; k < m; ++k) a_rows.row(k) = a.row(modes[static_cast<std::size_t>(k)]);
  const Eigen::MatrixXcd inner = u * a_rows;

  for (Eigen::Index k = 0; k < m; ++k) c.col(modes[static_cast<std::size_t>(k)]) = a.col(k);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) c(modes[static_cast<std::size_t>(k)], j) = std::conj(a(j, k));
  }
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index q = 0; q < m; ++q) c(modes[static_cast<std::size_t>(k)], modes[static_cast<std::size_t>(q)]) = inner(k, q);
  }
}

CorrelationMatrix evaluate_state(const GaussianNetwork& net, const LayerObserver& observer) {
  const auto& layout = net.layout;
  if (layout.modes() > kMaxSimulatedModes) {
    throw InvalidInput("network has " + std::to_string(layout.modes()) + " modes; at most " +
                       std::to_string(kMaxSimulatedModes) + " can be simulated");
  }
  CorrelationMatrix state = vacuum_with_occupations(layout.occupations);
  for (std::size_t s = 0; s < layout.scale_begin.size(); ++s) {
    const std::size_t end = s + 1 < layout.scale_begin.size() ? layout.scale_begin[s + 1] : layout.placements.size();
    for (std::size_t i = layout.scale_begin[s]; i < end; ++i) {
      const auto& p = layout.placements[i];
      apply_mode_unitary(state, p.modes, net.unitaries[p.unitary].u);
    }
    if (observer) observer(layout.Z - 1 - static_cast<int>(s), state);
  }

  const auto occupied = std::count(layout.occupations.begin(), layout.occupations.end(), 1);
  const std::complex<double> trace = state.c.trace();
  const double drift = std::abs(trace - std::complex<double>(static_cast<double>(occupied), 0.0));
  if (!(drift <= kTraceTolerance)) throw NumericalFailure("particle number not conserved", drift);
  return state;
}

Eigen::VectorXd occupation_spectrum(const Eigen::MatrixXcd& block) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalFailure("eigensolver did not converge", 0.0);
  Eigen::VectorXd lambda = solver.eigenvalues();
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const double v = lambda(i);
    if (!(v >= -kSpectrumTolerance && v <= 1.0 + kSpectrumTolerance)) {
      throw NumericalFailure("correlation eigenvalue outside [0, 1]", v);
    }
    lambda(i) = std::clamp(v, 0.0, 1.0);
  }
  return lambda;
}

double block_entropy(const CorrelationMatrix& state, const std::vector<int>& sites) {
  if (sites.empty()) throw InvalidInput("block must contain at least one site");
  for (int s : sites) {
    if (s < 0 || s >= state.modes()) throw InvalidInput("block site " + std::to_string(s) + " out of range");
  }
  const auto n = static_cast<Eigen::Index>(sites.size());
  Eigen::MatrixXcd sub(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) sub(i, j) = state.c(sites[static_cast<std::size_t>(i)], sites[static_cast<std::size_t>(j)]);
  }
  const Eigen::VectorXd lambda = occupation_spectrum(sub);
  double s = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) s += binary_entropy(lambda(i));
  return s;
}

std::vector<int> hypercube_block(int dim, int L, int offset, int l) {
  if (l < 1 || l > L) throw InvalidInput("block size must lie in [1, L]");
  const int count = ipow_int(l, dim);
  std::vector<int> sites;
  sites.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    auto x = site_coords(s, dim, l);
    for (auto& v : x) v += offset;
    sites.push_back(site_index(x, L));
  }
  return sites;
}

int special_offset(std::int64_t l0) { return (1 << crossover_scale(l0)) - 1; }

std::vector<int> complement(const std::vector<int>& sites, int modes) {
  std::vector<char> in(static_cast<std::size_t>(modes), 0);
  for (int s : sites) in[static_cast<std::size_t>(s)] = 1;
  std::vector<int> out;
  for (int i = 0; i < modes; ++i) {
    if (!in[static_cast<std::size_t>(i)]) out.push_back(i);
  }
  return out;
}

std::vector<int> special_sizes(int max) {
  std::vector<int> out;
  for (int k = 1; k < 30 && (1 << k) + 2 <= max; ++k) out.push_back((1 << k) + 2);
  return out;
}

EntropyCurve entropy_curve(const GaussianNetwork& net, const CorrelationMatrix& state, const std::vector<int>& sizes,
                           std::optional<int> offset) {
  const int L = net.L();
  if (offset && (*offset < 0 || *offset >= L)) throw InvalidInput("block offset must lie in [0, L)");
  EntropyCurve curve;
  curve.dim = net.dim();
  curve.L = L;
  curve.tree = net.tree.label();
  curve.seed = net.seed;
  curve.homogeneous = net.homogeneous;
  int previous = 0;
  for (int l : sizes) {
    if (l <= previous) throw InvalidInput("block sizes must be positive and strictly increasing");
    if (l - 2 > L / 2) {
      throw InvalidInput("block size " + std::to_string(l) + " too large for L = " + std::to_string(L) +
                         " (need l - 2 <= L/2)");
    }
    const int at = offset ? *offset : special_offset(l);
    curve.samples.push_back({l, block_entropy(state, hypercube_block(net.dim(), L, at, l))});
    previous = l;
  }
  return curve;
}

EntropyCurve entropy_curve(const GaussianNetwork& net, const std::vector<int>& sizes, std::optional<int> offset) {
  return entropy_curve(net, evaluate_state(net), sizes, offset);
}

}  // namespace entroscale
