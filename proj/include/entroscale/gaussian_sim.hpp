#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "entroscale/entropy_curve.hpp"
#include "entroscale/holo_tree.hpp"

namespace entroscale {

/// Single-particle unitary acting on m fermionic modes.
struct ModeUnitary {
  Eigen::MatrixXcd u;
  int size() const { return static_cast<int>(u.rows()); }
};

/// Haar-distributed unitary from the QR decomposition of a complex Ginibre
/// matrix, with the phases of R's diagonal absorbed into Q.
ModeUnitary random_mode_unitary(int m, std::mt19937_64& rng);

enum class PlacementKind { Decoupler, Disentangler };

/// One tensor of the circuit. `modes` are storage indices (= physical sites
/// once the whole circuit has run). For a decoupler they are ordered by
/// corner of the 2^D block, so the first `inputs` entries carry child-branch
/// modes and the rest are freshly injected ancillas.
struct Placement {
  int scale = 0;
  PlacementKind kind = PlacementKind::Decoupler;
  std::uint64_t branch = 0;
  int inputs = 0;
  std::vector<int> modes;
  std::size_t unitary = 0;
};

/// Placement geometry shared by the simulator and the bond graph.
///
/// Scale z has R_z branches, each a periodic lattice of linear size L / 2^z.
/// Site x of child c of a branch is stored at the parent's site 2x + e_c,
/// where e_c is the c-th corner of the unit cell, so every storage index is
/// either one of the R_Z top modes or an ancilla injected by a decoupler.
struct NetworkLayout {
  int dim = 1;
  int L = 0;
  int Z = 0;
  std::vector<int> top_modes;         // storage index of each branch at scale Z
  std::vector<int> occupations;       // injected 0/1 occupation per storage index
  std::vector<Placement> placements;  // generative order: top scale first
  std::vector<std::size_t> scale_begin;  // placements of scale z start at scale_begin[Z - 1 - z]
  int modes() const { return static_cast<int>(occupations.size()); }
};

NetworkLayout build_layout(int dim, int L, const HolographicTree& tree);

struct GaussianNetwork {
  HolographicTree tree;
  bool homogeneous = false;
  std::uint64_t seed = 0;
  NetworkLayout layout;
  std::vector<ModeUnitary> unitaries;
  int dim() const { return layout.dim; }
  int L() const { return layout.L; }
};

/// Random circuit on the layout. Homogeneous networks reference exactly two
/// unitaries (one decoupler, one disentangler); otherwise every placement
/// draws its own, in placement order.
GaussianNetwork build_network(int dim, int L, const HolographicTree& tree, bool homogeneous, std::uint64_t seed);

/// C_ij = <c_i^dag c_j> over all physical modes.
struct CorrelationMatrix {
  Eigen::MatrixXcd c;
  int modes() const { return static_cast<int>(c.rows()); }
};

CorrelationMatrix vacuum_with_occupations(const std::vector<int>& occupations);

/// C <- U C U^dag with U acting on `modes`.
void apply_mode_unitary(CorrelationMatrix& state, const std::vector<int>& modes, const Eigen::MatrixXcd& u);

/// Called after every scale with the scale index and the current state.
using LayerObserver = std::function<void(int, const CorrelationMatrix&)>;

/// Largest network evaluate_state accepts (the state is N x N complex).
inline constexpr int kMaxSimulatedModes = 8192;

CorrelationMatrix evaluate_state(const GaussianNetwork& net, const LayerObserver& observer = {});

/// Eigenvalues of a Hermitian correlation block, checked against [0, 1].
Eigen::VectorXd occupation_spectrum(const Eigen::MatrixXcd& block);

/// Entropy in bits of the modes `sites`: sum of h(lambda) over the spectrum
/// of C restricted to them.
double block_entropy(const CorrelationMatrix& state, const std::vector<int>& sites);

/// Storage indices of the hypercube of linear size l whose lowest corner is
/// `offset` on every axis, wrapped periodically.
std::vector<int> hypercube_block(int dim, int L, int offset, int l);

/// Offset of the special block of size l0 = 2^zbar + 2: 2^zbar - 1 on every
/// axis, so its edges meet disentangler boundaries at every shrinking scale.
int special_offset(std::int64_t l0);

/// Sites outside `sites`, in increasing order.
std::vector<int> complement(const std::vector<int>& sites, int modes);

/// Block sizes of `special:max`: 2^k + 2 for k >= 1 up to max.
std::vector<int> special_sizes(int max);

/// Blocks at the special location (nullopt) or at a fixed offset.
EntropyCurve entropy_curve(const GaussianNetwork& net, const CorrelationMatrix& state, const std::vector<int>& sizes,
                           std::optional<int> offset = std::nullopt);
EntropyCurve entropy_curve(const GaussianNetwork& net, const std::vector<int>& sizes,
                           std::optional<int> offset = std::nullopt);

}  // namespace entroscale
