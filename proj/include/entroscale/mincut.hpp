#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "entroscale/cone.hpp"
#include "entroscale/holo_tree.hpp"

namespace entroscale {

enum class VertexKind { Top, Decoupler, Disentangler, Leg };

/// Bond graph of a (branching) MERA with the layout of build_network. Each
/// bond is stored once, from the tensor that produces the mode to the tensor
/// (or physical leg) that consumes it.
struct TensorGraph {
  int dim = 1;
  int L = 0;
  int Z = 0;
  std::vector<VertexKind> kind;
  std::vector<int> scale;  // placement scale; Z for top tensors, -1 for legs
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leg;  // leg vertex of every physical site
  int vertex_count() const { return static_cast<int>(kind.size()); }
};

TensorGraph build_graph(int dim, int L, const HolographicTree& tree);

struct CutResult {
  int size = 0;
  double bound_bits = 0.0;
  std::vector<int> edges;  // indices into TensorGraph::edges, ascending
};

/// Vertex constraints for min_cut: 0 free, +1 on the block side, -1 on the
/// complement side.
using Pins = std::vector<int>;

/// Exact minimum number of bonds separating the legs of `block` from all other
/// legs. The reported edge set is the cut closest to the block (the set of
/// vertices reachable from it in the residual network), which is unique.
CutResult min_cut(const TensorGraph& graph, const std::vector<int>& block, int chi, const Pins& pins = {});

/// Tensors whose output reaches the legs of `block` (the causal cone), plus
/// those legs.
std::vector<char> causal_cone(const TensorGraph& graph, const std::vector<int>& block);

/// Block legs together with the cone tensors below scale zbar.
std::vector<char> shrinking_region(const TensorGraph& graph, const std::vector<int>& block, int zbar);

/// Bonds with exactly one end inside `region`.
int region_boundary(const TensorGraph& graph, const std::vector<char>& region);

/// N^tra_{zbar} + R_{zbar} (l_{zbar})^D.
BigInt cone_boundary_size(int dim, std::int64_t l0, const HolographicTree& tree);

}  // namespace entroscale
