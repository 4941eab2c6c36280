#include "entroscale/mincut.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boykov_kolmogorov_max_flow.hpp>

#include "entroscale/errors.hpp"
#include "entroscale/gaussian_sim.hpp"

namespace entroscale {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS,
    boost::property<boost::vertex_index_t, long,
                    boost::property<boost::vertex_color_t, boost::default_color_type,
                                    boost::property<boost::vertex_distance_t, long,
                                                    boost::property<boost::vertex_predecessor_t, Traits::edge_descriptor>>>>,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

class FlowBuilder {
 public:
  explicit FlowBuilder(int vertices) : g_(static_cast<std::size_t>(vertices)) {}

  // Arc u -> v with capacity `forward` and its reverse with capacity `backward`.
  void add(int u, int v, long forward, long backward) {
    auto capacity = boost::get(boost::edge_capacity, g_);
    auto reverse = boost::get(boost::edge_reverse, g_);
    const auto a = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), g_).first;
    const auto b = boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(u), g_).first;
    capacity[a] = forward;
    capacity[b] = backward;
    reverse[a] = b;
    reverse[b] = a;
  }

  FlowGraph& graph() { return g_; }

 private:
  FlowGraph g_;
};

void check_block(const TensorGraph& graph, const std::vector<int>& block) {
  for (int s : block) {
    if (s < 0 || s >= static_cast<int>(graph.leg.size())) throw InvalidInput("block site " + std::to_string(s) + " out of range");
  }
}

}  // namespace

TensorGraph build_graph(int dim, int L, const HolographicTree& tree) {
  if (dim > 2) throw InvalidInput("bond graphs are built for D = 1 and D = 2 only");
  const NetworkLayout layout = build_layout(dim, L, tree);
  TensorGraph g;
  g.dim = dim;
  g.L = L;
  g.Z = layout.Z;
  std::vector<int> producer(static_cast<std::size_t>(layout.modes()), -1);
  auto add_vertex = [&](VertexKind kind, int scale) {
    g.kind.push_back(kind);
    g.scale.push_back(scale);
    return g.vertex_count() - 1;
  };
  for (int mode : layout.top_modes) producer[static_cast<std::size_t>(mode)] = add_vertex(VertexKind::Top, layout.Z);
  for (const auto& p : layout.placements) {
    const int v = add_vertex(p.kind == PlacementKind::Decoupler ? VertexKind::Decoupler : VertexKind::Disentangler, p.scale);
    for (std::size_t k = 0; k < p.modes.size(); ++k) {
      const auto mode = static_cast<std::size_t>(p.modes[k]);
      // Ancilla corners of a decoupler are not bonds.
      if (static_cast<int>(k) < p.inputs) g.edges.emplace_back(producer[mode], v);
      producer[mode] = v;
    }
  }
  for (int site = 0; site < layout.modes(); ++site) {
    const int v = add_vertex(VertexKind::Leg, -1);
    g.leg.push_back(v);
    g.edges.emplace_back(producer[static_cast<std::size_t>(site)], v);
  }
  return g;
}

CutResult min_cut(const TensorGraph& graph, const std::vector<int>& block, int chi, const Pins& pins) {
  if (chi < 2) throw InvalidInput("bond dimension chi must be at least 2");
  check_block(graph, block);
  if (!pins.empty() && static_cast<int>(pins.size()) != graph.vertex_count()) {
    throw InvalidInput("pins must cover every vertex");
  }
  const int n = graph.vertex_count();
  std::vector<char> in_block(static_cast<std::size_t>(n), 0);
  for (int s : block) in_block[static_cast<std::size_t>(graph.leg[static_cast<std::size_t>(s)])] = 1;
  const auto block_legs = std::count(in_block.begin(), in_block.end(), 1);
  if (block_legs == 0 || block_legs == static_cast<long>(graph.leg.size())) return {};

  const int source = n;
  const int sink = n + 1;
  const long infinite = static_cast<long>(graph.edges.size()) + 1;
  FlowBuilder builder(n + 2);
  for (const auto& [u, v] : graph.edges) builder.add(u, v, 1, 1);
  for (int v = 0; v < n; ++v) {
    const bool leg = graph.kind[static_cast<std::size_t>(v)] == VertexKind::Leg;
    const int pin = pins.empty() ? 0 : pins[static_cast<std::size_t>(v)];
    if ((leg && in_block[static_cast<std::size_t>(v)]) || pin > 0) builder.add(source, v, infinite, 0);
    if ((leg && !in_block[static_cast<std::size_t>(v)]) || pin < 0) builder.add(v, sink, infinite, 0);
  }
  auto& fg = builder.graph();
  const long flow = boost::boykov_kolmogorov_max_flow(fg, static_cast<std::size_t>(source), static_cast<std::size_t>(sink));
  if (flow >= infinite) throw InvalidInput("pins force a leg onto the wrong side of the cut");

  // Vertices reachable from the source through unsaturated arcs.
  auto residual = boost::get(boost::edge_residual_capacity, fg);
  std::vector<char> reach(static_cast<std::size_t>(n + 2), 0);
  std::deque<std::size_t> queue{static_cast<std::size_t>(source)};
  reach[static_cast<std::size_t>(source)] = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto [it, end] = boost::out_edges(u, fg); it != end; ++it) {
      const auto v = boost::target(*it, fg);
      if (!reach[v] && residual[*it] > 0) {
        reach[v] = 1;
        queue.push_back(v);
      }
    }
  }

  CutResult out;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto [u, v] = graph.edges[e];
    if (reach[static_cast<std::size_t>(u)] != reach[static_cast<std::size_t>(v)]) out.edges.push_back(static_cast<int>(e));
  }
  out.size = static_cast<int>(out.edges.size());
  if (out.size != flow) throw std::logic_error("cut size differs from the max-flow value");
  out.bound_bits = out.size * std::log2(static_cast<double>(chi));
  return out;
}

std::vector<char> causal_cone(const TensorGraph& graph, const std::vector<int>& block) {
  check_block(graph, block);
  const int n = graph.vertex_count();
  std::vector<char> cone(static_cast<std::size_t>(n), 0);
  for (int s : block) cone[static_cast<std::size_t>(graph.leg[static_cast<std::size_t>(s)])] = 1;
  // Producers precede consumers in vertex order, so one reverse sweep over
  // the edges (stored in consumer order) settles every tensor.
  for (auto it = graph.edges.rbegin(); it != graph.edges.rend(); ++it) {
    if (cone[static_cast<std::size_t>(it->second)]) cone[static_cast<std::size_t>(it->first)] = 1;
  }
  return cone;
}

std::vector<char> shrinking_region(const TensorGraph& graph, const std::vector<int>& block, int zbar) {
  auto region = causal_cone(graph, block);
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const auto kind = graph.kind[static_cast<std::size_t>(v)];
    if (kind != VertexKind::Leg && graph.scale[static_cast<std::size_t>(v)] >= zbar) region[static_cast<std::size_t>(v)] = 0;
  }
  return region;
}

int region_boundary(const TensorGraph& graph, const std::vector<char>& region) {
  int count = 0;
  for (const auto& [u, v] : graph.edges) count += region[static_cast<std::size_t>(u)] != region[static_cast<std::size_t>(v)];
  return count;
}

BigInt cone_boundary_size(int dim, std::int64_t l0, const HolographicTree& tree) {
  const ConeProfile profile = cone_profile(l0, dim);
  BigInt cap = exact_branch_count(tree, profile.zbar);
  for (int i = 0; i < dim; ++i) cap *= profile.widths.back();
  return cumulative_traced(profile, tree, profile.zbar) + cap;
}

}  // namespace entroscale
