#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "entroscale/bounds.hpp"
#include "entroscale/errors.hpp"
#include "entroscale/gaussian_sim.hpp"
#include "support/fock_oracle.hpp"

using namespace entroscale;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

oracle::FockState run_oracle(const GaussianNetwork& net) {
  oracle::FockState psi(net.layout.occupations);
  for (const auto& p : net.layout.placements) psi.apply(p.modes, net.unitaries[p.unitary].u);
  return psi;
}

std::vector<std::vector<int>> all_blocks(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> b;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) b.push_back(j);
    }
    out.push_back(b);
  }
  return out;
}

}  // namespace

TEST_CASE("random mode unitaries") {
  std::mt19937_64 rng(5);
  const auto one = random_mode_unitary(1, rng);
  CHECK(std::abs(std::abs(one.u(0, 0)) - 1.0) < 1e-15);

  std::mt19937_64 a(42), b(42);
  CHECK(random_mode_unitary(4, a).u == random_mode_unitary(4, b).u);

  for (int m = 1; m <= 8; ++m) {
    const auto u = random_mode_unitary(m, rng);
    CHECK(max_abs(u.u.adjoint() * u.u - Eigen::MatrixXcd::Identity(m, m)) < 1e-12);
  }

  // Haar: E|U_00|^2 = 1/m.
  double mean = 0.0;
  const int draws = 4000;
  for (int i = 0; i < draws; ++i) mean += std::norm(random_mode_unitary(4, rng).u(0, 0));
  CHECK(mean / draws == doctest::Approx(0.25).epsilon(0.05));
  CHECK_THROWS_AS(random_mode_unitary(0, rng), InvalidInput);
}

TEST_CASE("layout of the binary MERA on 16 sites") {
  const auto layout = build_layout(1, 16, HolographicTree::regular(1, 1));
  CHECK(layout.Z == 4);
  CHECK(layout.scale_begin.size() == 4);
  CHECK(layout.top_modes.size() == 1);
  int decouplers = 0, disentanglers = 0;
  for (const auto& p : layout.placements) {
    (p.kind == PlacementKind::Decoupler ? decouplers : disentanglers)++;
    CHECK(p.modes.size() == 2);
    CHECK(std::set<int>(p.modes.begin(), p.modes.end()).size() == 2);
  }
  CHECK(decouplers == 8 + 4 + 2 + 1);
  CHECK(disentanglers == 8 + 4 + 2);
  CHECK(std::count(layout.occupations.begin(), layout.occupations.end(), 1) == 8);
}

TEST_CASE("layout of the b = 2 branching MERA") {
  const auto layout = build_layout(1, 16, HolographicTree::regular(1, 2));
  std::vector<std::set<std::uint64_t>> branches(4);
  for (const auto& p : layout.placements) {
    if (p.kind != PlacementKind::Decoupler) continue;
    CHECK(p.inputs == 2);
    branches[static_cast<std::size_t>(p.scale)].insert(p.branch);
  }
  for (int z = 0; z < 4; ++z) CHECK(branches[static_cast<std::size_t>(z)].size() == (std::size_t{1} << z));
  // No ancillas: every storage index is a top mode.
  CHECK(layout.top_modes.size() == 16);
}

TEST_CASE("layouts are consistent for every tree") {
  const HolographicTree trees[] = {HolographicTree::regular(1, 1), HolographicTree::regular(1, 2),
                                   HolographicTree::linear(1), HolographicTree::polylog(1, 2)};
  for (const auto& tree : trees) {
    const auto layout = build_layout(1, 64, tree);
    for (int z = 0; z < layout.Z; ++z) {
      std::set<std::uint64_t> seen;
      for (const auto& p : layout.placements) {
        if (p.scale == z && p.kind == PlacementKind::Decoupler) seen.insert(p.branch);
      }
      CHECK(seen.size() == tree.branch_count(z));
    }
    // Each decoupler's ancillas and inputs are disjoint within one scale.
    for (std::size_t s = 0; s < layout.scale_begin.size(); ++s) {
      std::set<int> used;
      const auto end = s + 1 < layout.scale_begin.size() ? layout.scale_begin[s + 1] : layout.placements.size();
      for (auto i = layout.scale_begin[s]; i < end; ++i) {
        const auto& p = layout.placements[i];
        if (p.kind != PlacementKind::Decoupler) continue;
        for (int m : p.modes) CHECK(used.insert(m).second);
      }
    }
  }
  const auto d2 = build_layout(2, 8, HolographicTree::regular(2, 3));
  CHECK(d2.modes() == 64);
  for (const auto& p : d2.placements) CHECK(p.modes.size() == 4);
}

TEST_CASE("layout rejects invalid inputs") {
  CHECK_THROWS_AS(build_layout(1, 2, HolographicTree::regular(1, 1)), InvalidInput);
  CHECK_THROWS_AS(build_layout(1, 12, HolographicTree::regular(1, 1)), InvalidInput);
  CHECK_THROWS_AS(build_layout(2, 16, HolographicTree::regular(1, 1)), InvalidInput);
  CHECK_THROWS_AS(build_layout(4, 16, HolographicTree::regular(4, 1)), InvalidInput);
  CHECK_THROWS_AS(build_layout(1, 8, HolographicTree::from_levels(1, {{1}, {1}, {1}, {1}})), InvalidInput);
  CHECK_NOTHROW(build_layout(1, 8, HolographicTree::linear(1)));
  CHECK_NOTHROW(build_layout(1, 8, HolographicTree::from_levels(1, {{2}, {1, 2}})));
}

TEST_CASE("homogeneous networks use two unitaries") {
  const auto net = build_network(2, 8, HolographicTree::regular(2, 2), true, 3);
  CHECK(net.unitaries.size() == 2);
  for (const auto& p : net.layout.placements) CHECK(p.unitary == (p.kind == PlacementKind::Decoupler ? 0u : 1u));
  const auto random = build_network(2, 8, HolographicTree::regular(2, 2), false, 3);
  CHECK(random.unitaries.size() == random.layout.placements.size());
}

TEST_CASE("identity circuit keeps the injected pattern") {
  auto net = build_network(1, 32, HolographicTree::regular(1, 1), false, 1);
  for (auto& u : net.unitaries) u.u = Eigen::MatrixXcd::Identity(2, 2);
  const auto state = evaluate_state(net);
  for (int i = 0; i < 32; ++i) {
    for (int j = 0; j < 32; ++j) {
      const double expected = i == j ? net.layout.occupations[static_cast<std::size_t>(i)] : 0.0;
      CHECK(std::abs(state.c(i, j) - expected) == 0.0);
    }
  }
}

TEST_CASE("correlation matrix stays physical after every layer") {
  const GaussianNetwork nets[] = {build_network(1, 64, HolographicTree::regular(1, 1), false, 9),
                                  build_network(1, 64, HolographicTree::regular(1, 2), false, 9),
                                  build_network(2, 16, HolographicTree::regular(2, 3), false, 9)};
  for (const auto& net : nets) {
    int layers = 0;
    const auto occupied = static_cast<double>(std::count(net.layout.occupations.begin(), net.layout.occupations.end(), 1));
    const auto state = evaluate_state(net, [&](int, const CorrelationMatrix& c) {
      ++layers;
      CHECK(max_abs(c.c - c.c.adjoint()) < 1e-12);
      CHECK(std::abs(c.c.trace() - std::complex<double>(occupied)) < 1e-10);
      const auto lambda = occupation_spectrum(c.c);
      CHECK(lambda.minCoeff() >= 0.0);
      CHECK(lambda.maxCoeff() <= 1.0);
    });
    CHECK(layers == net.layout.Z);
    // The global state is pure: C is a projector.
    CHECK(max_abs(state.c * state.c - state.c) < 1e-10);
  }
}

TEST_CASE("simulator matches the Fock-space oracle on small networks") {
  const GaussianNetwork nets[] = {build_network(1, 8, HolographicTree::regular(1, 1), false, 17),
                                  build_network(1, 8, HolographicTree::regular(1, 2), false, 17),
                                  build_network(1, 8, HolographicTree::polylog(1, 1), false, 4),
                                  build_network(1, 8, HolographicTree::regular(1, 1), true, 2)};
  for (const auto& net : nets) {
    const auto state = evaluate_state(net);
    const auto psi = run_oracle(net);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(max_abs(state.c - psi.two_point()) < 1e-10);
    for (const auto& block : all_blocks(8)) CHECK(std::abs(block_entropy(state, block) - psi.entropy(block)) < 1e-8);
  }
}

TEST_CASE("oracle agreement in two dimensions") {
  const auto net = build_network(2, 4, HolographicTree::regular(2, 2), false, 23);
  const auto state = evaluate_state(net);
  const auto psi = run_oracle(net);
  CHECK(max_abs(state.c - psi.two_point()) < 1e-10);
  for (const auto& block : {std::vector<int>{0, 1, 4, 5}, std::vector<int>{5, 6, 9, 10}, std::vector<int>{0, 15, 7}}) {
    CHECK(std::abs(block_entropy(state, block) - psi.entropy(block)) < 1e-8);
  }
}

TEST_CASE("random circuits on arbitrary mode subsets") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 6;
    std::vector<int> occ(static_cast<std::size_t>(n));
    for (auto& o : occ) o = static_cast<int>(rng() % 2);
    auto state = vacuum_with_occupations(occ);
    oracle::FockState psi(occ);
    for (int g = 0; g < 6; ++g) {
      std::vector<int> modes(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) modes[static_cast<std::size_t>(j)] = j;
      std::shuffle(modes.begin(), modes.end(), rng);
      modes.resize(1 + rng() % std::min(n, 4));
      const auto u = random_mode_unitary(static_cast<int>(modes.size()), rng);
      apply_mode_unitary(state, modes, u.u);
      psi.apply(modes, u.u);
    }
    CHECK(max_abs(state.c - psi.two_point()) < 1e-10);
    for (const auto& block : all_blocks(n)) CHECK(std::abs(block_entropy(state, block) - psi.entropy(block)) < 1e-8);
  }
}

TEST_CASE("block entropy of simple states") {
  const auto vacuum = vacuum_with_occupations(std::vector<int>(6, 0));
  CHECK(block_entropy(vacuum, {0, 1, 2}) == 0.0);

  CorrelationMatrix half{Eigen::MatrixXcd::Zero(2, 2)};
  half.c(0, 0) = 0.5;
  half.c(1, 1) = 0.5;
  half.c(0, 1) = 0.5;
  half.c(1, 0) = 0.5;
  CHECK(block_entropy(half, {0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(block_entropy(half, {0, 1}) == doctest::Approx(0.0));

  CorrelationMatrix broken{Eigen::MatrixXcd::Identity(2, 2) * 1.5};
  CHECK_THROWS_AS(block_entropy(broken, {0}), NumericalFailure);
  try {
    block_entropy(broken, {0, 1});
  } catch (const NumericalFailure& e) {
    CHECK(e.value() == doctest::Approx(1.5));
  }
  CHECK_THROWS_AS(block_entropy(half, {}), InvalidInput);
  CHECK_THROWS_AS(block_entropy(half, {2}), InvalidInput);
}

TEST_CASE("purity: a block and its complement carry the same entropy") {
  const GaussianNetwork nets[] = {build_network(1, 64, HolographicTree::regular(1, 1), false, 31),
                                  build_network(1, 64, HolographicTree::linear(1), false, 31),
                                  build_network(2, 16, HolographicTree::regular(2, 2), false, 31)};
  for (const auto& net : nets) {
    const auto state = evaluate_state(net);
    for (int l = 1; l <= net.L() / 2; ++l) {
      for (int offset : {0, 3, 7}) {
        const auto block = hypercube_block(net.dim(), net.L(), offset, l);
        const auto rest = complement(block, state.modes());
        if (rest.empty()) continue;
        CHECK(std::abs(block_entropy(state, block) - block_entropy(state, rest)) < 1e-8);
      }
    }
  }
}

TEST_CASE("special blocks obey the cone bound at every cut scale") {
  const HolographicTree d1[] = {HolographicTree::regular(1, 1), HolographicTree::regular(1, 2),
                                HolographicTree::linear(1)};
  for (const auto& tree : d1) {
    const auto net = build_network(1, 256, tree, false, 12);
    const auto curve = entropy_curve(net, special_sizes(130));
    for (const auto& s : curve.samples) {
      for (int z = 0; z <= crossover_scale(s.l); ++z) CHECK(s.S <= bound_at_scale(tree, s.l, 2, z).bound_bits + 1e-9);
    }
  }
  for (int b : {1, 2, 4}) {
    const auto tree = HolographicTree::regular(2, b);
    const auto net = build_network(2, 32, tree, false, 12);
    const auto curve = entropy_curve(net, special_sizes(18));
    for (const auto& s : curve.samples) {
      for (int z = 0; z <= crossover_scale(s.l); ++z) CHECK(s.S <= bound_at_scale(tree, s.l, 2, z).bound_bits + 1e-9);
    }
  }
}

TEST_CASE("block geometry") {
  CHECK(hypercube_block(1, 16, 14, 4) == std::vector<int>{14, 15, 0, 1});
  CHECK(hypercube_block(2, 4, 3, 2) == std::vector<int>{15, 12, 3, 0});
  CHECK(special_offset(10) == 7);
  CHECK(special_offset(4) == 1);
  CHECK(special_sizes(34) == std::vector<int>{4, 6, 10, 18, 34});
  CHECK(complement({0, 2}, 4) == std::vector<int>{1, 3});
}

TEST_CASE("entropy curves are deterministic and round-trip through CSV") {
  const auto tree = HolographicTree::regular(1, 1);
  const auto a = entropy_curve(build_network(1, 128, tree, false, 7), special_sizes(66));
  const auto b = entropy_curve(build_network(1, 128, tree, false, 7), special_sizes(66));
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].l == b.samples[i].l);
    CHECK(a.samples[i].S == b.samples[i].S);
    CHECK(a.samples[i].S >= 0.0);
  }
  std::stringstream csv;
  write_csv(csv, a, {"{\"seed\":7}"});
  const auto text = csv.str();
  CHECK(text.rfind("# {\"seed\":7}\nl,S_bits,seed,tree,D,L\n", 0) == 0);
  const auto back = read_csv(csv);
  CHECK(back.tree == "regular:1");
  CHECK(back.seed == 7);
  CHECK(back.L == 128);
  REQUIRE(back.samples.size() == a.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(back.samples[i].S == a.samples[i].S);

  const auto other = entropy_curve(build_network(1, 128, tree, false, 8), special_sizes(66));
  CHECK(other.samples.back().S != a.samples.back().S);
}

TEST_CASE("entropy curve rejects bad block requests") {
  const auto net = build_network(1, 32, HolographicTree::regular(1, 1), false, 1);
  const auto state = evaluate_state(net);
  CHECK_THROWS_AS(entropy_curve(net, state, {34}), InvalidInput);
  CHECK_NOTHROW(entropy_curve(net, state, {18}));
  CHECK_THROWS_AS(entropy_curve(net, state, {7}), InvalidInput);
  CHECK_NOTHROW(entropy_curve(net, state, {7}, 3));
  CHECK_THROWS_AS(entropy_curve(net, state, {6, 6}, 0), InvalidInput);
  CHECK_THROWS_AS(entropy_curve(net, state, {6}, 32), InvalidInput);
}
