#include "doctest.h"
#include "entroscale/cone.hpp"
#include "entroscale/errors.hpp"

using namespace entroscale;

TEST_CASE("crossover scale of special blocks") {
  CHECK(crossover_scale(10) == 3);
  CHECK(crossover_scale(4) == 1);
  CHECK(crossover_scale(1026) == 10);
  for (int k = 1; k < 40; ++k) CHECK(crossover_scale((std::int64_t{1} << k) + 2) == k);
}

TEST_CASE("non-special sizes are rejected with the nearest valid sizes") {
  CHECK_THROWS_AS(crossover_scale(11), InvalidInput);
  CHECK_THROWS_AS(crossover_scale(3), InvalidInput);
  CHECK_THROWS_AS(crossover_scale(0), InvalidInput);
  CHECK_THROWS_AS(crossover_scale(-6), InvalidInput);
  try {
    crossover_scale(12);
    FAIL("expected rejection");
  } catch (const InvalidInput& e) {
    const std::string msg = e.what();
    CHECK(msg.find("10") != std::string::npos);
    CHECK(msg.find("18") != std::string::npos);
  }
  try {
    crossover_scale(3);
    FAIL("expected rejection");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("is 4") != std::string::npos);
  }
}

TEST_CASE("profile of the l0 = 10 block") {
  const auto p = cone_profile(10, 1);
  CHECK(p.zbar == 3);
  CHECK(p.widths == std::vector<std::int64_t>{10, 6, 4, 3});
  REQUIRE(p.traced.size() == 3);
  for (const auto& n : p.traced) CHECK(n == 2);
}

TEST_CASE("traced sites in two dimensions") {
  CHECK(traced_sites(4, 2) == 20);
  CHECK(traced_sites(3, 3) == 125 - 27);
}

TEST_CASE("profile recurrence, bracket and closed form") {
  for (int dim = 1; dim <= 3; ++dim) {
    for (int k = 1; k <= 20; ++k) {
      const std::int64_t l0 = (std::int64_t{1} << k) + 2;
      const auto p = cone_profile(l0, dim);
      REQUIRE(p.widths.size() == static_cast<std::size_t>(k) + 1);
      CHECK(p.widths.back() == 3);
      for (int z = 0; z < k; ++z) {
        const auto lz = p.widths[static_cast<std::size_t>(z)];
        const auto next = p.widths[static_cast<std::size_t>(z) + 1];
        CHECK(2 * next == lz + 2);
        CHECK(2 * next >= lz + 2);
        CHECK(2 * next <= lz + 4);
        CHECK(lz == ((l0 - 2) >> z) + 2);
        BigInt direct = 1;
        BigInt inner = 1;
        for (int i = 0; i < dim; ++i) {
          direct *= lz + 2;
          inner *= lz;
        }
        CHECK(p.traced[static_cast<std::size_t>(z)] == direct - inner);
        if (dim == 1) CHECK(p.traced[static_cast<std::size_t>(z)] == 2);
        // n^tra <= 2D (l+2)^{D-1}
        BigInt surface = 2 * dim;
        for (int i = 0; i < dim - 1; ++i) surface *= lz + 2;
        CHECK(p.traced[static_cast<std::size_t>(z)] <= surface);
      }
    }
  }
}

TEST_CASE("cumulative traced sites") {
  const auto p = cone_profile(10, 1);
  CHECK(cumulative_traced(p, HolographicTree::regular(1, 1), 3) == 6);
  CHECK(cumulative_traced(p, HolographicTree::regular(1, 1), 0) == 0);
  CHECK(cumulative_traced(p, HolographicTree::regular(1, 2), 3) == 14);

  for (int dim = 1; dim <= 3; ++dim) {
    const auto profile = cone_profile(1026, dim);
    for (int b = 1; b <= (1 << dim); ++b) {
      const auto tree = HolographicTree::regular(dim, b);
      BigInt previous = -1;
      for (int z = 0; z <= profile.zbar; ++z) {
        const auto n = cumulative_traced(profile, tree, z);
        CHECK(n >= previous);
        previous = n;
      }
    }
  }
}

TEST_CASE("cumulative traced rejects bad inputs") {
  const auto p = cone_profile(10, 1);
  CHECK_THROWS_AS(cumulative_traced(p, HolographicTree::regular(2, 1), 2), InvalidInput);
  CHECK_THROWS_AS(cumulative_traced(p, HolographicTree::regular(1, 1), 4), InvalidInput);
  CHECK_THROWS_AS(cumulative_traced(p, HolographicTree::regular(1, 1), -1), InvalidInput);
}

TEST_CASE("width bounds for arbitrary placements") {
  const auto b = cone_width_bounds(37, 10);
  REQUIRE(b.lower.size() == 11);
  for (std::size_t z = 0; z + 1 < b.lower.size(); ++z) {
    CHECK(2 * b.lower[z + 1] >= b.lower[z] + 2);
    CHECK(2 * b.upper[z + 1] <= b.upper[z] + 4);
    CHECK(b.lower[z] <= b.upper[z]);
  }
  CHECK(b.lower.back() == 3);
  CHECK(b.upper.back() == 4);

  // The special profile lives inside the bracket.
  const auto p = cone_profile(34, 1);
  const auto wb = cone_width_bounds(34, p.zbar);
  for (std::size_t z = 0; z < p.widths.size(); ++z) {
    CHECK(wb.lower[z] <= p.widths[z]);
    CHECK(p.widths[z] <= wb.upper[z]);
  }
}
