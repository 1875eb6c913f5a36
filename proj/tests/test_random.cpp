#include "doctest.h"
#include "egodyn/random.hpp"

using egodyn::RandomStream;

TEST_CASE("random stream is reproducible from its seed") {
  RandomStream a(123), b(123), c(124);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
}

TEST_CASE("mt19937_64 reference value anchors cross-platform streams") {
  // 10000th output for the default seed, fixed by the C++ standard.
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ULL);
}

TEST_CASE("index stays in range and hits every value") {
  RandomStream rng(7);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 5000; ++i) {
    const auto k = rng.index(5);
    REQUIRE(k < 5);
    ++hits[k];
  }
  for (int h : hits) CHECK(h > 800);
  CHECK(rng.index(1) == 0);
}

TEST_CASE("unit draws lie in [0, 1) and bernoulli respects the extremes") {
  RandomStream rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK_FALSE(rng.bernoulli(0.0));
    CHECK(rng.bernoulli(1.0));
  }
}

TEST_CASE("derived seeds separate tags and indices") {
  using egodyn::derive_seed;
  CHECK(derive_seed(1, "trace", 3) == derive_seed(1, "trace", 3));
  CHECK(derive_seed(1, "trace", 3) != derive_seed(1, "trace", 4));
  CHECK(derive_seed(1, "trace", 3) != derive_seed(1, "round", 3));
  CHECK(derive_seed(1, "trace", 3) != derive_seed(2, "trace", 3));
  CHECK(derive_seed(1, "x", 1, 2) != derive_seed(1, "x", 2, 1));
}
