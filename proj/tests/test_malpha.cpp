#include <doctest.h>

#include <numeric>
#include <random>

#include "bkn/decide.hpp"
#include "bkn/malpha.hpp"
#include "oracles.hpp"

using namespace bkn;

TEST_SUITE_BEGIN("malpha");

TEST_CASE("build_malpha charges and indices") {
  auto g = build_malpha({1, 1, 4, 3});
  CHECK(g.charge == std::vector<Rat>{Rat(1), Rat(3), Rat(-1)});
  CHECK(g.edges[0].b == 1);
  CHECK(g.edges[1].b == 1);
  REQUIRE(g.rho.has_value());
  CHECK(g.rho->value == std::vector<int>{1, 1});

  auto g2 = build_malpha({-3, 2, -1, 1});
  CHECK(g2.charge == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(3, 2)});
  CHECK(g2.edges[1].b == 2);

  CHECK_THROWS_AS(build_malpha({1, 0, 0, 1}), std::invalid_argument);   // b = 0
  CHECK_THROWS_AS(build_malpha({1, 1, 0, 1}), std::invalid_argument);   // det 1
  CHECK_THROWS_AS(build_malpha({2, 1, 1, 1}), std::invalid_argument);   // det 1
}

TEST_CASE("charge_from_framing") {
  CHECK(charge_from_framing({}) == 0);
  CHECK(charge_from_framing({{1, 1}, {2, 1}}) == Rat(3, 2));
  CHECK(charge_from_framing({{5, 2}, {-5, 2}}) == 0);
  CHECK_THROWS_AS(charge_from_framing({{0, 1}}), std::invalid_argument);
}

TEST_CASE("random family members validate and stay consistent") {
  std::mt19937_64 rng(12001);
  int built = 0;
  for (int it = 0; it < 60; ++it) {
    // sample a, b coprime, then pick d with b | (a d + 1) and set
    // c = (a d + 1) / b, so that a d - b c = -1
    long long a = static_cast<long long>(rng() % 9) - 4;
    long long b = static_cast<long long>(rng() % 8) + 1;
    if (std::gcd(a < 0 ? -a : a, b) != 1) continue;
    for (long long d = -20; d <= 20; ++d) {
      if ((a * d + 1) % b != 0) continue;
      GluingMatrix m{a, b, (a * d + 1) / b, d};
      REQUIRE(m.det() == -1);
      auto graph = build_malpha(m);
      CHECK(validate(graph).empty());
      auto r = decide_all(graph);
      CHECK(r.consistency == "ok");
      ++built;
      break;
    }
  }
  CHECK(built > 10);
}

TEST_SUITE_END();
