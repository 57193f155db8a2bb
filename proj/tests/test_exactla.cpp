#include <doctest.h>

#include <random>

#include "bkn/matrix.hpp"
#include "oracles.hpp"

using namespace bkn;

namespace {

RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

const RatMatrix kAPlusChain = from_rows({{1, -1, 0}, {-1, 1, -1}, {0, -1, 1}});
const RatMatrix kHSplit = from_rows({{1, -1, 0}, {-1, 2, 0}, {0, 0, 0}});
const RatMatrix kHSuper = from_rows({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}});
const RatMatrix kALambdaFlat = from_rows({{1, -1, 0}, {-1, 1, -1}, {0, -1, 0}});
const RatMatrix kHHalf =
    from_rows({{1, -1, 0}, {-1, Rat(1, 2), Rat(-1, 2)}, {0, Rat(-1, 2), Rat(3, 2)}});

}  // namespace

TEST_SUITE_BEGIN("exactla");

TEST_CASE("inertia on the worked operators") {
  CHECK(inertia(RatMatrix::identity(3)) == Inertia{3, 0, 0});
  // eigenvalues 1, 1 +- sqrt(2): one negative
  CHECK(inertia(kAPlusChain) == Inertia{2, 0, 1});
  CHECK(oracle::sturm_inertia(kAPlusChain) == Inertia{2, 0, 1});
  // char poly x(x^2 - 3x + 1): both nonzero roots positive
  CHECK(inertia(kHSplit) == Inertia{2, 1, 0});
  CHECK(oracle::sturm_inertia(kHSplit) == Inertia{2, 1, 0});
  CHECK(inertia(kHHalf).neg >= 1);  // det = -1
  CHECK(determinant(kHHalf) == Rat(-1));
}

TEST_CASE("inertia handles zero diagonals via 2x2 pivots") {
  auto hyper = from_rows({{0, 1}, {1, 0}});
  CHECK(inertia(hyper) == Inertia{1, 0, 1});
  auto z = from_rows({{0, 0}, {0, 0}});
  CHECK(inertia(z) == Inertia{0, 2, 0});
  auto mixed = from_rows({{0, 2, 0}, {2, 0, 0}, {0, 0, -3}});
  CHECK(inertia(mixed) == Inertia{1, 0, 2});
}

TEST_CASE("inertia matches the Sturm oracle on random matrices") {
  std::mt19937_64 rng(8001);
  for (int it = 0; it < 60; ++it) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto a = oracle::random_symmetric(rng, n);
    auto in = inertia(a);
    CHECK(in == oracle::sturm_inertia(a));
    CHECK(in.pos + in.zero + in.neg == n);
  }
}

TEST_CASE("inertia is congruence invariant") {
  std::mt19937_64 rng(8002);
  for (int it = 0; it < 30; ++it) {
    int n = 1 + static_cast<int>(rng() % 5);
    auto a = oracle::random_symmetric(rng, n);
    RatMatrix p(n, n);
    do {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          p.at(i, j) = Rat(static_cast<long>(rng() % 7) - 3);
    } while (determinant(p) == 0);
    RatMatrix ptap(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int s = 0; s < n; ++s)
          for (int t = 0; t < n; ++t)
            ptap.at(i, j) += p.at(s, i) * a.at(s, t) * p.at(t, j);
    CHECK(inertia(ptap) == inertia(a));
  }
}

TEST_CASE("negative_direction certifies exactly") {
  std::mt19937_64 rng(8003);
  for (int it = 0; it < 40; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto a = oracle::random_symmetric(rng, n);
    auto x = negative_direction(a);
    CHECK(x.has_value() == (inertia(a).neg >= 1));
    if (x) CHECK(quad_form(a, *x) < 0);
  }
}

TEST_CASE("kernel_basis") {
  auto z = from_rows({{0, 0}, {0, 0}});
  CHECK(kernel_basis(z).size() == 2);

  auto k = kernel_basis(kHSplit);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rat>{0, 0, 1});

  auto k2 = kernel_basis(kHSuper);
  REQUIRE(k2.size() == 2);
  CHECK(k2[0] == std::vector<Rat>{1, 1, 0});
  CHECK(k2[1] == std::vector<Rat>{0, 0, 1});

  // every kernel vector re-verifies
  std::mt19937_64 rng(8004);
  for (int it = 0; it < 40; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto a = oracle::random_symmetric(rng, n);
    auto basis = kernel_basis(a);
    CHECK(static_cast<int>(basis.size()) == inertia(a).zero);
    for (const auto& x : basis) {
      auto y = mat_vec(a, x);
      for (const Rat& q : y) CHECK(q == 0);
    }
  }
}

TEST_CASE("is_supersingular") {
  auto w = is_supersingular(kHSuper);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<Rat>{1, 1, 1});

  CHECK_FALSE(is_supersingular(kHSplit).has_value());  // kernel forces x1=x2=0
  CHECK_FALSE(is_supersingular(RatMatrix::identity(2)).has_value());

  std::mt19937_64 rng(8005);
  for (int it = 0; it < 40; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto a = oracle::random_symmetric(rng, n);
    if (auto x = is_supersingular(a)) {
      for (const Rat& q : *x) CHECK(q != 0);
      auto y = mat_vec(a, *x);
      for (const Rat& q : y) CHECK(q == 0);
      // supersingular implies singular and weakly singular
      CHECK(inertia(a).zero >= 1);
      CHECK(is_weakly_singular(a).has_value());
    }
  }
}

TEST_CASE("is_weakly_singular") {
  auto w = is_weakly_singular(kALambdaFlat);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<Rat>{1, 1, 0});
  // (Ax)_v = 0 exactly on the support
  auto y = mat_vec(kALambdaFlat, *w);
  CHECK(y == std::vector<Rat>{0, 0, -1});

  CHECK_FALSE(is_weakly_singular(kHHalf).has_value());  // all principal minors nonzero
  CHECK_FALSE(is_weakly_singular(RatMatrix::identity(3)).has_value());

  RatMatrix big(25, 25);
  CHECK_THROWS_AS(is_weakly_singular(big), SubsetCapExceeded);
  CHECK(is_weakly_singular(RatMatrix(25, 25), 25).has_value());
}

TEST_CASE("weak singularity matches support brute force") {
  std::mt19937_64 rng(8006);
  for (int it = 0; it < 50; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto a = oracle::random_symmetric(rng, n);
    auto w = is_weakly_singular(a);
    CHECK(w.has_value() == oracle::brute_weakly_singular(a));
    if (w) {
      auto y = mat_vec(a, *w);
      bool support_nonempty = false;
      for (int v = 0; v < n; ++v) {
        if ((*w)[v] != 0) {
          support_nonempty = true;
          CHECK(y[v] == 0);
        }
      }
      CHECK(support_nonempty);
    }
  }
}

TEST_SUITE_END();
