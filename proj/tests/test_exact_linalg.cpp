#include <cmath>
#include <random>

#include "doctest.h"
#include "slocc/errors.hpp"
#include "slocc/exact_linalg.hpp"
#include "test_support.hpp"

using namespace slocc;
using testing::int_matrix;

TEST_CASE("gaussian rational arithmetic and parsing") {
  GaussianRational a = GaussianRational::parse("1/2+3/4i");
  CHECK(a.re() == mpq_class(1, 2));
  CHECK(a.im() == mpq_class(3, 4));
  CHECK(GaussianRational::parse(a.to_string()) == a);
  CHECK(GaussianRational::parse("-i") == -GaussianRational::imaginary_unit());
  CHECK(GaussianRational::parse("2/4") == GaussianRational::fraction(1, 2));
  CHECK_THROWS(GaussianRational::parse("1/0"));
  CHECK_THROWS(GaussianRational::parse("abc"));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    GaussianRational x = testing::random_entry(rng);
    GaussianRational y = testing::random_entry(rng);
    if (y.is_zero()) continue;
    CHECK((x * y) * y.inverse() == x);
    CHECK(GaussianRational::parse(x.to_string()) == x);
  }
}

TEST_CASE("rank_exact examples") {
  CHECK(rank_exact(ExactMatrix::identity(4)) == 4);
  CHECK(rank_exact(ExactMatrix(3, 3)) == 0);
  CHECK(rank_exact(int_matrix({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}})) == 2);
}

TEST_CASE("rank_exact agrees with the minor-expansion oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5;
    std::size_t c = 1 + rng() % 5;
    std::size_t k = rng() % (std::min(r, c) + 1);
    ExactMatrix m = trial % 2 == 0 ? testing::random_rank_matrix(rng, r, c, k) : testing::random_matrix(rng, r, c, 0.5);
    CHECK(rank_exact(m) == testing::minor_rank(m));
  }
}

TEST_CASE("determinant agrees with Laplace expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 6;
    ExactMatrix m = testing::random_matrix(rng, n, n);
    CHECK(determinant(m) == testing::laplace_det(m));
  }
}

TEST_CASE("invert examples and identity property") {
  CHECK(invert(int_matrix({{1, 0}, {3, 1}})) == int_matrix({{1, 0}, {-3, 1}}));
  CHECK(invert(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
  CHECK(invert(int_matrix({{0, 1}, {1, 0}})) == int_matrix({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(invert(int_matrix({{1, 2}, {2, 4}})), Singular);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 6;
    ExactMatrix m = testing::random_matrix(rng, n, n);
    if (!is_invertible(m)) continue;
    CHECK(m * invert(m) == ExactMatrix::identity(n));
    CHECK(invert(m) * m == ExactMatrix::identity(n));
  }
}

TEST_CASE("kernel_basis examples and annihilation") {
  auto k0 = kernel_basis(ExactMatrix(2, 2));
  CHECK(k0.size() == 2);
  CHECK(kernel_basis(ExactMatrix::identity(3)).empty());
  auto k1 = kernel_basis(int_matrix({{0, 1}, {0, 0}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == ExactVector{1, 0});
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    ExactMatrix m = testing::random_rank_matrix(rng, r, c, rng() % (std::min(r, c) + 1));
    auto basis = kernel_basis(m);
    CHECK(basis.size() == c - rank_exact(m));
    for (const auto& v : basis) {
      auto y = m * v;
      CHECK(std::all_of(y.begin(), y.end(), [](const GaussianRational& g) { return g.is_zero(); }));
    }
    if (!basis.empty()) CHECK(rank_exact(from_columns(basis, c)) == basis.size());
  }
}

TEST_CASE("solve returns a solution or reports inconsistency") {
  ExactMatrix m = int_matrix({{1, 2}, {2, 4}});
  CHECK_FALSE(solve(m, {1, 1}).has_value());
  auto x = solve(m, {1, 2});
  REQUIRE(x.has_value());
  CHECK(m * *x == ExactVector{1, 2});
}

TEST_CASE("pencil_det_poly examples") {
  CHECK(pencil_det_poly(ExactMatrix::identity(2), ExactMatrix(2, 2)) == UniPolynomial::constant(1));
  ExactMatrix g1 = int_matrix({{1, 0}, {0, 0}}), g2 = int_matrix({{0, 0}, {0, 1}});
  CHECK(pencil_det_poly(g1, g2) == UniPolynomial({0, 1}));
  ExactMatrix w1 = int_matrix({{0, 1}, {1, 0}}), w2 = int_matrix({{1, 0}, {0, 0}});
  CHECK(pencil_det_poly(w1, w2) == UniPolynomial::constant(-1));
}

TEST_CASE("pencil_det_poly matches direct determinants at exact points") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng() % 5;
    ExactMatrix a = testing::random_matrix(rng, n, n), b = testing::random_matrix(rng, n, n);
    UniPolynomial p = pencil_det_poly(a, b);
    for (int s = 0; s < 3; ++s) {
      GaussianRational t = testing::random_entry(rng);
      CHECK(p.evaluate(t) == testing::laplace_det(a + b * t));
    }
  }
}

TEST_CASE("minors_gcd_poly examples and divisibility") {
  CHECK(minors_gcd_poly(ExactMatrix(2, 2), ExactMatrix(2, 2), 1).is_zero());
  ExactMatrix g1 = int_matrix({{1, 0}, {0, 0}}), g2 = int_matrix({{0, 0}, {0, 1}});
  CHECK(minors_gcd_poly(g1, g2, 2) == UniPolynomial({0, 1}));
  CHECK(minors_gcd_poly(g1, g2, 1) == UniPolynomial::constant(1));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    std::size_t n = 2 + rng() % 3;
    ExactMatrix a = testing::random_rank_matrix(rng, n, n, n - 1);
    ExactMatrix b = testing::random_rank_matrix(rng, n, n, n - 1);
    UniPolynomial d = pencil_det_poly(a, b);
    if (d.is_zero()) continue;
    UniPolynomial g = minors_gcd_poly(a, b, n);
    CHECK(UniPolynomial::divmod(d, g).second.is_zero());
  }
}

TEST_CASE("poly_roots examples") {
  auto r = poly_roots(UniPolynomial({2, -3, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].exact);
  CHECK(r[0].value == GaussianRational(1));
  CHECK(r[1].value == GaussianRational(2));
  auto sq = poly_roots(UniPolynomial({0, 0, 1}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].exact);
  CHECK(sq[0].value.is_zero());
  CHECK(sq[0].multiplicity == 2);
  auto irr = poly_roots(UniPolynomial({-2, 0, 1}));
  REQUIRE(irr.size() == 2);
  double newton = 1.5;
  for (int i = 0; i < 30; ++i) newton -= (newton * newton - 2.0) / (2.0 * newton);
  for (const auto& x : irr) {
    CHECK_FALSE(x.exact);
    CHECK(std::abs(std::abs(x.approx.value.real()) - newton) < 1e-12);
  }
}

TEST_CASE("poly_roots: multiplicities sum to degree and residuals are small") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    UniPolynomial p = UniPolynomial::constant(testing::random_entry(rng, false) + GaussianRational(5));
    int deg = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < deg; ++k) {
      if (rng() % 3 == 0) {
        p = p * UniPolynomial({testing::random_entry(rng) - GaussianRational(7), 0, 1});
        ++k;
      } else {
        p = p * UniPolynomial::linear_factor(testing::random_entry(rng));
      }
    }
    auto roots = poly_roots(p);
    int total = 0;
    for (const auto& r : roots) {
      total += r.multiplicity;
      if (r.exact) {
        CHECK(p.evaluate(r.value).is_zero());
      } else {
        CHECK(std::abs(p.evaluate(r.approx.value)) < 10 * kDefaultRootTol * p.coefficient_norm());
      }
    }
    CHECK(total == p.degree());
  }
}

TEST_CASE("poly_roots rejects unresolvable clusters") {
  // (t^2 - 1e-16) has two roots 1e-8 apart: inside the cluster band.
  UniPolynomial p({GaussianRational(mpq_class(-1, 1) / mpq_class("10000000000000000")), 0, 1});
  CHECK_THROWS_AS(poly_roots(p), IllConditioned);
}

TEST_CASE("approximate rank guard band") {
  ApproxMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1e-13;
  CHECK(rank_approx(a, 1e-9) == 1);
  a(1, 1) = 1e-3;
  CHECK(rank_approx(a, 1e-9) == 2);
  a(1, 1) = 1e-8;
  CHECK_THROWS_AS(rank_approx(a, 1e-9), IllConditioned);
  ApproxComplex x{{1.0, 0.0}, 1e-9}, y{{1.0 + 1e-10, 0.0}, 1e-9}, z{{1.0 + 1e-7, 0.0}, 1e-9};
  CHECK(ApproxComplex::compare(x, y) == ApproxComplex::Relation::kEqual);
  CHECK(ApproxComplex::compare(x, z) == ApproxComplex::Relation::kIndeterminate);
}
