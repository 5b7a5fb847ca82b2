#include <random>

#include "doctest.h"
#include "slocc/bshape.hpp"
#include "slocc/errors.hpp"
#include "slocc/exact_linalg.hpp"
#include "test_support.hpp"

using namespace slocc;

namespace {

ExactMatrix ones_at(std::size_t n, const std::vector<std::pair<int, int>>& one_based) {
  ExactMatrix m(n, n);
  for (auto [i, j] : one_based) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
  return m;
}

ExactMatrix lambda_prime(std::size_t n, std::size_t zeros) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i + zeros < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<BShape> shapes_up_to(std::size_t max_size) {
  std::vector<BShape> all;
  for (std::size_t k = 1; 3 * k <= max_size; ++k)
    for (const auto& s : BShape::all_with_pairs(k, max_size)) all.push_back(s);
  return all;
}

}  // namespace

TEST_CASE("B3 layout") {
  BShape b3({1}, {1});
  CHECK(b3.size() == 3);
  CHECK(b3.b_matrix() == ones_at(3, {{2, 3}, {3, 1}}));
  CHECK(b3.lambda_matrix() == lambda_prime(3, 1));
  CHECK(rank_exact(b3.b_matrix()) == 2);
  CHECK(b3.traces() == std::vector<std::string>{"B3"});
}

TEST_CASE("B4 c-type and r-type layouts") {
  BShape c_type({2}, {1}), r_type({1}, {2});
  CHECK(c_type.b_matrix() == ones_at(4, {{1, 3}, {3, 4}, {4, 2}}));
  CHECK(r_type.b_matrix() == ones_at(4, {{2, 1}, {3, 4}, {4, 2}}));
  CHECK(c_type.traces() == std::vector<std::string>{"B3+c"});
  CHECK(r_type.traces() == std::vector<std::string>{"B3+r"});
  CHECK(c_type != r_type);
}

TEST_CASE("six-dimensional example from the recursive construction") {
  ExactMatrix b6 = ones_at(6, {{1, 3}, {3, 5}, {4, 2}, {5, 6}, {6, 4}});
  BShape s = shape_of(lambda_prime(6, 1), b6);
  CHECK(s.size() == 6);
  CHECK(s.b_matrix() == b6);
  CHECK(rank_exact(b6) == 5);
}

TEST_CASE("two interleaved B3 pairs") {
  BShape s({1, 1}, {1, 1});
  CHECK(s.b_matrix() == ones_at(6, {{3, 5}, {4, 6}, {5, 1}, {6, 2}}));
  CHECK(s.lambda_matrix() == lambda_prime(6, 2));
}

TEST_CASE("shape_of rejects non-canonical layouts") {
  CHECK_THROWS_AS(shape_of(lambda_prime(3, 1), ones_at(3, {{1, 3}, {3, 1}})), InvalidArgument);
}

TEST_CASE("shape rank equals size minus pair count") {
  for (const auto& s : shapes_up_to(8)) {
    CHECK(rank_exact(s.b_matrix()) == s.size() - s.pair_count());
    CHECK(shape_of(s.lambda_matrix(), s.b_matrix()) == s);
  }
}

TEST_CASE("mixture eliminator base cases") {
  BShape b1({0}, {0});
  OperatorPair one = build_mixture_eliminators(b1, GaussianRational(7), MixDirection::kBIntoLambda);
  CHECK(one.p == ExactMatrix::identity(1));
  CHECK(one.q == ExactMatrix::identity(1));
  BShape b2({1}, {0});
  OperatorPair two = build_mixture_eliminators(b2, GaussianRational(5), MixDirection::kBIntoLambda);
  CHECK(two.p == ExactMatrix::identity(2));
  CHECK(two.q == testing::int_matrix({{1, -5}, {0, 1}}));
}

TEST_CASE("mixture eliminators and flips satisfy their defining equations") {
  std::mt19937_64 rng(8);
  for (const auto& s : shapes_up_to(8)) {
    ExactMatrix l = s.lambda_matrix(), b = s.b_matrix();
    for (int trial = 0; trial < 3; ++trial) {
      GaussianRational c = testing::random_entry(rng);
      if (c.is_zero()) c = GaussianRational(2);
      OperatorPair m = build_mixture_eliminators(s, c, MixDirection::kBIntoLambda);
      CHECK(m.p * (l + b * c) * m.q == l);
      CHECK(m.p * b * m.q == b);
      OperatorPair pm = build_mixture_eliminators(s, c, MixDirection::kLambdaIntoB);
      CHECK(pm.p * l * pm.q == l);
      CHECK(pm.p * (b + l * c) * pm.q == b);
      FlipOperators f = build_flip_operators(s, c);
      CHECK(f.p * l * f.q == b * (-c));
      CHECK(f.p * b * f.q == l * c.inverse());
    }
  }
}

TEST_CASE("flip applied twice returns the pair up to scalars") {
  BShape s({2}, {1});
  FlipOperators f = build_flip_operators(s);
  CHECK(f.lambda_scale == GaussianRational(-1));
  CHECK(f.b_scale == GaussianRational(1));
  ExactMatrix l = s.lambda_matrix(), b = s.b_matrix();
  CHECK(f.p * f.p * l * f.q * f.q == l * GaussianRational(-1));
  CHECK(f.p * f.p * b * f.q * f.q == b * GaussianRational(-1));
}

TEST_CASE("B block corrector undoes any invertible T") {
  std::mt19937_64 rng(41);
  for (const auto& s : shapes_up_to(7)) {
    ExactMatrix l = s.lambda_matrix(), b = s.b_matrix();
    for (int trial = 0; trial < 4; ++trial) {
      ExactMatrix t(2, 2);
      do {
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j) t(i, j) = testing::random_entry(rng);
        if (trial == 0) t(0, 0) = 0;
      } while (determinant(t).is_zero());
      OperatorPair c = b_block_corrector(s, t);
      CHECK(c.p * (l * t(0, 0) + b * t(0, 1)) * c.q == l);
      CHECK(c.p * (l * t(1, 0) + b * t(1, 1)) * c.q == b);
    }
  }
}
