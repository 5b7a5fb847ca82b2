#include <cmath>
#include <random>

#include "doctest.h"
#include "slocc/canonicalizer.hpp"
#include "slocc/errors.hpp"
#include "slocc/exact_linalg.hpp"
#include "test_support.hpp"

using namespace slocc;
using testing::int_matrix;

namespace {

ExactMatrix ones_at(std::size_t n, const std::vector<std::pair<int, int>>& one_based) {
  ExactMatrix m(n, n);
  for (auto [i, j] : one_based) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
  return m;
}

ExactMatrix diag(std::initializer_list<long> d) {
  ExactMatrix m(d.size(), d.size());
  std::size_t i = 0;
  for (long v : d) m(i, i) = v, ++i;
  return m;
}

std::vector<JordanBlock> blocks(std::initializer_list<std::pair<long, int>> spec) {
  std::vector<JordanBlock> out;
  for (auto [v, s] : spec) out.push_back({ProjPoint::finite(GaussianRational(v)), s});
  return out;
}

void check_witness(const MatrixPair& input, const Canonicalization& c) {
  REQUIRE(c.witness.exact);
  REQUIRE(c.witness.ops.has_value());
  CHECK(apply_ilo(input, *c.witness.ops) == c.canonical.pair);
}

std::pair<std::size_t, std::size_t> nl(const MatrixPair& m) {
  auto p = analyze_pencil(m);
  return {p.generic_rank, p.min_rank};
}

// Random exact structure: Jordan blocks with small integer eigenvalues and
// optionally a B block.
MatrixPair random_canonical_like(std::mt19937_64& rng, std::size_t n_total, bool with_b) {
  std::optional<BShape> shape;
  std::size_t used = 0;
  if (with_b) {
    auto all = BShape::all_with_pairs(1 + rng() % 2, n_total);
    if (all.empty()) all = BShape::all_with_pairs(1, n_total);
    shape = all[rng() % all.size()];
    used = shape->size();
  }
  std::vector<JordanBlock> bl;
  while (used < n_total) {
    int s = 1 + static_cast<int>(rng() % std::min<std::size_t>(3, n_total - used));
    long v = static_cast<long>(rng() % 4) - 1;
    bl.push_back({ProjPoint::finite(GaussianRational(v)), s});
    used += static_cast<std::size_t>(s);
  }
  MatrixPair m = assemble_canonical(bl, shape);
  // Unsorted blocks are fine: the pair is only a seed for a random orbit.
  return m;
}

}  // namespace

TEST_CASE("jordan chains recover a conjugated Jordan matrix") {
  std::mt19937_64 rng(11);
  auto bl = blocks({{2, 2}, {2, 1}, {-1, 3}, {0, 1}});
  ExactMatrix j = jordan_matrix(bl);
  for (int trial = 0; trial < 5; ++trial) {
    ExactMatrix s;
    do s = testing::random_matrix(rng, 7, 7); while (!is_invertible(s));
    ExactMatrix a = s * j * invert(s);
    std::vector<EigenGroup> groups{{ProjPoint::finite(2), {2, 1}}, {ProjPoint::finite(-1), {3}}, {ProjPoint::finite(0), {1}}};
    auto jd = jordan_exact(a, groups);
    CHECK(invert(jd.s) * a * jd.s == j);
    groups[0].segre = {1, 1, 1};
    CHECK_THROWS_AS(jordan_exact(a, groups), Error);
  }
}

TEST_CASE("canonical forms of the two-qubit-like classes") {
  MatrixPair ghz(diag({1, 0}), diag({0, 1}));
  auto c = canonicalize(ghz);
  CHECK(c.canonical.kind == CanonicalKind::kFullRank);
  CHECK(c.canonical.pair == MatrixPair(diag({1, 1}), diag({1, 0})));
  check_witness(ghz, c);

  MatrixPair w(diag({1, 1}), int_matrix({{0, 0}, {1, 0}}));
  auto cw = canonicalize(w);
  CHECK(cw.canonical.pair == MatrixPair(diag({1, 1}), int_matrix({{0, 1}, {0, 0}})));
  check_witness(w, cw);
}

TEST_CASE("full rank examples") {
  MatrixPair nil22(diag({1, 1, 1, 1}), jordan_matrix(blocks({{0, 2}, {0, 2}})));
  auto c = reduce_full_rank(nil22);
  CHECK(c.canonical.pair == nil22);
  CHECK(*c.witness.ops == ILOTriple::identity(4));
  CHECK(nl(c.canonical.pair) == std::make_pair<std::size_t, std::size_t>(4, 2));

  // A = [[0,0],[1,0]] after the chart: similar to the nilpotent block.
  MatrixPair w(diag({1, 1}), int_matrix({{0, 0}, {1, 0}}));
  CHECK(reduce_full_rank(w).canonical.pair.gamma2 == int_matrix({{0, 1}, {0, 0}}));
  CHECK_THROWS_AS(reduce_full_rank(MatrixPair(diag({1, 1, 1, 0}), ones_at(4, {{3, 4}, {4, 2}}))), InvalidArgument);
}

TEST_CASE("rank-deficient representatives are fixed points") {
  MatrixPair c32(diag({1, 1, 1, 0}), ones_at(4, {{3, 4}, {4, 2}}));
  auto a = canonicalize(c32);
  CHECK(a.canonical.kind == CanonicalKind::kRankDeficient);
  CHECK(a.canonical.pair == c32);
  CHECK(*a.witness.ops == ILOTriple::identity(4));
  REQUIRE(a.canonical.b_shape.has_value());
  CHECK(a.canonical.b_shape->size() == 3);

  MatrixPair c_type(diag({1, 1, 1, 0}), ones_at(4, {{1, 3}, {3, 4}, {4, 2}}));
  MatrixPair r_type(diag({1, 1, 1, 0}), ones_at(4, {{2, 1}, {3, 4}, {4, 2}}));
  auto cc = canonicalize(c_type);
  auto cr = canonicalize(r_type);
  CHECK(cc.canonical.pair == c_type);
  CHECK(cr.canonical.pair == r_type);
  CHECK(*cr.witness.ops == ILOTriple::identity(4));
  CHECK(*cc.canonical.b_shape != *cr.canonical.b_shape);
  CHECK(cc.canonical.b_shape->traces() == std::vector<std::string>{"B3+c"});
  CHECK(cr.canonical.b_shape->traces() == std::vector<std::string>{"B3+r"});
}

TEST_CASE("two B3 blocks in six dimensions") {
  MatrixPair target = assemble_canonical({}, BShape({1, 1}, {1, 1}));
  MatrixPair scrambled = apply_ilo(target, random_ilo(6, 3));
  auto c = canonicalize(scrambled);
  CHECK(c.canonical.pair == target);
  check_witness(scrambled, c);
  CHECK(nl(scrambled) == std::make_pair<std::size_t, std::size_t>(4, 4));
}

TEST_CASE("witness soundness, idempotence and rank preservation on random orbits") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + rng() % 4;
    bool with_b = n >= 3 && rng() % 2 == 0;
    MatrixPair seed = random_canonical_like(rng, n, with_b);
    if (!is_true_entangled(seed)) continue;
    MatrixPair input = apply_ilo(seed, random_ilo(n, rng()));
    auto c = canonicalize(input);
    check_witness(input, c);
    CHECK(nl(c.canonical.pair) == nl(input));
    auto again = canonicalize(c.canonical.pair);
    CHECK(again.canonical.pair == c.canonical.pair);
    CHECK(*again.witness.ops == ILOTriple::identity(n));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("canonical pair is an orbit invariant for at most two points") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    MatrixPair seed(diag({1, 1, 1, 1}), jordan_matrix(blocks({{0, 2}, {3, 1}, {3, 1}})));
    if (trial % 2) seed = assemble_canonical(blocks({{5, 2}}), BShape({1}, {1}));
    auto ref = canonicalize(seed).canonical.pair;
    MatrixPair input = apply_ilo(seed, random_ilo(seed.dim(), rng()));
    CHECK(canonicalize(input).canonical.pair == ref);
  }
}

TEST_CASE("irrational spectrum gives an approximate witness") {
  ExactMatrix comp = int_matrix({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});  // t^3 - 2
  MatrixPair m(ExactMatrix::identity(3), comp);
  auto c = canonicalize(m);
  CHECK_FALSE(c.canonical.exact);
  CHECK_FALSE(c.witness.exact);
  CHECK(c.witness.residual < 1e-8);
  CHECK(c.note.find("inexact") != std::string::npos);
  // independent residual check by direct multiplication
  ApproxMatrix g1 = to_approx(m.gamma1) * c.witness.t(0, 0) + to_approx(m.gamma2) * c.witness.t(0, 1);
  ApproxMatrix g2 = to_approx(m.gamma1) * c.witness.t(1, 0) + to_approx(m.gamma2) * c.witness.t(1, 1);
  ApproxMatrix e = c.witness.p * g1 * c.witness.q;
  ApproxMatrix j = c.witness.p * g2 * c.witness.q;
  double dev = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      dev = std::max(dev, std::abs(e(i, k) - (i == k ? 1.0 : 0.0)));
      dev = std::max(dev, std::abs(j(i, k) - c.canonical.approx_second(i, k)));
    }
  CHECK(dev <= c.witness.residual * 10 + 1e-12);
  CHECK(c.canonical.blocks.size() == 3);

  // a rank-deficient pair with an irrational regular part is descriptor-only
  MatrixPair rd = assemble_canonical({}, BShape({1}, {1}));
  ExactMatrix h1 = direct_sum(ExactMatrix::identity(3), rd.gamma1);
  ExactMatrix h2 = direct_sum(comp, rd.gamma2);
  CHECK_THROWS_AS(canonicalize(MatrixPair(h1, h2)), IllConditioned);
}

TEST_CASE("fixing the rank-deficient first slice forces block-triangular operators") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::size_t n = 2 + trial % 3, k = 1 + trial % 2, dim = n + k;
    ExactMatrix lam(dim, dim);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = 1;
    // P Lam = Lam R with unknowns (P, R); R = Q^{-1}
    const std::size_t nn = dim * dim;
    ExactMatrix sys(nn, 2 * nn);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t t = 0; t < dim; ++t) {
          sys(i * dim + j, i * dim + t) += lam(t, j);
          sys(i * dim + j, nn + t * dim + j) -= lam(i, t);
        }
    auto basis = kernel_basis(sys);
    CHECK(basis.size() == n * n + 2 * n * k + 2 * k * k);
    ExactVector x(2 * nn);
    for (const auto& b : basis) {
      GaussianRational c = testing::random_entry(rng);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * b[i];
    }
    ExactMatrix p(dim, dim), r(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) p(i, j) = x[i * dim + j], r(i, j) = x[nn + i * dim + j];
    if (!is_invertible(p) || !is_invertible(r)) continue;
    ExactMatrix q = invert(r);
    CHECK(p * lam * q == lam);
    for (std::size_t i = n; i < dim; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(p(i, j).is_zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n; j < dim; ++j) CHECK(q(i, j).is_zero());
  }
}

TEST_CASE("strict intertwiner") {
  MatrixPair a(diag({1, 1, 0}), ones_at(3, {{2, 3}, {3, 1}}));
  MatrixPair b = apply_ilo(a, ILOTriple(ExactMatrix::identity(2), int_matrix({{1, 2, 0}, {0, 1, 0}, {1, 0, 1}}),
                                        int_matrix({{2, 0, 0}, {1, 1, 0}, {0, 0, 1}})));
  auto pq = strict_intertwiner(a, b);
  REQUIRE(pq.has_value());
  CHECK(pq->first * a.gamma1 * pq->second == b.gamma1);
  CHECK(pq->first * a.gamma2 * pq->second == b.gamma2);
  CHECK_FALSE(strict_intertwiner(MatrixPair(diag({1, 1}), diag({0, 1})), MatrixPair(diag({1, 1}), diag({0, 2}))).has_value());
}
