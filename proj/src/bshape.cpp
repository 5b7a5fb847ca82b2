#include "slocc/bshape.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "slocc/errors.hpp"
#include "slocc/exact_linalg.hpp"
#include "slocc/pencil_analysis.hpp"

namespace slocc {

namespace {

// One (c, r) pair in local coordinates. Index `size-1` is the seed c.
struct PairLayout {
  int c_len = 0;
  int r_len = 0;
  std::size_t size = 1;
  std::vector<bool> steps;       // true = c-extension, in application order
  std::vector<std::size_t> xs;   // xs[0] = seed, xs[i] = i-th c-extension
  std::vector<std::size_t> ys;   // ys[0] = seed, ys[j] = j-th r-extension
  ExactMatrix lam;
  ExactMatrix b;
};

PairLayout make_pair_layout(int c_len, int r_len) {
  PairLayout pl;
  pl.c_len = c_len;
  pl.r_len = r_len;
  int c_left = c_len, r_left = r_len;
  while (c_left > 0 && r_left > 0) {
    pl.steps.push_back(true);
    pl.steps.push_back(false);
    --c_left;
    --r_left;
  }
  for (; c_left > 0; --c_left) pl.steps.push_back(true);
  for (; r_left > 0; --r_left) pl.steps.push_back(false);
  const std::size_t m = pl.steps.size();
  pl.size = m + 1;
  pl.lam = ExactMatrix(pl.size, pl.size);
  pl.b = ExactMatrix(pl.size, pl.size);
  std::size_t l_head = m, t_head = m;
  pl.xs.push_back(m);
  pl.ys.push_back(m);
  for (std::size_t t = 0; t < m; ++t) {
    const std::size_t idx = m - 1 - t;
    pl.lam(idx, idx) = 1;
    if (pl.steps[t]) {
      pl.b(idx, l_head) = 1;
      l_head = idx;
      pl.xs.push_back(idx);
    } else {
      pl.b(t_head, idx) = 1;
      t_head = idx;
      pl.ys.push_back(idx);
    }
  }
  return pl;
}

std::vector<PairLayout> layouts(const BShape& s) {
  std::vector<PairLayout> out;
  for (auto [c, r] : s.pairs()) out.push_back(make_pair_layout(c, r));
  return out;
}

ExactMatrix embedding(const BShape& s) {
  auto pos = s.positions();
  ExactMatrix e(s.size(), s.size());
  std::size_t offset = 0;
  for (const auto& p : pos) {
    for (std::size_t i = 0; i < p.size(); ++i) e(p[i], offset + i) = 1;
    offset += p.size();
  }
  return e;
}

ExactMatrix embed(const BShape& s, const std::vector<ExactMatrix>& blocks) {
  ExactMatrix d(s.size(), s.size());
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    d.set_block(offset, offset, b);
    offset += b.rows();
  }
  ExactMatrix e = embedding(s);
  return e * d * e.transpose();
}

// Recursive construction for one chain pair: P (L + l B) Q = L, P B Q = B.
OperatorPair eliminate(const ExactMatrix& lam, const ExactMatrix& b, const GaussianRational& l) {
  const std::size_t n = b.rows();
  if (n <= 1) return {ExactMatrix::identity(n), ExactMatrix::identity(n)};
  bool col0_zero = true, row0_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!b(i, 0).is_zero()) col0_zero = false;
    if (!b(0, i).is_zero()) row0_zero = false;
  }
  if (!col0_zero) {
    if (!row0_zero) throw InvalidArgument("mixture eliminators: block not in recursive layout");
    OperatorPair t = eliminate(lam.transpose(), b.transpose(), l);
    return {t.q.transpose(), t.p.transpose()};
  }
  const std::size_t m = n - 1;
  ExactMatrix bn = b.block(1, 1, m, m);
  ExactMatrix ln = lam.block(1, 1, m, m);
  ExactMatrix r = b.block(0, 1, 1, m);
  OperatorPair inner = eliminate(ln, bn, l);
  // X bn = r (E - Qn), solved through the transpose system.
  ExactMatrix rhs = r * (ExactMatrix::identity(m) - inner.q);
  auto x = solve(bn.transpose(), rhs.transpose().column(0));
  if (!x) throw Error(ErrorCode::kInternal, "mixture eliminators: inconsistent X system");
  ExactMatrix xm(1, m, *x);
  ExactMatrix y = r * inner.q * l + xm * ln;
  ExactMatrix left = ExactMatrix::identity(n);
  left.set_block(0, 1, xm);
  ExactMatrix right = ExactMatrix::identity(n);
  right.set_block(0, 1, -y);
  ExactMatrix p = left * direct_sum(ExactMatrix::identity(1), inner.p);
  ExactMatrix q = direct_sum(ExactMatrix::identity(1), inner.q) * right;
  return {p, q};
}

ExactMatrix map_matrix_rows(const std::vector<std::size_t>& sigma) {
  // (Pi M)(i, j) = M(sigma(i), j)
  ExactMatrix p(sigma.size(), sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) p(i, sigma[i]) = 1;
  return p;
}

ExactMatrix map_matrix_cols(const std::vector<std::size_t>& tau) {
  // (M Pi)(i, j) = M(i, tau(j))
  ExactMatrix p(tau.size(), tau.size());
  for (std::size_t j = 0; j < tau.size(); ++j) p(tau[j], j) = 1;
  return p;
}

void check_layout(const BShape& s, const ExactMatrix& lam, const ExactMatrix& b) {
  if (lam != s.lambda_matrix() || b != s.b_matrix())
    throw InvalidArgument("B block is not in canonical layout");
}

// Diagonal D1, D2 with D1 L D2 = L and D1 (k B) D2 = B.
OperatorPair chain_scaling(const BShape& s, const GaussianRational& kappa) {
  const std::size_t n = s.size();
  ExactMatrix lam = s.lambda_matrix(), b = s.b_matrix();
  std::vector<GaussianRational> rowv(n), colv(n);
  std::vector<bool> row_set(n, false), col_set(n, false);
  GaussianRational kinv = kappa.inverse();
  // Edges: row i - col j with required product rowv[i] * colv[j] = w.
  std::vector<std::vector<std::pair<std::size_t, GaussianRational>>> row_adj(n), col_adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!lam(i, j).is_zero()) {
        row_adj[i].emplace_back(j, GaussianRational(1));
        col_adj[j].emplace_back(i, GaussianRational(1));
      }
      if (!b(i, j).is_zero()) {
        row_adj[i].emplace_back(j, kinv);
        col_adj[j].emplace_back(i, kinv);
      }
    }
  std::function<void(std::size_t)> visit_row;
  std::function<void(std::size_t)> visit_col = [&](std::size_t j) {
    for (auto& [i, w] : col_adj[j]) {
      if (row_set[i]) continue;
      rowv[i] = w / colv[j];
      row_set[i] = true;
      visit_row(i);
    }
  };
  visit_row = [&](std::size_t i) {
    for (auto& [j, w] : row_adj[i]) {
      if (col_set[j]) continue;
      colv[j] = w / rowv[i];
      col_set[j] = true;
      visit_col(j);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (row_set[i]) continue;
    rowv[i] = 1;
    row_set[i] = true;
    visit_row(i);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!col_set[j]) colv[j] = 1;
  ExactMatrix d1(n, n), d2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d1(i, i) = rowv[i];
    d2(i, i) = colv[i];
  }
  return {d1, d2};
}

}  // namespace

BShape::BShape(std::vector<int> c_lengths, std::vector<int> r_lengths) : c_(std::move(c_lengths)), r_(std::move(r_lengths)) {
  if (c_.size() != r_.size()) throw InvalidArgument("BShape: chain lists must have equal length");
  for (int v : c_)
    if (v < 0) throw InvalidArgument("BShape: negative chain length");
  for (int v : r_)
    if (v < 0) throw InvalidArgument("BShape: negative chain length");
  std::sort(c_.rbegin(), c_.rend());
  std::sort(r_.rbegin(), r_.rend());
}

std::size_t BShape::size() const {
  std::size_t s = c_.size();
  for (int v : c_) s += static_cast<std::size_t>(v);
  for (int v : r_) s += static_cast<std::size_t>(v);
  return s;
}

std::vector<std::pair<int, int>> BShape::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < c_.size(); ++i) out.emplace_back(c_[i], r_[i]);
  return out;
}

std::vector<std::string> BShape::traces() const {
  std::vector<std::string> out;
  for (const auto& pl : layouts(*this)) {
    std::string s;
    std::size_t start = 0;
    if (pl.c_len >= 1 && pl.r_len >= 1) {
      s = "B3";
      start = 2;
    } else {
      s = "B1";
    }
    for (std::size_t t = start; t < pl.steps.size(); ++t) s += pl.steps[t] ? "+c" : "+r";
    out.push_back(s);
  }
  return out;
}

std::string BShape::to_string() const {
  std::ostringstream os;
  auto tr = traces();
  for (std::size_t i = 0; i < tr.size(); ++i) os << (i ? " (+) " : "") << tr[i];
  return os.str();
}

std::vector<std::vector<std::size_t>> BShape::positions() const {
  auto ls = layouts(*this);
  struct Slot {
    std::size_t dist, pair, local;
  };
  std::vector<Slot> slots;
  for (std::size_t p = 0; p < ls.size(); ++p)
    for (std::size_t i = 0; i < ls[p].size; ++i) slots.push_back({ls[p].size - 1 - i, p, i});
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.dist != b.dist) return a.dist > b.dist;
    return a.pair < b.pair;
  });
  std::vector<std::vector<std::size_t>> pos(ls.size());
  for (std::size_t p = 0; p < ls.size(); ++p) pos[p].resize(ls[p].size);
  for (std::size_t g = 0; g < slots.size(); ++g) pos[slots[g].pair][slots[g].local] = g;
  return pos;
}

ExactMatrix BShape::lambda_matrix() const {
  std::vector<ExactMatrix> blocks;
  for (const auto& pl : layouts(*this)) blocks.push_back(pl.lam);
  return embed(*this, blocks);
}

ExactMatrix BShape::b_matrix() const {
  std::vector<ExactMatrix> blocks;
  for (const auto& pl : layouts(*this)) blocks.push_back(pl.b);
  return embed(*this, blocks);
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> BShape::flip_maps() const {
  auto ls = layouts(*this);
  auto pos = positions();
  std::vector<std::size_t> sigma(size()), tau(size());
  for (std::size_t p = 0; p < ls.size(); ++p) {
    const auto& pl = ls[p];
    const auto& xs = pl.xs;
    const auto& ys = pl.ys;
    const std::size_t e = static_cast<std::size_t>(pl.c_len), h = static_cast<std::size_t>(pl.r_len);
    auto g = [&](std::size_t local) { return pos[p][local]; };
    for (std::size_t i = 1; i <= e; ++i) sigma[g(xs[i])] = g(xs[e + 1 - i]);
    for (std::size_t i = 0; i <= h; ++i) sigma[g(ys[i])] = g(ys[h - i]);
    for (std::size_t j = 0; j <= e; ++j) tau[g(xs[j])] = g(xs[e - j]);
    for (std::size_t j = 1; j <= h; ++j) tau[g(ys[j])] = g(ys[h + 1 - j]);
  }
  return {sigma, tau};
}

int BShape::compare(const BShape& a, const BShape& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a.c_ != b.c_) return a.c_ > b.c_ ? -1 : 1;
  if (a.r_ != b.r_) return a.r_ > b.r_ ? -1 : 1;
  return 0;
}

namespace {

void nonincreasing_sequences(std::size_t len, int max_value, int budget, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (cur.size() == len) {
    out.push_back(cur);
    return;
  }
  for (int v = std::min(max_value, budget); v >= 1; --v) {
    cur.push_back(v);
    nonincreasing_sequences(len, v, budget - v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BShape> BShape::all_with_pairs(std::size_t pairs, std::size_t max_size) {
  std::vector<BShape> out;
  if (pairs == 0 || max_size < 3 * pairs) return out;
  const int budget = static_cast<int>(max_size - pairs);
  std::vector<std::vector<int>> cs, cur_store;
  std::vector<int> cur;
  nonincreasing_sequences(pairs, budget, budget, cur, cs);
  for (const auto& c : cs) {
    int used = std::accumulate(c.begin(), c.end(), 0);
    std::vector<std::vector<int>> rs;
    nonincreasing_sequences(pairs, budget - used, budget - used, cur, rs);
    for (const auto& r : rs) out.emplace_back(c, r);
  }
  std::sort(out.begin(), out.end(), [](const BShape& a, const BShape& b) { return compare(a, b) < 0; });
  return out;
}

BShape shape_of(const ExactMatrix& lambda_p, const ExactMatrix& b) {
  auto [eps, eta] = minimal_indices(MatrixPair(lambda_p, b));
  BShape s(eps, eta);
  if (s.size() != b.rows()) throw InvalidArgument("shape_of: pencil has a regular part");
  check_layout(s, lambda_p, b);
  return s;
}

OperatorPair build_mixture_eliminators(const BShape& shape, const GaussianRational& coeff, MixDirection direction) {
  auto ls = layouts(shape);
  if (direction == MixDirection::kBIntoLambda) {
    std::vector<ExactMatrix> ps, qs;
    for (const auto& pl : ls) {
      OperatorPair op = eliminate(pl.lam, pl.b, coeff);
      ps.push_back(op.p);
      qs.push_back(op.q);
    }
    return {embed(shape, ps), embed(shape, qs)};
  }
  // Conjugate by the flip permutations: Pi1 B Pi2 = L and Pi1 L Pi2 = B.
  OperatorPair base = build_mixture_eliminators(shape, coeff, MixDirection::kBIntoLambda);
  auto [sigma, tau] = shape.flip_maps();
  ExactMatrix pi1 = map_matrix_rows(sigma), pi2 = map_matrix_cols(tau);
  return {invert(pi1) * base.p * pi1, pi2 * base.q * invert(pi2)};
}

OperatorPair build_mixture_eliminators(const ExactMatrix& lambda_p, const ExactMatrix& b, const GaussianRational& coeff,
                                       MixDirection direction) {
  return build_mixture_eliminators(shape_of(lambda_p, b), coeff, direction);
}

FlipOperators build_flip_operators(const BShape& shape, const GaussianRational& l) {
  if (l.is_zero()) throw InvalidArgument("flip operators: coefficient must be nonzero");
  OperatorPair a = build_mixture_eliminators(shape, l, MixDirection::kBIntoLambda);
  OperatorPair m = build_mixture_eliminators(shape, -l.inverse(), MixDirection::kLambdaIntoB);
  return {a.p * m.p * a.p, a.q * m.q * a.q, -l, l.inverse()};
}

FlipOperators build_flip_operators(const ExactMatrix& lambda_p, const ExactMatrix& b, const GaussianRational& l) {
  return build_flip_operators(shape_of(lambda_p, b), l);
}

OperatorPair b_block_corrector(const BShape& shape, const ExactMatrix& t_in) {
  const std::size_t n = shape.size();
  ExactMatrix p = ExactMatrix::identity(n), q = ExactMatrix::identity(n);
  ExactMatrix t = t_in;
  if (t(0, 0).is_zero()) {
    // (P_t L Q_t, P_t B Q_t) = (-B, L), so the pair becomes T S (L, B).
    FlipOperators f = build_flip_operators(shape, GaussianRational(1));
    p = f.p;
    q = f.q;
    ExactMatrix s{{0, -1}, {1, 0}};
    t = t * s;
  }
  const GaussianRational alpha = t(0, 0), beta = t(0, 1);
  const GaussianRational lam = t(1, 0) / alpha;
  const GaussianRational gamma = t(1, 1) - lam * beta;
  if (gamma.is_zero()) throw Singular("b_block_corrector: T is singular");
  OperatorPair s1 = build_mixture_eliminators(shape, beta / alpha, MixDirection::kBIntoLambda);
  OperatorPair s2 = build_mixture_eliminators(shape, alpha * lam / gamma, MixDirection::kLambdaIntoB);
  OperatorPair s3 = chain_scaling(shape, gamma / alpha);
  ExactMatrix pp = s3.p * s2.p * s1.p * p * alpha.inverse();
  ExactMatrix qq = q * s1.q * s2.q * s3.q;
  return {pp, qq};
}

}  // namespace slocc
