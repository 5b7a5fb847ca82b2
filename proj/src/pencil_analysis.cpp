#include "slocc/pencil_analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "slocc/errors.hpp"

namespace slocc {

ProjPoint ProjPoint::finite(const GaussianRational& v, double tol) {
  ProjPoint p;
  p.value = v;
  p.approx = {v.to_complex(), tol};
  return p;
}

ProjPoint ProjPoint::inexact(std::complex<double> v, double tol) {
  ProjPoint p;
  p.exact = false;
  p.approx = {v, tol};
  return p;
}

ProjPoint ProjPoint::infinity() {
  ProjPoint p;
  p.kind = Kind::kInfinity;
  return p;
}

namespace {

int rank_class(const ProjPoint& p) {
  if (p.is_infinity()) return 2;
  return p.exact ? 0 : 1;
}

}  // namespace

int ProjPoint::compare(const ProjPoint& a, const ProjPoint& b) {
  int ca = rank_class(a), cb = rank_class(b);
  if (ca != cb) return ca < cb ? -1 : 1;
  if (ca == 0) return GaussianRational::compare(a.value, b.value);
  if (ca == 2) return 0;
  auto x = a.approx.value, y = b.approx.value;
  if (x.real() != y.real()) return x.real() < y.real() ? -1 : 1;
  if (x.imag() != y.imag()) return x.imag() < y.imag() ? -1 : 1;
  return 0;
}

ApproxComplex::Relation ProjPoint::same(const ProjPoint& a, const ProjPoint& b) {
  using R = ApproxComplex::Relation;
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity() ? R::kEqual : R::kDifferent;
  if (a.exact && b.exact) return a.value == b.value ? R::kEqual : R::kDifferent;
  return ApproxComplex::compare(a.approx, b.approx);
}

std::string ProjPoint::to_string() const {
  if (is_infinity()) return "inf";
  if (exact) return value.to_string();
  char buf[96];
  std::snprintf(buf, sizeof(buf), "~%.12g%+.12gi", approx.value.real(), approx.value.imag());
  return buf;
}

int compare_partitions(const Partition& a, const Partition& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

std::string partition_to_string(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ']';
  return os.str();
}

ProjPoint direction_point(const GaussianRational& alpha, const GaussianRational& beta) {
  if (beta.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite(-alpha / beta);
}

ExactMatrix pencil_at(const MatrixPair& m, const ProjPoint& z) {
  if (z.is_infinity()) return m.gamma1;
  if (!z.exact) throw InvalidArgument("pencil_at: inexact point");
  return m.gamma2 - m.gamma1 * z.value;
}

std::pair<GaussianRational, GaussianRational> sweep_direction(std::size_t k) {
  if (k == 0) return {1, 0};
  if (k == 1) return {0, 1};
  if (k == 2) return {1, 1};
  if (k == 3) return {1, -1};
  const long m = static_cast<long>((k - 4) / 4) + 2;
  switch ((k - 4) % 4) {
    case 0: return {1, m};
    case 1: return {1, -m};
    case 2: return {m, 1};
    default: return {m, -1};
  }
}

std::pair<GaussianRational, GaussianRational> generic_direction(const MatrixPair& m, std::size_t target) {
  for (std::size_t k = 0; k < 4 * m.dim() + 8; ++k) {
    auto [a, b] = sweep_direction(k);
    if (rank_exact(m.gamma1 * a + m.gamma2 * b) == target) return {a, b};
  }
  throw Error(ErrorCode::kInternal, "generic_direction: sweep exhausted");
}

std::size_t generic_rank(const MatrixPair& m) {
  std::size_t best = rank_exact(m.gamma1);
  for (std::size_t k = 0; k <= m.dim() && best < m.dim(); ++k) {
    best = std::max(best, rank_exact(m.gamma2 - m.gamma1 * GaussianRational(static_cast<long>(k))));
  }
  return best;
}

namespace {

Partition partition_from_counts(const std::vector<std::size_t>& at_least) {
  // at_least[k-1] = number of blocks of size >= k
  Partition p;
  for (std::size_t k = at_least.size(); k-- > 0;) {
    std::size_t exactly = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    for (std::size_t c = 0; c < exactly; ++c) p.push_back(static_cast<int>(k + 1));
  }
  return p;
}

// Segre partition at z from ranks of powers of A_z = G^{-1} D_z.
Partition power_rank_segre(const MatrixPair& m, const ExactMatrix& g_inv, const ProjPoint& z, const Tolerances& tol) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> nullity{0};
  if (z.exact || z.is_infinity()) {
    ExactMatrix a = g_inv * pencil_at(m, z);
    ExactMatrix power = a;
    for (std::size_t k = 1; k <= n; ++k) {
      nullity.push_back(n - rank_exact(power));
      if (nullity[k] == nullity[k - 1]) break;
      power = power * a;
    }
  } else {
    ApproxMatrix a = to_approx(g_inv) * (to_approx(m.gamma2) - to_approx(m.gamma1) * z.approx.value);
    ApproxMatrix power = a;
    for (std::size_t k = 1; k <= n; ++k) {
      nullity.push_back(n - rank_approx(power, tol.rank));
      if (nullity[k] == nullity[k - 1]) break;
      power = power * a;
    }
  }
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < nullity.size(); ++k) {
    if (nullity[k] < nullity[k - 1]) throw IllConditioned("segre: nonmonotone nullity sequence");
    if (nullity[k] == nullity[k - 1]) break;
    at_least.push_back(nullity[k] - nullity[k - 1]);
  }
  return partition_from_counts(at_least);
}

int partition_sum(const Partition& p) {
  int s = 0;
  for (int v : p) s += v;
  return s;
}

}  // namespace

std::vector<SingularPoint> singular_points(const MatrixPair& m, const Tolerances& tol) {
  const std::size_t n = m.dim();
  UniPolynomial q = pencil_det_poly(m.gamma2, -m.gamma1);
  if (q.is_zero()) throw InvalidArgument("singular_points: pencil is not of full generic rank");
  auto [alpha, beta] = generic_direction(m, n);
  ExactMatrix g_inv = invert(m.gamma1 * alpha + m.gamma2 * beta);
  std::vector<std::pair<ProjPoint, int>> located;
  for (const auto& r : poly_roots(q, tol.root, tol.cluster)) {
    located.emplace_back(r.exact ? ProjPoint::finite(r.value, tol.root) : ProjPoint::inexact(r.approx.value, tol.root),
                         r.multiplicity);
  }
  if (q.degree() < static_cast<int>(n)) located.emplace_back(ProjPoint::infinity(), static_cast<int>(n) - q.degree());
  std::vector<SingularPoint> points;
  for (const auto& [z, mult] : located) {
    SingularPoint sp;
    sp.location = z;
    sp.segre = power_rank_segre(m, g_inv, z, tol);
    if (partition_sum(sp.segre) != mult) {
      if (!z.exact) throw IllConditioned("segre data disagrees with root multiplicity");
      throw Error(ErrorCode::kInternal, "segre data disagrees with root multiplicity");
    }
    sp.rank_at = n - sp.segre.size();
    points.push_back(std::move(sp));
  }
  return points;
}

namespace {

std::size_t kernel_dim(const ExactMatrix& m) { return m.cols() - rank_exact(m); }

// Kernel dimension of the block matrix acting on polynomial vectors of
// degree <= d: rows (d+2)N, cols (d+1)N.
std::size_t poly_kernel_dim(const ExactMatrix& a, const ExactMatrix& b, std::size_t d) {
  const std::size_t n = a.rows();
  const std::size_t c = a.cols();
  ExactMatrix big((d + 2) * n, (d + 1) * c);
  for (std::size_t i = 0; i <= d; ++i) {
    big.set_block(i * n, i * c, a);
    big.set_block((i + 1) * n, i * c, b);
  }
  return kernel_dim(big);
}

std::vector<int> indices_of(const ExactMatrix& a, const ExactMatrix& b, std::size_t count) {
  std::vector<int> out;
  std::size_t prev_k = 0, prev_cnt = 0;
  for (std::size_t d = 0; out.size() < count; ++d) {
    if (d > a.rows() + 1) throw Error(ErrorCode::kInternal, "minimal indices: search exhausted");
    std::size_t k = poly_kernel_dim(a, b, d);
    std::size_t cnt = k - prev_k;
    for (std::size_t e = prev_cnt; e < cnt; ++e) out.push_back(static_cast<int>(d));
    prev_k = k;
    prev_cnt = cnt;
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> minimal_indices(const MatrixPair& m) {
  const std::size_t n = generic_rank(m);
  const std::size_t count = m.dim() - n;
  if (count == 0) return {};
  return {indices_of(m.gamma2, m.gamma1, count), indices_of(m.gamma2.transpose(), m.gamma1.transpose(), count)};
}

Partition toeplitz_segre(const MatrixPair& m, const ProjPoint& z, std::size_t col_index_count, const Tolerances& tol) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> cum{0};
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    std::size_t kd;
    if (z.is_infinity() || z.exact) {
      ExactMatrix d = pencil_at(m, z);
      const ExactMatrix& dd = z.is_infinity() ? m.gamma2 : m.gamma1;
      ExactMatrix w(k * n, k * n);
      for (std::size_t i = 0; i < k; ++i) {
        w.set_block(i * n, i * n, d);
        if (i + 1 < k) w.set_block((i + 1) * n, i * n, dd);
      }
      kd = kernel_dim(w);
    } else {
      ApproxMatrix d = to_approx(m.gamma2) - to_approx(m.gamma1) * z.approx.value;
      ApproxMatrix dd = to_approx(m.gamma1);
      ApproxMatrix w(k * n, k * n);
      for (std::size_t i = 0; i < k; ++i) {
        w.set_block(i * n, i * n, d);
        if (i + 1 < k) w.set_block((i + 1) * n, i * n, dd);
      }
      kd = w.cols() - rank_approx(w, tol.rank);
    }
    if (kd < k * col_index_count) throw IllConditioned("toeplitz segre: kernel smaller than singular part");
    cum.push_back(kd - k * col_index_count);
    std::size_t inc = cum[k] - cum[k - 1];
    if (inc == 0) break;
    at_least.push_back(inc);
  }
  return partition_from_counts(at_least);
}

PencilProfile analyze_pencil(const MatrixPair& m, const Tolerances& tol) {
  PencilProfile prof;
  prof.dim = m.dim();
  prof.generic_rank = generic_rank(m);
  const std::size_t n = prof.generic_rank;
  if (n == prof.dim) {
    prof.points = singular_points(m, tol);
  } else if (n > 0) {
    std::tie(prof.col_indices, prof.row_indices) = minimal_indices(m);
    UniPolynomial g = minors_gcd_poly(m.gamma2, -m.gamma1, n);
    std::vector<std::pair<ProjPoint, int>> located;
    if (g.degree() > 0) {
      for (const auto& r : poly_roots(g, tol.root, tol.cluster))
        located.emplace_back(r.exact ? ProjPoint::finite(r.value, tol.root) : ProjPoint::inexact(r.approx.value, tol.root),
                             r.multiplicity);
    }
    if (rank_exact(m.gamma1) < n) located.emplace_back(ProjPoint::infinity(), -1);
    for (const auto& [z, mult] : located) {
      SingularPoint sp;
      sp.location = z;
      sp.segre = toeplitz_segre(m, z, prof.col_indices.size(), tol);
      if (sp.segre.empty() || (mult > 0 && partition_sum(sp.segre) != mult)) {
        if (!z.exact) throw IllConditioned("segre data disagrees with root multiplicity");
        throw Error(ErrorCode::kInternal, "segre data disagrees with root multiplicity");
      }
      sp.rank_at = n - sp.segre.size();
      prof.points.push_back(std::move(sp));
    }
  }
  std::sort(prof.points.begin(), prof.points.end(),
            [](const SingularPoint& a, const SingularPoint& b) { return ProjPoint::compare(a.location, b.location) < 0; });
  prof.min_rank = n;
  for (const auto& p : prof.points) {
    prof.min_rank = std::min(prof.min_rank, p.rank_at);
    if (!p.location.exact) prof.exact = false;
  }
  return prof;
}

PencilProfile pencil_profile(const MatrixPair& m, const Tolerances& tol) {
  if (!is_true_entangled(m)) throw NotTrueEntangled("state is not a true 2xNxN entangled state");
  return analyze_pencil(m, tol);
}

}  // namespace slocc
