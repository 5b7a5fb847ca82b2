#include "slocc/canonicalizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "eigen_bridge.hpp"
#include "slocc/errors.hpp"

namespace slocc {

namespace {

int tier_compare(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return compare_partitions(a, b);
}

bool anchors_exact(const ChartAnchors& c) {
  auto ok = [](const std::optional<ProjPoint>& p) { return !p || p->is_infinity() || p->exact; };
  return ok(c.zero) && ok(c.one) && (c.inf.is_infinity() || c.inf.exact);
}

std::vector<ProjPoint> map_points(const std::vector<SingularPoint>& pts, const ChartAnchors& c, double tol) {
  const ProjPoint* z = c.zero ? &*c.zero : nullptr;
  const ProjPoint* o = c.one ? &*c.one : nullptr;
  std::vector<ProjPoint> out;
  if (anchors_exact(c)) {
    Mobius m = Mobius::from_anchors(z, o, c.inf);
    for (const auto& p : pts) out.push_back(m.apply(p.location));
  } else {
    MobiusApprox m = MobiusApprox::from_anchors(z, o, c.inf);
    for (const auto& p : pts) out.push_back(m.apply(p.location, tol));
  }
  return out;
}

// Block order: decreasing partition, then value, with the zero anchor last.
std::vector<std::size_t> layout_order(const std::vector<SingularPoint>& pts, const std::vector<ProjPoint>& images,
                                      std::size_t zero_index) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != zero_index) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int c = compare_partitions(pts[a].segre, pts[b].segre);
    if (c != 0) return c > 0;
    return ProjPoint::compare(images[a], images[b]) < 0;
  });
  if (zero_index < pts.size()) idx.push_back(zero_index);
  return idx;
}

int config_compare(const std::vector<SingularPoint>& pts, const std::vector<ProjPoint>& ia, std::size_t za,
                   const std::vector<ProjPoint>& ib, std::size_t zb) {
  auto oa = layout_order(pts, ia, za);
  auto ob = layout_order(pts, ib, zb);
  for (std::size_t i = 0; i < oa.size(); ++i) {
    int c = compare_partitions(pts[oa[i]].segre, pts[ob[i]].segre);
    if (c != 0) return c > 0 ? -1 : 1;
    c = ProjPoint::compare(ia[oa[i]], ib[ob[i]]);
    if (c != 0) return c;
  }
  return 0;
}

ProjPoint chart_infinity(const MatrixPair& m, const PencilProfile& prof) {
  (void)m;
  auto is_point = [&](const ProjPoint& z) {
    return std::any_of(prof.points.begin(), prof.points.end(), [&](const SingularPoint& p) {
      return ProjPoint::same(p.location, z) != ApproxComplex::Relation::kDifferent;
    });
  };
  for (std::size_t k = 0;; ++k) {
    auto [alpha, beta] = sweep_direction(k);
    ProjPoint z = direction_point(alpha, beta);
    if (!is_point(z)) return z;
  }
}

std::size_t zero_anchor_index(const PencilProfile& prof, const ChartAnchors& chart) {
  for (std::size_t i = 0; i < prof.points.size(); ++i)
    if (chart.zero && ProjPoint::compare(prof.points[i].location, *chart.zero) == 0) return i;
  return prof.points.size();
}

ExactMatrix apply_t(const ExactMatrix& t, const MatrixPair& m, bool first) {
  std::size_t r = first ? 0 : 1;
  return m.gamma1 * t(r, 0) + m.gamma2 * t(r, 1);
}

std::string describe_blocks(const std::vector<JordanBlock>& blocks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    os << (i ? " (+) " : "") << 'J' << blocks[i].size << '(' << blocks[i].eigenvalue.to_string() << ')';
  return os.str();
}

std::vector<JordanBlock> blocks_of(const std::vector<EigenGroup>& groups) {
  std::vector<JordanBlock> out;
  for (const auto& g : groups)
    for (int s : g.segre) out.push_back({g.value, s});
  return out;
}

Canonicalization finish_exact(const MatrixPair& m, CanonicalPair canon, const ExactMatrix& t, const ExactMatrix& p,
                              const ExactMatrix& q) {
  Canonicalization out;
  const std::size_t n = m.dim();
  if (m == canon.pair) {
    out.witness.ops = ILOTriple::identity(n);
  } else {
    ILOTriple chart(t, ExactMatrix::identity(n), ExactMatrix::identity(n));
    out.witness.ops = ILOTriple::compose(ILOTriple(ExactMatrix::identity(2), p, q), chart);
  }
  if (apply_ilo(m, *out.witness.ops) != canon.pair)
    throw Error(ErrorCode::kInternal, "canonicalize: witness does not reproduce the canonical pair");
  out.canonical = std::move(canon);
  return out;
}

}  // namespace

std::size_t CanonicalPair::jordan_size() const {
  std::size_t s = 0;
  for (const auto& b : blocks) s += static_cast<std::size_t>(b.size);
  return s;
}

std::string CanonicalPair::to_string() const {
  std::string j = describe_blocks(blocks);
  if (!b_shape) return j;
  return j.empty() ? b_shape->to_string() : j + " (+) " + b_shape->to_string();
}

ChartAnchors choose_chart(const MatrixPair& m, const PencilProfile& prof) {
  ChartAnchors best;
  best.inf = chart_infinity(m, prof);
  const auto& pts = prof.points;
  if (pts.empty()) return best;
  auto top_tier = [&](const std::vector<std::size_t>& among) {
    std::vector<std::size_t> out;
    for (std::size_t i : among) {
      if (out.empty()) {
        out.push_back(i);
        continue;
      }
      int c = tier_compare(pts[i].segre, pts[out.front()].segre);
      if (c > 0) out.assign(1, i);
      else if (c == 0) out.push_back(i);
    }
    return out;
  };
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const double tol = prof.points.front().location.approx.tol;
  std::vector<ProjPoint> best_images;
  std::size_t best_zero = pts.size();
  bool have = false;
  for (std::size_t z : top_tier(all)) {
    std::vector<std::size_t> rest;
    for (std::size_t i : all)
      if (i != z) rest.push_back(i);
    std::vector<std::size_t> ones = top_tier(rest);
    if (ones.empty()) ones.push_back(pts.size());
    for (std::size_t o : ones) {
      ChartAnchors c;
      c.inf = best.inf;
      c.zero = pts[z].location;
      if (o < pts.size()) c.one = pts[o].location;
      auto images = map_points(pts, c, tol);
      if (!have || config_compare(pts, images, z, best_images, best_zero) < 0) {
        best = c;
        best_images = std::move(images);
        best_zero = z;
        have = true;
      }
    }
  }
  return best;
}

std::vector<EigenGroup> chart_groups(const PencilProfile& prof, const ChartAnchors& chart) {
  if (prof.points.empty()) return {};
  const double tol = prof.points.front().location.approx.tol;
  auto images = map_points(prof.points, chart, tol);
  std::vector<EigenGroup> out;
  for (std::size_t i : layout_order(prof.points, images, zero_anchor_index(prof, chart)))
    out.push_back({images[i], prof.points[i].segre});
  return out;
}

MatrixPair assemble_canonical(const std::vector<JordanBlock>& blocks, const std::optional<BShape>& shape) {
  ExactMatrix j = jordan_matrix(blocks);
  if (!shape) return MatrixPair(ExactMatrix::identity(j.rows()), j);
  return MatrixPair(direct_sum(ExactMatrix::identity(j.rows()), shape->lambda_matrix()), direct_sum(j, shape->b_matrix()));
}

std::optional<std::pair<ExactMatrix, ExactMatrix>> strict_intertwiner(const MatrixPair& from, const MatrixPair& to) {
  // Unknowns P (n*n) then R = Q^{-1} (n*n): P A = B R and P C = D R.
  const std::size_t n = from.dim();
  const std::size_t nn = n * n;
  ExactMatrix sys(2 * nn, 2 * nn);
  const ExactMatrix* lhs[2] = {&from.gamma1, &from.gamma2};
  const ExactMatrix* rhs[2] = {&to.gamma1, &to.gamma2};
  for (std::size_t e = 0; e < 2; ++e) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = e * nn + i * n + j;
        for (std::size_t k = 0; k < n; ++k) {
          const auto& a = (*lhs[e])(k, j);
          if (!a.is_zero()) sys(row, i * n + k) += a;
          const auto& b = (*rhs[e])(i, k);
          if (!b.is_zero()) sys(row, nn + k * n + j) -= b;
        }
      }
    }
  }
  auto basis = kernel_basis(sys);
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ExactVector x(2 * nn);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      GaussianRational c = attempt == 0 ? GaussianRational(static_cast<long>(b + 1)) : GaussianRational(coeff(rng));
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!basis[b][i].is_zero()) x[i] += c * basis[b][i];
    }
    ExactMatrix p(n, n), r(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        p(i, j) = x[i * n + j];
        r(i, j) = x[nn + i * n + j];
      }
    if (is_invertible(p) && is_invertible(r)) return std::make_pair(p, invert(r));
  }
  return std::nullopt;
}

Canonicalization reduce_full_rank(const MatrixPair& m, const Tolerances& tol) {
  PencilProfile prof = pencil_profile(m, tol);
  const std::size_t n = m.dim();
  if (prof.generic_rank != n) throw InvalidArgument("reduce_full_rank: pencil is not of full generic rank");
  ChartAnchors chart = choose_chart(m, prof);
  auto groups = chart_groups(prof, chart);
  const ProjPoint* z = chart.zero ? &*chart.zero : nullptr;
  const ProjPoint* o = chart.one ? &*chart.one : nullptr;

  if (prof.exact && anchors_exact(chart)) {
    ExactMatrix t = Mobius::from_anchors(z, o, chart.inf).realizing_t();
    ExactMatrix g1 = apply_t(t, m, true);
    ExactMatrix g2 = apply_t(t, m, false);
    ExactMatrix g1inv = invert(g1);
    JordanDecomposition jd = jordan_exact(g1inv * g2, groups);
    CanonicalPair canon;
    canon.kind = CanonicalKind::kFullRank;
    canon.blocks = jd.blocks;
    canon.pair = assemble_canonical(canon.blocks, std::nullopt);
    return finish_exact(m, std::move(canon), t, invert(jd.s) * g1inv, jd.s);
  }

  using detail::from_eigen;
  using detail::to_eigen;
  ApproxMatrix t = MobiusApprox::from_anchors(z, o, chart.inf).realizing_t();
  Eigen::MatrixXcd a1 = to_eigen(to_approx(m.gamma1)), a2 = to_eigen(to_approx(m.gamma2));
  Eigen::MatrixXcd g1 = t(0, 0) * a1 + t(0, 1) * a2;
  Eigen::MatrixXcd g2 = t(1, 0) * a1 + t(1, 1) * a2;
  Eigen::MatrixXcd g1inv = g1.inverse();
  ApproxJordanDecomposition jd = jordan_approx(from_eigen(g1inv * g2), groups);
  Eigen::MatrixXcd s = to_eigen(jd.s);
  Eigen::MatrixXcd p = s.inverse() * g1inv;
  Eigen::MatrixXcd jm = to_eigen(jordan_matrix_approx(jd.blocks));
  const auto nn = static_cast<Eigen::Index>(n);
  double residual = std::max((p * g1 * s - Eigen::MatrixXcd::Identity(nn, nn)).cwiseAbs().maxCoeff(),
                             (p * g2 * s - jm).cwiseAbs().maxCoeff());
  if (!std::isfinite(residual) || residual > 1e3 * std::sqrt(tol.root))
    throw IllConditioned("reduce_full_rank: approximate Jordan basis is ill-conditioned");

  Canonicalization out;
  out.canonical.kind = CanonicalKind::kFullRank;
  out.canonical.exact = false;
  out.canonical.blocks = jd.blocks;
  out.canonical.approx_second = from_eigen(jm);
  out.witness.exact = false;
  out.witness.t = t;
  out.witness.p = from_eigen(p);
  out.witness.q = jd.s;
  out.witness.residual = residual;
  std::ostringstream note;
  note << "inexact eigenvalues:";
  for (const auto& sp : prof.points)
    if (!sp.location.exact) note << ' ' << sp.location.to_string();
  note << "; approximate witness, residual " << residual;
  out.note = note.str();
  return out;
}

Canonicalization reduce_rank_deficient(const MatrixPair& m, const Tolerances& tol) {
  PencilProfile prof = pencil_profile(m, tol);
  const std::size_t n = m.dim();
  if (prof.generic_rank == n) throw InvalidArgument("reduce_rank_deficient: pencil has full generic rank");
  if (!prof.exact)
    throw IllConditioned("reduce_rank_deficient: regular part has inexact eigenvalues; only the descriptor is available");
  ChartAnchors chart = choose_chart(m, prof);
  auto groups = chart_groups(prof, chart);
  CanonicalPair canon;
  canon.kind = CanonicalKind::kRankDeficient;
  canon.blocks = blocks_of(groups);
  canon.b_shape = BShape(prof.col_indices, prof.row_indices);
  canon.pair = assemble_canonical(canon.blocks, canon.b_shape);
  if (m == canon.pair) return finish_exact(m, std::move(canon), ExactMatrix::identity(2), {}, {});

  const ProjPoint* z = chart.zero ? &*chart.zero : nullptr;
  const ProjPoint* o = chart.one ? &*chart.one : nullptr;
  ExactMatrix t = Mobius::from_anchors(z, o, chart.inf).realizing_t();
  MatrixPair moved(apply_t(t, m, true), apply_t(t, m, false));
  auto pq = strict_intertwiner(moved, canon.pair);
  if (!pq) throw Error(ErrorCode::kInternal, "reduce_rank_deficient: no intertwiner to the canonical pair");
  return finish_exact(m, std::move(canon), t, pq->first, pq->second);
}

Canonicalization canonicalize(const MatrixPair& m, const Tolerances& tol) {
  if (!is_true_entangled(m)) throw NotTrueEntangled("state is not a true 2xNxN entangled state");
  return generic_rank(m) == m.dim() ? reduce_full_rank(m, tol) : reduce_rank_deficient(m, tol);
}

}  // namespace slocc
