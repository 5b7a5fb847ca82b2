#include "slocc/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "json.hpp"
#include "slocc/errors.hpp"

namespace slocc {

namespace {

using Relation = ApproxComplex::Relation;

bool all_exact(const std::vector<SingularPoint>& pts) {
  return std::all_of(pts.begin(), pts.end(), [](const SingularPoint& p) { return p.location.exact; });
}

// Maps every point with the normalisation fixed by `anchors`.
std::vector<ProjPoint> normalized_values(const std::vector<SingularPoint>& pts, const std::vector<std::size_t>& anchors,
                                         bool exact, double tol) {
  std::vector<ProjPoint> out;
  if (exact) {
    Mobius m = normalizing_map(pts, anchors);
    for (const auto& p : pts) out.push_back(m.apply(p.location));
    return out;
  }
  const ProjPoint& z = pts[anchors[0]].location;
  std::optional<ProjPoint> o;
  ProjPoint inf = ProjPoint::infinity();
  if (anchors.size() == 1) {
    if (z.is_infinity()) inf = ProjPoint::finite(0);
  } else if (anchors.size() == 2) {
    inf = pts[anchors[1]].location;
  } else {
    o = pts[anchors[1]].location;
    inf = pts[anchors[2]].location;
  }
  MobiusApprox m = MobiusApprox::from_anchors(&z, o ? &*o : nullptr, inf);
  for (const auto& p : pts) out.push_back(m.apply(p.location, tol));
  return out;
}

std::vector<ConfigEntry> build_key(const std::vector<SingularPoint>& pts, const std::vector<std::size_t>& anchors,
                                   const std::vector<ProjPoint>& values) {
  std::vector<ConfigEntry> key;
  const ProjPoint fixed[3] = {ProjPoint::finite(0), ProjPoint::finite(1), ProjPoint::infinity()};
  for (std::size_t a = 0; a < anchors.size(); ++a) {
    ProjPoint v = fixed[a];
    if (anchors.size() == 2 && a == 1) v = ProjPoint::infinity();
    key.push_back({pts[anchors[a]].segre, v});
  }
  std::vector<ConfigEntry> rest;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (std::find(anchors.begin(), anchors.end(), i) == anchors.end()) rest.push_back({pts[i].segre, values[i]});
  std::sort(rest.begin(), rest.end(), [](const ConfigEntry& a, const ConfigEntry& b) { return compare_entries(a, b) < 0; });
  key.insert(key.end(), rest.begin(), rest.end());
  return key;
}

int compare_keys(const std::vector<ConfigEntry>& a, const std::vector<ConfigEntry>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (int c = compare_entries(a[i], b[i]); c != 0) return c;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

void for_each_anchor_choice(std::size_t d, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  const std::size_t used = std::min<std::size_t>(d, 3);
  std::vector<std::size_t> pick(used);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == used) {
      fn(pick);
      return;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (std::find(pick.begin(), pick.begin() + static_cast<long>(depth), i) != pick.begin() + static_cast<long>(depth))
        continue;
      pick[depth] = i;
      rec(depth + 1);
    }
  };
  rec(0);
}

std::complex<double> as_complex(const ProjPoint& p) { return p.exact ? p.value.to_complex() : p.approx.value; }

// Chordal distance on the Riemann sphere.
double chordal(const ProjPoint& a, const ProjPoint& b) {
  if (a.is_infinity() && b.is_infinity()) return 0.0;
  if (a.is_infinity() || b.is_infinity()) {
    auto f = as_complex(a.is_infinity() ? b : a);
    return 1.0 / std::sqrt(1.0 + std::norm(f));
  }
  auto x = as_complex(a), y = as_complex(b);
  return std::abs(x - y) / std::sqrt((1.0 + std::norm(x)) * (1.0 + std::norm(y)));
}

Relation point_relation(const ProjPoint& a, const ProjPoint& b, double band) {
  if ((a.exact || a.is_infinity()) && (b.exact || b.is_infinity()))
    return ProjPoint::same(a, b) == Relation::kEqual ? Relation::kEqual : Relation::kDifferent;
  double d = chordal(a, b);
  if (d <= band) return Relation::kEqual;
  if (d > 1e3 * band) return Relation::kDifferent;
  return Relation::kIndeterminate;
}

bool perfect_matching(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<int> match(n, -1);
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<bool> seen(n, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) {
      for (std::size_t v = 0; v < n; ++v) {
        if (!adj[x][v] || seen[v]) continue;
        seen[v] = true;
        if (match[v] < 0 || augment(static_cast<std::size_t>(match[v]))) {
          match[v] = static_cast<int>(x);
          return true;
        }
      }
      return false;
    };
    if (!augment(u)) return false;
  }
  return true;
}

std::vector<Partition> sorted_segre(const std::vector<SingularPoint>& pts) {
  std::vector<Partition> out;
  for (const auto& p : pts) out.push_back(p.segre);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SingularPoint> points_of(const CanonicalPair& c) {
  std::vector<SingularPoint> out;
  for (const auto& b : c.blocks) {
    if (!out.empty() && ProjPoint::compare(out.back().location, b.eigenvalue) == 0) {
      out.back().segre.push_back(b.size);
    } else {
      out.push_back({b.eigenvalue, 0, {b.size}});
    }
  }
  return out;
}

nlohmann::ordered_json point_json(const ProjPoint& p) {
  if (p.is_infinity()) return "inf";
  if (p.exact) return p.value.to_string();
  nlohmann::ordered_json j;
  j["re"] = p.approx.value.real();
  j["im"] = p.approx.value.imag();
  j["tol"] = p.approx.tol;
  return j;
}

}  // namespace

int compare_entries(const ConfigEntry& a, const ConfigEntry& b) {
  int c = compare_partitions(a.segre, b.segre);
  if (c != 0) return -c;
  return ProjPoint::compare(a.value, b.value);
}

Mobius normalizing_map(const std::vector<SingularPoint>& pts, const std::vector<std::size_t>& anchors) {
  if (anchors.empty()) return Mobius::identity();
  const ProjPoint& z = pts[anchors[0]].location;
  if (anchors.size() == 1)
    return Mobius::from_anchors(&z, nullptr, z.is_infinity() ? ProjPoint::finite(0) : ProjPoint::infinity());
  if (anchors.size() == 2) return Mobius::from_anchors(&z, nullptr, pts[anchors[1]].location);
  return Mobius::from_anchors(&z, &pts[anchors[1]].location, pts[anchors[2]].location);
}

NormalizedConfig moebius_normalize(const std::vector<SingularPoint>& pts, const Tolerances& tol) {
  NormalizedConfig out;
  const std::size_t d = pts.size();
  out.param_count = d > 3 ? d - 3 : 0;
  out.exact = all_exact(pts);
  if (!out.exact) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (ProjPoint::same(pts[i].location, pts[j].location) != Relation::kDifferent)
          throw IllConditioned("moebius_normalize: points cannot be separated");
  }
  if (d == 0) return out;
  bool have = false;
  for_each_anchor_choice(d, [&](const std::vector<std::size_t>& anchors) {
    // only anchors carrying the largest admissible partitions can win
    if (have) {
      for (std::size_t a = 0; a < anchors.size(); ++a) {
        int c = compare_partitions(pts[anchors[a]].segre, out.key[a].segre);
        if (c < 0) return;
        if (c > 0) break;
      }
    }
    auto values = normalized_values(pts, anchors, out.exact, tol.root);
    auto key = build_key(pts, anchors, values);
    if (!have || compare_keys(key, out.key) < 0) {
      out.key = std::move(key);
      out.anchors = anchors;
      have = true;
    }
  });
  return out;
}

Verdict match_configurations(const std::vector<SingularPoint>& a, const std::vector<SingularPoint>& b,
                             const Tolerances& tol) {
  if (a.size() != b.size() || sorted_segre(a) != sorted_segre(b)) return Verdict::kInequivalent;
  const std::size_t d = a.size();
  if (d <= 3) return Verdict::kEquivalent;
  const bool exact = all_exact(a) && all_exact(b);
  const std::vector<std::size_t> fixed{0, 1, 2};
  auto va = normalized_values(a, fixed, all_exact(a), tol.root);
  const double band = 100.0 * tol.root;
  Verdict best = Verdict::kInequivalent;
  for_each_anchor_choice(d, [&](const std::vector<std::size_t>& anchors) {
    if (best == Verdict::kEquivalent) return;
    for (std::size_t i = 0; i < 3; ++i)
      if (a[fixed[i]].segre != b[anchors[i]].segre) return;
    auto vb = normalized_values(b, anchors, exact || all_exact(b), tol.root);
    std::vector<std::size_t> ra, rb;
    for (std::size_t i = 3; i < d; ++i) ra.push_back(i);
    for (std::size_t i = 0; i < d; ++i)
      if (std::find(anchors.begin(), anchors.end(), i) == anchors.end()) rb.push_back(i);
    std::vector<std::vector<bool>> strict(ra.size(), std::vector<bool>(rb.size())), loose = strict;
    for (std::size_t i = 0; i < ra.size(); ++i)
      for (std::size_t j = 0; j < rb.size(); ++j) {
        if (a[ra[i]].segre != b[rb[j]].segre) continue;
        Relation r = point_relation(va[ra[i]], vb[rb[j]], band);
        strict[i][j] = r == Relation::kEqual;
        loose[i][j] = r != Relation::kDifferent;
      }
    if (perfect_matching(strict)) best = Verdict::kEquivalent;
    else if (perfect_matching(loose)) best = Verdict::kIndeterminate;
  });
  return best;
}

std::string ClassDescriptor::label() const {
  if (dim == 2) {
    bool w = config.key.size() == 1 && config.key.front().segre == Partition{2};
    return w ? "W-type" : "GHZ-type";
  }
  return "c_{" + std::to_string(n) + "," + std::to_string(l) + "}";
}

ClassDescriptor descriptor_of(const MatrixPair& m, const Tolerances& tol) {
  PencilProfile prof = pencil_profile(m, tol);
  ClassDescriptor d;
  d.dim = prof.dim;
  d.n = prof.generic_rank;
  d.l = prof.min_rank;
  if (d.n < d.dim) d.b_shape = BShape(prof.col_indices, prof.row_indices);
  d.points = prof.points;
  d.config = moebius_normalize(prof.points, tol);
  d.param_count = d.config.param_count;
  d.exact = prof.exact;
  return d;
}

std::size_t nonlocal_param_count(const ClassDescriptor& d) { return d.param_count; }

Verdict compare_descriptors(const ClassDescriptor& a, const ClassDescriptor& b, const Tolerances& tol) {
  if (a.dim != b.dim || a.n != b.n || a.l != b.l || a.b_shape != b.b_shape) return Verdict::kInequivalent;
  if (a.exact && b.exact) return compare_keys(a.config.key, b.config.key) == 0 ? Verdict::kEquivalent : Verdict::kInequivalent;
  return match_configurations(a.points, b.points, tol);
}

std::optional<ILOTriple> canonical_bridge(const CanonicalPair& from, const CanonicalPair& to) {
  if (!from.exact || !to.exact || from.kind != to.kind || from.b_shape != to.b_shape) return std::nullopt;
  auto pa = points_of(from), pb = points_of(to);
  auto ka = moebius_normalize(pa), kb = moebius_normalize(pb);
  if (compare_keys(ka.key, kb.key) != 0) return std::nullopt;
  Mobius phi = normalizing_map(pa, ka.anchors).then(normalizing_map(pb, kb.anchors).inverse());
  ExactMatrix t = phi.realizing_t();

  const std::size_t nj = from.jordan_size();
  ExactMatrix pj(0, 0), qj(0, 0);
  if (nj > 0) {
    ExactMatrix ja = jordan_matrix(from.blocks);
    ExactMatrix e = ExactMatrix::identity(nj);
    ExactMatrix f1 = e * t(0, 0) + ja * t(0, 1);
    ExactMatrix f2 = e * t(1, 0) + ja * t(1, 1);
    ExactMatrix f1inv = invert(f1);
    std::vector<EigenGroup> groups;
    for (const auto& p : pb) groups.push_back({p.location, p.segre});
    JordanDecomposition jd = jordan_exact(f1inv * f2, groups);
    pj = invert(jd.s) * f1inv;
    qj = jd.s;
  }
  ExactMatrix p = pj, q = qj;
  if (from.b_shape) {
    OperatorPair c = b_block_corrector(*from.b_shape, t);
    p = direct_sum(pj, c.p);
    q = direct_sum(qj, c.q);
  }
  ILOTriple x(t, p, q);
  if (apply_ilo(from.pair, x) != to.pair) throw Error(ErrorCode::kInternal, "canonical_bridge: operators do not match");
  return x;
}

EquivalenceResult slocc_equivalent(const MatrixPair& a, const MatrixPair& b, const Tolerances& tol) {
  EquivalenceResult out;
  ClassDescriptor da = descriptor_of(a, tol), db = descriptor_of(b, tol);
  out.verdict = compare_descriptors(da, db, tol);
  if (out.verdict == Verdict::kIndeterminate) {
    out.note = "approximate configurations agree within the guard band";
    return out;
  }
  if (out.verdict == Verdict::kInequivalent || !da.exact || !db.exact) return out;
  Canonicalization ca = canonicalize(a, tol), cb = canonicalize(b, tol);
  auto bridge = canonical_bridge(ca.canonical, cb.canonical);
  if (!bridge) throw Error(ErrorCode::kInternal, "slocc_equivalent: equal descriptors without a bridge");
  ILOTriple w = ILOTriple::compose(cb.witness.ops->inverse(), ILOTriple::compose(*bridge, *ca.witness.ops));
  if (apply_ilo(a, w) != b) throw Error(ErrorCode::kInternal, "slocc_equivalent: witness does not verify");
  out.witness = std::move(w);
  return out;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kEquivalent: return "equivalent";
    case Verdict::kInequivalent: return "inequivalent";
    case Verdict::kIndeterminate: return "indeterminate";
  }
  return "";
}

std::string to_json(const ClassDescriptor& d) {
  nlohmann::ordered_json j;
  j["schema"] = "1";
  j["N"] = d.dim;
  j["n"] = d.n;
  j["l"] = d.l;
  j["label"] = d.label();
  if (d.b_shape) {
    nlohmann::ordered_json b;
    b["c"] = d.b_shape->c_lengths();
    b["r"] = d.b_shape->r_lengths();
    b["size"] = d.b_shape->size();
    b["traces"] = d.b_shape->traces();
    j["b_shape"] = b;
  } else {
    j["b_shape"] = nullptr;
  }
  nlohmann::ordered_json cfg = nlohmann::ordered_json::array();
  for (const auto& e : d.config.key) {
    nlohmann::ordered_json x;
    x["value"] = point_json(e.value);
    x["segre"] = e.segre;
    cfg.push_back(x);
  }
  j["config_key"] = cfg;
  j["param_count"] = d.param_count;
  j["exact"] = d.exact;
  return j.dump();
}

}  // namespace slocc
