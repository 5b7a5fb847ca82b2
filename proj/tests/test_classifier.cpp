#include <random>

#include "doctest.h"
#include "slocc/classifier.hpp"
#include "slocc/errors.hpp"
#include "config_oracle.hpp"
#include "test_support.hpp"

using namespace slocc;
using testing::int_matrix;
using namespace testing;

namespace {

bool same_key(const NormalizedConfig& a, const NormalizedConfig& b) {
  if (a.key.size() != b.key.size()) return false;
  for (std::size_t i = 0; i < a.key.size(); ++i)
    if (compare_entries(a.key[i], b.key[i]) != 0) return false;
  return true;
}

ExactMatrix diag(std::vector<GaussianRational> d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

MatrixPair five_point_state(const GaussianRational& l1, const GaussianRational& l2) {
  return MatrixPair(diag({1, 1, 1, 1, 0}), diag({l1, l2, 1, 0, 1}));
}

ExactMatrix ones_at(std::size_t n, const std::vector<std::pair<int, int>>& one_based) {
  ExactMatrix m(n, n);
  for (auto [i, j] : one_based) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
  return m;
}

const MatrixPair kGhz(diag({1, 0}), diag({0, 1}));
const MatrixPair kW(diag({1, 1}), int_matrix({{0, 0}, {1, 0}}));

}  // namespace

TEST_CASE("normalisation examples") {
  auto a = moebius_normalize({sp(0, 1, {1, 1}), sp(1, 1, {1}), sp(2, 1, {1})});
  auto b = moebius_normalize({sp(0, 1, {1, 1}), sp(1, 1, {1}), sp(3, 1, {1})});
  CHECK(same_key(a, b));
  CHECK(a.param_count == 0);
  CHECK(same_key(moebius_normalize({sp(7, 3, {2})}), moebius_normalize({sp(ProjPoint::infinity(), {2})})));
  CHECK(moebius_normalize({}).key.empty());
  CHECK_FALSE(same_key(moebius_normalize({sp(0, 1, {2})}), moebius_normalize({sp(0, 1, {1, 1})})));

  auto five = [](GaussianRational l1, GaussianRational l2) {
    return moebius_normalize({sp(ProjPoint::finite(0), {1}), sp(ProjPoint::finite(1), {1}), sp(ProjPoint::infinity(), {1}),
                              sp(ProjPoint::finite(l1), {1}), sp(ProjPoint::finite(l2), {1})});
  };
  GaussianRational l1 = GaussianRational::fraction(1, 3), l2 = GaussianRational::fraction(1, 5);
  GaussianRational one(1);
  CHECK(same_key(five(l1, l2), five(one - l1, one - l2)));
  CHECK(same_key(five(l1, l2), five(l2, l1)));
  CHECK(same_key(five(l1, l2), five(l1.inverse(), l2.inverse())));
  CHECK(same_key(five(l1, l2), five(l1.inverse(), l2 / l1)));
  CHECK_FALSE(same_key(five(l1, l2), five(l1, GaussianRational::fraction(1, 7))));
  CHECK(five(l1, l2).param_count == 2);
}

TEST_CASE("normalisation agrees with the brute-force cross-ratio matcher") {
  std::mt19937_64 rng(17);
  int equivalent = 0, inequivalent = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t d = 1 + rng() % 6;
    auto x = random_config(rng, d);
    auto y = trial % 2 ? random_image(rng, x) : random_config(rng, d);
    bool oracle = brute_equivalent(x, y);
    CHECK(same_key(moebius_normalize(x), moebius_normalize(y)) == oracle);
    CHECK((match_configurations(x, y) == Verdict::kEquivalent) == oracle);
    (oracle ? equivalent : inequivalent)++;
  }
  CHECK(equivalent > 100);
  CHECK(inequivalent > 50);
}

TEST_CASE("normalisation is idempotent and invariant") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_config(rng, 1 + rng() % 6);
    auto nx = moebius_normalize(x);
    std::vector<SingularPoint> again;
    for (const auto& e : nx.key) again.push_back(sp(e.value, e.segre));
    CHECK(same_key(moebius_normalize(again), nx));
    CHECK(same_key(moebius_normalize(random_image(rng, x)), nx));
    CHECK(nx.param_count == (x.size() > 3 ? x.size() - 3 : 0));
    // the returned anchors realise the key
    Mobius m = normalizing_map(x, nx.anchors);
    for (std::size_t a = 0; a < nx.anchors.size(); ++a)
      CHECK(ProjPoint::compare(m.apply(x[nx.anchors[a]].location), nx.key[a].value) == 0);
  }
}

TEST_CASE("descriptor examples") {
  auto g = descriptor_of(kGhz);
  CHECK(g.n == 2);
  CHECK(g.l == 1);
  CHECK(g.config.key.size() == 2);
  CHECK(nonlocal_param_count(g) == 0);
  CHECK(g.label() == "GHZ-type");
  auto w = descriptor_of(kW);
  CHECK(w.l == 1);
  CHECK(w.config.key.size() == 1);
  CHECK(w.config.key[0].segre == Partition{2});
  CHECK(w.label() == "W-type");

  auto c54 = descriptor_of(five_point_state(GaussianRational::fraction(1, 3), GaussianRational::fraction(1, 5)));
  CHECK(c54.n == 5);
  CHECK(c54.l == 4);
  CHECK(c54.param_count == 2);
  CHECK(c54.label() == "c_{5,4}");

  auto c43 = descriptor_of(MatrixPair(diag({1, 1, 1, 1}), diag({2, 3, 5, 0})));
  CHECK(c43.l == 3);
  CHECK(c43.param_count == 1);

  auto rd = descriptor_of(MatrixPair(diag({1, 1, 1, 0}), ones_at(4, {{3, 4}, {4, 2}})));
  CHECK(rd.n == 3);
  CHECK(rd.l == 2);
  REQUIRE(rd.b_shape.has_value());
  CHECK(rd.b_shape->size() == 3);
  CHECK_THROWS_AS(descriptor_of(MatrixPair(diag({1, 0}), diag({1, 0}))), NotTrueEntangled);
}

TEST_CASE("descriptor invariance under random ILOs") {
  std::vector<MatrixPair> seeds{kGhz, kW, five_point_state(GaussianRational::fraction(1, 3), GaussianRational::fraction(1, 5)),
                                MatrixPair(diag({1, 1, 1, 0}), ones_at(4, {{1, 3}, {3, 4}, {4, 2}})),
                                MatrixPair(diag({1, 1, 1, 1}), jordan_matrix({{ProjPoint::finite(0), 2}, {ProjPoint::finite(2), 1}, {ProjPoint::finite(-1), 1}})),
                                assemble_canonical({{ProjPoint::finite(3), 1}, {ProjPoint::finite(0), 1}}, BShape({1}, {1}))};
  int count = 0;
  for (std::size_t s = 0; s < seeds.size(); ++s) {
    auto ref = descriptor_of(seeds[s]);
    for (int k = 0; k < 40; ++k) {
      auto moved = apply_ilo(seeds[s], random_ilo(seeds[s].dim(), 1000 * s + static_cast<std::uint64_t>(k)));
      CHECK(compare_descriptors(descriptor_of(moved), ref) == Verdict::kEquivalent);
      CHECK(to_json(descriptor_of(moved)) == to_json(ref));
      ++count;
    }
  }
  CHECK(count >= 200);
}

TEST_CASE("equivalence decisions and witnesses") {
  auto self = slocc_equivalent(kGhz, apply_ilo(kGhz, random_ilo(2, 4)));
  CHECK(self.verdict == Verdict::kEquivalent);
  REQUIRE(self.witness.has_value());
  CHECK(apply_ilo(kGhz, *self.witness) == apply_ilo(kGhz, random_ilo(2, 4)));
  CHECK(slocc_equivalent(kGhz, kW).verdict == Verdict::kInequivalent);
  MatrixPair c_type(diag({1, 1, 1, 0}), ones_at(4, {{1, 3}, {3, 4}, {4, 2}}));
  MatrixPair r_type(diag({1, 1, 1, 0}), ones_at(4, {{2, 1}, {3, 4}, {4, 2}}));
  CHECK(slocc_equivalent(c_type, r_type).verdict == Verdict::kInequivalent);

  GaussianRational l1 = GaussianRational::fraction(1, 3), l2 = GaussianRational::fraction(1, 5), one(1);
  auto rel = slocc_equivalent(five_point_state(l1, l2), five_point_state(one - l1, one - l2));
  CHECK(rel.verdict == Verdict::kEquivalent);
  REQUIRE(rel.witness.has_value());
  CHECK(apply_ilo(five_point_state(l1, l2), *rel.witness) == five_point_state(one - l1, one - l2));
}

TEST_CASE("equivalence witnesses on random orbits, symmetry and transitivity") {
  std::vector<MatrixPair> seeds{
      MatrixPair(diag({1, 1, 1, 1}), diag({2, 3, 5, 0})),
      MatrixPair(diag({1, 1, 1, 1, 1}), jordan_matrix({{ProjPoint::finite(1), 2}, {ProjPoint::finite(2), 1}, {ProjPoint::finite(0), 1}, {ProjPoint::finite(-1), 1}})),
      assemble_canonical({{ProjPoint::finite(2), 1}, {ProjPoint::finite(1), 1}, {ProjPoint::finite(0), 1}}, BShape({1}, {1})),
      assemble_canonical({{ProjPoint::finite(0), 2}}, BShape({2}, {1})),
      assemble_canonical({}, BShape({1, 1}, {1, 1}))};
  std::uint64_t seed = 1;
  for (const auto& s : seeds) {
    MatrixPair a = apply_ilo(s, random_ilo(s.dim(), seed++));
    MatrixPair b = apply_ilo(s, random_ilo(s.dim(), seed++));
    MatrixPair c = apply_ilo(s, random_ilo(s.dim(), seed++));
    auto ab = slocc_equivalent(a, b), ba = slocc_equivalent(b, a), bc = slocc_equivalent(b, c), ac = slocc_equivalent(a, c);
    CHECK(ab.verdict == Verdict::kEquivalent);
    CHECK(ba.verdict == Verdict::kEquivalent);
    CHECK(bc.verdict == Verdict::kEquivalent);
    CHECK(ac.verdict == Verdict::kEquivalent);
    REQUIRE(ab.witness.has_value());
    CHECK(apply_ilo(a, *ab.witness) == b);
    CHECK(canonicalize(apply_ilo(a, *ab.witness)).canonical.pair == canonicalize(b).canonical.pair);
    CHECK(slocc_equivalent(a, a).verdict == Verdict::kEquivalent);
  }
  // a different cross ratio is a different class
  CHECK(slocc_equivalent(seeds[0], MatrixPair(diag({1, 1, 1, 1}), diag({2, 3, 7, 0}))).verdict == Verdict::kInequivalent);
}

TEST_CASE("approximate configurations are three-valued") {
  ExactMatrix comp = int_matrix({{0, 0, 0, 2}, {1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}});  // t^4 - t^2 - 2 has irrational roots
  MatrixPair m(ExactMatrix::identity(4), int_matrix({{0, 0, 0, 3}, {1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}));  // t^4 - t - 3
  auto d = descriptor_of(m);
  CHECK_FALSE(d.exact);
  CHECK(d.param_count == 1);
  auto moved = apply_ilo(m, random_ilo(4, 8));
  CHECK(slocc_equivalent(m, moved).verdict == Verdict::kEquivalent);
  CHECK_FALSE(slocc_equivalent(m, moved).witness.has_value());
  CHECK(slocc_equivalent(m, MatrixPair(ExactMatrix::identity(4), comp)).verdict == Verdict::kInequivalent);

  auto pt = [](double re) { return sp(ProjPoint::inexact({re, 0.0}, 1e-9), {1}); };
  std::vector<SingularPoint> x{pt(0), pt(1), pt(-1), pt(0.5)};
  std::vector<SingularPoint> near{pt(0), pt(1), pt(-1), pt(0.5 + 1e-6)};
  std::vector<SingularPoint> far{pt(0), pt(1), pt(-1), pt(0.25)};
  std::vector<SingularPoint> same{pt(0), pt(1), pt(-1), pt(0.5 + 1e-12)};
  CHECK(match_configurations(x, near) == Verdict::kIndeterminate);
  CHECK(match_configurations(x, far) == Verdict::kInequivalent);
  CHECK(match_configurations(x, same) == Verdict::kEquivalent);
}

TEST_CASE("descriptor json has a stable layout") {
  std::string j = to_json(descriptor_of(kW));
  CHECK(j == R"({"schema":"1","N":2,"n":2,"l":1,"label":"W-type","b_shape":null,"config_key":[{"value":"0","segre":[2]}],"param_count":0,"exact":true})");
  std::string r = to_json(descriptor_of(MatrixPair(diag({1, 1, 1, 0}), ones_at(4, {{3, 4}, {4, 2}}))));
  CHECK(r.find(R"("b_shape":{"c":[1],"r":[1],"size":3,"traces":["B3"]})") != std::string::npos);
}
