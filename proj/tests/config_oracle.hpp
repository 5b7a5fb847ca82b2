#ifndef SLOCC_CONFIG_ORACLE_HPP
#define SLOCC_CONFIG_ORACLE_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "slocc/pencil_analysis.hpp"
#include "test_support.hpp"

namespace testing {

using slocc::Partition;
using slocc::ProjPoint;
using slocc::SingularPoint;

using Homog = std::pair<GaussianRational, GaussianRational>;

inline Homog homog(const ProjPoint& p) {
  if (p.is_infinity()) return {GaussianRational(1), GaussianRational(0)};
  return {p.value, GaussianRational(1)};
}

inline GaussianRational bracket(const Homog& a, const Homog& b) { return a.first * b.second - b.first * a.second; }

// Cross ratio (a,b;c,z) as a homogeneous pair.
inline Homog cross_ratio(const Homog& a, const Homog& b, const Homog& c, const Homog& z) {
  return {bracket(a, c) * bracket(b, z), bracket(a, z) * bracket(b, c)};
}

inline bool same_ratio(const Homog& x, const Homog& y) { return x.first * y.second == y.first * x.second; }

// Brute force: some ordered triple on each side with equal decorations whose
// cross ratios match all remaining points.
inline bool brute_equivalent(const std::vector<SingularPoint>& x, const std::vector<SingularPoint>& y) {
  const std::size_t d = x.size();
  if (d != y.size()) return false;
  std::vector<Partition> sx, sy;
  for (const auto& p : x) sx.push_back(p.segre);
  for (const auto& p : y) sy.push_back(p.segre);
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());
  if (sx != sy) return false;
  if (d <= 3) return true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (i == j || j == k || i == k) continue;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b)
            for (std::size_t c = 0; c < d; ++c) {
              if (a == b || b == c || a == c) continue;
              if (x[i].segre != y[a].segre || x[j].segre != y[b].segre || x[k].segre != y[c].segre) continue;
              std::vector<bool> used(d, false);
              bool ok = true;
              for (std::size_t z = 0; z < d && ok; ++z) {
                Homog r = cross_ratio(homog(x[i].location), homog(x[j].location), homog(x[k].location), homog(x[z].location));
                ok = false;
                for (std::size_t w = 0; w < d; ++w) {
                  if (used[w] || y[w].segre != x[z].segre) continue;
                  Homog s = cross_ratio(homog(y[a].location), homog(y[b].location), homog(y[c].location), homog(y[w].location));
                  if (same_ratio(r, s)) {
                    used[w] = true;
                    ok = true;
                    break;
                  }
                }
              }
              if (ok) return true;
            }
      }
  return false;
}

inline ProjPoint mobius_point(const ProjPoint& p, const GaussianRational& a, const GaussianRational& b, const GaussianRational& c,
                       const GaussianRational& d) {
  auto [x, y] = homog(p);
  GaussianRational num = a * x + b * y, den = c * x + d * y;
  if (den.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite(num / den);
}

inline SingularPoint sp(const ProjPoint& z, Partition s) { return {z, 0, std::move(s)}; }
inline SingularPoint sp(long num, long den, Partition s) { return sp(ProjPoint::finite(GaussianRational::fraction(num, den)), std::move(s)); }

inline std::vector<SingularPoint> random_config(std::mt19937_64& rng, std::size_t d) {
  static const std::vector<Partition> decorations{{1}, {1}, {1}, {2}, {1, 1}};
  std::vector<SingularPoint> out;
  while (out.size() < d) {
    ProjPoint z = rng() % 7 == 0 ? ProjPoint::infinity()
                                 : ProjPoint::finite(GaussianRational::fraction(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)));
    bool dup = std::any_of(out.begin(), out.end(), [&](const SingularPoint& p) { return ProjPoint::compare(p.location, z) == 0; });
    if (!dup) out.push_back(sp(z, decorations[rng() % decorations.size()]));
  }
  return out;
}

inline std::vector<SingularPoint> random_image(std::mt19937_64& rng, const std::vector<SingularPoint>& x) {
  for (;;) {
    GaussianRational a = testing::random_entry(rng), b = testing::random_entry(rng), c = testing::random_entry(rng),
                     d = testing::random_entry(rng);
    if ((a * d - b * c).is_zero()) continue;
    std::vector<SingularPoint> y;
    for (const auto& p : x) y.push_back(sp(mobius_point(p.location, a, b, c, d), p.segre));
    std::shuffle(y.begin(), y.end(), rng);
    return y;
  }
}

}  // namespace testing

#endif  // SLOCC_CONFIG_ORACLE_HPP
