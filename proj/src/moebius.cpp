#include "slocc/moebius.hpp"

#include <cmath>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

std::pair<GaussianRational, GaussianRational> homog(const ProjPoint& p) {
  if (p.is_infinity()) return {1, 0};
  if (!p.exact) throw InvalidArgument("mobius: inexact point in exact map");
  return {p.value, 1};
}

std::pair<std::complex<double>, std::complex<double>> homog_approx(const ProjPoint& p) {
  if (p.is_infinity()) return {1.0, 0.0};
  return {p.exact ? p.value.to_complex() : p.approx.value, 1.0};
}

template <class S, class H>
void anchor_rows(const ProjPoint* zero, const ProjPoint* one, const ProjPoint& inf, H homog_fn, S& a, S& b, S& c, S& d) {
  auto [gx, gy] = homog_fn(inf);
  c = gy;
  d = -gx;
  if (zero == nullptr) {
    if (inf.is_infinity()) {
      a = S(1), b = S(0), c = S(0), d = S(1);
    } else {
      a = S(0), b = S(1);
    }
    return;
  }
  auto [zx, zy] = homog_fn(*zero);
  a = zy;
  b = -zx;
  if (one != nullptr) {
    auto [ox, oy] = homog_fn(*one);
    S num = a * ox + b * oy;
    S den = c * ox + d * oy;
    S s = den / num;
    a = a * s;
    b = b * s;
  }
}

}  // namespace

Mobius Mobius::from_anchors(const ProjPoint* zero, const ProjPoint* one, const ProjPoint& inf) {
  Mobius m;
  anchor_rows(zero, one, inf, homog, m.a, m.b, m.c, m.d);
  if ((m.a * m.d - m.b * m.c).is_zero()) throw InvalidArgument("mobius: anchors not distinct");
  return m;
}

ProjPoint Mobius::apply(const ProjPoint& z) const {
  if (!z.is_infinity() && !z.exact) {
    return MobiusApprox::from_exact(*this).apply(z, z.approx.tol);
  }
  auto [x, y] = homog(z);
  GaussianRational num = a * x + b * y;
  GaussianRational den = c * x + d * y;
  if (den.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite(num / den);
}

Mobius Mobius::inverse() const { return {d, -b, -c, a}; }

Mobius Mobius::then(const Mobius& n) const {
  return {n.a * a + n.b * c, n.a * b + n.b * d, n.c * a + n.d * c, n.c * b + n.d * d};
}

ExactMatrix Mobius::realizing_t() const {
  // z' = (t22 z + t21) / (t12 z + t11)
  ExactMatrix t{{d, c}, {b, a}};
  GaussianRational s = !t(0, 0).is_zero() ? t(0, 0) : t(0, 1);
  return t * s.inverse();
}

Mobius mobius_of_t(const ExactMatrix& t) { return {t(1, 1), t(1, 0), t(0, 1), t(0, 0)}; }

MobiusApprox MobiusApprox::from_anchors(const ProjPoint* zero, const ProjPoint* one, const ProjPoint& inf) {
  MobiusApprox m;
  anchor_rows(zero, one, inf, homog_approx, m.a, m.b, m.c, m.d);
  return m;
}

MobiusApprox MobiusApprox::from_exact(const Mobius& m) {
  return {m.a.to_complex(), m.b.to_complex(), m.c.to_complex(), m.d.to_complex()};
}

ProjPoint MobiusApprox::apply(const ProjPoint& z, double tol) const {
  auto [x, y] = homog_approx(z);
  std::complex<double> num = a * x + b * y;
  std::complex<double> den = c * x + d * y;
  if (std::abs(den) <= 1e-300 || std::abs(den) < tol * 1e-3 * std::abs(num)) return ProjPoint::infinity();
  return ProjPoint::inexact(num / den, tol);
}

ApproxMatrix MobiusApprox::realizing_t() const {
  ApproxMatrix t{{d, c}, {b, a}};
  std::complex<double> s = std::abs(t(0, 0)) > 0 ? t(0, 0) : t(0, 1);
  return t * (1.0 / s);
}

}  // namespace slocc
