#ifndef SLOCC_MOEBIUS_HPP
#define SLOCC_MOEBIUS_HPP

#include <complex>
#include <utility>

#include "slocc/pencil_analysis.hpp"

namespace slocc {

/// z -> (a z + b) / (c z + d) on the projective line, exact coefficients.
struct Mobius {
  GaussianRational a{1}, b{0}, c{0}, d{1};

  static Mobius identity() { return {}; }
  /// The map sending `zero` to 0, `one` to 1 and `inf` to infinity. `zero`
  /// and `one` may be null; with fewer anchors a fixed simple map is used.
  /// All anchors must be exact and distinct.
  static Mobius from_anchors(const ProjPoint* zero, const ProjPoint* one, const ProjPoint& inf);

  ProjPoint apply(const ProjPoint& z) const;
  Mobius inverse() const;
  /// next o this
  Mobius then(const Mobius& next) const;
  /// The T of an ILO inducing this map on pencil points, scaled so that its
  /// first nonzero entry in (t11, t12) is 1.
  ExactMatrix realizing_t() const;
};

/// Floating-point counterpart used when anchors are inexact.
struct MobiusApprox {
  std::complex<double> a{1}, b{0}, c{0}, d{1};

  static MobiusApprox from_anchors(const ProjPoint* zero, const ProjPoint* one, const ProjPoint& inf);
  static MobiusApprox from_exact(const Mobius& m);
  /// Maps to infinity when the denominator is below `pole_tol` relative to
  /// the numerator.
  ProjPoint apply(const ProjPoint& z, double tol) const;
  ApproxMatrix realizing_t() const;
};

/// The Mobius map induced on pencil points by a 2x2 T of an ILO.
Mobius mobius_of_t(const ExactMatrix& t);

}  // namespace slocc

#endif  // SLOCC_MOEBIUS_HPP
