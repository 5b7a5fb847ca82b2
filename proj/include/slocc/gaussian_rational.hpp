#ifndef SLOCC_GAUSSIAN_RATIONAL_HPP
#define SLOCC_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace slocc {

/// Exact complex number a + b*i with a, b arbitrary-precision rationals.
///
/// Both parts are kept canonical (gcd-reduced, positive denominator) after
/// every operation, so structural equality is numeric equality.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}                       // NOLINT
  GaussianRational(int v) : re_(v) {}                        // NOLINT
  GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational fraction(long num, long den) { return GaussianRational(mpq_class(num, den)); }
  static GaussianRational imaginary_unit() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Total order: real part first, then imaginary part. Not a field order;
  /// used only for deterministic tie-breaking and sorting.
  static int compare(const GaussianRational& a, const GaussianRational& b);

  /// "p/q", "p/qi", "p/q+r/si", "-i" ... ; see parse().
  std::string to_string() const;
  /// Accepts the forms emitted by to_string(), plus whitespace-free
  /// "a+bi" / "a-bi" / "bi" / "i" / "-i" with a, b integers or p/q.
  /// Throws std::invalid_argument on malformed input.
  static GaussianRational parse(std::string_view text);

  std::size_t hash() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Parses a real rational "p", "-p", "p/q". Throws std::invalid_argument.
mpq_class parse_rational(std::string_view text);
std::string rational_to_string(const mpq_class& q);

}  // namespace slocc

template <>
struct std::hash<slocc::GaussianRational> {
  std::size_t operator()(const slocc::GaussianRational& g) const noexcept { return g.hash(); }
};

#endif  // SLOCC_GAUSSIAN_RATIONAL_HPP
