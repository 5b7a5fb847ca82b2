#ifndef SLOCC_POLYNOMIAL_HPP
#define SLOCC_POLYNOMIAL_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "slocc/gaussian_rational.hpp"

namespace slocc {

/// Univariate polynomial with Gaussian-rational coefficients, low degree first.
/// The coefficient list never carries a zero leading coefficient; the zero
/// polynomial has an empty list and degree -1.
class UniPolynomial {
public:
  UniPolynomial() = default;
  explicit UniPolynomial(std::vector<GaussianRational> coeffs);
  static UniPolynomial constant(const GaussianRational& c) { return UniPolynomial({c}); }
  /// t - root
  static UniPolynomial linear_factor(const GaussianRational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : GaussianRational(0);
  }
  GaussianRational leading() const { return coeffs_.empty() ? GaussianRational(0) : coeffs_.back(); }

  GaussianRational evaluate(const GaussianRational& t) const;
  std::complex<double> evaluate(std::complex<double> t) const;
  UniPolynomial derivative() const;
  UniPolynomial monic() const;
  /// Coefficient reversal t^d p(1/t) for degree bound d (d >= degree).
  UniPolynomial reversed(int degree_bound) const;
  /// Max |coefficient| as a double.
  double coefficient_norm() const;

  UniPolynomial& operator+=(const UniPolynomial& o);
  UniPolynomial& operator-=(const UniPolynomial& o);
  friend UniPolynomial operator+(UniPolynomial a, const UniPolynomial& b) { return a += b; }
  friend UniPolynomial operator-(UniPolynomial a, const UniPolynomial& b) { return a -= b; }
  friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b);
  friend UniPolynomial operator*(UniPolynomial a, const GaussianRational& s);
  friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws std::domain_error for a zero divisor.
  static std::pair<UniPolynomial, UniPolynomial> divmod(const UniPolynomial& a, const UniPolynomial& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static UniPolynomial gcd(const UniPolynomial& a, const UniPolynomial& b);
  /// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
  static UniPolynomial interpolate(const std::vector<GaussianRational>& xs,
                                   const std::vector<GaussianRational>& ys);
  /// Yun square-free decomposition: returns f_1, f_2, ... with
  /// monic(p) = prod f_i^i, each f_i square-free and pairwise coprime.
  std::vector<UniPolynomial> squarefree_decomposition() const;

  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

}  // namespace slocc

#endif  // SLOCC_POLYNOMIAL_HPP
