#ifndef SLOCC_EXACT_LINALG_HPP
#define SLOCC_EXACT_LINALG_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "slocc/gaussian_rational.hpp"
#include "slocc/matrix.hpp"
#include "slocc/polynomial.hpp"

namespace slocc {

/// Default guard band for root residuals.
inline constexpr double kDefaultRootTol = 1e-9;
/// Default separation below which two inexact roots cannot be told apart.
inline constexpr double kDefaultClusterTol = 1e-7;

/// Approximate complex value that remembers the absolute guard band it
/// was computed with. Comparisons are three-valued; see compare().
struct ApproxComplex {
  std::complex<double> value;
  double tol = kDefaultRootTol;

  enum class Relation { kEqual, kDifferent, kIndeterminate };
  /// Equal when |a-b| <= tol, different when |a-b| > 1e3*tol, otherwise
  /// indeterminate. Uses the larger of the two guard bands.
  static Relation compare(const ApproxComplex& a, const ApproxComplex& b);
};

// -- exact dense linear algebra ------------------------------------------------

/// Rank over Q(i) via fraction-free (Bareiss) elimination on a
/// denominator-cleared copy of the matrix.
std::size_t rank_exact(const ExactMatrix& m);
GaussianRational determinant(const ExactMatrix& m);
/// Throws Singular when m is not invertible.
ExactMatrix invert(const ExactMatrix& m);
bool is_invertible(const ExactMatrix& m);

struct RowEchelon {
  ExactMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;     // pivot column per nonzero row
};
RowEchelon rref(const ExactMatrix& m);

/// Basis of {x : m x = 0}; linearly independent, count = cols - rank.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);
/// Solves m x = b; nullopt when inconsistent. Free variables set to zero.
std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b);
/// Matrix with the given vectors as columns.
ExactMatrix from_columns(const std::vector<ExactVector>& cols, std::size_t rows);

/// Numeric rank of an approximate matrix with partial pivoting. A pivot is
/// zero when |p| <= tol*scale and nonzero when |p| > 1e3*tol*scale; anything
/// between throws IllConditioned.
std::size_t rank_approx(const ApproxMatrix& m, double tol);
std::vector<std::vector<std::complex<double>>> kernel_basis_approx(const ApproxMatrix& m, double tol);

// -- pencil polynomials --------------------------------------------------------

/// det(a + t*b) as an exact polynomial in t.
UniPolynomial pencil_det_poly(const ExactMatrix& a, const ExactMatrix& b);
/// Monic gcd of all k x k minors of (a + t*b); the zero polynomial when all
/// minors vanish identically.
UniPolynomial minors_gcd_poly(const ExactMatrix& a, const ExactMatrix& b, std::size_t k);

// -- roots ---------------------------------------------------------------------

struct PolyRoot {
  bool exact = false;
  GaussianRational value;     // valid when exact
  ApproxComplex approx;       // always filled
  int multiplicity = 1;
};

/// All roots with multiplicity (summing to the degree). Roots that are
/// Gaussian rationals are recovered exactly and verified by substitution;
/// the rest are returned flagged inexact with residual below
/// 10*tol*coefficient_norm. Throws IllConditioned when two distinct inexact
/// roots are closer than cluster_tol or a residual check fails.
std::vector<PolyRoot> poly_roots(const UniPolynomial& p, double tol = kDefaultRootTol,
                                 double cluster_tol = kDefaultClusterTol);

}  // namespace slocc

#endif  // SLOCC_EXACT_LINALG_HPP
