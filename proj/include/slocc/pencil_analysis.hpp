#ifndef SLOCC_PENCIL_ANALYSIS_HPP
#define SLOCC_PENCIL_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slocc/exact_linalg.hpp"
#include "slocc/state_model.hpp"

namespace slocc {

/// Guard bands threaded through every numeric decision.
struct Tolerances {
  double root = kDefaultRootTol;
  double cluster = kDefaultClusterTol;
  double rank = kDefaultRootTol;

  static Tolerances with(double tol) { return {tol, kDefaultClusterTol, tol}; }
};

/// A point z of the projective line of pencil directions: the direction
/// Gamma2 - z*Gamma1 for finite z, and Gamma1 itself for z = infinity.
struct ProjPoint {
  enum class Kind { kFinite, kInfinity };
  Kind kind = Kind::kFinite;
  bool exact = true;
  GaussianRational value;     // exact finite value
  ApproxComplex approx;       // inexact finite value (and mirror of exact values)

  static ProjPoint finite(const GaussianRational& v, double tol = kDefaultRootTol);
  static ProjPoint inexact(std::complex<double> v, double tol);
  static ProjPoint infinity();

  bool is_infinity() const { return kind == Kind::kInfinity; }
  /// Deterministic order: exact finite points by (re, im), then inexact
  /// finite points, then infinity.
  static int compare(const ProjPoint& a, const ProjPoint& b);
  /// Three-valued identity test; exact points compare exactly.
  static ApproxComplex::Relation same(const ProjPoint& a, const ProjPoint& b);
  std::string to_string() const;
};

using Partition = std::vector<int>;

struct SingularPoint {
  ProjPoint location;
  std::size_t rank_at = 0;
  Partition segre;  // Jordan block sizes, decreasing
};

struct PencilProfile {
  std::size_t dim = 0;
  std::size_t generic_rank = 0;
  std::size_t min_rank = 0;
  std::vector<SingularPoint> points;
  /// Minimal indices of the singular part (empty when generic_rank = dim).
  std::vector<int> col_indices;  // decreasing
  std::vector<int> row_indices;  // decreasing
  bool exact = true;
};

/// The direction alpha*Gamma1 + beta*Gamma2 as a point: z = -alpha/beta,
/// or infinity when beta = 0.
ProjPoint direction_point(const GaussianRational& alpha, const GaussianRational& beta);
/// Pencil member at a point: Gamma2 - z Gamma1, or Gamma1 at infinity.
ExactMatrix pencil_at(const MatrixPair& m, const ProjPoint& z);
/// First (alpha, beta) of the sweep (1:0), (0:1), (1:1), (1:-1), (1:2), ...
/// at which the pencil has rank `target`.
std::pair<GaussianRational, GaussianRational> generic_direction(const MatrixPair& m, std::size_t target);
/// The k-th entry of the deterministic direction sweep.
std::pair<GaussianRational, GaussianRational> sweep_direction(std::size_t k);

std::size_t generic_rank(const MatrixPair& m);
/// Requires generic rank = N.
std::vector<SingularPoint> singular_points(const MatrixPair& m, const Tolerances& tol = {});
/// Column and row minimal indices, each list decreasing.
std::pair<std::vector<int>, std::vector<int>> minimal_indices(const MatrixPair& m);
/// Segre partition of the regular part at z from kernel dimensions of
/// block-Toeplitz matrices; works for singular pencils too.
Partition toeplitz_segre(const MatrixPair& m, const ProjPoint& z, std::size_t col_index_count,
                         const Tolerances& tol = {});

/// Pencil invariants without the true-entanglement check.
PencilProfile analyze_pencil(const MatrixPair& m, const Tolerances& tol = {});
/// Throws NotTrueEntangled when the state is not a true 2 x N x N state.
PencilProfile pencil_profile(const MatrixPair& m, const Tolerances& tol = {});

/// Decreasing-order comparison of partitions (lexicographic).
int compare_partitions(const Partition& a, const Partition& b);
std::string partition_to_string(const Partition& p);

}  // namespace slocc

#endif  // SLOCC_PENCIL_ANALYSIS_HPP
