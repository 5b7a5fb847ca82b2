#ifndef SLOCC_STATE_MODEL_HPP
#define SLOCC_STATE_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slocc/gaussian_rational.hpp"
#include "slocc/matrix.hpp"

namespace slocc {

/// Coefficients gamma_{ijk} of a 2 x N x N state, indices 1-based:
/// i in {1,2}, j and k in 1..N.
class StateTensor {
public:
  explicit StateTensor(std::size_t n);

  std::size_t dim() const { return n_; }
  const GaussianRational& at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, GaussianRational v);
  bool is_zero() const;

  friend bool operator==(const StateTensor& a, const StateTensor& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;
  std::size_t n_;
  std::vector<GaussianRational> entries_;
};

/// The matrix vector (Gamma1, Gamma2).
struct MatrixPair {
  ExactMatrix gamma1;
  ExactMatrix gamma2;

  MatrixPair() = default;
  /// Throws InvalidArgument for unequal or non-square shapes.
  MatrixPair(ExactMatrix g1, ExactMatrix g2);

  std::size_t dim() const { return gamma1.rows(); }
  friend bool operator==(const MatrixPair& a, const MatrixPair& b) {
    return a.gamma1 == b.gamma1 && a.gamma2 == b.gamma2;
  }
  friend bool operator!=(const MatrixPair& a, const MatrixPair& b) { return !(a == b); }
};

/// Invertible local operators. T acts on the first partite (mixing the two
/// slices), P from the left and Q from the right of each slice.
class ILOTriple {
public:
  /// Throws Singular if any factor is not invertible.
  ILOTriple(ExactMatrix t, ExactMatrix p, ExactMatrix q);
  static ILOTriple identity(std::size_t n);

  const ExactMatrix& t() const { return t_; }
  const ExactMatrix& p() const { return p_; }
  const ExactMatrix& q() const { return q_; }
  std::size_t dim() const { return p_.rows(); }

  ILOTriple inverse() const;
  /// The triple applying `first` and then `second`.
  static ILOTriple compose(const ILOTriple& second, const ILOTriple& first);

  friend bool operator==(const ILOTriple& a, const ILOTriple& b) {
    return a.t_ == b.t_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

private:
  ExactMatrix t_, p_, q_;
};

struct DensityRanks {
  std::size_t r0 = 0;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
};

MatrixPair to_matrix_pair(const StateTensor& s);
StateTensor to_state_tensor(const MatrixPair& m);
/// Gamma1' = t11 P Gamma1 Q + t12 P Gamma2 Q, Gamma2' = t21 P Gamma1 Q + t22 P Gamma2 Q.
MatrixPair apply_ilo(const MatrixPair& m, const ILOTriple& op);
DensityRanks reduced_density_ranks(const MatrixPair& m);
bool is_true_entangled(const MatrixPair& m);
/// Deterministic for a fixed (n, seed); entries are small Gaussian integers
/// with occasional halves.
ILOTriple random_ilo(std::size_t n, std::uint64_t seed);

/// Cubic-grid text dump: rear plane Gamma1, then front plane Gamma2, zeros as ".".
std::string grid_render(const MatrixPair& m);
/// Inverse of grid_render; throws ParseError.
MatrixPair grid_parse(const std::string& text);

}  // namespace slocc

#endif  // SLOCC_STATE_MODEL_HPP
