#ifndef SLOCC_BSHAPE_HPP
#define SLOCC_BSHAPE_HPP

#include <string>
#include <utility>
#include <vector>

#include "slocc/matrix.hpp"

namespace slocc {

/// Shape of the B block of a rank-deficient canonical form.
///
/// Each (c-chain, r-chain) pair grows from the 1x1 zero block by prepending
/// one index at a time: a c-extension adds a row with a single 1 (the
/// column-side chain), an r-extension adds a column with a single 1. The
/// chain lengths are the column and row minimal indices of the pencil
/// (Lambda', B); B3 is one extension of each kind. Several pairs are
/// interleaved by distance from the end of their chains, so the zero
/// diagonal entries of Lambda' sit in the last positions.
class BShape {
public:
  BShape() = default;
  /// Throws InvalidArgument when the lists differ in length.
  BShape(std::vector<int> c_lengths, std::vector<int> r_lengths);

  const std::vector<int>& c_lengths() const { return c_; }
  const std::vector<int>& r_lengths() const { return r_; }
  std::size_t pair_count() const { return c_.size(); }
  std::size_t size() const;
  /// Pairs (c, r) after zipping both lists in decreasing order.
  std::vector<std::pair<int, int>> pairs() const;
  /// Per pair: the extension trace, e.g. "B3+c+r".
  std::vector<std::string> traces() const;
  std::string to_string() const;

  ExactMatrix lambda_matrix() const;
  ExactMatrix b_matrix() const;

  /// Global position of local index i of pair p.
  std::vector<std::vector<std::size_t>> positions() const;
  /// Row and column index permutations (as maps) exchanging the roles of
  /// Lambda' and B: Lambda'(sigma(i), tau(j)) = B(i, j) and vice versa.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> flip_maps() const;

  friend bool operator==(const BShape& a, const BShape& b) { return a.c_ == b.c_ && a.r_ == b.r_; }
  friend bool operator!=(const BShape& a, const BShape& b) { return !(a == b); }
  static int compare(const BShape& a, const BShape& b);

  /// All shapes with chain lengths >= 1, `pairs` pairs and total size <= max_size.
  static std::vector<BShape> all_with_pairs(std::size_t pairs, std::size_t max_size);

private:
  std::vector<int> c_;
  std::vector<int> r_;
};

/// Recovers the shape of a (Lambda', B) pair in canonical layout; throws
/// InvalidArgument if the matrices are not in that layout.
BShape shape_of(const ExactMatrix& lambda_p, const ExactMatrix& b);

enum class MixDirection { kBIntoLambda, kLambdaIntoB };

struct OperatorPair {
  ExactMatrix p;
  ExactMatrix q;
};

/// kBIntoLambda: P (Lambda' + coeff B) Q = Lambda' and P B Q = B.
/// kLambdaIntoB: P Lambda' Q = Lambda' and P (B + coeff Lambda') Q = B.
OperatorPair build_mixture_eliminators(const ExactMatrix& lambda_p, const ExactMatrix& b,
                                       const GaussianRational& coeff, MixDirection direction);
OperatorPair build_mixture_eliminators(const BShape& shape, const GaussianRational& coeff, MixDirection direction);

struct FlipOperators {
  ExactMatrix p;
  ExactMatrix q;
  GaussianRational lambda_scale;  // P Lambda' Q = lambda_scale * B
  GaussianRational b_scale;       // P B Q = b_scale * Lambda'
};

/// P_t = P(l) P'(-1/l) P(l), Q_t likewise; P_t Lambda' Q_t = -l B and
/// P_t B Q_t = (1/l) Lambda'.
FlipOperators build_flip_operators(const ExactMatrix& lambda_p, const ExactMatrix& b,
                                   const GaussianRational& l = GaussianRational(1));
FlipOperators build_flip_operators(const BShape& shape, const GaussianRational& l = GaussianRational(1));

/// P, Q with P (t11 L + t12 B) Q = L and P (t21 L + t22 B) Q = B for the
/// canonical (L, B) of `shape` and any invertible 2x2 t.
OperatorPair b_block_corrector(const BShape& shape, const ExactMatrix& t);

}  // namespace slocc

#endif  // SLOCC_BSHAPE_HPP
