#ifndef SLOCC_CANONICALIZER_HPP
#define SLOCC_CANONICALIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "slocc/bshape.hpp"
#include "slocc/jordan.hpp"
#include "slocc/moebius.hpp"
#include "slocc/pencil_analysis.hpp"
#include "slocc/state_model.hpp"

namespace slocc {

enum class CanonicalKind { kFullRank, kRankDeficient };

/// (E, J) for full generic rank, (Lambda, J (+) B) otherwise. The Jordan
/// part always comes first; for rank-deficient pairs Lambda = diag(1^n, 0^k).
struct CanonicalPair {
  CanonicalKind kind = CanonicalKind::kFullRank;
  bool exact = true;
  MatrixPair pair;                   // valid when exact
  ApproxMatrix approx_second;        // J when !exact (first is E)
  std::vector<JordanBlock> blocks;   // Jordan part, in layout order
  std::optional<BShape> b_shape;     // rank-deficient only

  std::size_t jordan_size() const;
  std::string to_string() const;
};

struct Witness {
  bool exact = true;
  std::optional<ILOTriple> ops;      // exact witness
  ApproxMatrix t, p, q;              // approximate witness
  double residual = 0.0;             // max entry deviation of the approximate witness
};

struct Canonicalization {
  CanonicalPair canonical;
  Witness witness;
  std::string note;
};

/// Anchors of the eigenvalue chart: `zero` goes to 0, `one` (if any) to 1
/// and `inf` to infinity.
struct ChartAnchors {
  std::optional<ProjPoint> zero;
  std::optional<ProjPoint> one;
  ProjPoint inf = ProjPoint::infinity();
};

/// Deterministic chart for a pencil profile. Among the points with the
/// most Segre parts (largest partition on ties) the anchors minimising the
/// resulting point configuration are chosen, which makes canonicalization
/// idempotent.
ChartAnchors choose_chart(const MatrixPair& m, const PencilProfile& prof);

/// Points of the profile after the chart, ordered as their Jordan blocks
/// appear: by decreasing partition then value, the zero point last.
std::vector<EigenGroup> chart_groups(const PencilProfile& prof, const ChartAnchors& chart);

/// Throws NotTrueEntangled, IllConditioned.
Canonicalization canonicalize(const MatrixPair& m, const Tolerances& tol = {});
Canonicalization reduce_full_rank(const MatrixPair& m, const Tolerances& tol = {});
Canonicalization reduce_rank_deficient(const MatrixPair& m, const Tolerances& tol = {});

/// The canonical pair built directly from its Jordan blocks and B shape.
MatrixPair assemble_canonical(const std::vector<JordanBlock>& blocks, const std::optional<BShape>& shape);

/// P, Q with P a Q = b and P c Q = d, or nullopt when no invertible pair
/// exists. Solved as a linear system; a seeded random element of the
/// solution space is taken.
std::optional<std::pair<ExactMatrix, ExactMatrix>> strict_intertwiner(const MatrixPair& from, const MatrixPair& to);

}  // namespace slocc

#endif  // SLOCC_CANONICALIZER_HPP
