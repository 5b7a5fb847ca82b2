#ifndef SLOCC_CLASSIFIER_HPP
#define SLOCC_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "slocc/bshape.hpp"
#include "slocc/canonicalizer.hpp"
#include "slocc/moebius.hpp"
#include "slocc/pencil_analysis.hpp"

namespace slocc {

struct ConfigEntry {
  Partition segre;
  ProjPoint value;
};

/// Decorated point configuration normalised by the fractional-linear group.
/// For d >= 3 points the key lists the points sent to 0, 1 and infinity,
/// then the rest ordered by decreasing partition and value; the anchors are
/// chosen to make the key minimal. d = 2 uses (0, infinity), d = 1 uses 0.
struct NormalizedConfig {
  std::vector<ConfigEntry> key;
  std::size_t param_count = 0;
  bool exact = true;
  std::vector<std::size_t> anchors;  // input indices sent to 0, 1, inf (as many as used)
};

/// Throws IllConditioned when inexact points cannot be separated.
NormalizedConfig moebius_normalize(const std::vector<SingularPoint>& points, const Tolerances& tol = {});
/// The exact map realising the normalisation (identity when there are no points).
Mobius normalizing_map(const std::vector<SingularPoint>& points, const std::vector<std::size_t>& anchors);
/// Lexicographic order used for keys: larger partition first, then value.
int compare_entries(const ConfigEntry& a, const ConfigEntry& b);

struct ClassDescriptor {
  std::size_t dim = 0;
  std::size_t n = 0;
  std::size_t l = 0;
  std::optional<BShape> b_shape;
  std::vector<SingularPoint> points;  // profile points before normalisation
  NormalizedConfig config;
  std::size_t param_count = 0;
  bool exact = true;

  /// "GHZ-type"/"W-type" for N = 2, otherwise "c_{n,l}".
  std::string label() const;
};

/// Throws NotTrueEntangled, IllConditioned.
ClassDescriptor descriptor_of(const MatrixPair& m, const Tolerances& tol = {});
std::size_t nonlocal_param_count(const ClassDescriptor& d);

enum class Verdict { kEquivalent, kInequivalent, kIndeterminate };

/// Three-valued comparison; exact descriptors compare structurally,
/// approximate ones through a matcher over anchor triples.
Verdict compare_descriptors(const ClassDescriptor& a, const ClassDescriptor& b, const Tolerances& tol = {});
/// Three-valued fractional-linear matching of two decorated configurations.
Verdict match_configurations(const std::vector<SingularPoint>& a, const std::vector<SingularPoint>& b,
                             const Tolerances& tol = {});

struct EquivalenceResult {
  Verdict verdict = Verdict::kInequivalent;
  std::optional<ILOTriple> witness;  // apply_ilo(a, *witness) == b
  std::string note;
};

/// Throws NotTrueEntangled, IllConditioned.
EquivalenceResult slocc_equivalent(const MatrixPair& a, const MatrixPair& b, const Tolerances& tol = {});

/// Operators taking canonical pair `from` to canonical pair `to` of the
/// same class; nullopt when the configurations do not match exactly.
std::optional<ILOTriple> canonical_bridge(const CanonicalPair& from, const CanonicalPair& to);

std::string to_json(const ClassDescriptor& d);
std::string verdict_name(Verdict v);

}  // namespace slocc

#endif  // SLOCC_CLASSIFIER_HPP
