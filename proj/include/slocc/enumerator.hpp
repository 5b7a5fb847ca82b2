#ifndef SLOCC_ENUMERATOR_HPP
#define SLOCC_ENUMERATOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slocc/bshape.hpp"
#include "slocc/canonicalizer.hpp"
#include "slocc/pencil_analysis.hpp"

namespace slocc {

/// Segre partitions of the distinct points, in block layout order: by
/// decreasing partition, the minimum-rank point last.
using CoincidencePattern = std::vector<Partition>;

/// Entries are "0", "1", "λ" or "λ1", "λ2", ... for free eigenvalues.
using SymbolicMatrix = std::vector<std::vector<std::string>>;

struct ClassFamily {
  std::size_t dim = 0;
  std::size_t n = 0;
  std::size_t l = 0;
  CoincidencePattern pattern;
  std::optional<BShape> b_shape;
  std::size_t param_count = 0;
  SymbolicMatrix symbolic_first;
  SymbolicMatrix symbolic_second;
  /// Sample instance: zero point at 0, the others at 1, 2, 3, 5, 7, ...
  CanonicalPair representative;

  std::string set_name() const;  // "c_{n,l}"
  std::string label() const;     // GHZ-type / W-type for N = 2, else set_name()
  std::string describe() const;  // block sum such as "J1(λ) (+) J2(0)"
};

/// All admissible (n, l), sorted by n descending then l ascending.
std::vector<std::pair<std::size_t, std::size_t>> family_table(std::size_t n_dim);
/// Full-rank coincidence patterns with minimum pencil rank l.
std::vector<CoincidencePattern> jordan_patterns(std::size_t n_dim, std::size_t l);
/// B shapes with n_dim - n pairs fitting in dimension n_dim.
std::vector<BShape> b_shapes(std::size_t n_dim, std::size_t n);
/// All coincidence patterns of total size `size` (one empty pattern for 0).
std::vector<CoincidencePattern> point_patterns(std::size_t size);

/// Throws InvalidArgument for n_dim < 2 or above `cap`.
std::vector<ClassFamily> enumerate_classes(std::size_t n_dim, std::size_t cap = 8);

std::string atlas_json(const std::vector<ClassFamily>& families);
std::string atlas_markdown(const std::vector<ClassFamily>& families);

}  // namespace slocc

#endif  // SLOCC_ENUMERATOR_HPP
