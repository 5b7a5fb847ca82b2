#ifndef SLOCC_FUZZ_HPP
#define SLOCC_FUZZ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "slocc/pencil_analysis.hpp"
#include "slocc/state_model.hpp"

namespace slocc {

struct FuzzOptions {
  std::size_t n = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string dump_dir;  // failures are written here when nonempty
  Tolerances tol;
};

struct FuzzFailure {
  std::size_t trial = 0;
  std::string check;
  std::string state_path;
  std::string ilo_path;
};

struct FuzzSummary {
  FuzzOptions options;
  std::size_t checks = 0;
  std::vector<FuzzFailure> failures;
};

/// Trial t takes an enumerated family representative, moves it by one
/// seeded random ILO to get a state and by another to get its partner.
MatrixPair fuzz_state(std::size_t n, std::uint64_t seed, std::size_t trial);
ILOTriple fuzz_operator(std::size_t n, std::uint64_t seed, std::size_t trial);

/// Runs descriptor invariance, witness soundness and equivalence checks on
/// (state, apply_ilo(state, op)); returns the first failing check name or "".
std::string fuzz_check(const MatrixPair& state, const ILOTriple& op, const Tolerances& tol = {});

FuzzSummary run_fuzz(const FuzzOptions& options);
std::string fuzz_summary_json(const FuzzSummary& s);

}  // namespace slocc

#endif  // SLOCC_FUZZ_HPP
