#include "slocc/fuzz.hpp"

#include <filesystem>
#include <random>

#include "json.hpp"
#include "slocc/classifier.hpp"
#include "slocc/enumerator.hpp"
#include "slocc/errors.hpp"
#include "slocc/state_io.hpp"

namespace slocc {

namespace {

std::uint64_t mix(std::uint64_t seed, std::size_t trial, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(salt)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

MatrixPair fuzz_state(std::size_t n, std::uint64_t seed, std::size_t trial) {
  static thread_local std::size_t cached_n = 0;
  static thread_local std::vector<ClassFamily> families;
  if (cached_n != n) {
    families = enumerate_classes(n);
    cached_n = n;
  }
  const auto& rep = families[mix(seed, trial, 0) % families.size()].representative.pair;
  return apply_ilo(rep, random_ilo(n, mix(seed, trial, 1)));
}

ILOTriple fuzz_operator(std::size_t n, std::uint64_t seed, std::size_t trial) { return random_ilo(n, mix(seed, trial, 2)); }

std::string fuzz_check(const MatrixPair& state, const ILOTriple& op, const Tolerances& tol) {
  MatrixPair moved = apply_ilo(state, op);
  ClassDescriptor a = descriptor_of(state, tol), b = descriptor_of(moved, tol);
  if (compare_descriptors(a, b, tol) != Verdict::kEquivalent || to_json(a) != to_json(b)) return "descriptor_invariance";
  for (const MatrixPair* m : {&state, static_cast<const MatrixPair*>(&moved)}) {
    Canonicalization c = canonicalize(*m, tol);
    if (!c.witness.exact || apply_ilo(*m, *c.witness.ops) != c.canonical.pair) return "witness_soundness";
  }
  EquivalenceResult e = slocc_equivalent(state, moved, tol);
  if (e.verdict != Verdict::kEquivalent || !e.witness || apply_ilo(state, *e.witness) != moved) return "equivalence_witness";
  return "";
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  FuzzSummary s;
  s.options = options;
  for (std::size_t t = 0; t < options.trials; ++t) {
    MatrixPair state = fuzz_state(options.n, options.seed, t);
    ILOTriple op = fuzz_operator(options.n, options.seed, t);
    std::string failed;
    try {
      failed = fuzz_check(state, op, options.tol);
    } catch (const Error& e) {
      failed = std::string("exception: ") + e.what();
    }
    ++s.checks;
    if (failed.empty()) continue;
    FuzzFailure f;
    f.trial = t;
    f.check = failed;
    if (!options.dump_dir.empty()) {
      std::filesystem::create_directories(options.dump_dir);
      std::string stem = options.dump_dir + "/fuzz_" + std::to_string(options.seed) + "_" + std::to_string(t);
      f.state_path = stem + "_state.json";
      f.ilo_path = stem + "_ilo.json";
      write_text_file(f.state_path, state_to_json(to_state_tensor(state)));
      write_text_file(f.ilo_path, ilo_to_json(op));
    }
    s.failures.push_back(std::move(f));
  }
  return s;
}

std::string fuzz_summary_json(const FuzzSummary& s) {
  nlohmann::ordered_json j;
  j["n"] = s.options.n;
  j["trials"] = s.options.trials;
  j["seed"] = s.options.seed;
  j["checks"] = {"descriptor_invariance", "witness_soundness", "equivalence_witness"};
  j["passed"] = s.checks - s.failures.size();
  j["failed"] = s.failures.size();
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& f : s.failures) {
    nlohmann::ordered_json x;
    x["trial"] = f.trial;
    x["check"] = f.check;
    if (!f.state_path.empty()) {
      x["state"] = f.state_path;
      x["ilo"] = f.ilo_path;
    }
    fails.push_back(x);
  }
  j["failures"] = fails;
  return j.dump(2);
}

}  // namespace slocc
