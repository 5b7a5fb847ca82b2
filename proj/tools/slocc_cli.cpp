#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "slocc.h"

namespace {

int exit_code(slocc_status s) {
  switch (s) {
    case SLOCC_OK: return 0;
    case SLOCC_NOT_TRUE_ENTANGLED: return 1;
    case SLOCC_PARSE_ERROR:
    case SLOCC_SINGULAR:
    case SLOCC_INVALID_ARGUMENT: return 2;
    case SLOCC_ILL_CONDITIONED:
    case SLOCC_INDETERMINATE: return 3;
    case SLOCC_INTERNAL: return 4;
    case SLOCC_FUZZ_FAILURES: return 5;
  }
  return 4;
}

int fail(slocc_status s) {
  std::cerr << "error: " << slocc_last_error() << '\n';
  return exit_code(s);
}

// Takes ownership of a returned string.
std::string take(char* s) {
  std::string out = s ? s : "";
  slocc_string_free(s);
  return out;
}

void print(const std::string& s) {
  std::cout << s;
  if (s.empty() || s.back() != '\n') std::cout << '\n';
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text << '\n';
  return static_cast<bool>(out);
}

struct StateHandle {
  slocc_state* p = nullptr;
  ~StateHandle() { slocc_state_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify 2xNxN tripartite states under invertible local operations"};
  app.require_subcommand(1);
  double tol = 0.0;
  app.add_option("--tol", tol, "guard band for numeric decisions (default 1e-9)");

  std::string file, file_b, witness_out;
  bool table = false, markdown = false;
  std::size_t n = 0, trials = 100;
  std::uint64_t seed = 1;
  std::string out_dir, replay_state, replay_ilo;

  auto* classify = app.add_subcommand("classify", "descriptor, canonical pair and witness of a state file");
  classify->add_option("FILE", file, "state file")->required();
  classify->add_flag("--table", table, "plain text instead of JSON");

  auto* canon = app.add_subcommand("canonicalize", "canonical pair of a state file");
  canon->add_option("FILE", file, "state file")->required();
  canon->add_option("--witness", witness_out, "write the witness operators to this file");

  auto* equiv = app.add_subcommand("equiv", "decide equivalence of two state files");
  equiv->add_option("A", file, "first state file")->required();
  equiv->add_option("B", file_b, "second state file")->required();
  equiv->add_option("--witness", witness_out, "write the connecting operators to this file");

  auto* enumerate = app.add_subcommand("enumerate", "class families of 2xNxN states");
  enumerate->add_option("N", n, "dimension")->required();
  enumerate->add_flag("--markdown", markdown, "Markdown table instead of JSON");

  auto* fuzz = app.add_subcommand("fuzz", "invariance fuzzing over random local operators");
  fuzz->add_option("--n", n, "dimension");
  fuzz->add_option("--trials", trials, "number of trials");
  fuzz->add_option("--seed", seed, "random seed");
  fuzz->add_option("--out", out_dir, "directory for failure dumps");
  auto* rs = fuzz->add_option("--replay-state", replay_state, "replay a dumped state file");
  auto* ri = fuzz->add_option("--replay-ilo", replay_ilo, "replay a dumped operator file");
  rs->needs(ri);
  ri->needs(rs);

  auto* grid = app.add_subcommand("grid", "cubic-grid text dump of a state file");
  grid->add_option("FILE", file, "state file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (enumerate->parsed()) {
    char* out = nullptr;
    slocc_status s = slocc_enumerate(n, markdown ? 1 : 0, &out);
    if (s != SLOCC_OK) return fail(s);
    print(take(out));
    return 0;
  }

  if (fuzz->parsed()) {
    char* out = nullptr;
    slocc_status s = replay_state.empty()
                         ? slocc_fuzz(n == 0 ? 3 : n, trials, seed, out_dir.empty() ? nullptr : out_dir.c_str(), tol, &out)
                         : slocc_fuzz_replay(replay_state.c_str(), replay_ilo.c_str(), tol, &out);
    if (out != nullptr) print(take(out));
    if (s != SLOCC_OK) return fail(s);
    return 0;
  }

  StateHandle a;
  if (slocc_status s = slocc_state_from_file(file.c_str(), &a.p); s != SLOCC_OK) return fail(s);

  if (classify->parsed()) {
    char* out = nullptr;
    slocc_status s = slocc_classify(a.p, tol, table ? 1 : 0, &out);
    if (s != SLOCC_OK) return fail(s);
    print(take(out));
    return 0;
  }

  if (canon->parsed()) {
    char* c = nullptr;
    char* w = nullptr;
    slocc_status s = slocc_canonicalize(a.p, tol, &c, &w);
    if (s != SLOCC_OK) return fail(s);
    print(take(c));
    std::string wit = take(w);
    if (!witness_out.empty() && !write_file(witness_out, wit)) {
      std::cerr << "error: cannot write " << witness_out << '\n';
      return 2;
    }
    return 0;
  }

  if (equiv->parsed()) {
    StateHandle b;
    if (slocc_status s = slocc_state_from_file(file_b.c_str(), &b.p); s != SLOCC_OK) return fail(s);
    slocc_verdict v = SLOCC_INEQUIVALENT;
    char* w = nullptr;
    slocc_status s = slocc_equivalent(a.p, b.p, tol, &v, &w);
    std::string wit = take(w);
    if (s != SLOCC_OK && s != SLOCC_INDETERMINATE) return fail(s);
    print(v == SLOCC_EQUIVALENT ? "equivalent" : v == SLOCC_INEQUIVALENT ? "inequivalent" : "indeterminate");
    if (!witness_out.empty() && !wit.empty() && !write_file(witness_out, wit)) {
      std::cerr << "error: cannot write " << witness_out << '\n';
      return 2;
    }
    return exit_code(s);
  }

  if (grid->parsed()) {
    char* out = nullptr;
    slocc_status s = slocc_grid(a.p, &out);
    if (s != SLOCC_OK) return fail(s);
    print(take(out));
    return 0;
  }
  return 0;
}
