#include "slocc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "json.hpp"
#include "slocc/classifier.hpp"
#include "slocc/enumerator.hpp"
#include "slocc/errors.hpp"
#include "slocc/fuzz.hpp"
#include "slocc/state_io.hpp"

struct slocc_state {
  slocc::StateTensor tensor;
  slocc::MatrixPair pair;
};

namespace {

thread_local std::string g_last_error;

using Json = nlohmann::ordered_json;

slocc_status status_of(slocc::ErrorCode c) {
  switch (c) {
    case slocc::ErrorCode::kNotTrueEntangled: return SLOCC_NOT_TRUE_ENTANGLED;
    case slocc::ErrorCode::kParseError: return SLOCC_PARSE_ERROR;
    case slocc::ErrorCode::kIllConditioned: return SLOCC_ILL_CONDITIONED;
    case slocc::ErrorCode::kIndeterminate: return SLOCC_INDETERMINATE;
    case slocc::ErrorCode::kSingular: return SLOCC_SINGULAR;
    case slocc::ErrorCode::kInvalidArgument: return SLOCC_INVALID_ARGUMENT;
    case slocc::ErrorCode::kInternal: return SLOCC_INTERNAL;
  }
  return SLOCC_INTERNAL;
}

template <class F>
slocc_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const slocc::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SLOCC_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SLOCC_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

slocc::Tolerances tolerances(double tol) { return tol > 0 ? slocc::Tolerances::with(tol) : slocc::Tolerances{}; }

void require(const void* p, const char* what) {
  if (p == nullptr) throw slocc::InvalidArgument(std::string("null argument: ") + what);
}

slocc_state* make_state(slocc::StateTensor t) {
  auto* s = new slocc_state{std::move(t), {}};
  s->pair = slocc::to_matrix_pair(s->tensor);
  return s;
}

std::string table_report(const slocc::ClassDescriptor& d, const std::string& canonical, const std::string& warning) {
  std::ostringstream os;
  os << "class        " << d.label() << '\n';
  os << "set          c_{" << d.n << ',' << d.l << "}\n";
  os << "N            " << d.dim << '\n';
  os << "b_shape      " << (d.b_shape ? d.b_shape->to_string() : "-") << '\n';
  os << "points       ";
  for (std::size_t i = 0; i < d.config.key.size(); ++i)
    os << (i ? ", " : "") << d.config.key[i].value.to_string() << ' ' << slocc::partition_to_string(d.config.key[i].segre);
  os << '\n';
  os << "parameters   " << d.param_count << '\n';
  os << "exact        " << (d.exact ? "yes" : "no") << '\n';
  os << "canonical    " << (canonical.empty() ? "-" : canonical) << '\n';
  if (!warning.empty()) os << "warning      " << warning << '\n';
  return os.str();
}

}  // namespace

extern "C" {

slocc_status slocc_state_from_json(const char* json, slocc_state** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = make_state(slocc::parse_state_json(json));
    return SLOCC_OK;
  });
}

slocc_status slocc_state_from_file(const char* path, slocc_state** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = make_state(slocc::read_state_file(path));
    return SLOCC_OK;
  });
}

void slocc_state_free(slocc_state* state) { delete state; }

size_t slocc_state_dim(const slocc_state* state) { return state ? state->tensor.dim() : 0; }

slocc_status slocc_state_to_json(const slocc_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = dup(slocc::state_to_json(state->tensor));
    return SLOCC_OK;
  });
}

slocc_status slocc_descriptor(const slocc_state* state, double tol, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = dup(slocc::to_json(slocc::descriptor_of(state->pair, tolerances(tol))));
    return SLOCC_OK;
  });
}

slocc_status slocc_classify(const slocc_state* state, double tol, int as_table, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    const auto t = tolerances(tol);
    slocc::ClassDescriptor d = slocc::descriptor_of(state->pair, t);
    Json report;
    report["schema"] = "1";
    report["descriptor"] = Json::parse(slocc::to_json(d));
    Json warnings = Json::array();
    std::string canonical_text, warning;
    try {
      slocc::Canonicalization c = slocc::canonicalize(state->pair, t);
      report["canonical"] = Json::parse(slocc::canonical_to_json(c.canonical));
      report["witness"] = Json::parse(slocc::witness_to_json(state->pair, c));
      canonical_text = c.canonical.to_string();
      if (!c.note.empty()) warning = c.note;
    } catch (const slocc::IllConditioned& e) {
      report["canonical"] = nullptr;
      report["witness"] = nullptr;
      warning = e.what();
    }
    if (!warning.empty()) warnings.push_back(warning);
    report["warnings"] = warnings;
    *out = dup(as_table ? table_report(d, canonical_text, warning) : report.dump(2));
    return SLOCC_OK;
  });
}

slocc_status slocc_canonicalize(const slocc_state* state, double tol, char** canonical_json, char** witness_json) {
  return guarded([&] {
    require(state, "state");
    require(canonical_json, "canonical_json");
    slocc::Canonicalization c = slocc::canonicalize(state->pair, tolerances(tol));
    std::string canon = slocc::canonical_to_json(c.canonical);
    std::string wit = slocc::witness_to_json(state->pair, c);
    *canonical_json = dup(canon);
    if (witness_json != nullptr) *witness_json = dup(wit);
    return SLOCC_OK;
  });
}

slocc_status slocc_equivalent(const slocc_state* a, const slocc_state* b, double tol, slocc_verdict* verdict,
                              char** witness_json) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(verdict, "verdict");
    if (witness_json != nullptr) *witness_json = nullptr;
    if (a->tensor.dim() != b->tensor.dim()) {
      *verdict = SLOCC_INEQUIVALENT;
      return SLOCC_OK;
    }
    slocc::EquivalenceResult r = slocc::slocc_equivalent(a->pair, b->pair, tolerances(tol));
    switch (r.verdict) {
      case slocc::Verdict::kEquivalent: *verdict = SLOCC_EQUIVALENT; break;
      case slocc::Verdict::kInequivalent: *verdict = SLOCC_INEQUIVALENT; break;
      case slocc::Verdict::kIndeterminate: *verdict = SLOCC_VERDICT_INDETERMINATE; break;
    }
    if (witness_json != nullptr && r.witness) {
      Json w = Json::parse(slocc::ilo_to_json(*r.witness));
      w["verified"] = slocc::apply_ilo(a->pair, *r.witness) == b->pair;
      *witness_json = dup(w.dump(2));
    }
    if (r.verdict == slocc::Verdict::kIndeterminate) {
      g_last_error = r.note;
      return SLOCC_INDETERMINATE;
    }
    return SLOCC_OK;
  });
}

slocc_status slocc_enumerate(size_t n, int as_markdown, char** out) {
  return guarded([&] {
    require(out, "out");
    auto fams = slocc::enumerate_classes(n);
    *out = dup(as_markdown ? slocc::atlas_markdown(fams) : slocc::atlas_json(fams));
    return SLOCC_OK;
  });
}

slocc_status slocc_fuzz(size_t n, size_t trials, uint64_t seed, const char* dump_dir, double tol, char** summary_json) {
  return guarded([&] {
    require(summary_json, "summary_json");
    slocc::FuzzOptions o;
    o.n = n;
    o.trials = trials;
    o.seed = seed;
    o.dump_dir = dump_dir ? dump_dir : "";
    o.tol = tolerances(tol);
    slocc::FuzzSummary s = slocc::run_fuzz(o);
    *summary_json = dup(slocc::fuzz_summary_json(s));
    if (!s.failures.empty()) {
      g_last_error = std::to_string(s.failures.size()) + " fuzz trial(s) failed";
      return SLOCC_FUZZ_FAILURES;
    }
    return SLOCC_OK;
  });
}

slocc_status slocc_fuzz_replay(const char* state_path, const char* ilo_path, double tol, char** summary_json) {
  return guarded([&] {
    require(state_path, "state_path");
    require(ilo_path, "ilo_path");
    require(summary_json, "summary_json");
    slocc::MatrixPair state = slocc::to_matrix_pair(slocc::read_state_file(state_path));
    slocc::ILOTriple op = slocc::parse_ilo_json(slocc::read_text_file(ilo_path));
    if (op.dim() != state.dim()) throw slocc::ParseError("replay: operator and state dimensions differ");
    std::string failed;
    try {
      failed = slocc::fuzz_check(state, op, tolerances(tol));
    } catch (const slocc::Error& e) {
      failed = std::string("exception: ") + e.what();
    }
    Json j;
    j["state"] = state_path;
    j["ilo"] = ilo_path;
    j["result"] = failed.empty() ? "pass" : "fail";
    j["check"] = failed.empty() ? Json(nullptr) : Json(failed);
    *summary_json = dup(j.dump(2));
    if (!failed.empty()) {
      g_last_error = "replayed failure: " + failed;
      return SLOCC_FUZZ_FAILURES;
    }
    return SLOCC_OK;
  });
}

slocc_status slocc_grid(const slocc_state* state, char** out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = dup(slocc::grid_render(state->pair));
    return SLOCC_OK;
  });
}

void slocc_string_free(char* s) { std::free(s); }

const char* slocc_last_error(void) { return g_last_error.c_str(); }

const char* slocc_version(void) { return "0.1.0"; }

}  // extern "C"
