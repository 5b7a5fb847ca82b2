#ifndef SLOCC_STATE_IO_HPP
#define SLOCC_STATE_IO_HPP

#include <string>

#include "slocc/canonicalizer.hpp"
#include "slocc/state_model.hpp"

namespace slocc {

/// State file: {"dims": [2, N, N], "entries": [{"i":1,"j":1,"k":1,"re":"1","im":"0"}, ...]}.
/// Entries may also be arrays [i, j, k, re, im]; "im" defaults to "0".
/// Throws ParseError for malformed JSON, bad rationals, out-of-range or
/// duplicate indices and all-zero states.
StateTensor parse_state_json(const std::string& text);
StateTensor read_state_file(const std::string& path);
/// Nonzero entries only, in (i, j, k) order.
std::string state_to_json(const StateTensor& s);

std::string ilo_to_json(const ILOTriple& op);
/// Throws ParseError; Singular when a factor is not invertible.
ILOTriple parse_ilo_json(const std::string& text);

std::string canonical_to_json(const CanonicalPair& c);
/// Recomputes the verification against `input` at emission time.
std::string witness_to_json(const MatrixPair& input, const Canonicalization& c);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace slocc

#endif  // SLOCC_STATE_IO_HPP
