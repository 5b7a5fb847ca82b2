#include "slocc/state_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "slocc/errors.hpp"

namespace slocc {

using Json = nlohmann::ordered_json;

namespace {

std::size_t index_field(const Json& v, const char* name) {
  if (!v.is_number_integer()) throw ParseError(std::string("state file: index ") + name + " must be an integer");
  long long x = v.get<long long>();
  if (x < 1) throw ParseError(std::string("state file: index ") + name + " out of range");
  return static_cast<std::size_t>(x);
}

mpq_class rational_field(const Json& v, const char* name) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("state file: ") + name + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  throw ParseError(std::string("state file: ") + name + " must be a rational string");
}

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

Json approx_json(const ApproxMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(Json{{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
    rows.push_back(r);
  }
  return rows;
}

ExactMatrix parse_matrix(const Json& j, const char* name) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string("ilo file: ") + name + " must be a nonempty array of rows");
  const std::size_t rows = j.size(), cols = j[0].is_array() ? j[0].size() : 0;
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError(std::string("ilo file: ragged matrix ") + name);
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_string()) throw ParseError(std::string("ilo file: entries of ") + name + " must be strings");
      try {
        m(i, k) = GaussianRational::parse(j[i][k].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("ilo file: ") + name + ": " + e.what());
      }
    }
  }
  return m;
}

Json point_json(const ProjPoint& p) {
  if (p.is_infinity()) return "inf";
  if (p.exact) return p.value.to_string();
  return Json{{"re", p.approx.value.real()}, {"im", p.approx.value.imag()}, {"tol", p.approx.tol}};
}

}  // namespace

StateTensor parse_state_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("state file: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dims") || !j.contains("entries")) throw ParseError("state file: needs dims and entries");
  const Json& dims = j["dims"];
  if (!dims.is_array() || dims.size() != 3 || !dims[0].is_number_integer() || !dims[1].is_number_integer() ||
      !dims[2].is_number_integer())
    throw ParseError("state file: dims must be [2, N, N]");
  long long d0 = dims[0].get<long long>(), d1 = dims[1].get<long long>(), d2 = dims[2].get<long long>();
  if (d0 != 2 || d1 != d2 || d1 < 2 || d1 > 64) throw ParseError("state file: dims must be [2, N, N] with N >= 2");
  const auto n = static_cast<std::size_t>(d1);
  StateTensor s(n);
  if (!j["entries"].is_array()) throw ParseError("state file: entries must be an array");
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& e : j["entries"]) {
    Json i, jj, k, re, im = "0";
    if (e.is_array()) {
      if (e.size() < 4 || e.size() > 5) throw ParseError("state file: array entries are [i, j, k, re, im]");
      i = e[0], jj = e[1], k = e[2], re = e[3];
      if (e.size() == 5) im = e[4];
    } else if (e.is_object()) {
      if (!e.contains("i") || !e.contains("j") || !e.contains("k") || !e.contains("re"))
        throw ParseError("state file: entry needs i, j, k and re");
      i = e["i"], jj = e["j"], k = e["k"], re = e["re"];
      if (e.contains("im")) im = e["im"];
    } else {
      throw ParseError("state file: entry must be an object or an array");
    }
    auto key = std::make_tuple(index_field(i, "i"), index_field(jj, "j"), index_field(k, "k"));
    auto [a, b, c] = key;
    if (a > 2 || b > n || c > n) throw ParseError("state file: index out of range");
    if (!seen.insert(key).second) throw ParseError("state file: duplicate entry");
    s.set(a, b, c, GaussianRational(rational_field(re, "re"), rational_field(im, "im")));
  }
  if (s.is_zero()) throw ParseError("state file: all entries are zero");
  return s;
}

StateTensor read_state_file(const std::string& path) { return parse_state_json(read_text_file(path)); }

std::string state_to_json(const StateTensor& s) {
  Json j;
  const std::size_t n = s.dim();
  j["dims"] = {2, n, n};
  Json entries = Json::array();
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b) {
        const auto& v = s.at(i, a, b);
        if (v.is_zero()) continue;
        entries.push_back(Json{{"i", i}, {"j", a}, {"k", b}, {"re", rational_to_string(v.re())}, {"im", rational_to_string(v.im())}});
      }
  j["entries"] = entries;
  return j.dump(2);
}

std::string ilo_to_json(const ILOTriple& op) {
  return Json{{"t", matrix_json(op.t())}, {"p", matrix_json(op.p())}, {"q", matrix_json(op.q())}}.dump(2);
}

ILOTriple parse_ilo_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ilo file: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("t") || !j.contains("p") || !j.contains("q")) throw ParseError("ilo file: needs t, p and q");
  ExactMatrix t = parse_matrix(j["t"], "t"), p = parse_matrix(j["p"], "p"), q = parse_matrix(j["q"], "q");
  if (t.rows() != 2 || t.cols() != 2 || !p.is_square() || !q.is_square() || p.rows() != q.rows())
    throw ParseError("ilo file: shapes must be 2x2, NxN, NxN");
  return ILOTriple(t, p, q);
}

std::string canonical_to_json(const CanonicalPair& c) {
  Json j;
  j["kind"] = c.kind == CanonicalKind::kFullRank ? "full_rank" : "rank_deficient";
  j["exact"] = c.exact;
  j["describe"] = c.to_string();
  Json blocks = Json::array();
  for (const auto& b : c.blocks) blocks.push_back(Json{{"eigenvalue", point_json(b.eigenvalue)}, {"size", b.size}});
  j["blocks"] = blocks;
  if (c.b_shape) {
    j["b_shape"] = Json{{"c", c.b_shape->c_lengths()}, {"r", c.b_shape->r_lengths()}, {"size", c.b_shape->size()},
                        {"traces", c.b_shape->traces()}};
  } else {
    j["b_shape"] = nullptr;
  }
  if (c.exact) {
    j["first"] = matrix_json(c.pair.gamma1);
    j["second"] = matrix_json(c.pair.gamma2);
  } else {
    j["first"] = matrix_json(ExactMatrix::identity(c.approx_second.rows()));
    j["second"] = approx_json(c.approx_second);
  }
  return j.dump(2);
}

std::string witness_to_json(const MatrixPair& input, const Canonicalization& c) {
  Json j;
  j["exact"] = c.witness.exact;
  if (c.witness.exact) {
    const ILOTriple& op = *c.witness.ops;
    j["t"] = matrix_json(op.t());
    j["p"] = matrix_json(op.p());
    j["q"] = matrix_json(op.q());
    j["verified"] = apply_ilo(input, op) == c.canonical.pair;
  } else {
    const Witness& w = c.witness;
    ApproxMatrix g1 = to_approx(input.gamma1), g2 = to_approx(input.gamma2);
    ApproxMatrix e = w.p * (g1 * w.t(0, 0) + g2 * w.t(0, 1)) * w.q;
    ApproxMatrix s = w.p * (g1 * w.t(1, 0) + g2 * w.t(1, 1)) * w.q;
    double dev = 0.0;
    for (std::size_t a = 0; a < e.rows(); ++a)
      for (std::size_t b = 0; b < e.cols(); ++b) {
        dev = std::max(dev, std::abs(e(a, b) - std::complex<double>(a == b ? 1.0 : 0.0)));
        dev = std::max(dev, std::abs(s(a, b) - c.canonical.approx_second(a, b)));
      }
    j["t"] = approx_json(w.t);
    j["p"] = approx_json(w.p);
    j["q"] = approx_json(w.q);
    j["residual_bound"] = w.residual;
    j["residual"] = dev;
    j["verified"] = dev <= 10.0 * w.residual + 1e-12;
  }
  return j.dump(2);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

}  // namespace slocc
