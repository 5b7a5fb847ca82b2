#include "slocc/enumerator.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "slocc/classifier.hpp"
#include "slocc/errors.hpp"

namespace slocc {

namespace {

std::vector<Partition> integer_partitions(int m, int max_part) {
  if (m == 0) return {{}};
  std::vector<Partition> out;
  for (int first = std::min(m, max_part); first >= 1; --first)
    for (auto rest : integer_partitions(m - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

bool tier_before(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return compare_partitions(a, b) > 0;
}

// Layout order: one top-tier partition last, the rest by decreasing partition.
CoincidencePattern layout(std::vector<Partition> parts) {
  if (parts.empty()) return parts;
  auto top = std::min_element(parts.begin(), parts.end(), tier_before);
  Partition zero = *top;
  parts.erase(top);
  std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) { return compare_partitions(a, b) > 0; });
  parts.push_back(zero);
  return parts;
}

std::size_t max_parts(const CoincidencePattern& p) {
  std::size_t m = 0;
  for (const auto& x : p) m = std::max(m, x.size());
  return m;
}

int compare_patterns(const CoincidencePattern& a, const CoincidencePattern& b) {
  if (a.size() != b.size()) return a.size() > b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = compare_partitions(a[i], b[i]); c != 0) return -c;
  return 0;
}

std::vector<GaussianRational> sample_values(std::size_t count) {
  std::vector<GaussianRational> out{GaussianRational(1)};
  for (long v = 2; out.size() < count; ++v) {
    bool prime = true;
    for (long d = 2; d * d <= v; ++d) prime = prime && v % d != 0;
    if (prime) out.push_back(GaussianRational(v));
  }
  out.resize(count);
  return out;
}

std::vector<JordanBlock> pattern_blocks(const CoincidencePattern& p) {
  std::vector<JordanBlock> out;
  if (p.empty()) return out;
  auto values = sample_values(p.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    GaussianRational v = i + 1 == p.size() ? GaussianRational(0) : values[i];
    for (int s : p[i]) out.push_back({ProjPoint::finite(v), s});
  }
  return out;
}

// Symbol per eigenvalue position: "0" for the last point, λ names otherwise.
std::vector<std::string> point_symbols(const CoincidencePattern& p) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    out.push_back(p.size() == 2 ? std::string("λ") : "λ" + std::to_string(i + 1));
  if (!p.empty()) out.push_back("0");
  return out;
}

SymbolicMatrix symbolic(const ExactMatrix& m, const std::vector<std::string>& diag_symbols) {
  SymbolicMatrix s(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j && i < diag_symbols.size()) s[i][j] = diag_symbols[i];
      else s[i][j] = m(i, j).to_string();
    }
  return s;
}

ClassFamily make_family(std::size_t n_dim, const CoincidencePattern& pattern, const std::optional<BShape>& shape) {
  ClassFamily f;
  f.dim = n_dim;
  f.pattern = pattern;
  f.b_shape = shape;
  f.n = shape ? n_dim - shape->pair_count() : n_dim;
  f.l = f.n - max_parts(pattern);
  f.param_count = pattern.size() > 3 ? pattern.size() - 3 : 0;
  f.representative.kind = shape ? CanonicalKind::kRankDeficient : CanonicalKind::kFullRank;
  f.representative.blocks = pattern_blocks(pattern);
  f.representative.b_shape = shape;
  f.representative.pair = assemble_canonical(f.representative.blocks, shape);
  auto symbols = point_symbols(pattern);
  std::vector<std::string> diag;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (int s : pattern[i])
      for (int k = 0; k < s; ++k) diag.push_back(symbols[i]);
  f.symbolic_first = symbolic(f.representative.pair.gamma1, {});
  f.symbolic_second = symbolic(f.representative.pair.gamma2, diag);
  return f;
}

nlohmann::ordered_json matrix_json(const SymbolicMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

nlohmann::ordered_json exact_json(const ExactMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

std::string ClassFamily::set_name() const { return "c_{" + std::to_string(n) + "," + std::to_string(l) + "}"; }

std::string ClassFamily::label() const {
  if (dim == 2) return pattern.size() == 1 ? "W-type" : "GHZ-type";
  return set_name();
}

std::string ClassFamily::describe() const {
  auto symbols = point_symbols(pattern);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (int s : pattern[i]) {
      os << (first ? "" : " (+) ") << 'J' << s << '(' << symbols[i] << ')';
      first = false;
    }
  if (b_shape) os << (first ? "" : " (+) ") << b_shape->to_string();
  return os.str();
}

std::vector<std::pair<std::size_t, std::size_t>> family_table(std::size_t n_dim) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t l = 1; l < n_dim; ++l) out.emplace_back(n_dim, l);
  for (std::size_t n = n_dim - 1; n >= 1 && 3 * n >= 2 * n_dim; --n)
    for (std::size_t l = 2 * (n_dim - n); l <= n; ++l) out.emplace_back(n, l);
  return out;
}

std::vector<CoincidencePattern> point_patterns(std::size_t size) {
  std::vector<Partition> all;
  for (int m = 1; m <= static_cast<int>(size); ++m)
    for (auto& p : integer_partitions(m, m)) all.push_back(std::move(p));
  std::vector<CoincidencePattern> out;
  std::vector<Partition> current;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t left) {
    if (left == 0) {
      out.push_back(layout(current));
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      std::size_t w = 0;
      for (int s : all[i]) w += static_cast<std::size_t>(s);
      if (w > left) continue;
      current.push_back(all[i]);
      rec(i, left - w);
      current.pop_back();
    }
  };
  rec(0, size);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare_patterns(a, b) < 0; });
  return out;
}

std::vector<CoincidencePattern> jordan_patterns(std::size_t n_dim, std::size_t l) {
  std::vector<CoincidencePattern> out;
  for (auto& p : point_patterns(n_dim))
    if (n_dim - max_parts(p) == l) out.push_back(std::move(p));
  return out;
}

std::vector<BShape> b_shapes(std::size_t n_dim, std::size_t n) {
  if (n >= n_dim) return {};
  return BShape::all_with_pairs(n_dim - n, n_dim);
}

std::vector<ClassFamily> enumerate_classes(std::size_t n_dim, std::size_t cap) {
  if (n_dim < 2 || n_dim > cap) throw InvalidArgument("enumerate_classes: dimension out of range");
  std::vector<ClassFamily> candidates;
  std::vector<std::size_t> ns;
  for (auto [n, l] : family_table(n_dim))
    if (ns.empty() || ns.back() != n) ns.push_back(n);
  for (std::size_t n : ns) {
    if (n == n_dim) {
      for (auto [tn, l] : family_table(n_dim))
        if (tn == n)
          for (const auto& p : jordan_patterns(n_dim, l)) candidates.push_back(make_family(n_dim, p, std::nullopt));
      continue;
    }
    for (const auto& shape : b_shapes(n_dim, n))
      for (const auto& p : point_patterns(n_dim - shape.size())) candidates.push_back(make_family(n_dim, p, shape));
  }

  std::vector<ClassFamily> families;
  std::vector<ClassDescriptor> seen;
  for (auto& f : candidates) {
    if (!is_true_entangled(f.representative.pair)) continue;
    ClassDescriptor d = descriptor_of(f.representative.pair);
    if (d.n != f.n || d.l != f.l || d.b_shape != f.b_shape)
      throw Error(ErrorCode::kInternal, "enumerate_classes: representative does not round-trip");
    bool duplicate = std::any_of(seen.begin(), seen.end(),
                                 [&](const ClassDescriptor& s) { return compare_descriptors(s, d) == Verdict::kEquivalent; });
    if (duplicate) continue;
    seen.push_back(std::move(d));
    families.push_back(std::move(f));
  }
  std::stable_sort(families.begin(), families.end(), [](const ClassFamily& a, const ClassFamily& b) {
    if (a.n != b.n) return a.n > b.n;
    if (a.l != b.l) return a.l < b.l;
    if (a.b_shape != b.b_shape) {
      if (!a.b_shape || !b.b_shape) return !a.b_shape;
      return BShape::compare(*a.b_shape, *b.b_shape) < 0;
    }
    return compare_patterns(a.pattern, b.pattern) < 0;
  });
  return families;
}

std::string atlas_json(const std::vector<ClassFamily>& families) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& f : families) {
    nlohmann::ordered_json j;
    j["set"] = f.set_name();
    j["label"] = f.label();
    j["N"] = f.dim;
    j["n"] = f.n;
    j["l"] = f.l;
    j["pattern"] = f.pattern;
    if (f.b_shape) {
      nlohmann::ordered_json b;
      b["c"] = f.b_shape->c_lengths();
      b["r"] = f.b_shape->r_lengths();
      b["size"] = f.b_shape->size();
      b["traces"] = f.b_shape->traces();
      j["b_shape"] = b;
    } else {
      j["b_shape"] = nullptr;
    }
    j["param_count"] = f.param_count;
    j["describe"] = f.describe();
    j["symbolic"] = {{"first", matrix_json(f.symbolic_first)}, {"second", matrix_json(f.symbolic_second)}};
    j["representative"] = {{"first", exact_json(f.representative.pair.gamma1)},
                           {"second", exact_json(f.representative.pair.gamma2)}};
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string atlas_markdown(const std::vector<ClassFamily>& families) {
  std::ostringstream os;
  os << "| set | class | representative | parameters |\n|---|---|---|---|\n";
  for (const auto& f : families)
    os << "| " << f.set_name() << " | " << f.label() << " | " << f.describe() << " | " << f.param_count << " |\n";
  return os.str();
}

}  // namespace slocc
