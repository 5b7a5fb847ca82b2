#include "slocc/state_model.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "slocc/errors.hpp"
#include "slocc/exact_linalg.hpp"

namespace slocc {

StateTensor::StateTensor(std::size_t n) : n_(n), entries_(2 * n * n, GaussianRational(0)) {
  if (n < 1) throw InvalidArgument("StateTensor: dimension must be positive");
}

std::size_t StateTensor::index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i < 1 || i > 2 || j < 1 || j > n_ || k < 1 || k > n_) throw InvalidArgument("StateTensor: index out of range");
  return ((i - 1) * n_ + (j - 1)) * n_ + (k - 1);
}

const GaussianRational& StateTensor::at(std::size_t i, std::size_t j, std::size_t k) const {
  return entries_[index(i, j, k)];
}

void StateTensor::set(std::size_t i, std::size_t j, std::size_t k, GaussianRational v) {
  entries_[index(i, j, k)] = std::move(v);
}

bool StateTensor::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const GaussianRational& g) { return g.is_zero(); });
}

MatrixPair::MatrixPair(ExactMatrix g1, ExactMatrix g2) : gamma1(std::move(g1)), gamma2(std::move(g2)) {
  if (!gamma1.is_square() || gamma1.rows() != gamma2.rows() || gamma1.cols() != gamma2.cols())
    throw InvalidArgument("MatrixPair: slices must be square and of equal size");
}

ILOTriple::ILOTriple(ExactMatrix t, ExactMatrix p, ExactMatrix q) : t_(std::move(t)), p_(std::move(p)), q_(std::move(q)) {
  if (t_.rows() != 2 || t_.cols() != 2) throw InvalidArgument("ILOTriple: T must be 2x2");
  if (!p_.is_square() || p_.rows() != q_.rows() || !q_.is_square()) throw InvalidArgument("ILOTriple: P, Q shape mismatch");
  if (!is_invertible(t_) || !is_invertible(p_) || !is_invertible(q_)) throw Singular("ILOTriple: operator not invertible");
}

ILOTriple ILOTriple::identity(std::size_t n) {
  return {ExactMatrix::identity(2), ExactMatrix::identity(n), ExactMatrix::identity(n)};
}

ILOTriple ILOTriple::inverse() const { return {invert(t_), invert(p_), invert(q_)}; }

ILOTriple ILOTriple::compose(const ILOTriple& second, const ILOTriple& first) {
  return {second.t_ * first.t_, second.p_ * first.p_, first.q_ * second.q_};
}

MatrixPair to_matrix_pair(const StateTensor& s) {
  const std::size_t n = s.dim();
  ExactMatrix g1(n, n), g2(n, n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k) {
      g1(j - 1, k - 1) = s.at(1, j, k);
      g2(j - 1, k - 1) = s.at(2, j, k);
    }
  return {g1, g2};
}

StateTensor to_state_tensor(const MatrixPair& m) {
  StateTensor s(m.dim());
  for (std::size_t j = 1; j <= m.dim(); ++j)
    for (std::size_t k = 1; k <= m.dim(); ++k) {
      s.set(1, j, k, m.gamma1(j - 1, k - 1));
      s.set(2, j, k, m.gamma2(j - 1, k - 1));
    }
  return s;
}

MatrixPair apply_ilo(const MatrixPair& m, const ILOTriple& op) {
  if (op.dim() != m.dim()) throw InvalidArgument("apply_ilo: dimension mismatch");
  ExactMatrix a = op.p() * m.gamma1 * op.q();
  ExactMatrix b = op.p() * m.gamma2 * op.q();
  const ExactMatrix& t = op.t();
  return {a * t(0, 0) + b * t(0, 1), a * t(1, 0) + b * t(1, 1)};
}

DensityRanks reduced_density_ranks(const MatrixPair& m) {
  const ExactMatrix* g[2] = {&m.gamma1, &m.gamma2};
  ExactMatrix rho2 = conj_transpose(m.gamma1) * m.gamma1 + conj_transpose(m.gamma2) * m.gamma2;
  ExactMatrix rho1 = m.gamma1 * conj_transpose(m.gamma1) + m.gamma2 * conj_transpose(m.gamma2);
  ExactMatrix rho0(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      GaussianRational tr(0);
      for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) tr += (*g[i])(r, c) * (*g[j])(r, c).conj();
      rho0(i, j) = tr;
    }
  return {rank_exact(rho0), rank_exact(rho1), rank_exact(rho2)};
}

bool is_true_entangled(const MatrixPair& m) {
  DensityRanks r = reduced_density_ranks(m);
  return r.r0 == 2 && r.r1 == m.dim() && r.r2 == m.dim();
}

namespace {

GaussianRational small_value(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> v(-2, 2);
  switch (rng() % 8) {
    case 0:
      return {mpq_class(v(rng), 2), mpq_class(0)};
    case 1:
      return {mpq_class(v(rng)), mpq_class(v(rng))};
    default:
      return GaussianRational(v(rng));
  }
}

ExactMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small_value(rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

ILOTriple random_ilo(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ExactMatrix t = random_invertible(rng, 2);
  ExactMatrix p = random_invertible(rng, n);
  ExactMatrix q = random_invertible(rng, n);
  return {t, p, q};
}

namespace {

void render_plane(std::ostringstream& os, const ExactMatrix& m) {
  std::size_t width = 1;
  for (const auto& v : m.entries()) width = std::max(width, v.is_zero() ? std::size_t{1} : v.to_string().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string s = m(i, j).is_zero() ? "." : m(i, j).to_string();
      if (j > 0) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
}

}  // namespace

std::string grid_render(const MatrixPair& m) {
  std::ostringstream os;
  os << "rear (Gamma1):\n";
  render_plane(os, m.gamma1);
  os << "front (Gamma2):\n";
  render_plane(os, m.gamma2);
  return os.str();
}

MatrixPair grid_parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> planes[2];
  int current = -1;
  while (std::getline(in, line)) {
    if (line.rfind("rear", 0) == 0) {
      current = 0;
      continue;
    }
    if (line.rfind("front", 0) == 0) {
      current = 1;
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (current < 0) throw ParseError("grid: row before plane header");
    planes[current].push_back(std::move(tokens));
  }
  ExactMatrix out[2];
  const std::size_t n = planes[0].size();
  for (int p = 0; p < 2; ++p) {
    if (planes[p].size() != n || n == 0) throw ParseError("grid: planes must be square and equal");
    out[p] = ExactMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (planes[p][i].size() != n) throw ParseError("grid: ragged row");
      for (std::size_t j = 0; j < n; ++j) {
        const std::string& tok = planes[p][i][j];
        if (tok == ".") continue;
        try {
          out[p](i, j) = GaussianRational::parse(tok);
        } catch (const std::invalid_argument& e) {
          throw ParseError(std::string("grid: ") + e.what());
        }
      }
    }
  }
  return {out[0], out[1]};
}

}  // namespace slocc
