#include "slocc/exact_linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slocc/errors.hpp"

namespace slocc {

ApproxComplex::Relation ApproxComplex::compare(const ApproxComplex& a, const ApproxComplex& b) {
  double band = std::max(a.tol, b.tol);
  double d = std::abs(a.value - b.value);
  if (d <= band) return Relation::kEqual;
  if (d > 1e3 * band) return Relation::kDifferent;
  return Relation::kIndeterminate;
}

namespace {

mpz_class lcm_of_denominators(const ExactMatrix& m, std::size_t row) {
  mpz_class l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto& v = m(row, j);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im().get_den_mpz_t());
  }
  return l;
}

// Fraction-free elimination on a copy whose rows were scaled to Gaussian
// integers. Every division below is exact in Z[i], so entries stay integral.
// Returns the rank; `det_out` (if given) receives the determinant of the
// original square matrix.
std::size_t bareiss(const ExactMatrix& input, GaussianRational* det_out) {
  const std::size_t rows = input.rows();
  const std::size_t cols = input.cols();
  ExactMatrix a = input;
  GaussianRational row_scale(1);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = lcm_of_denominators(a, i);
    if (l != 1) {
      GaussianRational s{mpq_class(l)};
      for (std::size_t j = 0; j < cols; ++j) a(i, j) *= s;
      row_scale *= s;
    }
  }
  GaussianRational prev(1);
  std::size_t rank = 0;
  bool negate = false;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == rows) {
      if (det_out != nullptr) {
        *det_out = GaussianRational(0);
        det_out = nullptr;
      }
      continue;
    }
    if (piv != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(rank, j));
      negate = !negate;
    }
    const GaussianRational p = a(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const GaussianRational f = a(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        a(r, j) = (p * a(r, j) - f * a(rank, j)) / prev;
      }
      a(r, c) = GaussianRational(0);
    }
    prev = p;
    ++rank;
  }
  if (det_out != nullptr) {
    if (rank < rows) {
      *det_out = GaussianRational(0);
    } else {
      GaussianRational d = prev / row_scale;
      *det_out = negate ? -d : d;
    }
  }
  return rank;
}

}  // namespace

std::size_t rank_exact(const ExactMatrix& m) {
  if (m.empty()) return 0;
  return bareiss(m, nullptr);
}

GaussianRational determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("determinant: matrix not square");
  if (m.rows() == 0) return GaussianRational(1);
  GaussianRational d;
  bareiss(m, &d);
  return d;
}

bool is_invertible(const ExactMatrix& m) { return m.is_square() && rank_exact(m) == m.rows(); }

RowEchelon rref(const ExactMatrix& m) {
  RowEchelon out{m, {}};
  ExactMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t piv = a.rows();
    for (std::size_t r = row; r < a.rows(); ++r) {
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    GaussianRational inv = a(row, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      GaussianRational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (!a(row, j).is_zero()) a(r, j) -= f * a(row, j);
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    ExactVector v(m.cols(), GaussianRational(0));
    v[f] = GaussianRational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b) {
  if (b.size() != m.rows()) throw InvalidArgument("solve: right-hand side size mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  ExactVector x(m.cols(), GaussianRational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

ExactMatrix invert(const ExactMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("invert: matrix not square");
  const std::size_t n = m.rows();
  RowEchelon e = rref(hstack(m, ExactMatrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Singular("invert: matrix is singular");
  return e.reduced.block(0, n, n, n);
}

ExactMatrix from_columns(const std::vector<ExactVector>& cols, std::size_t rows) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

// -- approximate ---------------------------------------------------------------

std::size_t rank_approx(const ApproxMatrix& m, double tol) {
  ApproxMatrix a = m;
  double scale = 0.0;
  for (const auto& v : a.entries()) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0;
  const double zero_band = tol * scale;
  std::size_t rank = 0;
  const std::size_t steps = std::min(a.rows(), a.cols());
  while (rank < steps) {
    std::size_t pr = rank, pc = rank;
    double best = -1.0;
    for (std::size_t i = rank; i < a.rows(); ++i)
      for (std::size_t j = rank; j < a.cols(); ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pr = i;
          pc = j;
        }
    if (best <= zero_band) break;
    if (best <= 1e3 * zero_band) throw IllConditioned("numeric rank inside guard band");
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(rank, j));
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, pc), a(i, rank));
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      std::complex<double> f = a(i, rank) / a(rank, rank);
      for (std::size_t j = rank; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::complex<double>>> kernel_basis_approx(const ApproxMatrix& m, double tol) {
  const std::size_t r = rank_approx(m, tol);
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullV);
  const Eigen::MatrixXcd& v = svd.matrixV();
  std::vector<std::vector<std::complex<double>>> basis;
  for (auto j = static_cast<Eigen::Index>(r); j < v.cols(); ++j) {
    std::vector<std::complex<double>> col(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) col[i] = v(static_cast<Eigen::Index>(i), j);
    basis.push_back(std::move(col));
  }
  return basis;
}

// -- pencil polynomials --------------------------------------------------------

namespace {

std::vector<GaussianRational> sample_points(std::size_t count) {
  std::vector<GaussianRational> xs;
  for (std::size_t k = 0; k < count; ++k) xs.emplace_back(static_cast<long>(k));
  return xs;
}

ExactMatrix pencil_at(const ExactMatrix& a, const ExactMatrix& b, const GaussianRational& t) {
  return t.is_zero() ? a : a + b * t;
}

ExactMatrix select(const ExactMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  ExactMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

UniPolynomial pencil_det_poly(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw InvalidArgument("pencil_det_poly: matrices must be square of equal size");
  auto xs = sample_points(a.rows() + 1);
  std::vector<GaussianRational> ys;
  for (const auto& x : xs) ys.push_back(determinant(pencil_at(a, b, x)));
  return UniPolynomial::interpolate(xs, ys);
}

UniPolynomial minors_gcd_poly(const ExactMatrix& a, const ExactMatrix& b, std::size_t k) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("minors_gcd_poly: shape mismatch");
  if (k > std::min(a.rows(), a.cols())) throw InvalidArgument("minors_gcd_poly: k exceeds dimension");
  if (k == 0) return UniPolynomial::constant(1);
  auto xs = sample_points(k + 1);
  std::vector<ExactMatrix> evals;
  for (const auto& x : xs) evals.push_back(pencil_at(a, b, x));
  UniPolynomial g;
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      std::vector<GaussianRational> ys;
      for (const auto& e : evals) ys.push_back(determinant(select(e, rows, cols)));
      UniPolynomial minor = UniPolynomial::interpolate(xs, ys);
      if (minor.is_zero()) continue;
      g = UniPolynomial::gcd(g, minor);
      if (g.degree() == 0) return g;
    } while (next_combination(cols, a.cols()));
  } while (next_combination(rows, a.rows()));
  return g;
}

// -- roots ---------------------------------------------------------------------

namespace {

// Best rational approximation with denominator bounded by max_den.
mpq_class rationalize(double x, long max_den) {
  if (!std::isfinite(x)) return mpq_class(0);
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0;
    long k2 = ai * k1 + k0;
    if (k2 > max_den || k2 <= 0) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    double frac = r - a;
    if (std::abs(frac) < 1e-14) break;
    r = 1.0 / frac;
  }
  mpq_class q(h1, k1);
  q.canonicalize();
  return q;
}

std::vector<std::complex<double>> numeric_roots(const UniPolynomial& f) {
  const int d = f.degree();
  std::vector<std::complex<double>> roots;
  if (d <= 0) return roots;
  UniPolynomial m = f.monic();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -m.coeff(static_cast<std::size_t>(i)).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  UniPolynomial dm = m.derivative();
  for (int i = 0; i < d; ++i) {
    std::complex<double> z = es.eigenvalues()(i);
    for (int it = 0; it < 8; ++it) {
      std::complex<double> dz = dm.evaluate(z);
      if (std::abs(dz) == 0.0) break;
      std::complex<double> step = m.evaluate(z) / dz;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  return roots;
}

}  // namespace

std::vector<PolyRoot> poly_roots(const UniPolynomial& p, double tol, double cluster_tol) {
  if (p.is_zero()) throw InvalidArgument("poly_roots: zero polynomial");
  std::vector<PolyRoot> out;
  if (p.degree() == 0) return out;
  auto factors = p.squarefree_decomposition();
  for (std::size_t idx = 0; idx < factors.size(); ++idx) {
    UniPolynomial f = factors[idx];
    const int mult = static_cast<int>(idx) + 1;
    if (f.degree() <= 0) continue;
    for (auto z : numeric_roots(f)) {
      if (f.degree() == 1) break;
      GaussianRational cand(rationalize(z.real(), 1000000), rationalize(z.imag(), 1000000));
      if (f.evaluate(cand).is_zero()) {
        PolyRoot r;
        r.exact = true;
        r.value = cand;
        r.approx = {cand.to_complex(), tol};
        r.multiplicity = mult;
        out.push_back(r);
        f = UniPolynomial::divmod(f, UniPolynomial::linear_factor(cand)).first;
      }
    }
    if (f.degree() == 1) {
      GaussianRational root = -f.coeff(0) / f.coeff(1);
      PolyRoot r;
      r.exact = true;
      r.value = root;
      r.approx = {root.to_complex(), tol};
      r.multiplicity = mult;
      out.push_back(r);
      continue;
    }
    if (f.degree() <= 0) continue;
    const double norm = p.coefficient_norm();
    for (auto z : numeric_roots(f)) {
      if (std::abs(p.evaluate(z)) >= 10.0 * tol * norm)
        throw IllConditioned("poly_roots: residual outside guard band");
      PolyRoot r;
      r.exact = false;
      r.approx = {z, tol};
      r.multiplicity = mult;
      out.push_back(r);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i].exact && out[j].exact) continue;
      if (std::abs(out[i].approx.value - out[j].approx.value) < cluster_tol)
        throw IllConditioned("poly_roots: distinct roots inside cluster guard band");
    }
  std::sort(out.begin(), out.end(), [](const PolyRoot& a, const PolyRoot& b) {
    if (a.exact != b.exact) return a.exact;
    if (a.exact) return GaussianRational::compare(a.value, b.value) < 0;
    if (a.approx.value.real() != b.approx.value.real()) return a.approx.value.real() < b.approx.value.real();
    return a.approx.value.imag() < b.approx.value.imag();
  });
  return out;
}

}  // namespace slocc
