#include "slocc/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slocc {

UniPolynomial::UniPolynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPolynomial UniPolynomial::linear_factor(const GaussianRational& root) { return UniPolynomial({-root, 1}); }

void UniPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational UniPolynomial::evaluate(const GaussianRational& t) const {
  GaussianRational acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= t;
    acc += coeffs_[k];
  }
  return acc;
}

std::complex<double> UniPolynomial::evaluate(std::complex<double> t) const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k].to_complex();
  return acc;
}

UniPolynomial UniPolynomial::derivative() const {
  std::vector<GaussianRational> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * GaussianRational(static_cast<long>(k)));
  return UniPolynomial(std::move(d));
}

UniPolynomial UniPolynomial::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = leading().inverse();
  UniPolynomial r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UniPolynomial UniPolynomial::reversed(int degree_bound) const {
  if (degree_bound < degree()) throw std::invalid_argument("reversed: degree bound below degree");
  std::vector<GaussianRational> r(static_cast<std::size_t>(degree_bound) + 1, GaussianRational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r[static_cast<std::size_t>(degree_bound) - k] = coeffs_[k];
  return UniPolynomial(std::move(r));
}

double UniPolynomial::coefficient_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c.to_complex()));
  return m;
}

UniPolynomial& UniPolynomial::operator+=(const UniPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), GaussianRational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPolynomial& UniPolynomial::operator-=(const UniPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), GaussianRational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPolynomial(std::move(c));
}

UniPolynomial operator*(UniPolynomial a, const GaussianRational& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

std::pair<UniPolynomial, UniPolynomial> UniPolynomial::divmod(const UniPolynomial& a, const UniPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<GaussianRational> rem = a.coeffs_;
  const std::size_t db = b.coeffs_.size() - 1;
  if (rem.size() <= db) return {UniPolynomial(), a};
  std::vector<GaussianRational> quot(rem.size() - db, GaussianRational(0));
  GaussianRational inv_lead = b.leading().inverse();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    GaussianRational q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
  }
  rem.resize(db);
  return {UniPolynomial(std::move(quot)), UniPolynomial(std::move(rem))};
}

UniPolynomial UniPolynomial::gcd(const UniPolynomial& a, const UniPolynomial& b) {
  UniPolynomial x = a;
  UniPolynomial y = b;
  while (!y.is_zero()) {
    UniPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPolynomial UniPolynomial::interpolate(const std::vector<GaussianRational>& xs,
                                         const std::vector<GaussianRational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  UniPolynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].is_zero()) continue;
    UniPolynomial basis = constant(1);
    GaussianRational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * linear_factor(xs[j]);
      denom *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / denom);
  }
  return result;
}

std::vector<UniPolynomial> UniPolynomial::squarefree_decomposition() const {
  std::vector<UniPolynomial> factors;
  if (degree() <= 0) return factors;
  UniPolynomial f = monic();
  UniPolynomial fp = f.derivative();
  UniPolynomial a = gcd(f, fp);
  UniPolynomial b = divmod(f, a).first;
  UniPolynomial c = divmod(fp, a).first;
  UniPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    UniPolynomial g = gcd(b, d);
    factors.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

std::string UniPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = coeffs_[k].to_string();
    if (!coeffs_[k].is_real()) c = "(" + c + ")";
    if (k == 0) {
      os << c;
    } else {
      if (!coeffs_[k].is_one()) os << c << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace slocc
