#include "slocc/jordan.hpp"

#include "eigen_bridge.hpp"
#include "slocc/errors.hpp"

namespace slocc {

using detail::from_eigen;
using detail::to_eigen;

namespace {

std::size_t span_rank(const std::vector<ExactVector>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  return rank_exact(from_columns(vs, n));
}

}  // namespace

JordanDecomposition jordan_exact(const ExactMatrix& a, const std::vector<EigenGroup>& groups) {
  const std::size_t n = a.rows();
  JordanDecomposition out;
  std::vector<ExactVector> columns;
  for (const auto& g : groups) {
    if (!g.value.exact || g.value.is_infinity()) throw InvalidArgument("jordan_exact: eigenvalue must be exact and finite");
    const ExactMatrix b = a - ExactMatrix::identity(n) * g.value.value;
    const int kmax = g.segre.empty() ? 0 : g.segre.front();
    std::vector<std::vector<ExactVector>> kernels{{}};
    ExactMatrix power = ExactMatrix::identity(n);
    for (int k = 1; k <= kmax; ++k) {
      power = power * b;
      kernels.push_back(kernel_basis(power));
    }
    struct Chain {
      ExactVector top;
      int length;
    };
    std::vector<Chain> chains;
    for (int k = kmax; k >= 1; --k) {
      std::vector<ExactVector> span = kernels[static_cast<std::size_t>(k - 1)];
      for (const auto& ch : chains) {
        ExactVector v = ch.top;
        for (int s = ch.length; s > k; --s) v = b * v;
        span.push_back(v);
      }
      std::size_t r = span_rank(span, n);
      for (const auto& u : kernels[static_cast<std::size_t>(k)]) {
        span.push_back(u);
        std::size_t r2 = span_rank(span, n);
        if (r2 > r) {
          chains.push_back({u, k});
          r = r2;
        } else {
          span.pop_back();
        }
      }
    }
    Partition found;
    for (const auto& ch : chains) found.push_back(ch.length);
    if (found != g.segre) throw Error(ErrorCode::kInternal, "jordan_exact: chain sizes disagree with segre data");
    for (const auto& ch : chains) {
      std::vector<ExactVector> col(static_cast<std::size_t>(ch.length));
      ExactVector v = ch.top;
      for (int s = ch.length - 1; s >= 0; --s) {
        col[static_cast<std::size_t>(s)] = v;
        v = b * v;
      }
      for (auto& c : col) columns.push_back(std::move(c));
      out.blocks.push_back({g.value, ch.length});
    }
  }
  if (columns.size() != n) throw Error(ErrorCode::kInternal, "jordan_exact: spectrum does not cover the matrix");
  out.s = from_columns(columns, n);
  return out;
}

namespace {

// Orthonormal basis (columns) of the kernel with a prescribed dimension.
Eigen::MatrixXcd forced_kernel(const Eigen::MatrixXcd& m, Eigen::Index dim) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(dim);
}

}  // namespace

ApproxJordanDecomposition jordan_approx(const ApproxMatrix& a_in, const std::vector<EigenGroup>& groups) {
  const Eigen::MatrixXcd a = to_eigen(a_in);
  const Eigen::Index n = a.rows();
  ApproxJordanDecomposition out;
  std::vector<Eigen::VectorXcd> columns;
  for (const auto& g : groups) {
    std::complex<double> lam = g.value.exact ? g.value.value.to_complex() : g.value.approx.value;
    Eigen::MatrixXcd b = a - lam * Eigen::MatrixXcd::Identity(n, n);
    const int kmax = g.segre.empty() ? 0 : g.segre.front();
    std::vector<Eigen::MatrixXcd> kernels{Eigen::MatrixXcd(n, 0)};
    Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 1; k <= kmax; ++k) {
      power = power * b;
      Eigen::Index dim = 0;
      for (int s : g.segre) dim += std::min(s, k);
      kernels.push_back(forced_kernel(power, dim));
    }
    struct Chain {
      Eigen::VectorXcd top;
      int length;
    };
    std::vector<Chain> chains;
    for (int k = kmax; k >= 1; --k) {
      Eigen::Index fresh = 0;
      for (int s : g.segre) fresh += (s == k);
      if (fresh == 0) continue;
      Eigen::MatrixXcd span = kernels[static_cast<std::size_t>(k - 1)];
      for (const auto& ch : chains) {
        Eigen::VectorXcd v = ch.top;
        for (int s = ch.length; s > k; --s) v = b * v;
        span.conservativeResize(n, span.cols() + 1);
        span.col(span.cols() - 1) = v;
      }
      Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(n, n);
      if (span.cols() > 0) {
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(span);
        Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, span.cols());
        proj -= q * q.adjoint();
      }
      const Eigen::MatrixXcd& kk = kernels[static_cast<std::size_t>(k)];
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(proj * kk, Eigen::ComputeFullV);
      for (Eigen::Index i = 0; i < fresh; ++i) chains.push_back({kk * svd.matrixV().col(i), k});
    }
    for (const auto& ch : chains) {
      std::vector<Eigen::VectorXcd> col(static_cast<std::size_t>(ch.length));
      Eigen::VectorXcd v = ch.top;
      for (int s = ch.length - 1; s >= 0; --s) {
        col[static_cast<std::size_t>(s)] = v;
        v = b * v;
      }
      for (auto& c : col) columns.push_back(std::move(c));
      out.blocks.push_back({g.value, ch.length});
    }
  }
  if (static_cast<Eigen::Index>(columns.size()) != n) throw IllConditioned("jordan_approx: spectrum does not cover the matrix");
  Eigen::MatrixXcd s(n, n);
  for (Eigen::Index j = 0; j < n; ++j) s.col(j) = columns[static_cast<std::size_t>(j)];
  out.s = from_eigen(s);
  return out;
}

ExactMatrix jordan_matrix(const std::vector<JordanBlock>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += static_cast<std::size_t>(b.size);
  ExactMatrix j(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.size; ++i) {
      j(at + i, at + i) = b.eigenvalue.value;
      if (i + 1 < b.size) j(at + i, at + i + 1) = 1;
    }
    at += static_cast<std::size_t>(b.size);
  }
  return j;
}

ApproxMatrix jordan_matrix_approx(const std::vector<JordanBlock>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += static_cast<std::size_t>(b.size);
  ApproxMatrix j(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    std::complex<double> v = b.eigenvalue.exact ? b.eigenvalue.value.to_complex() : b.eigenvalue.approx.value;
    for (int i = 0; i < b.size; ++i) {
      j(at + i, at + i) = v;
      if (i + 1 < b.size) j(at + i, at + i + 1) = 1.0;
    }
    at += static_cast<std::size_t>(b.size);
  }
  return j;
}

}  // namespace slocc
