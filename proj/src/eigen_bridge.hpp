#ifndef SLOCC_EIGEN_BRIDGE_HPP
#define SLOCC_EIGEN_BRIDGE_HPP

#include <Eigen/Dense>

#include "slocc/matrix.hpp"

namespace slocc::detail {

inline Eigen::MatrixXcd to_eigen(const ApproxMatrix& m) {
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

inline ApproxMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ApproxMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return m;
}

}  // namespace slocc::detail

#endif  // SLOCC_EIGEN_BRIDGE_HPP
