#include "slocc/matrix.hpp"

namespace slocc {

ExactMatrix conj_transpose(const ExactMatrix& m) {
  ExactMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
  return t;
}

ApproxMatrix to_approx(const ExactMatrix& m) {
  ApproxMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).to_complex();
  return a;
}

}  // namespace slocc
