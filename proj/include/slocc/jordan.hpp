#ifndef SLOCC_JORDAN_HPP
#define SLOCC_JORDAN_HPP

#include <complex>
#include <vector>

#include "slocc/exact_linalg.hpp"
#include "slocc/pencil_analysis.hpp"

namespace slocc {

struct JordanBlock {
  ProjPoint eigenvalue;  // always finite
  int size = 1;
};

/// S with S^{-1} A S = J(blocks).
struct JordanDecomposition {
  ExactMatrix s;
  std::vector<JordanBlock> blocks;
};

struct ApproxJordanDecomposition {
  ApproxMatrix s;
  std::vector<JordanBlock> blocks;
};

/// Eigenvalue groups in the order their blocks should appear; blocks of one
/// eigenvalue are ordered by decreasing size.
struct EigenGroup {
  ProjPoint value;
  Partition segre;
};

/// Exact Jordan chains. Throws Error(kInternal) if the chain sizes found
/// disagree with the announced Segre data.
JordanDecomposition jordan_exact(const ExactMatrix& a, const std::vector<EigenGroup>& groups);
/// Floating-point Jordan basis guided by known Segre data.
ApproxJordanDecomposition jordan_approx(const ApproxMatrix& a, const std::vector<EigenGroup>& groups);

ExactMatrix jordan_matrix(const std::vector<JordanBlock>& blocks);
ApproxMatrix jordan_matrix_approx(const std::vector<JordanBlock>& blocks);

}  // namespace slocc

#endif  // SLOCC_JORDAN_HPP
