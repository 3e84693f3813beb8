#pragma once

#include <Eigen/Dense>

#include "dfslab/operators.hpp"

namespace dfslab::test {

inline Eigen::MatrixXcd dense(const SparseOp& op) {
  return Eigen::MatrixXcd(op);
}

inline double max_abs_diff(const Eigen::MatrixXcd& a,
                           const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace dfslab::test
