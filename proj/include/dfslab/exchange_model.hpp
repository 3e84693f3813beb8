#pragma once

#include <string>

#include <Eigen/Dense>

#include "dfslab/operators.hpp"

namespace dfslab {

// Symmetric pair couplings J_ij in angular-frequency units (hbar = 1); the
// evolution angle accumulated by a pair over time t is theta = J_ij * t.
struct ExchangeModel {
  int num_qubits = 0;
  Eigen::MatrixXd couplings;  // K x K, symmetric, zero diagonal

  void validate() const;  // throws std::invalid_argument on violation
};

// J_ij = total_coupling / K for every pair.
ExchangeModel uniform_exchange_model(int num_qubits, double total_coupling);

// JSON document with fields `num_qubits` and `couplings` (K x K array).
// Symmetry and the zero diagonal are checked bit-exactly on the parsed values.
ExchangeModel load_exchange_model(const std::string& path);
void save_exchange_model(const std::string& path, const ExchangeModel& model);

// H = (1/2) sum over unordered pairs of J_ij E_ij.
SparseOp exchange_hamiltonian(const ExchangeModel& model);

}  // namespace dfslab
