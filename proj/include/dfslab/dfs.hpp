#pragma once

#include <string>

#include "dfslab/exchange_model.hpp"
#include "dfslab/operators.hpp"

namespace dfslab {

// Orthonormal basis of the singlet sector of a K-qubit register: the states
// annihilated by all three total spin operators, hence untouched by any
// collective system-bath coupling.
struct DfsBasis {
  int num_qubits = 0;
  Eigen::MatrixXcd vectors;  // 2^K x d, orthonormal columns

  Eigen::Index dimension() const { return vectors.cols(); }
};

// Kernel of the total-spin-squared operator, restricted to the S_z = 0 sector
// where all singlets live. For K = 4 the computed kernel is replaced by the
// closed-form pair below (after a span check), so projections are reproduced
// in that fixed basis. Throws std::domain_error for odd K.
DfsBasis dfs_basis(int num_qubits);

// Closed-form K = 4 basis states:
//   |0~> = (|0110> + |1001> - |1010> - |0101>) / 2
//   |1~> = (2|0011> + 2|1100> - |0110> - |1001> - |1010> - |0101>) / (2 sqrt 3)
State dfs_logical_zero_k4();
State dfs_logical_one_k4();

// Max over basis vectors v and axes of ||S_alpha v||.
double check_dfs_condition(const DfsBasis& basis);

// Matrix of <v_r| op |v_c> in the basis ordering.
DenseOp project_operator(const SparseOp& op, const DfsBasis& basis);

struct InvarianceReport {
  bool invariant = false;
  double leakage = 0.0;  // ||(I - P) op P||_F, P the basis projector
};
InvarianceReport check_invariance(const SparseOp& op, const DfsBasis& basis,
                                  double tol = kTolExact);

struct PauliCoefficients {
  Complex identity;
  Complex x;
  Complex y;
  Complex z;
};

// Unique expansion of a 2x2 encoded operator over {I, X, Y, Z} via trace
// inner products. Throws std::invalid_argument unless the dimension is 2.
PauliCoefficients encoded_pauli_decomposition(const DenseOp& encoded);

struct ConstantJReport {
  int num_qubits = 0;
  double coupling = 0.0;           // J
  double per_pair_coupling = 0.0;  // J/K, applied to every pair
  double nu = 0.0;                 // (J/K)(K^2 - 4K)/8
  double identity_residual = 0.0;  // entrywise, H vs (J/8K)[(K^2-4K)I + S^2]
  double eigenvalue_residual = 0.0;  // max over basis vectors ||H v - nu v||
  bool phase_only = false;
};

// Uniform couplings J_ij = J/K: the exchange Hamiltonian reduces to a
// multiple of identity plus S^2, so the whole singlet sector only picks up
// the global phase exp(-i nu t).
ConstantJReport verify_constant_j(int num_qubits, double coupling,
                                  double tol = kTolChained);

// Text export: K, dimension, then one (bitstring, real, imag) line per
// nonzero amplitude at 17 significant digits, enough for bit-faithful reload.
void save_dfs_basis(const std::string& path, const DfsBasis& basis);
DfsBasis load_dfs_basis(const std::string& path);

}  // namespace dfslab
