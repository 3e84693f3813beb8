#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace dfslab {

using Complex = std::complex<double>;
using SparseOp = Eigen::SparseMatrix<Complex>;
using DenseOp = Eigen::MatrixXcd;
using State = Eigen::VectorXcd;

// Default tolerances: kTolExact for algebraic identities whose entries are
// integers or half-integers, kTolChained for chained floating-point
// constructions. Both overridable at the call site.
inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolChained = 1e-10;

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };
enum class Axis { X, Y, Z };

inline Eigen::Index register_dim(int num_qubits) {
  return Eigen::Index{1} << num_qubits;
}

// Basis-state labeling: index encodes |e_1 ... e_K> with qubit 1 as the most
// significant bit, so qubit `site` owns bit (K - site) of the index.
inline int qubit_bit(int num_qubits, int site) { return num_qubits - site; }

State basis_state(int num_qubits, std::uint64_t index);
State normalized(State amplitudes);

SparseOp identity_op(int num_qubits);

// Operator acting as labels[k] on qubit k+1; one entry per column.
SparseOp pauli_string_operator(std::string_view labels);
SparseOp embed_single_qubit(Pauli pauli, int site, int num_qubits);

// Permutation swapping qubits i and j of every computational basis state.
SparseOp exchange_operator(int num_qubits, int i, int j);

SparseOp total_spin_operator(int num_qubits, Axis axis);
SparseOp total_spin_squared(int num_qubits);

// exp(-i theta E_ij) = cos(theta) I - i sin(theta) E_ij.
SparseOp exchange_unitary(int num_qubits, int i, int j, double theta);

SparseOp commutator(const SparseOp& a, const SparseOp& b);

// Matrix-vector product; does not renormalize.
State apply_operator(const SparseOp& op, const State& state);

// Matrix-free form of exchange_unitary for large registers.
State apply_exchange_unitary(const State& state, int num_qubits, int i, int j,
                             double theta);

bool is_hermitian(const SparseOp& op, double tol = kTolExact);
double max_abs_coeff(const SparseOp& op);
double entrywise_distance(const SparseOp& a, const SparseOp& b);

// Overlap magnitude |<a|b>|; insensitive to global phase.
double fidelity(const State& a, const State& b);

}  // namespace dfslab
