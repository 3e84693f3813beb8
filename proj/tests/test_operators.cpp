#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dfslab/exchange_model.hpp"
#include "dfslab/operators.hpp"
#include "helpers.hpp"

using namespace dfslab;
using dfslab::test::dense;
using dfslab::test::max_abs_diff;

TEST_CASE("single-qubit embeddings") {
  Eigen::MatrixXcd z1(2, 2);
  z1 << 1, 0, 0, -1;
  CHECK(max_abs_diff(dense(embed_single_qubit(Pauli::Z, 1, 1)), z1) == 0.0);

  const State flipped = apply_operator(embed_single_qubit(Pauli::X, 2, 2), basis_state(2, 0b00));
  CHECK((flipped - basis_state(2, 0b01)).norm() == 0.0);

  const State rotated = apply_operator(embed_single_qubit(Pauli::Y, 1, 2), basis_state(2, 0b00));
  CHECK((rotated - Complex{0.0, 1.0} * basis_state(2, 0b10)).norm() == 0.0);

  CHECK_THROWS_AS(embed_single_qubit(Pauli::X, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(embed_single_qubit(Pauli::X, 3, 2), std::out_of_range);
}

TEST_CASE("qubit 1 is the most significant bit") {
  const State state = basis_state(2, 0b10);  // |10>
  const State z1 = apply_operator(embed_single_qubit(Pauli::Z, 1, 2), state);
  const State z2 = apply_operator(embed_single_qubit(Pauli::Z, 2, 2), state);
  CHECK((z1 + state).norm() == 0.0);
  CHECK((z2 - state).norm() == 0.0);
}

TEST_CASE("pauli string operator") {
  const State image = apply_operator(pauli_string_operator("XY"), basis_state(2, 0b00));
  CHECK((image - Complex{0.0, 1.0} * basis_state(2, 0b11)).norm() == 0.0);
  CHECK_THROWS_AS(pauli_string_operator("XQ"), std::invalid_argument);
}

TEST_CASE("exchange operator swaps basis labels") {
  const State swapped = apply_operator(exchange_operator(2, 1, 2), basis_state(2, 0b01));
  CHECK((swapped - basis_state(2, 0b10)).norm() == 0.0);

  const SparseOp swap23 = exchange_operator(4, 2, 3);
  CHECK(entrywise_distance(SparseOp(swap23 * swap23), identity_op(4)) == 0.0);

  CHECK_THROWS_AS(exchange_operator(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(exchange_operator(2, 1, 3), std::out_of_range);

  const SparseOp swap13 = exchange_operator(3, 1, 3);
  CHECK(swap13.nonZeros() == 8);
  CHECK(max_abs_coeff(swap13) == 1.0);
}

TEST_CASE("exchange equals half identity plus the Pauli dot product") {
  for (int k = 2; k <= 6; ++k) {
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        SparseOp combination = identity_op(k);
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
          combination += SparseOp(embed_single_qubit(p, i, k) *
                                  embed_single_qubit(p, j, k));
        CHECK(entrywise_distance(exchange_operator(k, i, j),
                                 0.5 * combination) <= 1e-14);
      }
    }
  }
}

TEST_CASE("exchange operators are involutions") {
  for (int k = 2; k <= 6; ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        const SparseOp swap = exchange_operator(k, i, j);
        CHECK(entrywise_distance(SparseOp(swap * swap), identity_op(k)) == 0.0);
      }
}

TEST_CASE("total spin operators") {
  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  CHECK(max_abs_diff(dense(total_spin_operator(1, Axis::Z)), z) == 0.0);

  State singlet = State::Zero(4);
  singlet[0b01] = 1.0 / std::sqrt(2.0);
  singlet[0b10] = -1.0 / std::sqrt(2.0);
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z})
    CHECK(apply_operator(total_spin_operator(2, axis), singlet).norm() <= 1e-15);

  const Complex two_i{0.0, 2.0};
  const SparseOp residual =
      commutator(total_spin_operator(3, Axis::X), total_spin_operator(3, Axis::Y)) -
      SparseOp(two_i * total_spin_operator(3, Axis::Z));
  CHECK(max_abs_coeff(residual) <= 1e-12);
}

TEST_CASE("su2 commutators hold through K=6") {
  const Complex two_i{0.0, 2.0};
  const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};
  for (int k = 1; k <= 6; ++k) {
    for (int c = 0; c < 3; ++c) {
      const SparseOp lhs = commutator(total_spin_operator(k, axes[c]),
                                      total_spin_operator(k, axes[(c + 1) % 3]));
      const SparseOp rhs = two_i * total_spin_operator(k, axes[(c + 2) % 3]);
      CHECK(entrywise_distance(lhs, rhs) <= 1e-12);
    }
  }
}

TEST_CASE("total spin squared") {
  // Independent route for K=1: the dense spectrum of the sum of squares.
  const Eigen::MatrixXcd s2_dense = dense(total_spin_squared(1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(s2_dense);
  for (Eigen::Index k = 0; k < 2; ++k)
    CHECK(solver.eigenvalues()[k] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(max_abs_diff(s2_dense, 3.0 * Eigen::MatrixXcd::Identity(2, 2)) <= 1e-15);

  State singlet = State::Zero(4);
  singlet[0b01] = 1.0 / std::sqrt(2.0);
  singlet[0b10] = -1.0 / std::sqrt(2.0);
  CHECK(apply_operator(total_spin_squared(2), singlet).norm() <= 1e-15);

  // S^2 = 3K I + 2 sum over pairs of the two-site Pauli dot product.
  const int k = 3;
  SparseOp rhs = Complex{3.0 * k, 0.0} * identity_op(k);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
        rhs += SparseOp(Complex{2.0, 0.0} *
                        SparseOp(embed_single_qubit(p, i, k) *
                                 embed_single_qubit(p, j, k)));
  CHECK(entrywise_distance(total_spin_squared(k), rhs) <= 1e-12);

  CHECK(is_hermitian(total_spin_squared(3)));
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z})
    CHECK(is_hermitian(total_spin_operator(3, axis)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> spectrum(dense(total_spin_squared(3)));
  CHECK(spectrum.eigenvalues().minCoeff() >= -1e-12);
}

TEST_CASE("exchange hamiltonian") {
  ExchangeModel silent{3, Eigen::MatrixXd::Zero(3, 3)};
  CHECK(exchange_hamiltonian(silent).norm() == 0.0);

  // Single coupled pair: the unordered pair sum leaves half the coupling on
  // the lone swap, the normalization the uniform-coupling identity pins.
  ExchangeModel pair{2, Eigen::MatrixXd::Zero(2, 2)};
  pair.couplings(0, 1) = pair.couplings(1, 0) = 1.0;
  CHECK(entrywise_distance(exchange_hamiltonian(pair),
                           0.5 * exchange_operator(2, 1, 2)) == 0.0);

  const int k = 4;
  const double coupling = 1.0;
  const SparseOp hamiltonian =
      exchange_hamiltonian(uniform_exchange_model(k, coupling));
  const double prefactor = coupling / (8.0 * k);
  SparseOp closed = Complex{prefactor * (k * k - 4.0 * k), 0.0} * identity_op(k);
  closed += Complex{prefactor, 0.0} * total_spin_squared(k);
  CHECK(entrywise_distance(hamiltonian, closed) <= 1e-15);
}

TEST_CASE("random exchange hamiltonians are Hermitian") {
  std::mt19937 gen(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int k : {3, 4, 5}) {
    ExchangeModel model{k, Eigen::MatrixXd::Zero(k, k)};
    for (int r = 0; r < k; ++r)
      for (int c = r + 1; c < k; ++c)
        model.couplings(r, c) = model.couplings(c, r) = dist(gen);
    CHECK(is_hermitian(exchange_hamiltonian(model)));
  }
}

TEST_CASE("exchange model validation") {
  ExchangeModel asymmetric{2, Eigen::MatrixXd::Zero(2, 2)};
  asymmetric.couplings(0, 1) = 1.0;
  CHECK_THROWS_AS(asymmetric.validate(), std::invalid_argument);

  ExchangeModel diagonal{2, Eigen::MatrixXd::Identity(2, 2)};
  CHECK_THROWS_AS(diagonal.validate(), std::invalid_argument);
}

TEST_CASE("exchange unitary") {
  CHECK(entrywise_distance(exchange_unitary(3, 1, 2, 0.0), identity_op(3)) == 0.0);

  const SparseOp quarter = exchange_unitary(3, 1, 2, std::numbers::pi / 2.0);
  const SparseOp minus_i_swap =
      Complex{0.0, -1.0} * exchange_operator(3, 1, 2);
  CHECK(entrywise_distance(quarter, minus_i_swap) <= 1e-15);

  // Dense eigendecomposition oracle for a generic angle.
  const double theta = 0.7;
  const Eigen::MatrixXcd swap_dense = dense(exchange_operator(4, 1, 3));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(swap_dense);
  Eigen::VectorXcd phases(solver.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases[k] = std::exp(Complex{0.0, -theta * solver.eigenvalues()[k]});
  const Eigen::MatrixXcd expected = solver.eigenvectors() *
                                    phases.asDiagonal() *
                                    solver.eigenvectors().adjoint();
  CHECK(max_abs_diff(dense(exchange_unitary(4, 1, 3, theta)), expected) <= 1e-12);

  for (double angle : {0.3, 1.1, 2.9}) {
    const SparseOp forward = exchange_unitary(4, 2, 4, angle);
    const SparseOp backward = exchange_unitary(4, 2, 4, -angle);
    CHECK(entrywise_distance(SparseOp(forward * backward), identity_op(4)) <= 1e-12);
    const SparseOp adjoint = forward.adjoint();
    CHECK(entrywise_distance(SparseOp(forward * adjoint), identity_op(4)) <= 1e-12);
  }
}

TEST_CASE("commutators") {
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z})
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        CHECK(commutator(total_spin_operator(4, axis),
                         exchange_operator(4, i, j)).norm() <= 1e-12);

  const Complex two_i{0.0, 2.0};
  CHECK(entrywise_distance(commutator(total_spin_operator(2, Axis::X),
                                      total_spin_operator(2, Axis::Y)),
                           SparseOp(two_i * total_spin_operator(2, Axis::Z))) <= 1e-12);

  const SparseOp any = exchange_hamiltonian(uniform_exchange_model(3, 1.7));
  CHECK(commutator(any, any).norm() == 0.0);

  CHECK_THROWS_AS(commutator(identity_op(2), identity_op(3)),
                  std::invalid_argument);
}

TEST_CASE("apply") {
  const State plus = normalized(basis_state(2, 0) + basis_state(2, 3));
  CHECK((apply_operator(identity_op(2), plus) - plus).norm() == 0.0);

  CHECK((apply_operator(exchange_operator(2, 1, 2), basis_state(2, 0b01)) -
         basis_state(2, 0b10)).norm() == 0.0);

  const State up = basis_state(2, 0b00);
  CHECK((apply_operator(total_spin_operator(2, Axis::Z), up) - 2.0 * up).norm() == 0.0);

  CHECK_THROWS_AS(apply_operator(identity_op(2), basis_state(3, 0)),
                  std::invalid_argument);
}

TEST_CASE("matrix-free exchange unitary matches the sparse operator") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  State state(16);
  for (Eigen::Index k = 0; k < state.size(); ++k)
    state[k] = Complex{dist(gen), dist(gen)};
  state = normalized(state);

  const double theta = 0.9;
  const State via_op = apply_operator(exchange_unitary(4, 2, 3, theta), state);
  const State direct = apply_exchange_unitary(state, 4, 2, 3, theta);
  CHECK((via_op - direct).norm() <= 1e-14);
}

TEST_CASE("normalization") {
  State raw = State::Zero(4);
  raw[1] = Complex{3.0, 4.0};
  CHECK(std::abs(normalized(raw).norm() - 1.0) <= 1e-12);
  CHECK_THROWS_AS(normalized(State::Zero(4)), std::invalid_argument);
  CHECK_THROWS_AS(basis_state(2, 4), std::out_of_range);
}
