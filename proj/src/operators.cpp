#include "dfslab/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfslab {

namespace {

void check_register(int num_qubits) {
  if (num_qubits < 1)
    throw std::invalid_argument("register size must be positive");
}

void check_site(int num_qubits, int site) {
  check_register(num_qubits);
  if (site < 1 || site > num_qubits)
    throw std::out_of_range("qubit index " + std::to_string(site) +
                            " outside register of size " +
                            std::to_string(num_qubits));
}

void check_pair(int num_qubits, int i, int j) {
  check_site(num_qubits, i);
  check_site(num_qubits, j);
  if (i == j)
    throw std::invalid_argument("exchange requires two distinct qubits");
}

std::uint64_t swap_bits(std::uint64_t index, int bit_a, int bit_b) {
  const std::uint64_t a = (index >> bit_a) & 1;
  const std::uint64_t b = (index >> bit_b) & 1;
  if (a != b)
    index ^= (std::uint64_t{1} << bit_a) | (std::uint64_t{1} << bit_b);
  return index;
}

}  // namespace

State basis_state(int num_qubits, std::uint64_t index) {
  check_register(num_qubits);
  const Eigen::Index dim = register_dim(num_qubits);
  if (index >= static_cast<std::uint64_t>(dim))
    throw std::out_of_range("basis index exceeds register dimension");
  State state = State::Zero(dim);
  state[static_cast<Eigen::Index>(index)] = Complex{1.0, 0.0};
  return state;
}

State normalized(State amplitudes) {
  const double norm = amplitudes.norm();
  if (norm == 0.0)
    throw std::invalid_argument("cannot normalize the zero vector");
  amplitudes /= norm;
  return amplitudes;
}

SparseOp identity_op(int num_qubits) {
  check_register(num_qubits);
  const Eigen::Index dim = register_dim(num_qubits);
  SparseOp id(dim, dim);
  id.setIdentity();
  return id;
}

SparseOp pauli_string_operator(std::string_view labels) {
  const int num_qubits = static_cast<int>(labels.size());
  check_register(num_qubits);
  const Eigen::Index dim = register_dim(num_qubits);

  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index source = 0; source < dim; ++source) {
    const auto s = static_cast<std::uint64_t>(source);
    std::uint64_t target = s;
    Complex phase{1.0, 0.0};
    for (int site = 1; site <= num_qubits; ++site) {
      const int bit = qubit_bit(num_qubits, site);
      const bool one = (s >> bit) & 1;
      switch (labels[static_cast<std::size_t>(site - 1)]) {
        case 'I':
          break;
        case 'X':
          target ^= std::uint64_t{1} << bit;
          break;
        case 'Y':
          target ^= std::uint64_t{1} << bit;
          phase *= one ? Complex{0.0, -1.0} : Complex{0.0, 1.0};
          break;
        case 'Z':
          if (one) phase = -phase;
          break;
        default:
          throw std::invalid_argument("Pauli label must be one of I, X, Y, Z");
      }
    }
    entries.emplace_back(static_cast<Eigen::Index>(target), source, phase);
  }

  SparseOp op(dim, dim);
  op.setFromTriplets(entries.begin(), entries.end());
  return op;
}

SparseOp embed_single_qubit(Pauli pauli, int site, int num_qubits) {
  check_site(num_qubits, site);
  std::string labels(static_cast<std::size_t>(num_qubits), 'I');
  labels[static_cast<std::size_t>(site - 1)] = static_cast<char>(pauli);
  return pauli_string_operator(labels);
}

SparseOp exchange_operator(int num_qubits, int i, int j) {
  check_pair(num_qubits, i, j);
  const Eigen::Index dim = register_dim(num_qubits);
  const int bit_i = qubit_bit(num_qubits, i);
  const int bit_j = qubit_bit(num_qubits, j);

  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index source = 0; source < dim; ++source) {
    const auto target =
        swap_bits(static_cast<std::uint64_t>(source), bit_i, bit_j);
    entries.emplace_back(static_cast<Eigen::Index>(target), source,
                         Complex{1.0, 0.0});
  }

  SparseOp op(dim, dim);
  op.setFromTriplets(entries.begin(), entries.end());
  return op;
}

SparseOp total_spin_operator(int num_qubits, Axis axis) {
  check_register(num_qubits);
  const Eigen::Index dim = register_dim(num_qubits);

  std::vector<Eigen::Triplet<Complex>> entries;
  entries.reserve(static_cast<std::size_t>(dim) * num_qubits);
  for (int site = 1; site <= num_qubits; ++site) {
    const std::uint64_t mask = std::uint64_t{1}
                               << qubit_bit(num_qubits, site);
    for (Eigen::Index source = 0; source < dim; ++source) {
      const bool one = static_cast<std::uint64_t>(source) & mask;
      switch (axis) {
        case Axis::X:
          entries.emplace_back(source ^ static_cast<Eigen::Index>(mask),
                               source, Complex{1.0, 0.0});
          break;
        case Axis::Y:
          entries.emplace_back(source ^ static_cast<Eigen::Index>(mask),
                               source,
                               one ? Complex{0.0, -1.0} : Complex{0.0, 1.0});
          break;
        case Axis::Z:
          entries.emplace_back(source, source,
                               Complex{one ? -1.0 : 1.0, 0.0});
          break;
      }
    }
  }

  SparseOp op(dim, dim);
  op.setFromTriplets(entries.begin(), entries.end());
  return op;
}

SparseOp total_spin_squared(int num_qubits) {
  const SparseOp sx = total_spin_operator(num_qubits, Axis::X);
  const SparseOp sy = total_spin_operator(num_qubits, Axis::Y);
  const SparseOp sz = total_spin_operator(num_qubits, Axis::Z);
  SparseOp squared = SparseOp(sx * sx) + SparseOp(sy * sy);
  squared += SparseOp(sz * sz);
  return squared;
}

SparseOp exchange_unitary(int num_qubits, int i, int j, double theta) {
  check_pair(num_qubits, i, j);
  SparseOp unitary = Complex{std::cos(theta), 0.0} * identity_op(num_qubits);
  unitary += Complex{0.0, -std::sin(theta)} * exchange_operator(num_qubits, i, j);
  return unitary;
}

SparseOp commutator(const SparseOp& a, const SparseOp& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("commutator requires matching dimensions");
  const SparseOp ab = a * b;
  const SparseOp ba = b * a;
  return ab - ba;
}

State apply_operator(const SparseOp& op, const State& state) {
  if (op.cols() != state.size())
    throw std::invalid_argument("operator and state dimensions do not match");
  return op * state;
}

State apply_exchange_unitary(const State& state, int num_qubits, int i, int j,
                             double theta) {
  check_pair(num_qubits, i, j);
  const Eigen::Index dim = register_dim(num_qubits);
  if (state.size() != dim)
    throw std::invalid_argument("state dimension does not match the register");

  const Complex cos_term{std::cos(theta), 0.0};
  const Complex swap_term{0.0, -std::sin(theta)};
  const int bit_i = qubit_bit(num_qubits, i);
  const int bit_j = qubit_bit(num_qubits, j);

  State result(dim);
  for (Eigen::Index index = 0; index < dim; ++index) {
    const auto swapped = static_cast<Eigen::Index>(
        swap_bits(static_cast<std::uint64_t>(index), bit_i, bit_j));
    result[index] = cos_term * state[index] + swap_term * state[swapped];
  }
  return result;
}

bool is_hermitian(const SparseOp& op, double tol) {
  if (op.rows() != op.cols()) return false;
  const SparseOp adjoint = op.adjoint();
  return entrywise_distance(op, adjoint) <= tol;
}

double max_abs_coeff(const SparseOp& op) {
  double result = 0.0;
  for (int outer = 0; outer < op.outerSize(); ++outer)
    for (SparseOp::InnerIterator it(op, outer); it; ++it)
      result = std::max(result, std::abs(it.value()));
  return result;
}

double entrywise_distance(const SparseOp& a, const SparseOp& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("entrywise_distance requires equal shapes");
  const SparseOp difference = a - b;
  return max_abs_coeff(difference);
}

double fidelity(const State& a, const State& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("fidelity requires equal dimensions");
  return std::abs(a.dot(b));
}

}  // namespace dfslab
