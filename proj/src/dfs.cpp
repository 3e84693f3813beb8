#include "dfslab/dfs.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dfslab {

namespace {

Eigen::Index dominant_index(const Eigen::VectorXd& v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double a = std::abs(v[k]);
    if (a > best_abs + 1e-12) {
      best_abs = a;
      best = k;
    }
  }
  return best;
}

std::string index_bits(std::uint64_t index, int num_qubits) {
  std::string bits(static_cast<std::size_t>(num_qubits), '0');
  for (int site = 1; site <= num_qubits; ++site)
    if ((index >> qubit_bit(num_qubits, site)) & 1)
      bits[static_cast<std::size_t>(site - 1)] = '1';
  return bits;
}

}  // namespace

State dfs_logical_zero_k4() {
  State v = State::Zero(16);
  v[0b0110] = 0.5;
  v[0b1001] = 0.5;
  v[0b1010] = -0.5;
  v[0b0101] = -0.5;
  return v;
}

State dfs_logical_one_k4() {
  State v = State::Zero(16);
  const double unit = 1.0 / (2.0 * std::sqrt(3.0));
  v[0b0011] = 2.0 * unit;
  v[0b1100] = 2.0 * unit;
  v[0b0110] = -unit;
  v[0b1001] = -unit;
  v[0b1010] = -unit;
  v[0b0101] = -unit;
  return v;
}

DfsBasis dfs_basis(int num_qubits) {
  if (num_qubits < 2 || num_qubits % 2 != 0)
    throw std::domain_error(
        "singlet basis requires an even register size of at least 2");

  const Eigen::Index dim = register_dim(num_qubits);

  // Singlets all have S_z = 0, so the kernel search can run inside the
  // balanced-popcount sector.
  std::vector<Eigen::Index> sector;
  std::vector<Eigen::Index> position(static_cast<std::size_t>(dim), -1);
  for (Eigen::Index index = 0; index < dim; ++index) {
    if (std::popcount(static_cast<std::uint64_t>(index)) == num_qubits / 2) {
      position[static_cast<std::size_t>(index)] =
          static_cast<Eigen::Index>(sector.size());
      sector.push_back(index);
    }
  }
  const auto sector_size = static_cast<Eigen::Index>(sector.size());

  // S^2 is real symmetric in the computational basis.
  const SparseOp spin_squared = total_spin_squared(num_qubits);
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(sector_size, sector_size);
  for (Eigen::Index c = 0; c < sector_size; ++c)
    for (SparseOp::InnerIterator it(spin_squared, sector[c]); it; ++it) {
      const Eigen::Index r = position[static_cast<std::size_t>(it.row())];
      if (r >= 0) block(r, c) = it.value().real();
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition of S^2 failed");

  // S^2 eigenvalues are 2S(2S+2) >= 8 outside the kernel, so the threshold
  // has a wide margin.
  constexpr double kKernelThreshold = 1e-8;
  std::vector<Eigen::Index> kernel_columns;
  for (Eigen::Index k = 0; k < sector_size; ++k)
    if (solver.eigenvalues()[k] < kKernelThreshold) kernel_columns.push_back(k);

  // Deterministic ordering: sort by dominant computational basis index, then
  // fix each sign so the first significant amplitude is positive.
  std::vector<Eigen::VectorXd> kernel;
  kernel.reserve(kernel_columns.size());
  for (Eigen::Index column : kernel_columns)
    kernel.push_back(solver.eigenvectors().col(column));
  std::vector<Eigen::Index> dominant(kernel.size());
  for (std::size_t v = 0; v < kernel.size(); ++v)
    dominant[v] = sector[static_cast<std::size_t>(dominant_index(kernel[v]))];
  std::vector<std::size_t> order(kernel.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return dominant[a] < dominant[b];
                   });

  DfsBasis basis;
  basis.num_qubits = num_qubits;
  basis.vectors = Eigen::MatrixXcd::Zero(
      dim, static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t slot = 0; slot < order.size(); ++slot) {
    Eigen::VectorXd v = kernel[order[slot]];
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (std::abs(v[k]) > 1e-10) {
        if (v[k] < 0.0) v = -v;
        break;
      }
    }
    for (Eigen::Index k = 0; k < v.size(); ++k)
      basis.vectors(sector[static_cast<std::size_t>(k)],
                    static_cast<Eigen::Index>(slot)) = v[k];
  }

  if (num_qubits == 4) {
    // Swap in the closed-form pair so encoded operators come out in the
    // canonical basis; the computed kernel must already span it.
    const State zero = dfs_logical_zero_k4();
    const State one = dfs_logical_one_k4();
    for (const State& w : {zero, one}) {
      const State residual =
          w - basis.vectors * (basis.vectors.adjoint() * w);
      if (residual.norm() > 1e-10)
        throw std::runtime_error(
            "computed singlet kernel does not span the closed-form basis");
    }
    basis.vectors.col(0) = zero;
    basis.vectors.col(1) = one;
  }

  return basis;
}

double check_dfs_condition(const DfsBasis& basis) {
  double residual = 0.0;
  for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
    const SparseOp spin = total_spin_operator(basis.num_qubits, axis);
    for (Eigen::Index c = 0; c < basis.dimension(); ++c) {
      const State image = spin * State(basis.vectors.col(c));
      residual = std::max(residual, image.norm());
    }
  }
  return residual;
}

DenseOp project_operator(const SparseOp& op, const DfsBasis& basis) {
  if (op.rows() != basis.vectors.rows() || op.cols() != basis.vectors.rows())
    throw std::invalid_argument(
        "operator dimension does not match the basis register");
  return basis.vectors.adjoint() * (op * basis.vectors);
}

InvarianceReport check_invariance(const SparseOp& op, const DfsBasis& basis,
                                  double tol) {
  if (op.rows() != basis.vectors.rows() || op.cols() != basis.vectors.rows())
    throw std::invalid_argument(
        "operator dimension does not match the basis register");
  const Eigen::MatrixXcd image = op * basis.vectors;
  const Eigen::MatrixXcd outside =
      image - basis.vectors * (basis.vectors.adjoint() * image);
  const double leakage = outside.norm();
  return InvarianceReport{leakage < tol, leakage};
}

PauliCoefficients encoded_pauli_decomposition(const DenseOp& encoded) {
  if (encoded.rows() != 2 || encoded.cols() != 2)
    throw std::invalid_argument(
        "Pauli decomposition is defined for two-dimensional encoded "
        "operators only");
  PauliCoefficients c;
  c.identity = 0.5 * (encoded(0, 0) + encoded(1, 1));
  c.z = 0.5 * (encoded(0, 0) - encoded(1, 1));
  c.x = 0.5 * (encoded(0, 1) + encoded(1, 0));
  c.y = 0.5 * Complex{0.0, 1.0} * (encoded(0, 1) - encoded(1, 0));
  return c;
}

ConstantJReport verify_constant_j(int num_qubits, double coupling,
                                  double tol) {
  ConstantJReport report;
  report.num_qubits = num_qubits;
  report.coupling = coupling;
  report.per_pair_coupling = coupling / num_qubits;
  report.nu = report.per_pair_coupling *
              (num_qubits * num_qubits - 4.0 * num_qubits) / 8.0;

  const SparseOp hamiltonian =
      exchange_hamiltonian(uniform_exchange_model(num_qubits, coupling));

  const double prefactor = coupling / (8.0 * num_qubits);
  const double shift = num_qubits * num_qubits - 4.0 * num_qubits;
  SparseOp closed_form = Complex{prefactor * shift, 0.0} * identity_op(num_qubits);
  closed_form += Complex{prefactor, 0.0} * total_spin_squared(num_qubits);
  report.identity_residual = entrywise_distance(hamiltonian, closed_form);

  const DfsBasis basis = dfs_basis(num_qubits);
  double eigenvalue_residual = 0.0;
  for (Eigen::Index c = 0; c < basis.dimension(); ++c) {
    const State v = basis.vectors.col(c);
    const State image = hamiltonian * v;
    eigenvalue_residual =
        std::max(eigenvalue_residual, (image - report.nu * v).norm());
  }
  report.eigenvalue_residual = eigenvalue_residual;

  report.phase_only =
      report.identity_residual < tol && report.eigenvalue_residual < tol;
  return report;
}

void save_dfs_basis(const std::string& path, const DfsBasis& basis) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write basis file: " + path);
  out << "dfslab-basis v1\n";
  out << "num_qubits " << basis.num_qubits << "\n";
  out << "dimension " << basis.dimension() << "\n";
  char buffer[64];
  for (Eigen::Index c = 0; c < basis.dimension(); ++c) {
    out << "vector " << c << "\n";
    for (Eigen::Index r = 0; r < basis.vectors.rows(); ++r) {
      const Complex amplitude = basis.vectors(r, c);
      if (amplitude == Complex{0.0, 0.0}) continue;
      std::snprintf(buffer, sizeof buffer, "%.16e %.16e", amplitude.real(),
                    amplitude.imag());
      out << index_bits(static_cast<std::uint64_t>(r), basis.num_qubits) << ' '
          << buffer << "\n";
    }
  }
  out << "end\n";
}

DfsBasis load_dfs_basis(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open basis file: " + path);

  std::string header;
  std::getline(in, header);
  if (header != "dfslab-basis v1")
    throw std::runtime_error("unrecognized basis file header: " + header);

  std::string keyword;
  int num_qubits = 0;
  Eigen::Index dimension = 0;
  in >> keyword >> num_qubits;
  if (keyword != "num_qubits")
    throw std::runtime_error("malformed basis file: expected num_qubits");
  in >> keyword >> dimension;
  if (keyword != "dimension")
    throw std::runtime_error("malformed basis file: expected dimension");

  DfsBasis basis;
  basis.num_qubits = num_qubits;
  basis.vectors =
      Eigen::MatrixXcd::Zero(register_dim(num_qubits), dimension);

  Eigen::Index column = -1;
  std::string token;
  while (in >> token) {
    if (token == "end") break;
    if (token == "vector") {
      in >> column;
      continue;
    }
    if (column < 0 || column >= dimension)
      throw std::runtime_error("malformed basis file: amplitude before vector");
    double re = 0.0, im = 0.0;
    in >> re >> im;
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < token.size(); ++k)
      if (token[k] == '1')
        index |= std::uint64_t{1} << qubit_bit(num_qubits, static_cast<int>(k) + 1);
    basis.vectors(static_cast<Eigen::Index>(index), column) = Complex{re, im};
  }
  return basis;
}

}  // namespace dfslab
