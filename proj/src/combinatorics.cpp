#include "dfslab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace dfslab {

BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

double log2_integer(const BigInt& value) {
  if (value <= 0)
    throw std::domain_error("log2 requires a positive integer");
  const auto bits = boost::multiprecision::msb(value);
  const unsigned shift = bits > 52 ? bits - 52 : 0;
  const BigInt top = value >> shift;
  return static_cast<double>(shift) + std::log2(top.convert_to<double>());
}

BigInt dicke_multiplicity(int num_qubits, int twice_spin) {
  if (num_qubits < 1)
    throw std::domain_error("register size must be positive");
  if (twice_spin < 0 || twice_spin > num_qubits ||
      (num_qubits - twice_spin) % 2 != 0)
    throw std::domain_error(
        "total spin incompatible with the register size and parity");
  const int upper = (num_qubits + twice_spin) / 2 + 1;  // K/2 + S + 1
  const int lower = (num_qubits - twice_spin) / 2;      // K/2 - S
  // Always an exact division.
  return factorial(num_qubits) * (twice_spin + 1) /
         (factorial(upper) * factorial(lower));
}

BigInt singlet_multiplicity(int num_qubits) {
  if (num_qubits < 2 || num_qubits % 2 != 0)
    throw std::domain_error("singlet states require an even register size");
  return dicke_multiplicity(num_qubits, 0);
}

double encoded_qubit_count(int num_qubits) {
  return log2_integer(singlet_multiplicity(num_qubits));
}

int YoungDiagram::total_boxes() const {
  int boxes = 0;
  for (int length : row_lengths) boxes += length;
  return boxes;
}

void YoungDiagram::validate() const {
  if (row_lengths.empty())
    throw std::invalid_argument("diagram must have at least one row");
  for (std::size_t r = 0; r < row_lengths.size(); ++r) {
    if (row_lengths[r] < 1)
      throw std::invalid_argument("row lengths must be positive");
    if (r > 0 && row_lengths[r] > row_lengths[r - 1])
      throw std::invalid_argument("row lengths must be weakly decreasing");
  }
}

YoungDiagram two_row_diagram(int columns) {
  if (columns < 1)
    throw std::invalid_argument("diagram must have at least one column");
  return YoungDiagram{{columns, columns}};
}

std::vector<std::vector<int>> hook_lengths(const YoungDiagram& diagram) {
  diagram.validate();
  const auto& rows = diagram.row_lengths;

  // column_height[c]: number of rows reaching past column c
  std::vector<int> column_height(static_cast<std::size_t>(rows[0]), 0);
  for (int length : rows)
    for (int c = 0; c < length; ++c) ++column_height[static_cast<std::size_t>(c)];

  std::vector<std::vector<int>> hooks(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    hooks[r].resize(static_cast<std::size_t>(rows[r]));
    for (int c = 0; c < rows[r]; ++c) {
      const int right = rows[r] - 1 - c;
      const int below = column_height[static_cast<std::size_t>(c)] -
                        static_cast<int>(r) - 1;
      hooks[r][static_cast<std::size_t>(c)] = right + below + 1;
    }
  }
  return hooks;
}

BigInt standard_tableaux_count(const YoungDiagram& diagram) {
  const auto hooks = hook_lengths(diagram);
  BigInt product = 1;
  for (const auto& row : hooks)
    for (int hook : row) product *= hook;
  return factorial(diagram.total_boxes()) / product;
}

bool MultiplicityTable::complete() const {
  BigInt total = 0;
  for (const auto& [twice_spin, count] : entries)
    total += count * (twice_spin + 1);
  return total == BigInt{1} << num_qubits;
}

MultiplicityTable multiplicity_table(int num_qubits) {
  if (num_qubits < 1)
    throw std::domain_error("register size must be positive");
  MultiplicityTable table;
  table.num_qubits = num_qubits;
  for (int twice_spin = num_qubits % 2; twice_spin <= num_qubits;
       twice_spin += 2)
    table.entries.emplace_back(twice_spin,
                               dicke_multiplicity(num_qubits, twice_spin));
  return table;
}

void save_multiplicity_table(const std::string& path,
                             const MultiplicityTable& table) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write multiplicity table: " + path);
  out << "multiplicity-table v1\n";
  out << "num_qubits " << table.num_qubits << "\n";
  for (const auto& [twice_spin, count] : table.entries)
    out << "two_s " << twice_spin << " multiplicity " << count << "\n";
}

}  // namespace dfslab
