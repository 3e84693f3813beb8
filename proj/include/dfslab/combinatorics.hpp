#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dfslab {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// log2 of a positive integer, computed from its top bits so values far beyond
// double range stay accurate.
double log2_integer(const BigInt& value);

// Number of total-spin multiplets with 2S = twice_spin on K qubits:
// K!(2S+1) / ((K/2+S+1)!(K/2-S)!). twice_spin keeps half-integer spins exact
// for odd K. Each multiplet counted here carries 2S+1 states.
BigInt dicke_multiplicity(int num_qubits, int twice_spin);

// Spin-zero multiplicity K!/((K/2+1)!(K/2)!), the Catalan number C_{K/2}.
BigInt singlet_multiplicity(int num_qubits);

// log2 of singlet_multiplicity(K), from the exact integer.
double encoded_qubit_count(int num_qubits);

struct YoungDiagram {
  std::vector<int> row_lengths;  // weakly decreasing, all positive

  int total_boxes() const;
  void validate() const;  // throws std::invalid_argument
};

// Rectangular diagram of `columns` columns and two rows.
YoungDiagram two_row_diagram(int columns);

// Per-box hook lengths: boxes to the right + boxes below + 1.
std::vector<std::vector<int>> hook_lengths(const YoungDiagram& diagram);

// n! / (product of hook lengths), exact.
BigInt standard_tableaux_count(const YoungDiagram& diagram);

struct MultiplicityTable {
  int num_qubits = 0;
  std::vector<std::pair<int, BigInt>> entries;  // (twice_spin, multiplicity)

  // sum over entries of (2S+1) * multiplicity == 2^K.
  bool complete() const;
};

MultiplicityTable multiplicity_table(int num_qubits);

// Plain-text export, exact decimal integers only.
void save_multiplicity_table(const std::string& path,
                             const MultiplicityTable& table);

}  // namespace dfslab
