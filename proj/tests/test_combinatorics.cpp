#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "dfslab/combinatorics.hpp"
#include "dfslab/operators.hpp"
#include "helpers.hpp"

using namespace dfslab;

namespace {

// All partitions of n as weakly decreasing rows.
void partitions_into(int remaining, int cap, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    current.push_back(next);
    partitions_into(remaining - next, next, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  partitions_into(n, n, current, out);
  return out;
}

}  // namespace

TEST_CASE("multiplet multiplicities") {
  CHECK(dicke_multiplicity(4, 0) == 2);
  CHECK(dicke_multiplicity(2, 0) == 1);
  CHECK(dicke_multiplicity(1, 1) == 1);

  CHECK_THROWS_AS(dicke_multiplicity(4, 1), std::domain_error);
  CHECK_THROWS_AS(dicke_multiplicity(4, 6), std::domain_error);
  CHECK_THROWS_AS(dicke_multiplicity(3, 2), std::domain_error);
}

TEST_CASE("spin-2 multiplicity on four qubits matches the spectrum") {
  // With S_alpha built from +-1 Paulis a spin-s multiplet sits at S^2
  // eigenvalue 4s(s+1); count the spin-2 states on 16 dimensions.
  const Eigen::MatrixXcd s2 = Eigen::MatrixXcd(total_spin_squared(4));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(s2);
  int spin2_states = 0;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
    if (std::abs(solver.eigenvalues()[k] - 24.0) < 1e-8) ++spin2_states;
  CHECK(spin2_states == 5);  // one multiplet of 2S+1 = 5 states
  CHECK(dicke_multiplicity(4, 4) == 1);
}

TEST_CASE("singlet multiplicities") {
  CHECK(singlet_multiplicity(4) == 2);
  CHECK(singlet_multiplicity(6) == 5);
  CHECK(singlet_multiplicity(8) == 14);
  CHECK_THROWS_AS(singlet_multiplicity(5), std::domain_error);
}

TEST_CASE("hook lengths") {
  const auto square = hook_lengths(two_row_diagram(2));
  REQUIRE(square.size() == 2);
  CHECK(square[0] == std::vector<int>{3, 2});
  CHECK(square[1] == std::vector<int>{2, 1});

  const auto row = hook_lengths(YoungDiagram{{4}});
  CHECK(row[0] == std::vector<int>{4, 3, 2, 1});

  const auto box = hook_lengths(YoungDiagram{{1}});
  CHECK(box[0] == std::vector<int>{1});

  // Two-row rectangles: top row (c+1, c, ..., 2), bottom row (c, ..., 1).
  const auto wide = hook_lengths(two_row_diagram(5));
  CHECK(wide[0] == std::vector<int>{6, 5, 4, 3, 2});
  CHECK(wide[1] == std::vector<int>{5, 4, 3, 2, 1});

  CHECK_THROWS_AS(hook_lengths(YoungDiagram{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(hook_lengths(YoungDiagram{{}}), std::invalid_argument);
}

TEST_CASE("standard tableaux counts") {
  CHECK(standard_tableaux_count(two_row_diagram(2)) == 2);
  CHECK(standard_tableaux_count(YoungDiagram{{6}}) == 1);
  CHECK(standard_tableaux_count(two_row_diagram(3)) == 5);
  CHECK(standard_tableaux_count(two_row_diagram(3)) == singlet_multiplicity(6));
}

TEST_CASE("squared tableaux counts sum to the group order") {
  for (int n = 1; n <= 8; ++n) {
    BigInt total = 0;
    for (const auto& rows : partitions(n)) {
      const BigInt count = standard_tableaux_count(YoungDiagram{rows});
      total += count * count;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("two-row counts agree with both multiplicity formulas") {
  for (int k = 2; k <= 40; k += 2) {
    const BigInt s = singlet_multiplicity(k);
    CHECK(s == standard_tableaux_count(two_row_diagram(k / 2)));
    CHECK(s == dicke_multiplicity(k, 0));
  }
}

TEST_CASE("multiplet counts are complete") {
  for (int k = 1; k <= 40; ++k) {
    const MultiplicityTable table = multiplicity_table(k);
    CHECK(table.complete());
    BigInt total = 0;
    for (const auto& [twice_spin, count] : table.entries)
      total += count * (twice_spin + 1);
    CHECK(total == BigInt{1} << k);
  }
}

TEST_CASE("encoded qubit counts") {
  CHECK(encoded_qubit_count(4) == 1.0);
  CHECK(encoded_qubit_count(6) == doctest::Approx(std::log2(5.0)).epsilon(1e-12));

  // The efficiency deficit (K - log2 dim)/log2 K approaches 3/2 from below;
  // its distance to 3/2 shrinks monotonically.
  double previous_gap = 1e9;
  for (int k : {100, 200, 500, 1000}) {
    const double ratio = (k - encoded_qubit_count(k)) / std::log2(double(k));
    const double gap = std::abs(ratio - 1.5);
    CHECK(gap < previous_gap);
    previous_gap = gap;
  }
  const double ratio_1000 = (1000 - encoded_qubit_count(1000)) / std::log2(1000.0);
  CHECK(std::abs(ratio_1000 - 1.5) <= 0.1);

  // The exact-integer path has to reach K = 2000.
  const double ratio_2000 = (2000 - encoded_qubit_count(2000)) / std::log2(2000.0);
  CHECK(std::abs(ratio_2000 - 1.5) <= 0.1);
}

TEST_CASE("log2 of exact integers") {
  CHECK(log2_integer(BigInt{1}) == 0.0);
  CHECK(log2_integer(BigInt{1} << 300) == 300.0);
  CHECK_THROWS_AS(log2_integer(BigInt{0}), std::domain_error);
}

TEST_CASE("multiplicity table export uses exact integers") {
  const MultiplicityTable table = multiplicity_table(6);
  const std::string path = "multiplicity_table_6.txt";
  save_multiplicity_table(path, table);

  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  const std::string expected =
      "multiplicity-table v1\n"
      "num_qubits 6\n"
      "two_s 0 multiplicity 5\n"
      "two_s 2 multiplicity 9\n"
      "two_s 4 multiplicity 5\n"
      "two_s 6 multiplicity 1\n";
  CHECK(content.str() == expected);
  std::remove(path.c_str());
}
