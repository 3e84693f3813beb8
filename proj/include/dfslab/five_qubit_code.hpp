#pragma once

#include <array>
#include <string>

#include "dfslab/operators.hpp"
#include "dfslab/random.hpp"

namespace dfslab {

// Five-qubit stabilizer code encoding one logical qubit at distance 3: the
// 16 syndromes cover identity plus the 15 single-slot Paulis exactly, so any
// single-slot unitary error is correctable and nothing shorter is.
struct FiveQubitCode {
  static constexpr int kNumSlots = 5;
  static constexpr int kNumGenerators = 4;
  static constexpr int kNumSyndromes = 16;

  std::array<std::string, kNumGenerators> generators;
  std::string logical_x;
  std::string logical_z;
  std::array<SparseOp, kNumGenerators> generator_ops;  // dim 32
  State codeword_zero;
  State codeword_one;
  // syndrome -> correcting Pauli string; a bijection onto {identity} union
  // the 15 single-slot Paulis.
  std::array<std::string, kNumSyndromes> corrections;
};

// Builds the cyclic generator set {XZZXI, IXZZX, XIXZZ, ZXIXZ} with logicals
// XXXXX / ZZZZZ. Codewords come from the normalized stabilizer projector
// applied to |00000> and X_L|00000>, global phase fixed so the
// largest-magnitude amplitude is real positive.
FiveQubitCode make_five_qubit_code();

bool pauli_strings_commute(const std::string& a, const std::string& b);

// Syndrome a Pauli error would produce: bit r is set iff the error
// anticommutes with generator r (0-based, listed order).
int pauli_string_syndrome(const FiveQubitCode& code, const std::string& error);

// "0101" rendering, generator-1 outcome first; '0' means eigenvalue +1.
std::string syndrome_bits(int syndrome);

// alpha|0> + beta|1>  ->  alpha|0_L> + beta|1_L>. Input must be normalized.
State encode(const FiveQubitCode& code, const State& logical);

struct SyndromeMeasurement {
  int syndrome = 0;
  State state;  // post-measurement, renormalized
};

// Projective measurement of the four generators in order. Outcomes with
// weight indistinguishable from 0 or 1 are taken deterministically without
// consuming randomness; genuine superpositions are sampled from `rng`.
SyndromeMeasurement measure_syndrome(const FiveQubitCode& code,
                                     const State& state, RandomSource& rng);

// Syndrome of a state asserted to be a deterministic eigenstate of every
// generator (e.g. a Pauli-corrupted codeword). Throws std::invalid_argument
// if any generator outcome is not deterministic.
int expected_syndrome(const FiveQubitCode& code, const State& state);

// Applies the tabulated correction for `syndrome`.
State correct(const FiveQubitCode& code, const State& state, int syndrome);

// 16-row text table: syndrome bits, correction Pauli string.
void save_syndrome_table(const std::string& path, const FiveQubitCode& code);

}  // namespace dfslab
