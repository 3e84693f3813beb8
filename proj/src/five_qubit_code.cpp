#include "dfslab/five_qubit_code.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace dfslab {

namespace {

constexpr double kNormWindow = 1e-9;
constexpr double kBranchCutoff = 1e-12;

void check_code_state(const State& state) {
  if (state.size() != 32)
    throw std::invalid_argument("code states live on five qubits (dim 32)");
  if (std::abs(state.norm() - 1.0) > kNormWindow)
    throw std::invalid_argument("code states must be normalized");
}

State fix_global_phase(State state) {
  Eigen::Index pivot = 0;
  double best = 0.0;
  for (Eigen::Index k = 0; k < state.size(); ++k) {
    const double a = std::abs(state[k]);
    if (a > best + 1e-12) {
      best = a;
      pivot = k;
    }
  }
  const Complex amplitude = state[pivot];
  state *= std::conj(amplitude) / std::abs(amplitude);
  return state;
}

}  // namespace

bool pauli_strings_commute(const std::string& a, const std::string& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("Pauli strings must have equal length");
  int clashes = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 'I' && b[k] != 'I' && a[k] != b[k]) ++clashes;
  return clashes % 2 == 0;
}

int pauli_string_syndrome(const FiveQubitCode& code, const std::string& error) {
  int syndrome = 0;
  for (int r = 0; r < FiveQubitCode::kNumGenerators; ++r)
    if (!pauli_strings_commute(code.generators[static_cast<std::size_t>(r)],
                               error))
      syndrome |= 1 << r;
  return syndrome;
}

std::string syndrome_bits(int syndrome) {
  std::string bits(static_cast<std::size_t>(FiveQubitCode::kNumGenerators),
                   '0');
  for (int r = 0; r < FiveQubitCode::kNumGenerators; ++r)
    if ((syndrome >> r) & 1) bits[static_cast<std::size_t>(r)] = '1';
  return bits;
}

FiveQubitCode make_five_qubit_code() {
  FiveQubitCode code;
  code.generators = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  code.logical_x = "XXXXX";
  code.logical_z = "ZZZZZ";
  for (int r = 0; r < FiveQubitCode::kNumGenerators; ++r)
    code.generator_ops[static_cast<std::size_t>(r)] =
        pauli_string_operator(code.generators[static_cast<std::size_t>(r)]);

  State zero = basis_state(FiveQubitCode::kNumSlots, 0);
  State one = apply_operator(pauli_string_operator(code.logical_x), zero);
  for (const SparseOp& generator : code.generator_ops) {
    zero = 0.5 * (zero + apply_operator(generator, zero));
    one = 0.5 * (one + apply_operator(generator, one));
  }
  code.codeword_zero = fix_global_phase(normalized(std::move(zero)));
  code.codeword_one = fix_global_phase(normalized(std::move(one)));

  code.corrections.fill("");
  code.corrections[0] = "IIIII";
  for (int slot = 0; slot < FiveQubitCode::kNumSlots; ++slot) {
    for (char label : {'X', 'Y', 'Z'}) {
      std::string error(FiveQubitCode::kNumSlots, 'I');
      error[static_cast<std::size_t>(slot)] = label;
      const int syndrome = pauli_string_syndrome(code, error);
      if (!code.corrections[static_cast<std::size_t>(syndrome)].empty())
        throw std::logic_error("single-slot Paulis must map to distinct syndromes");
      code.corrections[static_cast<std::size_t>(syndrome)] = error;
    }
  }
  return code;
}

State encode(const FiveQubitCode& code, const State& logical) {
  if (logical.size() != 2)
    throw std::invalid_argument("logical input must be a single qubit");
  if (std::abs(logical.norm() - 1.0) > kNormWindow)
    throw std::invalid_argument("logical input must be normalized");
  return logical[0] * code.codeword_zero + logical[1] * code.codeword_one;
}

SyndromeMeasurement measure_syndrome(const FiveQubitCode& code,
                                     const State& state, RandomSource& rng) {
  check_code_state(state);
  State psi = state;
  int syndrome = 0;
  for (int r = 0; r < FiveQubitCode::kNumGenerators; ++r) {
    const State image = apply_operator(code.generator_ops[static_cast<std::size_t>(r)], psi);
    const State plus = 0.5 * (psi + image);
    const State minus = 0.5 * (psi - image);
    const double weight_plus = plus.squaredNorm();
    const double weight_minus = minus.squaredNorm();
    int outcome;
    if (weight_minus < kBranchCutoff)
      outcome = 0;
    else if (weight_plus < kBranchCutoff)
      outcome = 1;
    else
      outcome = rng.uniform() < weight_plus ? 0 : 1;
    psi = normalized(outcome == 0 ? plus : minus);
    syndrome |= outcome << r;
  }
  return SyndromeMeasurement{syndrome, std::move(psi)};
}

int expected_syndrome(const FiveQubitCode& code, const State& state) {
  check_code_state(state);
  int syndrome = 0;
  for (int r = 0; r < FiveQubitCode::kNumGenerators; ++r) {
    const State image = apply_operator(code.generator_ops[static_cast<std::size_t>(r)], state);
    const double weight_minus = 0.25 * (state - image).squaredNorm();
    const double weight_plus = 0.25 * (state + image).squaredNorm();
    if (weight_minus > kBranchCutoff && weight_plus > kBranchCutoff)
      throw std::invalid_argument(
          "state is not a deterministic eigenstate of every generator");
    if (weight_plus < weight_minus) syndrome |= 1 << r;
  }
  return syndrome;
}

State correct(const FiveQubitCode& code, const State& state, int syndrome) {
  check_code_state(state);
  if (syndrome < 0 || syndrome >= FiveQubitCode::kNumSyndromes)
    throw std::out_of_range("syndrome must be a four-bit value");
  const std::string& pauli =
      code.corrections[static_cast<std::size_t>(syndrome)];
  if (pauli == "IIIII") return state;
  return apply_operator(pauli_string_operator(pauli), state);
}

void save_syndrome_table(const std::string& path, const FiveQubitCode& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write syndrome table: " + path);
  for (int syndrome = 0; syndrome < FiveQubitCode::kNumSyndromes; ++syndrome)
    out << syndrome_bits(syndrome) << ' '
        << code.corrections[static_cast<std::size_t>(syndrome)] << '\n';
}

}  // namespace dfslab
