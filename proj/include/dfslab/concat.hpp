#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dfslab/dfs.hpp"
#include "dfslab/five_qubit_code.hpp"
#include "dfslab/operators.hpp"
#include "dfslab/random.hpp"

namespace dfslab {

// One exchange pulse inside a cluster of four physical qubits.
struct ErrorEvent {
  int cluster = 1;  // 1..5
  int first = 1;    // qubit pair within the cluster, 1 <= first < second <= 4
  int second = 2;
  double theta = 0.0;  // J_ij * t
};

enum class ConcatLevel { kEncoded, kPhysical };

// Encoded form: n_clusters abstract qubits (dimension 2^n). Physical form:
// 4*n_clusters qubits (dimension 16^n), lying inside the tensor product of
// per-cluster singlet subspaces.
struct ConcatState {
  ConcatLevel level = ConcatLevel::kEncoded;
  int num_clusters = 5;
  State amplitudes;
};

struct TrialReport {
  std::uint64_t seed = 0;
  int trial = 0;
  std::vector<ErrorEvent> events;
  std::vector<int> syndromes;
  double fidelity_before = 1.0;
  double fidelity_after = 1.0;
};

// Expected exchange events per correction cycle. The typical time between
// exchange errors at coupling J is 1/(2|J|), so a cycle of length t sees
// 2|J|t events on average.
struct ErrorRateModel {
  double events_per_cycle = 0.0;

  static ErrorRateModel from_coupling(double coupling, double cycle_time);
  void validate() const;  // throws std::invalid_argument
};

struct Aggregate {
  double mean_fidelity = 1.0;
  double min_fidelity = 1.0;
  std::map<std::string, std::int64_t> syndrome_histogram;
};

struct MonteCarloResult {
  std::uint64_t seed = 0;
  std::string mode;  // "monte_carlo" or "single_event_sweep"
  double events_per_cycle = 0.0;
  std::vector<TrialReport> trials;
  Aggregate aggregate;
};

// Five clusters of four physical qubits; each cluster supports one encoded
// qubit, and the five encoded qubits carry a five-qubit-code codeword.
// Exchange errors stay inside the per-cluster singlet sector, so the encoded
// 32-dimensional path is exact; the physical path (up to 2^20 amplitudes) is
// kept as an oracle for small cluster counts.
class ConcatSimulator {
 public:
  ConcatSimulator();

  const FiveQubitCode& code() const { return code_; }
  const DfsBasis& cluster_basis() const { return basis_; }

  // Action of the cluster exchange E_ij on the encoded qubit (2x2).
  const Eigen::Matrix2cd& encoded_exchange(int i, int j) const;

  // Isometry |0> -> |0~>, |1> -> |1~> per cluster; norm preserved.
  State lift_encoded_to_physical(const State& encoded, int num_clusters) const;

  struct Projection {
    State encoded;       // unnormalized component inside the cluster DFSs
    double leakage = 0;  // norm of the component outside
  };
  Projection project_physical_to_encoded(const State& physical,
                                         int num_clusters) const;

  ConcatState apply_exchange_event(const ConcatState& state,
                                   const ErrorEvent& event) const;

  struct RecoveryResult {
    ConcatState state;  // encoded level, corrected
    int syndrome = 0;
    double fidelity_before = 1.0;
    double fidelity_after = 1.0;
  };

  // Syndrome measurement and correction on the five encoded slots. Physical
  // states are projected down first and must have leakage < 1e-10.
  RecoveryResult recover(const ConcatState& state,
                         const State& reference_encoded,
                         RandomSource& rng) const;

  // Encoded logical |0> codeword used as the Monte Carlo reference.
  State reference_codeword() const;

  MonteCarloResult run_monte_carlo(int num_trials, const ErrorRateModel& model,
                                   std::uint64_t seed) const;

  // Deterministic grid: every cluster x every pair x every theta, one event
  // per sub-trial.
  MonteCarloResult run_single_event_sweep(const std::vector<double>& thetas,
                                          std::uint64_t seed) const;

 private:
  using SparseVec = std::vector<std::pair<std::uint64_t, Complex>>;

  DfsBasis basis_;
  FiveQubitCode code_;
  std::array<Eigen::Matrix2cd, 6> encoded_exchange_;
  std::array<SparseVec, 2> cluster_vectors_;  // nonzeros of |0~>, |1~>
};

// Structured report: schema_version, seed, n_trials, per-trial records and
// the aggregate block.
nlohmann::json report_json(const MonteCarloResult& result);

}  // namespace dfslab
