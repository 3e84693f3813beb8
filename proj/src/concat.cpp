#include "dfslab/concat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace dfslab {

namespace {

constexpr int kNumClusters = 5;
constexpr int kClusterQubits = 4;
constexpr double kLeakageLimit = 1e-10;

constexpr std::array<std::pair<int, int>, 6> kClusterPairs{
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (std::size_t k = 0; k < kClusterPairs.size(); ++k)
    if (kClusterPairs[k].first == i && kClusterPairs[k].second == j)
      return static_cast<int>(k);
  throw std::invalid_argument("cluster pair must satisfy 1 <= i < j <= 4");
}

void check_cluster_count(int num_clusters) {
  if (num_clusters < 1 || num_clusters > kNumClusters)
    throw std::invalid_argument("cluster count must lie in 1..5");
}

void check_event(const ErrorEvent& event, int num_clusters) {
  if (event.cluster < 1 || event.cluster > num_clusters)
    throw std::invalid_argument("event cluster outside the register");
  if (event.first < 1 || event.second > kClusterQubits ||
      event.first >= event.second)
    throw std::invalid_argument("event pair must satisfy 1 <= i < j <= 4");
  if (!std::isfinite(event.theta))
    throw std::invalid_argument("event angle must be finite");
}

Aggregate aggregate_trials(const std::vector<TrialReport>& trials) {
  Aggregate aggregate;
  aggregate.min_fidelity = 1.0;
  double total = 0.0;
  for (const TrialReport& report : trials) {
    total += report.fidelity_after;
    aggregate.min_fidelity =
        std::min(aggregate.min_fidelity, report.fidelity_after);
    for (int syndrome : report.syndromes)
      ++aggregate.syndrome_histogram[syndrome_bits(syndrome)];
  }
  aggregate.mean_fidelity = total / static_cast<double>(trials.size());
  return aggregate;
}

State apply_single_qubit(const State& state, int num_qubits, int site,
                         const Eigen::Matrix2cd& gate) {
  const Eigen::Index mask = Eigen::Index{1} << qubit_bit(num_qubits, site);
  State result(state.size());
  for (Eigen::Index index = 0; index < state.size(); ++index) {
    if (index & mask) continue;
    const Complex a0 = state[index];
    const Complex a1 = state[index | mask];
    result[index] = gate(0, 0) * a0 + gate(0, 1) * a1;
    result[index | mask] = gate(1, 0) * a0 + gate(1, 1) * a1;
  }
  return result;
}

}  // namespace

ErrorRateModel ErrorRateModel::from_coupling(double coupling,
                                             double cycle_time) {
  if (!(cycle_time >= 0.0) || !std::isfinite(cycle_time) ||
      !std::isfinite(coupling))
    throw std::invalid_argument("coupling and cycle time must be finite, "
                                "cycle time nonnegative");
  return ErrorRateModel{2.0 * std::abs(coupling) * cycle_time};
}

void ErrorRateModel::validate() const {
  if (!(events_per_cycle >= 0.0) || !std::isfinite(events_per_cycle))
    throw std::invalid_argument("event rate must be finite and >= 0");
}

ConcatSimulator::ConcatSimulator()
    : basis_(dfs_basis(kClusterQubits)), code_(make_five_qubit_code()) {
  for (const auto& [i, j] : kClusterPairs)
    encoded_exchange_[static_cast<std::size_t>(pair_index(i, j))] =
        project_operator(exchange_operator(kClusterQubits, i, j), basis_);
  for (int logical = 0; logical < 2; ++logical) {
    const auto& column = basis_.vectors.col(logical);
    for (Eigen::Index r = 0; r < column.size(); ++r)
      if (column[r] != Complex{0.0, 0.0})
        cluster_vectors_[static_cast<std::size_t>(logical)].emplace_back(
            static_cast<std::uint64_t>(r), column[r]);
  }
}

const Eigen::Matrix2cd& ConcatSimulator::encoded_exchange(int i, int j) const {
  return encoded_exchange_[static_cast<std::size_t>(pair_index(i, j))];
}

State ConcatSimulator::lift_encoded_to_physical(const State& encoded,
                                                int num_clusters) const {
  check_cluster_count(num_clusters);
  const Eigen::Index encoded_dim = register_dim(num_clusters);
  if (encoded.size() != encoded_dim)
    throw std::invalid_argument("encoded dimension must be 2^n_clusters");

  State physical =
      State::Zero(register_dim(kClusterQubits * num_clusters));
  for (Eigen::Index e = 0; e < encoded_dim; ++e) {
    const Complex amplitude = encoded[e];
    if (amplitude == Complex{0.0, 0.0}) continue;
    const std::function<void(int, std::uint64_t, Complex)> walk =
        [&](int cluster, std::uint64_t base, Complex partial) {
          if (cluster > num_clusters) {
            physical[static_cast<Eigen::Index>(base)] += partial;
            return;
          }
          const bool one = (static_cast<std::uint64_t>(e) >>
                            qubit_bit(num_clusters, cluster)) & 1;
          for (const auto& [index, value] :
               cluster_vectors_[one ? 1 : 0])
            walk(cluster + 1, (base << kClusterQubits) | index,
                 partial * value);
        };
    walk(1, 0, amplitude);
  }
  return physical;
}

ConcatSimulator::Projection ConcatSimulator::project_physical_to_encoded(
    const State& physical, int num_clusters) const {
  check_cluster_count(num_clusters);
  if (physical.size() != register_dim(kClusterQubits * num_clusters))
    throw std::invalid_argument("physical dimension must be 16^n_clusters");

  const Eigen::Index encoded_dim = register_dim(num_clusters);
  State encoded(encoded_dim);
  for (Eigen::Index e = 0; e < encoded_dim; ++e) {
    Complex overlap{0.0, 0.0};
    const std::function<void(int, std::uint64_t, Complex)> walk =
        [&](int cluster, std::uint64_t base, Complex partial) {
          if (cluster > num_clusters) {
            overlap += std::conj(partial) *
                       physical[static_cast<Eigen::Index>(base)];
            return;
          }
          const bool one = (static_cast<std::uint64_t>(e) >>
                            qubit_bit(num_clusters, cluster)) & 1;
          for (const auto& [index, value] :
               cluster_vectors_[one ? 1 : 0])
            walk(cluster + 1, (base << kClusterQubits) | index,
                 partial * value);
        };
    walk(1, 0, Complex{1.0, 0.0});
    encoded[e] = overlap;
  }

  // Residual against the re-lifted component; the squared-norm shortcut
  // loses half the significant digits to cancellation.
  const State reconstructed = lift_encoded_to_physical(encoded, num_clusters);
  const double leakage = (physical - reconstructed).norm();
  return Projection{std::move(encoded), leakage};
}

ConcatState ConcatSimulator::apply_exchange_event(
    const ConcatState& state, const ErrorEvent& event) const {
  check_event(event, state.num_clusters);
  ConcatState result = state;
  if (state.level == ConcatLevel::kEncoded) {
    const Eigen::Matrix2cd gate =
        std::cos(event.theta) * Eigen::Matrix2cd::Identity() -
        Complex{0.0, std::sin(event.theta)} *
            encoded_exchange(event.first, event.second);
    result.amplitudes = apply_single_qubit(state.amplitudes,
                                           state.num_clusters, event.cluster,
                                           gate);
  } else {
    const int offset = kClusterQubits * (event.cluster - 1);
    result.amplitudes = apply_exchange_unitary(
        state.amplitudes, kClusterQubits * state.num_clusters,
        offset + event.first, offset + event.second, event.theta);
  }
  return result;
}

State ConcatSimulator::reference_codeword() const {
  return encode(code_, basis_state(1, 0));
}

ConcatSimulator::RecoveryResult ConcatSimulator::recover(
    const ConcatState& state, const State& reference_encoded,
    RandomSource& rng) const {
  State encoded;
  if (state.level == ConcatLevel::kPhysical) {
    if (state.num_clusters != kNumClusters)
      throw std::invalid_argument(
          "recovery needs all five clusters at the physical level");
    Projection projection =
        project_physical_to_encoded(state.amplitudes, state.num_clusters);
    if (projection.leakage > kLeakageLimit)
      throw std::runtime_error(
          "state leaked outside the cluster singlet subspaces");
    encoded = normalized(std::move(projection.encoded));
  } else {
    if (state.num_clusters != kNumClusters)
      throw std::invalid_argument("recovery needs five encoded slots");
    encoded = state.amplitudes;
  }

  RecoveryResult result;
  result.fidelity_before = fidelity(reference_encoded, encoded);
  SyndromeMeasurement measurement = measure_syndrome(code_, encoded, rng);
  result.syndrome = measurement.syndrome;
  State corrected = correct(code_, measurement.state, measurement.syndrome);
  result.fidelity_after = fidelity(reference_encoded, corrected);
  result.state = ConcatState{ConcatLevel::kEncoded, kNumClusters,
                             std::move(corrected)};
  return result;
}

MonteCarloResult ConcatSimulator::run_monte_carlo(
    int num_trials, const ErrorRateModel& model, std::uint64_t seed) const {
  if (num_trials < 1)
    throw std::invalid_argument("at least one trial is required");
  model.validate();

  const State reference = reference_codeword();
  MonteCarloResult result;
  result.seed = seed;
  result.mode = "monte_carlo";
  result.events_per_cycle = model.events_per_cycle;
  result.trials.reserve(static_cast<std::size_t>(num_trials));

  for (int trial = 0; trial < num_trials; ++trial) {
    RandomSource rng =
        RandomSource::forked(seed, static_cast<std::uint64_t>(trial));
    TrialReport report;
    report.seed = seed;
    report.trial = trial;

    ConcatState state{ConcatLevel::kEncoded, kNumClusters, reference};
    const int event_count = rng.poisson(model.events_per_cycle);
    for (int k = 0; k < event_count; ++k) {
      ErrorEvent event;
      event.cluster = 1 + rng.uniform_int(kNumClusters);
      const auto& pair =
          kClusterPairs[static_cast<std::size_t>(rng.uniform_int(6))];
      event.first = pair.first;
      event.second = pair.second;
      event.theta = rng.uniform(0.0, std::numbers::pi);
      report.events.push_back(event);
      state = apply_exchange_event(state, event);
    }

    const RecoveryResult recovery = recover(state, reference, rng);
    report.syndromes.push_back(recovery.syndrome);
    report.fidelity_before = recovery.fidelity_before;
    report.fidelity_after = recovery.fidelity_after;
    result.trials.push_back(std::move(report));
  }

  result.aggregate = aggregate_trials(result.trials);
  return result;
}

MonteCarloResult ConcatSimulator::run_single_event_sweep(
    const std::vector<double>& thetas, std::uint64_t seed) const {
  if (thetas.empty())
    throw std::invalid_argument("sweep needs at least one angle");

  const State reference = reference_codeword();
  MonteCarloResult result;
  result.seed = seed;
  result.mode = "single_event_sweep";
  result.events_per_cycle = 0.0;

  int trial = 0;
  for (int cluster = 1; cluster <= kNumClusters; ++cluster) {
    for (const auto& [i, j] : kClusterPairs) {
      for (double theta : thetas) {
        RandomSource rng =
            RandomSource::forked(seed, static_cast<std::uint64_t>(trial));
        TrialReport report;
        report.seed = seed;
        report.trial = trial;
        const ErrorEvent event{cluster, i, j, theta};
        report.events.push_back(event);

        ConcatState state{ConcatLevel::kEncoded, kNumClusters, reference};
        state = apply_exchange_event(state, event);
        const RecoveryResult recovery = recover(state, reference, rng);
        report.syndromes.push_back(recovery.syndrome);
        report.fidelity_before = recovery.fidelity_before;
        report.fidelity_after = recovery.fidelity_after;
        result.trials.push_back(std::move(report));
        ++trial;
      }
    }
  }

  result.aggregate = aggregate_trials(result.trials);
  return result;
}

nlohmann::json report_json(const MonteCarloResult& result) {
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["seed"] = result.seed;
  doc["mode"] = result.mode;
  doc["events_per_cycle"] = result.events_per_cycle;
  doc["n_trials"] = result.trials.size();

  auto trials = nlohmann::json::array();
  for (const TrialReport& report : result.trials) {
    nlohmann::json entry;
    entry["trial"] = report.trial;
    auto events = nlohmann::json::array();
    for (const ErrorEvent& event : report.events)
      events.push_back({{"cluster", event.cluster},
                        {"pair", {event.first, event.second}},
                        {"theta", event.theta}});
    entry["events"] = std::move(events);
    auto syndromes = nlohmann::json::array();
    for (int syndrome : report.syndromes)
      syndromes.push_back(syndrome_bits(syndrome));
    entry["syndromes"] = std::move(syndromes);
    entry["fidelity_before"] = report.fidelity_before;
    entry["fidelity_after"] = report.fidelity_after;
    trials.push_back(std::move(entry));
  }
  doc["trials"] = std::move(trials);

  nlohmann::json aggregate;
  aggregate["mean_fidelity"] = result.aggregate.mean_fidelity;
  aggregate["min_fidelity"] = result.aggregate.min_fidelity;
  nlohmann::json histogram = nlohmann::json::object();
  for (const auto& [bits, count] : result.aggregate.syndrome_histogram)
    histogram[bits] = count;
  aggregate["syndrome_histogram"] = std::move(histogram);
  doc["aggregate"] = std::move(aggregate);
  return doc;
}

}  // namespace dfslab
