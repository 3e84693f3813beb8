// Command-line front end: exact DFS dimension tables, operator-identity
// verification, and the concatenated-code exchange-error simulator.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfslab/combinatorics.hpp"
#include "dfslab/concat.hpp"
#include "dfslab/dfs.hpp"
#include "dfslab/exchange_model.hpp"
#include "dfslab/five_qubit_code.hpp"
#include "dfslab/operators.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitConfigError = 2;

std::string resolve_output_path(const std::string& out) {
  const char* base = std::getenv("DFSLAB_OUT_DIR");
  if (base == nullptr || *base == '\0' ||
      std::filesystem::path(out).is_absolute())
    return out;
  return (std::filesystem::path(base) / out).string();
}

void emit(const nlohmann::json& doc, const std::string& out,
          const std::string& table_text, const std::string& format) {
  std::string payload =
      format == "table" ? table_text : doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  const std::string path = resolve_output_path(out);
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw std::runtime_error("cannot write output file: " + path);
  stream << payload;
}

struct Check {
  std::string name;
  double residual = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string note;
};

// Expected encoded forms of the six K=4 exchange operators in the canonical
// basis: pairs across the cluster act identically.
Eigen::Matrix2cd expected_encoded_exchange(int i, int j) {
  const double h = std::sqrt(3.0) / 2.0;
  Eigen::Matrix2cd m;
  if ((i == 1 && j == 2) || (i == 3 && j == 4)) m << -1, 0, 0, 1;
  else if ((i == 1 && j == 3) || (i == 2 && j == 4)) m << 0.5, h, h, -0.5;
  else m << 0.5, -h, -h, -0.5;
  return m;
}

std::vector<Check> run_verify(int num_qubits, double tol,
                              const std::optional<dfslab::ExchangeModel>& model) {
  using namespace dfslab;
  std::vector<Check> checks;
  const auto add = [&](std::string name, double residual) {
    checks.push_back({std::move(name), residual, residual < tol, false, ""});
  };

  const SparseOp sx = total_spin_operator(num_qubits, Axis::X);
  const SparseOp sy = total_spin_operator(num_qubits, Axis::Y);
  const SparseOp sz = total_spin_operator(num_qubits, Axis::Z);
  const Complex two_i{0.0, 2.0};
  double su2 = 0.0;
  su2 = std::max(su2, SparseOp(commutator(sx, sy) - two_i * sz).norm());
  su2 = std::max(su2, SparseOp(commutator(sy, sz) - two_i * sx).norm());
  su2 = std::max(su2, SparseOp(commutator(sz, sx) - two_i * sy).norm());
  add("su2_commutators", su2);

  const SparseOp identity = identity_op(num_qubits);
  double heisenberg = 0.0;
  double spin_commutation = 0.0;
  const DfsBasis basis = dfs_basis(num_qubits);
  double leakage = 0.0;
  for (int i = 1; i <= num_qubits; ++i) {
    for (int j = i + 1; j <= num_qubits; ++j) {
      const SparseOp swap = exchange_operator(num_qubits, i, j);
      SparseOp heis = identity;
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
        heis += SparseOp(embed_single_qubit(p, i, num_qubits) *
                         embed_single_qubit(p, j, num_qubits));
      heisenberg = std::max(heisenberg,
                            entrywise_distance(swap, 0.5 * heis));
      for (const SparseOp& spin : {sx, sy, sz})
        spin_commutation =
            std::max(spin_commutation, commutator(spin, swap).norm());
      leakage = std::max(leakage, check_invariance(swap, basis, tol).leakage);
    }
  }
  add("heisenberg_exchange_form", heisenberg);
  add("spin_exchange_commutation", spin_commutation);
  add("dfs_leakage", leakage);

  if (model.has_value()) {
    const SparseOp hamiltonian = exchange_hamiltonian(*model);
    const SparseOp adjoint = hamiltonian.adjoint();
    add("model_hermiticity", entrywise_distance(hamiltonian, adjoint));
    double model_commutation = 0.0;
    for (const SparseOp& spin : {sx, sy, sz})
      model_commutation =
          std::max(model_commutation, commutator(spin, hamiltonian).norm());
    add("model_spin_commutation", model_commutation);
    add("model_dfs_leakage",
        check_invariance(hamiltonian, basis, tol).leakage);
  } else {
    const ConstantJReport report = verify_constant_j(num_qubits, 1.0, tol);
    add("uniform_coupling_identity", report.identity_residual);
    Check phase{"dfs_global_phase", report.eigenvalue_residual,
                report.eigenvalue_residual < tol, false,
                "nu=" + std::to_string(report.nu)};
    checks.push_back(phase);
  }

  if (num_qubits == 4) {
    double encoded = 0.0;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const DenseOp projected =
            project_operator(exchange_operator(4, i, j), basis);
        encoded = std::max(
            encoded,
            (projected - expected_encoded_exchange(i, j)).cwiseAbs().maxCoeff());
      }
    add("encoded_exchange_matrices", encoded);
  } else {
    checks.push_back({"encoded_exchange_matrices", 0.0, true, true,
                      "skipped: d=" + std::to_string(basis.dimension())});
  }
  return checks;
}

int cmd_dims(int k_max, const std::string& format, const std::string& out) {
  using namespace dfslab;
  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["command"] = "dims";
  doc["config"] = {{"k_max", k_max}};

  std::string table = "k  dfs_dimension  encoded_qubits  hook_check\n";
  auto rows = nlohmann::json::array();
  for (int k = 2; k <= k_max; k += 2) {
    const BigInt dimension = singlet_multiplicity(k);
    const BigInt tableaux = standard_tableaux_count(two_row_diagram(k / 2));
    const bool hook_check = dimension == tableaux &&
                            dimension == dicke_multiplicity(k, 0);
    const double encoded = encoded_qubit_count(k);
    rows.push_back({{"k", k},
                    {"dfs_dimension", dimension.str()},
                    {"encoded_qubits", encoded},
                    {"hook_check", hook_check}});
    char line[128];
    std::snprintf(line, sizeof line, "%-2d %-14s %-15.6f %s\n", k,
                  dimension.str().c_str(), encoded,
                  hook_check ? "ok" : "MISMATCH");
    table += line;
  }
  doc["rows"] = std::move(rows);
  emit(doc, out, table, format);
  return kExitSuccess;
}

int cmd_verify(int num_qubits, double tol, const std::string& model_path,
               const std::string& format, const std::string& out) {
  using namespace dfslab;
  std::optional<ExchangeModel> model;
  if (!model_path.empty()) {
    model = load_exchange_model(model_path);
    num_qubits = model->num_qubits;
  }
  if (num_qubits < 2 || num_qubits % 2 != 0 || num_qubits > 8) {
    std::cerr << "verify requires an even register size between 2 and 8\n";
    return kExitConfigError;
  }

  const std::vector<Check> checks = run_verify(num_qubits, tol, model);
  bool all_pass = true;
  std::string table = "check                       residual    status\n";
  auto entries = nlohmann::json::array();
  for (const Check& check : checks) {
    if (!check.skipped && !check.pass) all_pass = false;
    nlohmann::json entry = {{"name", check.name},
                            {"residual", check.residual},
                            {"pass", check.pass},
                            {"skipped", check.skipped}};
    if (!check.note.empty()) entry["note"] = check.note;
    entries.push_back(std::move(entry));
    char line[160];
    if (check.skipped)
      std::snprintf(line, sizeof line, "%-27s %-11s %s\n", check.name.c_str(),
                    "-", check.note.c_str());
    else
      std::snprintf(line, sizeof line, "%-27s %-11.2e %s%s%s\n",
                    check.name.c_str(), check.residual,
                    check.pass ? "pass" : "FAIL",
                    check.note.empty() ? "" : "  ", check.note.c_str());
    table += line;
  }
  table += all_pass ? "all checks passed\n" : "verification FAILED\n";

  nlohmann::json doc;
  doc["schema_version"] = 1;
  doc["command"] = "verify";
  doc["config"] = {{"k", num_qubits}, {"tol", tol}, {"model", model_path}};
  doc["checks"] = std::move(entries);
  doc["pass"] = all_pass;
  emit(doc, out, table, format);
  return all_pass ? kExitSuccess : kExitVerificationFailure;
}

int cmd_simulate(std::uint64_t seed, int trials, double rate,
                 std::optional<double> coupling,
                 std::optional<double> cycle_time, bool sweep,
                 const std::string& format, const std::string& out) {
  using namespace dfslab;
  ErrorRateModel model{rate};
  if (coupling.has_value() || cycle_time.has_value()) {
    if (!coupling.has_value() || !cycle_time.has_value()) {
      std::cerr << "--coupling and --cycle-time must be given together\n";
      return kExitConfigError;
    }
    model = ErrorRateModel::from_coupling(*coupling, *cycle_time);
  }
  model.validate();

  const ConcatSimulator simulator;
  MonteCarloResult result;
  if (sweep) {
    const std::vector<double> thetas{0.1, 0.5, 1.0, std::numbers::pi / 3.0};
    result = simulator.run_single_event_sweep(thetas, seed);
  } else {
    result = simulator.run_monte_carlo(trials, model, seed);
  }

  nlohmann::json doc = report_json(result);
  doc["command"] = "simulate";
  doc["config"] = {{"seed", seed},
                   {"trials", trials},
                   {"rate", model.events_per_cycle},
                   {"sweep", sweep}};

  char summary[256];
  std::snprintf(summary, sizeof summary,
                "mode %s  trials %zu  mean_fidelity %.12f  min_fidelity "
                "%.12f\n",
                result.mode.c_str(), result.trials.size(),
                result.aggregate.mean_fidelity, result.aggregate.min_fidelity);
  std::string table = summary;
  for (const auto& [bits, count] : result.aggregate.syndrome_histogram) {
    char line[64];
    std::snprintf(line, sizeof line, "syndrome %s  count %lld\n", bits.c_str(),
                  static_cast<long long>(count));
    table += line;
  }
  emit(doc, out, table, format);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Singlet-subspace laboratory: exact dimension tables, exchange-error "
      "invariance checks, and the concatenated-code recovery simulator"};
  app.require_subcommand(1);

  int k = 4;
  double tol = 1e-10;
  std::string model_path;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 0;
  int trials = 100;
  double rate = 0.25;
  std::optional<double> coupling;
  std::optional<double> cycle_time;
  bool sweep = false;

  auto* dims = app.add_subcommand("dims", "Exact DFS dimensions per register size");
  dims->add_option("--k", k, "largest register size in the table")
      ->default_val(8);
  dims->add_option("--format", format, "json or table");
  dims->add_option("--out", out, "output file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "Operator-identity verification");
  verify->add_option("--k", k, "register size (even, 2..8)")->default_val(4);
  verify->add_option("--tol", tol, "residual threshold");
  verify->add_option("--model", model_path,
                     "exchange-coupling JSON file (overrides --k)");
  verify->add_option("--format", format, "json or table");
  verify->add_option("--out", out, "output file (stdout when omitted)");

  auto* simulate =
      app.add_subcommand("simulate", "Concatenated-code recovery simulation");
  simulate->add_option("--seed", seed, "randomness seed");
  simulate->add_option("--trials", trials, "number of Monte Carlo trials");
  simulate->add_option("--rate", rate, "expected exchange events per cycle");
  simulate->add_option("--coupling", coupling,
                       "pair coupling J (with --cycle-time, overrides --rate)");
  simulate->add_option("--cycle-time", cycle_time,
                       "correction cycle length (with --coupling)");
  simulate->add_flag("--sweep", sweep,
                     "deterministic single-event grid over clusters, pairs "
                     "and angles");
  simulate->add_option("--format", format, "json or table");
  simulate->add_option("--out", out, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitConfigError;
  }

  if (format != "json" && format != "table") {
    std::cerr << "--format must be json or table\n";
    return kExitConfigError;
  }
  if (tol <= 0.0) {
    std::cerr << "--tol must be positive\n";
    return kExitConfigError;
  }

  try {
    if (dims->parsed()) return cmd_dims(k, format, out);
    if (verify->parsed()) return cmd_verify(k, tol, model_path, format, out);
    return cmd_simulate(seed, trials, rate, coupling, cycle_time, sweep,
                        format, out);
  } catch (const std::invalid_argument& error) {
    std::cerr << "configuration error: " << error.what() << '\n';
    return kExitConfigError;
  } catch (const std::domain_error& error) {
    std::cerr << "configuration error: " << error.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitVerificationFailure;
  }
}
