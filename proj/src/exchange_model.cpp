#include "dfslab/exchange_model.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace dfslab {

void ExchangeModel::validate() const {
  if (num_qubits < 1)
    throw std::invalid_argument("exchange model needs a positive register");
  if (couplings.rows() != num_qubits || couplings.cols() != num_qubits)
    throw std::invalid_argument("coupling matrix must be K x K");
  for (int r = 0; r < num_qubits; ++r) {
    if (couplings(r, r) != 0.0)
      throw std::invalid_argument("coupling matrix must have a zero diagonal");
    for (int c = r + 1; c < num_qubits; ++c)
      if (couplings(r, c) != couplings(c, r))
        throw std::invalid_argument("coupling matrix must be symmetric");
  }
}

ExchangeModel uniform_exchange_model(int num_qubits, double total_coupling) {
  if (num_qubits < 1)
    throw std::invalid_argument("exchange model needs a positive register");
  ExchangeModel model;
  model.num_qubits = num_qubits;
  model.couplings = Eigen::MatrixXd::Constant(num_qubits, num_qubits,
                                              total_coupling / num_qubits);
  model.couplings.diagonal().setZero();
  return model;
}

ExchangeModel load_exchange_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open exchange model: " + path);
  nlohmann::json doc;
  in >> doc;

  if (!doc.contains("num_qubits") || !doc.contains("couplings"))
    throw std::invalid_argument(
        "exchange model requires `num_qubits` and `couplings` fields");

  ExchangeModel model;
  model.num_qubits = doc.at("num_qubits").get<int>();
  const auto& rows = doc.at("couplings");
  if (!rows.is_array() ||
      static_cast<int>(rows.size()) != model.num_qubits)
    throw std::invalid_argument("couplings must be a K x K array");
  model.couplings.resize(model.num_qubits, model.num_qubits);
  for (int r = 0; r < model.num_qubits; ++r) {
    const auto& row = rows.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != model.num_qubits)
      throw std::invalid_argument("couplings must be a K x K array");
    for (int c = 0; c < model.num_qubits; ++c)
      model.couplings(r, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  model.validate();
  return model;
}

void save_exchange_model(const std::string& path, const ExchangeModel& model) {
  model.validate();
  nlohmann::json doc;
  doc["num_qubits"] = model.num_qubits;
  auto rows = nlohmann::json::array();
  for (int r = 0; r < model.num_qubits; ++r) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < model.num_qubits; ++c) row.push_back(model.couplings(r, c));
    rows.push_back(std::move(row));
  }
  doc["couplings"] = std::move(rows);

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write exchange model: " + path);
  out << doc.dump(2) << '\n';
}

SparseOp exchange_hamiltonian(const ExchangeModel& model) {
  model.validate();
  const int num_qubits = model.num_qubits;
  const Eigen::Index dim = register_dim(num_qubits);

  std::vector<Eigen::Triplet<Complex>> entries;
  for (int i = 1; i <= num_qubits; ++i) {
    for (int j = i + 1; j <= num_qubits; ++j) {
      const double weight = 0.5 * model.couplings(i - 1, j - 1);
      if (weight == 0.0) continue;
      const SparseOp swap = exchange_operator(num_qubits, i, j);
      for (int outer = 0; outer < swap.outerSize(); ++outer)
        for (SparseOp::InnerIterator it(swap, outer); it; ++it)
          entries.emplace_back(it.row(), it.col(), weight * it.value());
    }
  }

  SparseOp hamiltonian(dim, dim);
  hamiltonian.setFromTriplets(entries.begin(), entries.end());
  return hamiltonian;
}

}  // namespace dfslab
