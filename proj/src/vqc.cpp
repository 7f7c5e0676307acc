#include "qgb/vqc.hpp"

#include <cmath>

#include "qgb/error.hpp"
#include "qgb/rng.hpp"
#include "qgb/statevector.hpp"

namespace qgb {

VqcCircuit::VqcCircuit(VqcConfig cfg) : cfg_(cfg) {
  if (cfg.qubits < 1 || cfg.layers < 0) throw ConfigError("vqc: bad config");
  const int q = cfg.qubits;
  for (int j = 0; j < q; ++j) gates_.push_back({Gate::kRyEncode, j, 0, 0, 0});
  for (int l = 0; l < cfg.layers; ++l) {
    for (int j = 0; j < q; ++j) gates_.push_back({Gate::kRyTheta, j, 0, l * q + j, 0});
    for (int j = 0; j < q; ++j) gates_.push_back({Gate::kRzTheta, j, 0, l * q + j, 1});
    if (q >= 2)
      for (int j = 0; j < q; ++j) gates_.push_back({Gate::kCnot, j, (j + 1) % q, 0, 0});
  }
}

std::vector<double> VqcCircuit::descriptor(const std::vector<double>& angles,
                                           const Mat& theta) const {
  if (static_cast<int>(angles.size()) != cfg_.qubits)
    throw ConfigError("vqc: angle count != qubits");
  if (theta.rows != theta_rows() || theta.cols != 2)
    throw ConfigError("vqc: theta shape mismatch");

  Statevector sv(cfg_.qubits);
  for (const Gate& g : gates_) {
    switch (g.kind) {
      case Gate::kRyEncode: sv.apply_ry(g.qubit, angles[g.qubit]); break;
      case Gate::kRyTheta: sv.apply_ry(g.qubit, theta(g.theta_row, 0)); break;
      case Gate::kRzTheta: sv.apply_rz(g.qubit, theta(g.theta_row, 1)); break;
      case Gate::kCnot: sv.apply_cnot(g.qubit, g.target); break;
    }
  }
  std::vector<double> s(cfg_.qubits);
  for (int k = 0; k < cfg_.qubits; ++k) s[k] = sv.z_expectation(k);
  return s;
}

Mat VqcCircuit::param_shift_grad(const std::vector<double>& angles, const Mat& theta,
                                 const std::vector<double>& upstream) const {
  if (static_cast<int>(upstream.size()) != cfg_.qubits)
    throw ConfigError("vqc: upstream length != qubits");
  Mat grad(theta_rows(), 2);

  bool any = false;
  for (double u : upstream)
    if (u != 0.0) any = true;
  if (!any || cfg_.layers == 0) return grad;

  // Forward pass caching the state just before each theta gate.
  std::vector<Statevector> prefix;
  prefix.reserve(static_cast<size_t>(theta_rows()) * 2);
  Statevector sv(cfg_.qubits);
  std::vector<size_t> prefix_of(gates_.size(), SIZE_MAX);
  for (size_t gi = 0; gi < gates_.size(); ++gi) {
    const Gate& g = gates_[gi];
    if (g.kind == Gate::kRyTheta || g.kind == Gate::kRzTheta) {
      prefix_of[gi] = prefix.size();
      prefix.push_back(sv);
    }
    switch (g.kind) {
      case Gate::kRyEncode: sv.apply_ry(g.qubit, angles[g.qubit]); break;
      case Gate::kRyTheta: sv.apply_ry(g.qubit, theta(g.theta_row, 0)); break;
      case Gate::kRzTheta: sv.apply_rz(g.qubit, theta(g.theta_row, 1)); break;
      case Gate::kCnot: sv.apply_cnot(g.qubit, g.target); break;
    }
  }

  const double half_pi = std::acos(0.0);  // pi/2
  auto shifted_eval = [&](size_t gate_index, double shift) {
    Statevector s = prefix[prefix_of[gate_index]];
    for (size_t gi = gate_index; gi < gates_.size(); ++gi) {
      const Gate& g = gates_[gi];
      const double delta = (gi == gate_index) ? shift : 0.0;
      switch (g.kind) {
        case Gate::kRyEncode: s.apply_ry(g.qubit, angles[g.qubit]); break;
        case Gate::kRyTheta: s.apply_ry(g.qubit, theta(g.theta_row, 0) + delta); break;
        case Gate::kRzTheta: s.apply_rz(g.qubit, theta(g.theta_row, 1) + delta); break;
        case Gate::kCnot: s.apply_cnot(g.qubit, g.target); break;
      }
    }
    double acc = 0.0;
    for (int k = 0; k < cfg_.qubits; ++k) acc += upstream[k] * s.z_expectation(k);
    return acc;
  };

  for (size_t gi = 0; gi < gates_.size(); ++gi) {
    const Gate& g = gates_[gi];
    if (g.kind != Gate::kRyTheta && g.kind != Gate::kRzTheta) continue;
    const double plus = shifted_eval(gi, half_pi);
    const double minus = shifted_eval(gi, -half_pi);
    grad(g.theta_row, g.theta_col) += (plus - minus) / 2.0;
  }
  return grad;
}

Mat vqc_input_map(uint64_t seed, int qubits, int d_u) {
  Rng rng(mix(seed, "vqc-input-map"));
  Mat a(qubits, d_u);
  const double var = 1.0 / static_cast<double>(d_u);
  for (double& v : a.data) v = rng.next_gaussian(0.0, var);
  return a;
}

Mat vqc_descriptor_all(const Mat& base_input, const Mat& input_map, const Mat& theta,
                       const VqcConfig& cfg) {
  if (input_map.cols != base_input.cols) throw ConfigError("vqc: input map width mismatch");
  const VqcCircuit circuit(cfg);
  Mat s(base_input.rows, cfg.qubits);
  std::vector<double> angles(cfg.qubits);
  for (int v = 0; v < base_input.rows; ++v) {
    for (int k = 0; k < cfg.qubits; ++k) {
      double acc = 0.0;
      for (int j = 0; j < base_input.cols; ++j) acc += input_map(k, j) * base_input(v, j);
      angles[k] = acc;
    }
    const std::vector<double> row = circuit.descriptor(angles, theta);
    for (int k = 0; k < cfg.qubits; ++k) s(v, k) = row[k];
  }
  return s;
}

}  // namespace qgb
