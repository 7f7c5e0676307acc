#pragma once

#include <cstdint>
#include <vector>

#include "qgb/matrix.hpp"

namespace qgb {

struct VqcConfig {
  int qubits = 8;
  int layers = 2;
};

// Angle-encoded variational circuit over the project statevector.
// Gate order per evaluation:
//   1. RY(angle_j) on qubit j, ascending j            (encoding layer)
//   2. per variational layer l: RY(theta[l,j,0]) ascending j,
//      then RZ(theta[l,j,1]) ascending j,
//      then the CNOT ring j -> (j+1) mod q ascending j (absent for q = 1)
//   3. Pauli-Z expectation on each qubit, descriptor length q.
// theta is stored as Mat(layers*qubits, 2): row l*q+j, col 0 = RY, col 1 = RZ.
class VqcCircuit {
 public:
  explicit VqcCircuit(VqcConfig cfg);

  const VqcConfig& config() const { return cfg_; }
  int theta_rows() const { return cfg_.layers * cfg_.qubits; }

  std::vector<double> descriptor(const std::vector<double>& angles, const Mat& theta) const;

  // Parameter-shift rule: d<Z_k>/d(theta_i) = (s_k(+pi/2) - s_k(-pi/2)) / 2,
  // chained with `upstream` (length q). Shifted evaluations resume from
  // cached prefix states, so each equals a full re-simulation bit for bit.
  Mat param_shift_grad(const std::vector<double>& angles, const Mat& theta,
                       const std::vector<double>& upstream) const;

 private:
  struct Gate {
    enum Kind { kRyEncode, kRyTheta, kRzTheta, kCnot } kind;
    int qubit = 0;
    int target = 0;     // cnot only
    int theta_row = 0;  // theta gates only
    int theta_col = 0;
  };

  VqcConfig cfg_;
  std::vector<Gate> gates_;
};

// Fixed input map A (qubits x d_u), entries Gaussian(0, 1/d_u) from the
// stream mix(seed, "vqc-input-map").
Mat vqc_input_map(uint64_t seed, int qubits, int d_u);

// Descriptor rows for every node: angles = A * u_v.
Mat vqc_descriptor_all(const Mat& base_input, const Mat& input_map, const Mat& theta,
                       const VqcConfig& cfg);

}  // namespace qgb
