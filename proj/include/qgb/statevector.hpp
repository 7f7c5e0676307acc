#pragma once

#include <vector>

#include "qgb/matrix.hpp"

namespace qgb {

// Full 2^q amplitude vector. Qubit j addresses bit j of the basis index
// (little-endian), so qubit 0 is the least significant bit.
class Statevector {
 public:
  explicit Statevector(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }

  // RY(a) = [[cos a/2, -sin a/2], [sin a/2, cos a/2]]
  void apply_ry(int qubit, double angle);
  // RZ(a) = diag(e^{-ia/2}, e^{+ia/2})
  void apply_rz(int qubit, double angle);
  void apply_cnot(int control, int target);

  double z_expectation(int qubit) const;
  double norm() const;

 private:
  int num_qubits_;
  std::vector<cplx> amps_;
};

}  // namespace qgb
