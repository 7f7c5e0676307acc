#include "qgb/statevector.hpp"

#include <cmath>

#include "qgb/error.hpp"

namespace qgb {

Statevector::Statevector(int num_qubits)
    : num_qubits_(num_qubits), amps_(size_t{1} << num_qubits, cplx(0, 0)) {
  if (num_qubits < 1 || num_qubits > 24) throw ConfigError("statevector: bad qubit count");
  amps_[0] = cplx(1, 0);
}

void Statevector::apply_ry(int qubit, double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  const size_t bit = size_t{1} << qubit;
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const cplx a0 = amps_[i];
    const cplx a1 = amps_[i | bit];
    amps_[i] = c * a0 - s * a1;
    amps_[i | bit] = s * a0 + c * a1;
  }
}

void Statevector::apply_rz(int qubit, double angle) {
  const cplx p0 = std::exp(cplx(0.0, -angle / 2.0));
  const cplx p1 = std::exp(cplx(0.0, angle / 2.0));
  const size_t bit = size_t{1} << qubit;
  for (size_t i = 0; i < amps_.size(); ++i) amps_[i] *= (i & bit) ? p1 : p0;
}

void Statevector::apply_cnot(int control, int target) {
  const size_t cbit = size_t{1} << control;
  const size_t tbit = size_t{1} << target;
  for (size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

double Statevector::z_expectation(int qubit) const {
  const size_t bit = size_t{1} << qubit;
  double e = 0.0;
  for (size_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    e += (i & bit) ? -p : p;
  }
  return e;
}

double Statevector::norm() const {
  double s = 0.0;
  for (const cplx& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

}  // namespace qgb
