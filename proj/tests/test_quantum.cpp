#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgb/rng.hpp"
#include "qgb/statevector.hpp"
#include "qgb/vqc.hpp"
#include "test_helpers.hpp"

using namespace qgb;

namespace {

Mat random_theta(Rng& rng, const VqcConfig& cfg) {
  Mat theta(cfg.layers * cfg.qubits, 2);
  for (auto& v : theta.data) v = 2.0 * 3.14159265358979 * rng.next_double() - 3.14159265358979;
  return theta;
}

std::vector<double> random_angles(Rng& rng, int q) {
  std::vector<double> a(q);
  for (double& v : a) v = 2.0 * rng.next_double() - 1.0;
  return a;
}

}  // namespace

TEST_CASE("statevector gates") {
  SUBCASE("RY rotates |0> as expected") {
    Statevector sv(1);
    sv.apply_ry(0, 1.1);
    CHECK(sv.amplitudes()[0].real() == doctest::Approx(std::cos(0.55)));
    CHECK(sv.amplitudes()[1].real() == doctest::Approx(std::sin(0.55)));
    CHECK(sv.z_expectation(0) == doctest::Approx(std::cos(1.1)));
  }
  SUBCASE("CNOT flips the target when the control is set") {
    Statevector sv(2);
    sv.apply_ry(0, 3.14159265358979323846);  // |q0=1>
    sv.apply_cnot(0, 1);
    CHECK(std::norm(sv.amplitudes()[3]) == doctest::Approx(1.0));
    CHECK(sv.z_expectation(1) == doctest::Approx(-1.0));
  }
  SUBCASE("norm preserved after a pile of gates") {
    Rng rng(6);
    Statevector sv(4);
    for (int i = 0; i < 50; ++i) {
      const int q = int(rng.next_below(4));
      const double a = rng.next_gaussian();
      if (i % 3 == 0)
        sv.apply_ry(q, a);
      else if (i % 3 == 1)
        sv.apply_rz(q, a);
      else
        sv.apply_cnot(q, (q + 1) % 4);
      CHECK(std::fabs(sv.norm() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("vqc descriptor") {
  SUBCASE("zero angles and zero theta leave |0...0>") {
    const VqcConfig cfg{4, 2};
    const VqcCircuit circuit(cfg);
    Mat theta(circuit.theta_rows(), 2);
    const std::vector<double> s = circuit.descriptor(std::vector<double>(4, 0.0), theta);
    for (double v : s) CHECK(v == doctest::Approx(1.0));
  }
  SUBCASE("q=1 without layers measures cos(angle)") {
    const VqcConfig cfg{1, 0};
    const VqcCircuit circuit(cfg);
    Mat theta(0, 2);
    for (double a : {0.0, 0.3, -1.2, 2.5}) {
      const std::vector<double> s = circuit.descriptor({a}, theta);
      CHECK(s[0] == doctest::Approx(std::cos(a)).epsilon(1e-12));
    }
  }
  SUBCASE("q=3 matches the dense gate-matrix oracle") {
    const VqcConfig cfg{3, 2};
    const VqcCircuit circuit(cfg);
    Rng rng(77);
    for (int trial = 0; trial < 5; ++trial) {
      const Mat theta = random_theta(rng, cfg);
      const std::vector<double> angles = random_angles(rng, 3);
      const std::vector<double> s = circuit.descriptor(angles, theta);
      const std::vector<double> want = oracle::dense_vqc_descriptor(angles, theta, 3, 2);
      for (int k = 0; k < 3; ++k) CHECK(std::fabs(s[k] - want[k]) <= 1e-10);
    }
  }
  SUBCASE("descriptor entries stay in [-1, 1]") {
    const VqcConfig cfg{5, 2};
    const VqcCircuit circuit(cfg);
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<double> s =
          circuit.descriptor(random_angles(rng, 5), random_theta(rng, cfg));
      for (double v : s) {
        CHECK(v <= 1.0 + 1e-12);
        CHECK(v >= -1.0 - 1e-12);
      }
    }
  }
}

TEST_CASE("vqc parameter shift") {
  SUBCASE("single RY gradient is -sin(theta) to machine precision") {
    const VqcConfig cfg{1, 1};
    const VqcCircuit circuit(cfg);
    for (double t : {0.0, 0.4, -1.3, 2.2}) {
      Mat theta(1, 2);
      theta(0, 0) = t;
      theta(0, 1) = 0.0;
      const Mat g = circuit.param_shift_grad({0.0}, theta, {1.0});
      CHECK(g(0, 0) == doctest::Approx(-std::sin(t)).epsilon(1e-14));
      CHECK(g(0, 1) == doctest::Approx(0.0));  // RZ phase is invisible to Z
    }
  }
  SUBCASE("zero upstream gives zero gradient") {
    const VqcConfig cfg{3, 2};
    const VqcCircuit circuit(cfg);
    Rng rng(3);
    const Mat g =
        circuit.param_shift_grad(random_angles(rng, 3), random_theta(rng, cfg), {0, 0, 0});
    for (double v : g.data) CHECK(v == 0.0);
  }
  SUBCASE("q=3 L=2 matches central finite differences") {
    const VqcConfig cfg{3, 2};
    const VqcCircuit circuit(cfg);
    Rng rng(15);
    const std::vector<double> angles = random_angles(rng, 3);
    Mat theta = random_theta(rng, cfg);
    std::vector<double> upstream = {0.7, -1.3, 0.4};

    const Mat analytic = circuit.param_shift_grad(angles, theta, upstream);
    const double eps = 1e-6;
    double max_rel = 0.0;
    for (int r = 0; r < theta.rows; ++r) {
      for (int c = 0; c < 2; ++c) {
        const double t0 = theta(r, c);
        auto eval = [&]() {
          const std::vector<double> s = circuit.descriptor(angles, theta);
          double acc = 0.0;
          for (int k = 0; k < 3; ++k) acc += upstream[k] * s[k];
          return acc;
        };
        theta(r, c) = t0 + eps;
        const double plus = eval();
        theta(r, c) = t0 - eps;
        const double minus = eval();
        theta(r, c) = t0;
        const double fd = (plus - minus) / (2 * eps);
        const double rel = std::fabs(fd - analytic(r, c)) /
                           std::max({1.0, std::fabs(fd), std::fabs(analytic(r, c))});
        max_rel = std::max(max_rel, rel);
      }
    }
    CHECK(max_rel <= 1e-5);
  }
  SUBCASE("shifted evaluations equal full re-simulation bit for bit") {
    const VqcConfig cfg{3, 2};
    const VqcCircuit circuit(cfg);
    Rng rng(19);
    const std::vector<double> angles = random_angles(rng, 3);
    const Mat theta = random_theta(rng, cfg);
    const double half_pi = std::acos(0.0);
    Mat tp = theta, tm = theta;
    tp(0, 0) += half_pi;
    tm(0, 0) -= half_pi;
    const double by_resim =
        (circuit.descriptor(angles, tp)[0] - circuit.descriptor(angles, tm)[0]) / 2.0;
    const Mat g = circuit.param_shift_grad(angles, theta, {1.0, 0.0, 0.0});
    CHECK(g(0, 0) == by_resim);
  }
}

TEST_CASE("vqc input map and per-node descriptors") {
  const Mat a1 = vqc_input_map(7, 8, 13);
  const Mat a2 = vqc_input_map(7, 8, 13);
  CHECK(a1 == a2);
  CHECK(a1.rows == 8);
  CHECK(a1.cols == 13);
  const Mat b = vqc_input_map(8, 8, 13);
  CHECK(max_abs_diff(a1, b) > 0.0);

  const VqcConfig cfg{3, 1};
  Rng rng(23);
  Mat u(4, 5);
  for (auto& v : u.data) v = rng.next_gaussian();
  const Mat map = vqc_input_map(3, 3, 5);
  Mat theta(3, 2);
  for (auto& v : theta.data) v = rng.next_gaussian();
  const Mat s = vqc_descriptor_all(u, map, theta, cfg);
  CHECK(s.rows == 4);
  CHECK(s.cols == 3);
  const VqcCircuit circuit(cfg);
  for (int v = 0; v < 4; ++v) {
    std::vector<double> angles(3, 0.0);
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 5; ++j) angles[k] += map(k, j) * u(v, j);
    const std::vector<double> row = circuit.descriptor(angles, theta);
    for (int k = 0; k < 3; ++k) CHECK(s(v, k) == row[k]);
  }
}
