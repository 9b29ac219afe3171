#pragma once

#include "qmet/estimation.hpp"
#include "qmet/protocols.hpp"
#include "qmet/rng.hpp"

// Test-only generators and independent closed-form oracles. The oracles were
// derived by hand from the Born rule and are deliberately kept free of the
// library's simulation path.

namespace qmet::test {

inline Axis random_axis(SplitMix64& rng) {
  // uniform on the sphere
  return {std::acos(1.0 - 2.0 * rng.next_double()), rng.uniform(0.0, 2.0 * kPi)};
}

inline ParamVector random_lambda(SplitMix64& rng, double tau_lo = -2.0 * kPi,
                                 double tau_hi = 2.0 * kPi) {
  const Axis a = random_axis(rng);
  return {rng.uniform(tau_lo, tau_hi), a.theta, a.phi};
}

inline Vector2c random_pure_ket(SplitMix64& rng) {
  const Axis a = random_axis(rng);
  return axis_ket(a);
}

inline Density2 random_density(SplitMix64& rng) {
  const double w = rng.next_double();
  const Vector2c a = random_pure_ket(rng);
  const Vector2c b = random_pure_ket(rng);
  return Density2(w * (a * a.adjoint()) + (1.0 - w) * (b * b.adjoint()));
}

template <int N>
Eigen::Matrix<Complex, N, N> random_hermitian(SplitMix64& rng) {
  Eigen::Matrix<Complex, N, N> m;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return (m + m.adjoint().eval()) / 2.0;
}

// Joint outcome probabilities of the controlled-superposition protocol with
// probe |0>, balanced ancilla, X on the ancilla and Y on the probe, expanded
// by hand from the Born rule. Outcome order (+1,+1), (+1,-1), (-1,+1), (-1,-1),
// ancilla first: both ancilla-+1 rows carry cos^2(tau/2)/2 and the axis-
// dependent terms sit in the ancilla--1 rows.
inline std::array<double, 4> ccs_reference_joint(const ParamVector& l) {
  const double c2 = std::cos(l.tau / 2) * std::cos(l.tau / 2);
  const double s2 = std::sin(l.tau / 2) * std::sin(l.tau / 2);
  const double k = std::sin(2 * l.theta) * std::sin(l.phi);
  return {c2 / 2, c2 / 2, s2 * (1 + k) / 2, s2 * (1 - k) / 2};
}

// Fisher information matrix of ccs_reference_joint over (tau, theta, phi).
inline Eigen::Matrix3d ccs_reference_fisher(const ParamVector& l) {
  const double s2 = std::sin(l.tau / 2) * std::sin(l.tau / 2);
  const double k2 = std::sin(2 * l.theta) * std::sin(2 * l.theta) * std::sin(l.phi) *
                    std::sin(l.phi);
  const double denom = 1.0 - k2;
  Eigen::Matrix3d f = Eigen::Matrix3d::Zero();
  f(0, 0) = 1.0;
  f(1, 1) = 4.0 * std::cos(2 * l.theta) * std::cos(2 * l.theta) * s2 * std::sin(l.phi) *
            std::sin(l.phi) / denom;
  f(1, 2) = std::sin(4 * l.theta) * s2 * std::sin(2 * l.phi) / (2.0 * denom);
  f(2, 1) = f(1, 2);
  f(2, 2) = std::sin(2 * l.theta) * std::sin(2 * l.theta) * s2 * std::cos(l.phi) *
            std::cos(l.phi) / denom;
  return f;
}

// Correlator of the singlet protocol with X on the ancilla and Y on the probe:
// P(a, p) = (1 - a p g)/4 with g below (from the Bloch rotation of the
// collapsed probe).
inline double hindsight_reference_g(const ParamVector& l) {
  return std::cos(l.theta) * std::sin(l.tau) +
         std::sin(l.theta) * std::sin(l.theta) * std::sin(l.phi) * std::cos(l.phi) *
             (1.0 - std::cos(l.tau));
}

inline std::array<double, 4> hindsight_reference_joint(const ParamVector& l) {
  const double g = hindsight_reference_g(l);
  return {(1 - g) / 4, (1 + g) / 4, (1 + g) / 4, (1 - g) / 4};
}

// Rank-one Fisher matrix grad(g) grad(g)^T / (1 - g^2) of the family above.
inline Eigen::Matrix3d hindsight_reference_fisher(const ParamVector& l) {
  const double g = hindsight_reference_g(l);
  const double sc = std::sin(l.phi) * std::cos(l.phi);
  Eigen::Vector3d grad;
  grad(0) = std::cos(l.theta) * std::cos(l.tau) +
            std::sin(l.theta) * std::sin(l.theta) * sc * std::sin(l.tau);
  grad(1) = -std::sin(l.theta) * std::sin(l.tau) +
            2.0 * std::sin(l.theta) * std::cos(l.theta) * sc * (1.0 - std::cos(l.tau));
  grad(2) = std::sin(l.theta) * std::sin(l.theta) * std::cos(2 * l.phi) * (1.0 - std::cos(l.tau));
  return grad * grad.transpose() / (1.0 - g * g);
}

// Uhlmann fidelity of two qubit states in closed form:
// F = Tr(rho sigma) + 2 sqrt(det rho det sigma).
inline double qubit_fidelity(const Density2& rho, const Density2& sigma) {
  const double cross = (rho.matrix() * sigma.matrix()).trace().real();
  const double dets = (rho.matrix().determinant() * sigma.matrix().determinant()).real();
  return cross + 2.0 * std::sqrt(std::max(0.0, dets));
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qmet::test
