#pragma once

#include "qmet/linalg.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Quantum states, projective measurements and the depolarizing channel.
//
// Tensor-ordering convention, used by every joint object in this library:
// the ancilla is the FIRST factor and the probe the SECOND, i.e. a joint
// operator is kron(ancilla_part, probe_part).

namespace qmet {

inline Vector2c ket_zero() { return {1.0, 0.0}; }
inline Vector2c ket_one() { return {0.0, 1.0}; }
inline Vector2c ket_plus() { return {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2}; }
inline Vector2c ket_minus() { return {1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2}; }

// +1 eigenstate of sigma.n: (cos(theta/2), e^{i phi} sin(theta/2)).
inline Vector2c axis_ket(const Axis& axis) {
  return {std::cos(axis.theta / 2.0),
          std::exp(Complex(0, axis.phi)) * std::sin(axis.theta / 2.0)};
}

// -1 eigenstate of sigma.n, orthonormal to axis_ket.
inline Vector2c axis_ket_orthogonal(const Axis& axis) {
  return {-std::exp(Complex(0, -axis.phi)) * std::sin(axis.theta / 2.0),
          Complex(std::cos(axis.theta / 2.0))};
}

// Trace-one positive-semidefinite Hermitian matrix; validated on construction.
template <int N>
class Density {
 public:
  using Matrix = Eigen::Matrix<Complex, N, N>;

  explicit Density(const Matrix& m, double tol = kStructuralTol) : m_(m) {
    if (!is_hermitian(m_, tol)) throw std::invalid_argument("Density: matrix is not Hermitian");
    if (!trace_is(m_, 1.0, tol)) throw std::invalid_argument("Density: trace is not 1");
    if (!is_psd(m_, tol)) throw std::invalid_argument("Density: matrix is not positive semidefinite");
  }

  static Density pure(const Eigen::Matrix<Complex, N, 1>& ket) {
    if (std::abs(ket.norm() - 1.0) > kStructuralTol)
      throw std::invalid_argument("Density::pure: ket is not normalized");
    return Density(ket * ket.adjoint());
  }

  static Density maximally_mixed() { return Density(Matrix::Identity() / double(N)); }

  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

using Density2 = Density<2>;
using Density4 = Density<4>;

template <int N>
double purity(const Density<N>& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

// Pure preparation cos(alpha)|0> + sin(alpha)|1>; alpha in [0, pi/2].
struct AncillaPreparation {
  double alpha = kPi / 4;

  Vector2c ket() const { return {std::cos(alpha), std::sin(alpha)}; }
};

// Projective qubit measurement along a Bloch direction.
struct MeasurementSetting {
  Axis axis;
};

// White-noise strength: f = 1 leaves a state untouched, f = 0 fully mixes it.
struct NoiseStrength {
  double f = 1.0;
};

template <int N>
struct PovmEffect {
  std::string label;
  Eigen::Matrix<Complex, N, N> op;
};

// Positive effects summing to the identity.
template <int N>
class Povm {
 public:
  explicit Povm(std::vector<PovmEffect<N>> effects, double tol = kStructuralTol)
      : effects_(std::move(effects)) {
    Eigen::Matrix<Complex, N, N> sum = Eigen::Matrix<Complex, N, N>::Zero();
    for (const auto& e : effects_) {
      if (!is_psd(e.op, tol))
        throw std::invalid_argument("Povm: effect '" + e.label + "' is not PSD");
      sum += e.op;
    }
    if ((sum - Eigen::Matrix<Complex, N, N>::Identity()).cwiseAbs().maxCoeff() > tol)
      throw std::invalid_argument("Povm: effects do not sum to the identity");
  }

  const std::vector<PovmEffect<N>>& effects() const { return effects_; }

 private:
  std::vector<PovmEffect<N>> effects_;
};

// Labeled probability vector. Entries in [-1e-12, 0) are clamped to zero;
// anything more negative, or a total off 1 by more than 1e-10, is an error.
class OutcomeDistribution {
 public:
  using Entry = std::pair<std::string, double>;

  explicit OutcomeDistribution(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double probability(std::string_view label) const;

 private:
  std::vector<Entry> entries_;
};

// Born rule: p(label) = Tr(effect * rho).
template <int N>
OutcomeDistribution measure(const Density<N>& rho, const Povm<N>& povm) {
  std::vector<OutcomeDistribution::Entry> entries;
  entries.reserve(povm.effects().size());
  for (const auto& e : povm.effects())
    entries.emplace_back(e.label, (e.op * rho.matrix()).trace().real());
  return OutcomeDistribution(std::move(entries));
}

// Two-effect POVM {(I + sigma.n)/2, (I - sigma.n)/2} labeled "+1" / "-1".
Povm<2> projective_povm(const MeasurementSetting& setting);

// f * rho + (1 - f) * I/2.
Density2 depolarize(const Density2& rho, NoiseStrength noise);

// l1-norm of coherence of a qubit state in the computational basis: 2|rho_01|.
double l1_coherence(const Density2& rho);

}  // namespace qmet
