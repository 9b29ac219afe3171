#pragma once

#include "qmet/state.hpp"

// The three phase-estimation protocols, each exposed as a probability
// distribution parametrized by (tau, theta, phi), plus the closed-form Fisher
// information of the controlled-superposition and entangled strategies under
// white noise. Joint objects follow the global ancilla (x) probe ordering.

namespace qmet {

// Probe prepared in the x-z plane with Bloch vector sin(beta) x + cos(beta) z,
// rotated by the unknown unitary, then measured along a fixed direction.
struct SingleQubitConfig {
  double beta = kPi / 2;
  MeasurementSetting measurement{Axis::y()};

  Vector2c probe_ket() const { return axis_ket({beta, 0.0}); }
};

// Coherently controlled superposition: an ancilla prepared in
// cos(alpha)|0> + sin(alpha)|1> (optionally depolarized with strength f)
// controls whether the probe evolves under U or U^dagger.
struct CcsConfig {
  Density2 probe = Density2::pure(ket_zero());
  AncillaPreparation ancilla{};
  NoiseStrength ancilla_noise{};
  MeasurementSetting ancilla_measurement{Axis::x()};
  MeasurementSetting probe_measurement{Axis::y()};
};

// Entangled-pair strategy: probe and ancilla start in a singlet, the unknown
// unitary acts on the probe alone, then both qubits are measured projectively
// (M' on the ancilla, M on the probe).
struct HindsightConfig {
  Axis singlet_axis = Axis::z();
  MeasurementSetting ancilla_measurement{Axis::x()};
  MeasurementSetting probe_measurement{Axis::y()};
};

// Four-outcome product POVM labeled "a,p" with a, p in {+1, -1}; the ancilla
// outcome comes first.
Povm<4> joint_projective_povm(const MeasurementSetting& ancilla, const MeasurementSetting& probe);

OutcomeDistribution single_qubit_distribution(const SingleQubitConfig& cfg, const ParamVector& lambda);

// L = |0><0| (x) U + |1><1| (x) U^dagger. Throws if u is not unitary.
Matrix4c controlled_evolution(const Matrix2c& u);

Density4 ccs_joint_state(const CcsConfig& cfg, const ParamVector& lambda);

// Statistics of measuring only the ancilla after the controlled interaction.
// At alpha = pi/4, f = 1 this is (cos^2(tau/2), sin^2(tau/2)) for every axis.
OutcomeDistribution ccs_ancilla_distribution(const CcsConfig& cfg, const ParamVector& lambda);

// Joint ancilla/probe statistics; its ancilla marginal reproduces
// ccs_ancilla_distribution.
OutcomeDistribution ccs_joint_distribution(const CcsConfig& cfg, const ParamVector& lambda);

Density4 hindsight_joint_state(const HindsightConfig& cfg, const ParamVector& lambda);

OutcomeDistribution hindsight_distribution(const HindsightConfig& cfg, const ParamVector& lambda);

// Fisher information about tau of the binary family (1 +/- c cos(tau))/2,
// where c is the noise strength times the preparation coherence:
// c^2 sin^2(tau) / (1 - c^2 cos^2(tau)).
double analytic_fi_ccs(double contrast, double tau);

// Fisher information about tau of the noisy entangled strategy:
// -(1-4f)^2 sin^2(tau) / (((4f-1)cos(tau) + 2f - 5) ((4f-1)cos(tau) + 2f + 1)).
double analytic_fi_ent(double f, double tau);

}  // namespace qmet
