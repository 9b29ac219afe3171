#include "qmet/protocols.hpp"

namespace qmet {

namespace {
constexpr double kDenominatorFloor = 1e-14;
}

Povm<4> joint_projective_povm(const MeasurementSetting& ancilla, const MeasurementSetting& probe) {
  const auto anc = projective_povm(ancilla);
  const auto prb = projective_povm(probe);
  std::vector<PovmEffect<4>> effects;
  effects.reserve(4);
  for (const auto& a : anc.effects())
    for (const auto& p : prb.effects())
      effects.push_back({a.label + "," + p.label, kron(a.op, p.op)});
  return Povm<4>(std::move(effects));
}

OutcomeDistribution single_qubit_distribution(const SingleQubitConfig& cfg,
                                              const ParamVector& lambda) {
  const Matrix2c u = rotation_unitary(lambda);
  const Density2 probe = Density2::pure(cfg.probe_ket());
  const Density2 evolved(u * probe.matrix() * u.adjoint());
  return measure(evolved, projective_povm(cfg.measurement));
}

Matrix4c controlled_evolution(const Matrix2c& u) {
  if (!is_unitary(u)) throw std::invalid_argument("controlled_evolution: input is not unitary");
  const Matrix2c p0 = ket_zero() * ket_zero().adjoint();
  const Matrix2c p1 = ket_one() * ket_one().adjoint();
  return kron(p0, u) + kron(p1, u.adjoint().eval());
}

Density4 ccs_joint_state(const CcsConfig& cfg, const ParamVector& lambda) {
  if (cfg.ancilla.alpha < 0.0 || cfg.ancilla.alpha > kPi / 2)
    throw std::invalid_argument("ccs_joint_state: alpha must lie in [0, pi/2]");
  const Density2 ancilla = depolarize(Density2::pure(cfg.ancilla.ket()), cfg.ancilla_noise);
  const Matrix4c initial = kron(ancilla.matrix(), cfg.probe.matrix());
  const Matrix4c l = controlled_evolution(rotation_unitary(lambda));
  return Density4(l * initial * l.adjoint());
}

OutcomeDistribution ccs_ancilla_distribution(const CcsConfig& cfg, const ParamVector& lambda) {
  const Density4 joint = ccs_joint_state(cfg, lambda);
  const Density2 marginal(partial_trace(joint.matrix(), Keep::first));
  return measure(marginal, projective_povm(cfg.ancilla_measurement));
}

OutcomeDistribution ccs_joint_distribution(const CcsConfig& cfg, const ParamVector& lambda) {
  const Density4 joint = ccs_joint_state(cfg, lambda);
  return measure(joint, joint_projective_povm(cfg.ancilla_measurement, cfg.probe_measurement));
}

Density4 hindsight_joint_state(const HindsightConfig& cfg, const ParamVector& lambda) {
  const Vector2c l = axis_ket(cfg.singlet_axis);
  const Vector2c lbar = axis_ket_orthogonal(cfg.singlet_axis);
  // Singlet (|l>_P |lbar>_A - |lbar>_P |l>_A) / sqrt(2), stored ancilla-first.
  const Vector4c singlet = (kron(lbar, l) - kron(l, lbar)) / std::numbers::sqrt2;
  const Matrix4c evolution = kron(identity2(), rotation_unitary(lambda));
  return Density4(evolution * (singlet * singlet.adjoint()) * evolution.adjoint());
}

OutcomeDistribution hindsight_distribution(const HindsightConfig& cfg, const ParamVector& lambda) {
  const Density4 joint = hindsight_joint_state(cfg, lambda);
  return measure(joint, joint_projective_povm(cfg.ancilla_measurement, cfg.probe_measurement));
}

double analytic_fi_ccs(double contrast, double tau) {
  if (contrast < 0.0 || contrast > 1.0)
    throw std::invalid_argument("analytic_fi_ccs: contrast must lie in [0, 1]");
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  const double denom = 1.0 - contrast * contrast * c * c;
  if (std::abs(denom) < kDenominatorFloor)
    throw std::runtime_error("analytic_fi_ccs: denominator vanishes (contrast 1 at cos(tau) = +/-1)");
  return contrast * contrast * s * s / denom;
}

double analytic_fi_ent(double f, double tau) {
  if (f < 0.0 || f > 1.0) throw std::invalid_argument("analytic_fi_ent: f must lie in [0, 1]");
  const double c = std::cos(tau);
  const double s = std::sin(tau);
  const double d1 = (4.0 * f - 1.0) * c + 2.0 * f - 5.0;
  const double d2 = (4.0 * f - 1.0) * c + 2.0 * f + 1.0;
  if (std::abs(d1 * d2) < kDenominatorFloor)
    throw std::runtime_error("analytic_fi_ent: denominator vanishes");
  return -(1.0 - 4.0 * f) * (1.0 - 4.0 * f) * s * s / (d1 * d2);
}

}  // namespace qmet
