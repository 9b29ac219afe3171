#include "qmet/estimation.hpp"

#include <cmath>

namespace qmet {

namespace {

constexpr double kPinvCutoff = 1e-10;

std::vector<double> probabilities_of(const OutcomeDistribution& d) {
  std::vector<double> out;
  out.reserve(d.size());
  for (const auto& [label, p] : d.entries()) out.push_back(p);
  return out;
}

void check_same_shape(const OutcomeDistribution& a, const OutcomeDistribution& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("fisher information: family changed outcome count under perturbation");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.entries()[i].first != b.entries()[i].first)
      throw std::invalid_argument("fisher information: family changed outcome labels under perturbation");
}

// Shared degenerate-outcome policy: returns true if the outcome contributes,
// false if it is skippable dust, throws when the quotient is genuinely singular.
bool outcome_contributes(double p, double max_abs_slope, const NumericalConfig& cfg) {
  if (p >= cfg.prob_floor) return true;
  if (max_abs_slope < std::sqrt(cfg.prob_floor)) return false;
  throw DegeneratePointError(
      "fisher information: outcome probability vanishes with non-vanishing slope; "
      "evaluate away from the boundary or take the limit analytically");
}

Eigen::Matrix3d pseudoinverse(const Eigen::Matrix3d& m) {
  const Eigen::Matrix<Complex, 3, 3> h = m.cast<Complex>();
  const auto eig = hermitian_eig<3>(h);
  Eigen::Matrix<Complex, 3, 3> inv = Eigen::Matrix<Complex, 3, 3>::Zero();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(eig.eigenvalues(i)) <= kPinvCutoff) continue;
    inv += eig.eigenvectors.col(i) * eig.eigenvectors.col(i).adjoint() / eig.eigenvalues(i);
  }
  return inv.real();
}

}  // namespace

double classical_fi_scalar(const ScalarFamily& dist, double tau0, const NumericalConfig& cfg) {
  const double h = cfg.fd_step;
  const auto center = dist(tau0);
  const auto plus = dist(tau0 + h);
  const auto minus = dist(tau0 - h);
  check_same_shape(center, plus);
  check_same_shape(center, minus);

  const auto p = probabilities_of(center);
  const auto pp = probabilities_of(plus);
  const auto pm = probabilities_of(minus);
  double fi = 0.0;
  for (std::size_t m = 0; m < p.size(); ++m) {
    const double dp = (pp[m] - pm[m]) / (2.0 * h);
    if (!outcome_contributes(p[m], std::abs(dp), cfg)) continue;
    fi += dp * dp / p[m];
  }
  return fi;
}

FisherMatrix classical_fi_matrix(const ParamFamily& dist, const ParamVector& center,
                                 const NumericalConfig& cfg) {
  const double h = cfg.fd_step;
  const auto base = dist(center);
  const auto p = probabilities_of(base);
  const std::size_t m_count = p.size();

  // jac[i][m] = d p_m / d lambda_i by central differences
  std::array<std::vector<double>, 3> jac;
  for (int i = 0; i < 3; ++i) {
    const auto plus = dist(shifted(center, i, h));
    const auto minus = dist(shifted(center, i, -h));
    check_same_shape(base, plus);
    check_same_shape(base, minus);
    const auto pp = probabilities_of(plus);
    const auto pm = probabilities_of(minus);
    jac[i].resize(m_count);
    for (std::size_t m = 0; m < m_count; ++m) jac[i][m] = (pp[m] - pm[m]) / (2.0 * h);
  }

  Eigen::Matrix3d f = Eigen::Matrix3d::Zero();
  for (std::size_t m = 0; m < m_count; ++m) {
    const double max_slope =
        std::max({std::abs(jac[0][m]), std::abs(jac[1][m]), std::abs(jac[2][m])});
    if (!outcome_contributes(p[m], max_slope, cfg)) continue;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) f(i, j) += jac[i][m] * jac[j][m] / p[m];
  }
  return {f, center};
}

QfiMatrix qfi_pure(const PureStateFamily& state, const ParamVector& center,
                   const NumericalConfig& cfg) {
  const double h = cfg.fd_step;
  const Eigen::VectorXcd psi0 = state(center);
  if (std::abs(psi0.norm() - 1.0) > kStructuralTol)
    throw std::invalid_argument("qfi_pure: state family is not normalized");

  // Re-phase to a real positive overlap with the center state.
  const auto gauge_fixed = [&psi0](Eigen::VectorXcd psi) {
    const Complex overlap = psi0.dot(psi);  // <psi0|psi>
    if (std::abs(overlap) > 0.0) psi *= std::conj(overlap) / std::abs(overlap);
    return psi;
  };

  std::array<Eigen::VectorXcd, 3> dpsi;
  for (int i = 0; i < 3; ++i) {
    const Eigen::VectorXcd plus = state(shifted(center, i, h));
    const Eigen::VectorXcd minus = state(shifted(center, i, -h));
    if (std::abs(plus.norm() - 1.0) > kStructuralTol ||
        std::abs(minus.norm() - 1.0) > kStructuralTol)
      throw std::invalid_argument("qfi_pure: state family is not normalized");
    dpsi[i] = (gauge_fixed(plus) - gauge_fixed(minus)) / (2.0 * h);
  }

  Eigen::Matrix3d f;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Complex overlap_ij = dpsi[i].dot(dpsi[j]);          // <d_i psi|d_j psi>
      const Complex gi = dpsi[i].dot(psi0);                     // <d_i psi|psi>
      const Complex gj = psi0.dot(dpsi[j]);                     // <psi|d_j psi>
      f(i, j) = 4.0 * (overlap_ij - gi * gj).real();
    }
  }
  return {(f + f.transpose()) / 2.0, center};
}

double generator_variance_bound(const Vector2c& psi, const Axis& axis) {
  if (std::abs(psi.norm() - 1.0) > kStructuralTol)
    throw std::invalid_argument("generator_variance_bound: state is not normalized");
  const Matrix2c h = bloch_operator(axis) / 2.0;
  const Vector2c hpsi = h * psi;
  const double h2 = hpsi.squaredNorm();                 // <H^2>
  const double h1 = psi.dot(hpsi).real();               // <H>
  return 4.0 * (h2 - h1 * h1);
}

double weighted_cr_bound(const FisherMatrix& fisher, const WeightMatrix& weight,
                         std::int64_t trials) {
  if (trials < 1) throw std::invalid_argument("weighted_cr_bound: trials must be >= 1");
  if (!is_psd(weight.cast<Complex>().eval(), 1e-10))
    throw std::invalid_argument("weighted_cr_bound: weight matrix is not PSD");
  return (weight * pseudoinverse(fisher.entries)).trace() / static_cast<double>(trials);
}

Certificate agnosticity_certificate(const FisherMatrix& fisher, double tol) {
  Certificate cert;
  cert.f_tau_tau = fisher.entries(0, 0);
  cert.f_tau_theta = fisher.entries(0, 1);
  cert.f_tau_phi = fisher.entries(0, 2);
  cert.agnostic = std::abs(cert.f_tau_theta) < tol && std::abs(cert.f_tau_phi) < tol &&
                  cert.f_tau_tau > 0.0;
  if (!cert.agnostic) {
    std::ostringstream msg;
    if (std::abs(cert.f_tau_theta) >= tol)
      msg << "|F_tau,theta| = " << std::abs(cert.f_tau_theta) << " >= " << tol << "; ";
    if (std::abs(cert.f_tau_phi) >= tol)
      msg << "|F_tau,phi| = " << std::abs(cert.f_tau_phi) << " >= " << tol << "; ";
    if (cert.f_tau_tau <= 0.0) msg << "F_tau,tau = " << cert.f_tau_tau << " is not positive; ";
    cert.witness = msg.str();
  }
  return cert;
}

EstimationResult mle_monte_carlo(const ScalarFamily& dist, double tau_true, double contrast,
                                 const McConfig& mc) {
  if (mc.trials < 1) throw std::invalid_argument("mle_monte_carlo: trials must be >= 1");
  if (mc.batches < 1) throw std::invalid_argument("mle_monte_carlo: batches must be >= 1");
  if (contrast <= 0.0 || contrast > 1.0)
    throw std::invalid_argument("mle_monte_carlo: contrast must lie in (0, 1]");

  const auto d = dist(tau_true);
  if (d.size() != 2)
    throw std::invalid_argument("mle_monte_carlo: estimator requires a two-outcome family");
  const double p_plus = d.entries()[0].second;
  if (p_plus <= 0.0 || p_plus >= 1.0)
    throw std::invalid_argument("mle_monte_carlo: outcome probabilities must lie strictly in (0, 1)");

  EstimationResult result;
  result.estimates.reserve(mc.batches);
  for (std::uint64_t b = 0; b < mc.batches; ++b) {
    SplitMix64 rng(SplitMix64::stream_seed(mc.seed, b));
    std::uint64_t n_plus = 0;
    for (std::uint64_t t = 0; t < mc.trials; ++t)
      if (rng.next_double() < p_plus) ++n_plus;
    // tau_hat = arccos((n+ - n-) / (N c)), clamped into the invertible range
    const double n = static_cast<double>(mc.trials);
    double x = (2.0 * static_cast<double>(n_plus) - n) / (n * contrast);
    if (x > 1.0 || x < -1.0) {
      x = std::clamp(x, -1.0, 1.0);
      ++result.clamped_batches;
    }
    result.estimates.push_back(std::acos(x));
  }

  double mean = 0.0;
  for (double e : result.estimates) mean += e;
  mean /= static_cast<double>(result.estimates.size());
  double var = 0.0;
  for (double e : result.estimates) var += (e - mean) * (e - mean);
  result.sample_variance =
      result.estimates.size() > 1 ? var / static_cast<double>(result.estimates.size() - 1) : 0.0;

  const double fi = classical_fi_scalar(dist, tau_true);
  result.cr_bound = 1.0 / (static_cast<double>(mc.trials) * fi);
  result.ratio = result.sample_variance / result.cr_bound;
  return result;
}

double mse_of(const Eigen::Matrix3d& cov) {
  if ((cov - cov.transpose()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("mse_of: covariance matrix is not symmetric");
  if (!is_psd(cov.cast<Complex>().eval(), 1e-8))
    throw std::invalid_argument("mse_of: covariance matrix is not PSD");
  return cov.trace();
}

}  // namespace qmet
