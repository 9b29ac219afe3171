#pragma once

#include "qmet/rng.hpp"
#include "qmet/state.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

// Classical and quantum Fisher information, Cramer-Rao machinery, the
// block-diagonality certificate for axis-agnostic estimation, and a seeded
// Monte Carlo check of estimator variance against the Cramer-Rao bound.
//
// All derivatives are central finite differences. Parameter index convention:
// 0 = tau, 1 = theta, 2 = phi.

namespace qmet {

struct NumericalConfig {
  double fd_step = 1e-5;      // central-difference step, radians
  double prob_floor = 1e-12;  // outcomes below this probability are degenerate
};

// Raised when a distribution is evaluated at a point where some outcome has
// vanishing probability but non-vanishing slope, so the quotient (dp)^2 / p
// must be taken analytically rather than numerically.
struct DegeneratePointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 3x3 Fisher information over (tau, theta, phi); symmetric PSD.
struct FisherMatrix {
  Eigen::Matrix3d entries;
  ParamVector eval_point;
};

struct QfiMatrix {
  Eigen::Matrix3d entries;
  ParamVector eval_point;
};

using WeightMatrix = Eigen::Matrix3d;

// diag(1, 0, 0): only the rotation angle counts in the scalar bound.
inline WeightMatrix tau_weight() {
  WeightMatrix w = WeightMatrix::Zero();
  w(0, 0) = 1.0;
  return w;
}

using ScalarFamily = std::function<OutcomeDistribution(double)>;
using ParamFamily = std::function<OutcomeDistribution(const ParamVector&)>;
using PureStateFamily = std::function<Eigen::VectorXcd(const ParamVector&)>;

inline ParamVector shifted(ParamVector p, int index, double delta) {
  switch (index) {
    case 0: p.tau += delta; break;
    case 1: p.theta += delta; break;
    case 2: p.phi += delta; break;
    default: throw std::invalid_argument("shifted: parameter index must be 0, 1 or 2");
  }
  return p;
}

// F(tau) = sum_m (d_tau p_m)^2 / p_m. Outcomes with p < prob_floor are skipped
// when their slope also vanishes (below sqrt(prob_floor)); otherwise a
// DegeneratePointError is raised.
double classical_fi_scalar(const ScalarFamily& dist, double tau0,
                           const NumericalConfig& cfg = {});

// F_ij = sum_m (d_i p_m)(d_j p_m) / p_m with the same degenerate-outcome policy.
FisherMatrix classical_fi_matrix(const ParamFamily& dist, const ParamVector& center,
                                 const NumericalConfig& cfg = {});

// Pure-state QFI matrix 4 Re(<d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>).
// Each perturbed state is re-phased to a real positive overlap with the
// center state before differencing, fixing the gauge.
QfiMatrix qfi_pure(const PureStateFamily& state, const ParamVector& center,
                   const NumericalConfig& cfg = {});

// Mixed-state QFI about one parameter via the symmetric logarithmic derivative
// L solving d rho = (L rho + rho L)/2, built in the eigenbasis of rho(center);
// eigenvalue pairs with lambda_i + lambda_j < prob_floor are dropped.
template <int N>
double qfi_sld(const std::function<Density<N>(const ParamVector&)>& family,
               const ParamVector& center, int index, const NumericalConfig& cfg = {}) {
  const double h = cfg.fd_step;
  const auto rho0 = family(center).matrix();
  const Eigen::Matrix<Complex, N, N> drho =
      (family(shifted(center, index, h)).matrix() - family(shifted(center, index, -h)).matrix()) /
      (2.0 * h);
  const auto eig = hermitian_eig<N>(rho0);
  const Eigen::Matrix<Complex, N, N> d =
      eig.eigenvectors.adjoint() * drho * eig.eigenvectors;
  double fi = 0.0;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const double denom = eig.eigenvalues(i) + eig.eigenvalues(j);
      if (denom < cfg.prob_floor) continue;
      fi += 2.0 * std::norm(d(i, j)) / denom;
    }
  }
  return fi;
}

// 4 Var(H) for H = sigma.n / 2 in the given probe state; the ceiling of the
// QFI for a single-qubit rotation. Always in [0, 1].
double generator_variance_bound(const Vector2c& psi, const Axis& axis);

// (1/N) Tr(W F^+), F^+ the Moore-Penrose pseudoinverse with singular values
// below 1e-10 dropped. For W = diag(1,0,0) and block-diagonal F this is
// 1 / (N F_tautau).
double weighted_cr_bound(const FisherMatrix& fisher, const WeightMatrix& weight,
                         std::int64_t trials);

struct Certificate {
  bool agnostic = false;
  double f_tau_tau = 0.0;
  double f_tau_theta = 0.0;
  double f_tau_phi = 0.0;
  std::string witness;  // empty when agnostic
};

// Agnostic iff |F_tau,theta| < tol, |F_tau,phi| < tol and F_tau,tau > 0.
Certificate agnosticity_certificate(const FisherMatrix& fisher, double tol = 1e-6);

enum class Estimator { MleBinary };

struct McConfig {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::uint64_t batches = 200;
  Estimator estimator = Estimator::MleBinary;
};

struct EstimationResult {
  std::vector<double> estimates;  // one per batch
  double sample_variance = 0.0;
  double cr_bound = 0.0;
  double ratio = 0.0;           // sample_variance / cr_bound
  std::uint64_t clamped_batches = 0;  // batches whose inversion saturated at 0 or pi
};

// Samples the binary family dist at tau_true (batches x trials Bernoulli draws,
// seeded per batch via SplitMix64::stream_seed) and inverts counts through the
// maximum-likelihood estimate tau_hat = arccos((n+ - n-) / (N * contrast)).
EstimationResult mle_monte_carlo(const ScalarFamily& dist, double tau_true, double contrast,
                                 const McConfig& mc);

// Tr(cov) for a symmetric PSD covariance matrix.
double mse_of(const Eigen::Matrix3d& cov);

}  // namespace qmet
