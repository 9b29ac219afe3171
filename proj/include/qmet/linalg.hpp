#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

// Dense complex linear algebra for one- and two-qubit operators. Everything is
// a value type on top of fixed-size Eigen matrices; free functions never
// mutate their arguments.

namespace qmet {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;
using Vector4c = Eigen::Vector4cd;

inline constexpr double kPi = std::numbers::pi;

// Default tolerances: structural predicates (hermiticity, positivity, trace)
// use 1e-10; unitarity and state normalization use 1e-12.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-12;

inline Matrix2c identity2() { return Matrix2c::Identity(); }
inline Matrix4c identity4() { return Matrix4c::Identity(); }

inline Matrix2c pauli_x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix2c pauli_y() {
  Matrix2c m;
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix2c pauli_z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}

// Bloch-sphere direction in spherical polar coordinates.
struct Axis {
  double theta = 0.0;  // polar angle, [0, pi]
  double phi = 0.0;    // azimuth, [0, 2*pi)

  Eigen::Vector3d unit() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  static Axis x() { return {kPi / 2, 0.0}; }
  static Axis y() { return {kPi / 2, kPi / 2}; }
  static Axis z() { return {0.0, 0.0}; }
};

// sigma . n for a unit direction n.
inline Matrix2c bloch_operator(const Axis& axis) {
  const Eigen::Vector3d n = axis.unit();
  return n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
}

// Rotation angle plus rotation-axis angles; the estimation target (tau, theta, phi).
struct ParamVector {
  double tau = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  Axis axis() const { return {theta, phi}; }
};

// Maps onto the canonical ranges tau in (-2*pi, 2*pi], theta in [0, pi],
// phi in [0, 2*pi) without changing the rotation it describes.
ParamVector canonicalized(const ParamVector& p);

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kStructuralTol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = kUnitaryTol) {
  using Mat = typename Derived::PlainObject;
  const Mat prod = m.adjoint() * m;
  return (prod - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

template <typename Derived>
bool trace_is(const Eigen::MatrixBase<Derived>& m, double x, double tol = kStructuralTol) {
  return std::abs(Complex(m.trace()) - Complex(x, 0.0)) <= tol;
}

// Kronecker product with the first argument as the leading tensor factor.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  constexpr int ra = DerivedA::RowsAtCompileTime;
  constexpr int ca = DerivedA::ColsAtCompileTime;
  constexpr int rb = DerivedB::RowsAtCompileTime;
  constexpr int cb = DerivedB::ColsAtCompileTime;
  static_assert(ra != Eigen::Dynamic && ca != Eigen::Dynamic && rb != Eigen::Dynamic &&
                    cb != Eigen::Dynamic,
                "kron requires fixed-size operands");
  using Scalar = decltype(typename DerivedA::Scalar() * typename DerivedB::Scalar());
  Eigen::Matrix<Scalar, ra * rb, ca * cb> out;
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ca; ++j)
      for (int k = 0; k < rb; ++k)
        for (int l = 0; l < cb; ++l) out(i * rb + k, j * cb + l) = a(i, j) * b(k, l);
  return out;
}

enum class Keep { first, second };

// Trace over the discarded factor of a two-qubit operator; preserves the trace.
Matrix2c partial_trace(const Matrix4c& m, Keep keep);

template <int N>
struct EigenDecomposition {
  Eigen::Matrix<double, N, 1> eigenvalues;       // ascending
  Eigen::Matrix<Complex, N, N> eigenvectors;     // columns, unitary
};

namespace detail {

template <int N>
double offdiagonal_norm(const Eigen::Matrix<Complex, N, N>& a) {
  double sum = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace detail

// Cyclic Jacobi eigensolver for Hermitian matrices. Rotations use the smaller
// root of the Jacobi quadratic; a sweep visits every (p, q) pair. Converges
// when the off-diagonal Frobenius norm drops below 1e-12, capped at 100 sweeps.
template <int N>
EigenDecomposition<N> hermitian_eig(const Eigen::Matrix<Complex, N, N>& m,
                                    double tol = kStructuralTol) {
  using Mat = Eigen::Matrix<Complex, N, N>;
  if (!is_hermitian(m, tol)) throw std::invalid_argument("hermitian_eig: input is not Hermitian");

  constexpr int kMaxSweeps = 100;
  constexpr double kConvergence = 1e-12;

  Mat a = (m + m.adjoint()) / 2.0;  // strip anti-Hermitian dust
  Mat v = Mat::Identity();

  bool converged = detail::offdiagonal_norm<N>(a) < kConvergence;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < N - 1; ++p) {
      for (int q = p + 1; q < N; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq == 0.0) continue;
        const Complex phase = a(p, q) / apq;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (app - aqq) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const Complex s = t * c * phase;

        Mat g = Mat::Identity();
        g(p, p) = c;
        g(p, q) = -s;
        g(q, p) = std::conj(s);
        g(q, q) = c;
        a = (g.adjoint() * a * g).eval();
        v = (v * g).eval();
      }
    }
    a = ((a + a.adjoint()) / 2.0).eval();
    converged = detail::offdiagonal_norm<N>(a) < kConvergence;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "hermitian_eig: no convergence after " << kMaxSweeps
        << " sweeps, off-diagonal residual " << detail::offdiagonal_norm<N>(a);
    throw std::runtime_error(msg.str());
  }

  std::array<int, N> order;
  for (int i = 0; i < N; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition<N> out;
  for (int i = 0; i < N; ++i) {
    out.eigenvalues(i) = a(order[i], order[i]).real();
    out.eigenvectors.col(i) = v.col(order[i]);
  }
  return out;
}

template <typename Derived>
bool is_psd(const Eigen::MatrixBase<Derived>& m, double tol = kStructuralTol) {
  constexpr int n = Derived::RowsAtCompileTime;
  static_assert(n != Eigen::Dynamic, "is_psd requires a fixed-size matrix");
  if (!is_hermitian(m, tol)) return false;
  const Eigen::Matrix<Complex, n, n> h = m.template cast<Complex>();
  return hermitian_eig<n>(h, tol).eigenvalues.minCoeff() >= -tol;
}

// U = exp(-i tau sigma.n / 2) in closed form: cos(tau/2) I - i sin(tau/2) sigma.n.
Matrix2c rotation_unitary(double tau, const Axis& axis);

inline Matrix2c rotation_unitary(const ParamVector& p) { return rotation_unitary(p.tau, p.axis()); }

}  // namespace qmet
