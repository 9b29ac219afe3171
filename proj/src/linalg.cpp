#include "qmet/linalg.hpp"

namespace qmet {

ParamVector canonicalized(const ParamVector& p) {
  ParamVector out = p;

  // tau lives on a 4*pi circle: map into (-2*pi, 2*pi].
  out.tau = std::fmod(out.tau, 4.0 * kPi);
  if (out.tau <= -2.0 * kPi) out.tau += 4.0 * kPi;
  if (out.tau > 2.0 * kPi) out.tau -= 4.0 * kPi;

  // Fold theta into [0, pi], compensating phi by pi when the pole is crossed.
  out.theta = std::fmod(out.theta, 2.0 * kPi);
  if (out.theta < 0.0) out.theta += 2.0 * kPi;
  if (out.theta > kPi) {
    out.theta = 2.0 * kPi - out.theta;
    out.phi += kPi;
  }

  out.phi = std::fmod(out.phi, 2.0 * kPi);
  if (out.phi < 0.0) out.phi += 2.0 * kPi;
  return out;
}

Matrix2c partial_trace(const Matrix4c& m, Keep keep) {
  Matrix2c out = Matrix2c::Zero();
  if (keep == Keep::first) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out(i, j) += m(2 * i + k, 2 * j + k);
  } else {
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i) out(k, l) += m(2 * i + k, 2 * i + l);
  }
  return out;
}

Matrix2c rotation_unitary(double tau, const Axis& axis) {
  const double half = tau / 2.0;
  return std::cos(half) * identity2() - Complex(0, 1) * std::sin(half) * bloch_operator(axis);
}

}  // namespace qmet
