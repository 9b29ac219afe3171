#include "qmet/state.hpp"

namespace qmet {

namespace {
constexpr double kProbabilityDust = 1e-12;
constexpr double kSumTol = 1e-10;
}  // namespace

OutcomeDistribution::OutcomeDistribution(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  double sum = 0.0;
  for (auto& [label, p] : entries_) {
    if (p < -kProbabilityDust)
      throw std::invalid_argument("OutcomeDistribution: probability of '" + label +
                                  "' is " + std::to_string(p));
    if (p > 1.0 + kProbabilityDust)
      throw std::invalid_argument("OutcomeDistribution: probability of '" + label +
                                  "' exceeds 1");
    p = std::clamp(p, 0.0, 1.0);
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTol)
    throw std::invalid_argument("OutcomeDistribution: probabilities sum to " +
                                std::to_string(sum));
}

double OutcomeDistribution::probability(std::string_view label) const {
  for (const auto& [l, p] : entries_)
    if (l == label) return p;
  throw std::invalid_argument("OutcomeDistribution: no outcome labeled '" + std::string(label) +
                              "'");
}

Povm<2> projective_povm(const MeasurementSetting& setting) {
  const Matrix2c n = bloch_operator(setting.axis);
  std::vector<PovmEffect<2>> effects;
  effects.push_back({"+1", (identity2() + n) / 2.0});
  effects.push_back({"-1", (identity2() - n) / 2.0});
  return Povm<2>(std::move(effects));
}

Density2 depolarize(const Density2& rho, NoiseStrength noise) {
  if (noise.f < 0.0 || noise.f > 1.0)
    throw std::invalid_argument("depolarize: noise strength must lie in [0, 1]");
  return Density2(noise.f * rho.matrix() + (1.0 - noise.f) / 2.0 * identity2());
}

double l1_coherence(const Density2& rho) { return 2.0 * std::abs(rho.matrix()(0, 1)); }

}  // namespace qmet
