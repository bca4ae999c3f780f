#include "indrate/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "indrate/errors.hpp"

namespace indrate {

namespace {

constexpr double kZeroCutoff = 1e-300;

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in [0,1]");
  }
}

}  // namespace

PauliDist make_dist(double p_i, double p_x, double p_y, double p_z) {
  check_probability(p_i, "p_I");
  check_probability(p_x, "p_X");
  check_probability(p_y, "p_Y");
  check_probability(p_z, "p_Z");
  double sum = p_i + p_x + p_y + p_z;
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("Pauli distribution must sum to 1 (got " +
                                std::to_string(sum) + ")");
  }
  return PauliDist{p_i, p_x, p_y, p_z};
}

PauliDist skewed_dist(double q_x, double q_z) {
  check_probability(q_x, "q_X");
  check_probability(q_z, "q_Z");
  return PauliDist{(1 - q_x) * (1 - q_z), q_x * (1 - q_z), q_x * q_z,
                   (1 - q_x) * q_z};
}

SkewedParams skewed_from_total_error(double p, double eta) {
  if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("p must be in [0,1)");
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  double disc = (1 + eta) * (1 + eta) - 4 * eta * p;
  if (disc < 0) throw NoValidRootError("no real root for (p, eta)");
  double q_z = ((1 + eta) - std::sqrt(disc)) / (2 * eta);
  double q_x = eta * q_z;
  if (!(q_z >= 0.0 && q_z <= 1.0 && q_x >= 0.0 && q_x <= 1.0)) {
    throw NoValidRootError("root gives flip probabilities outside [0,1]");
  }
  return SkewedParams{q_x, q_z, eta};
}

PauliDist dist_from_total_p(double p, double eta) {
  SkewedParams q = skewed_from_total_error(p, eta);
  return skewed_dist(q.q_x, q.q_z);
}

double pattern_prob(const PauliDist& dist, const PauliVec& e) {
  const double per_label[4] = {dist.p_i, dist.p_x, dist.p_z, dist.p_y};
  double prob = 1.0;
  for (std::uint32_t i = 0; i < e.n; ++i) {
    prob *= per_label[((e.x >> i) & 1) | (((e.z >> i) & 1) << 1)];
  }
  return prob;
}

double entropy_bits(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > kZeroCutoff) h -= p * std::log2(p);
  }
  return h;
}

double binary_entropy(double p) {
  double pair[2] = {p, 1.0 - p};
  return entropy_bits(pair);
}

double hashing_bound(const PauliDist& dist) {
  double probs[4] = {dist.p_i, dist.p_x, dist.p_y, dist.p_z};
  return 1.0 - entropy_bits(probs);
}

}  // namespace indrate
