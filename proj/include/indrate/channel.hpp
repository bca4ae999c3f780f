#pragma once

#include <span>

#include "indrate/pauli.hpp"

namespace indrate {

// Single-qubit Pauli error distribution. Any nonnegative quadruple summing
// to 1 is accepted; the skewed family below is just one way to build one.
struct PauliDist {
  double p_i = 1.0;
  double p_x = 0.0;
  double p_y = 0.0;
  double p_z = 0.0;

  friend bool operator==(const PauliDist&, const PauliDist&) = default;
};

// Validates ranges and normalization (1e-12).
PauliDist make_dist(double p_i, double p_x, double p_y, double p_z);

// Independent X/Z flips: the error is X^{U_X} Z^{U_Z} with U_X ~ Bern(q_X),
// U_Z ~ Bern(q_Z).
struct SkewedParams {
  double q_x = 0.0;
  double q_z = 0.0;
  double eta = 1.0;  // q_x / q_z
};

PauliDist skewed_dist(double q_x, double q_z);

// Inverts p = 1 - p_I at a fixed bias eta = q_X/q_Z, taking the smaller
// quadratic root (the branch connected to the noiseless channel at p = 0):
//   q_Z = (1 + eta - sqrt((1+eta)^2 - 4 eta p)) / (2 eta)
SkewedParams skewed_from_total_error(double p, double eta);
PauliDist dist_from_total_p(double p, double eta);

// Product over qubits of the per-qubit probability selected by (x_i, z_i).
double pattern_prob(const PauliDist& dist, const PauliVec& e);

// 1 - H(p) in bits per channel use; may be negative.
double hashing_bound(const PauliDist& dist);

// -sum p log2 p with zero terms skipped. Probabilities below 1e-300 are
// treated as exact zeros.
double entropy_bits(std::span<const double> probs);
double binary_entropy(double p);

}  // namespace indrate
