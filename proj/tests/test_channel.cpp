#include <cmath>

#include "doctest.h"
#include "indrate/channel.hpp"
#include "indrate/errors.hpp"
#include "reference.hpp"

using namespace indrate;

TEST_CASE("skewed_dist") {
  CHECK(skewed_dist(0, 0) == PauliDist{1, 0, 0, 0});
  CHECK(skewed_dist(1, 1) == PauliDist{0, 0, 1, 0});

  PauliDist d = skewed_dist(0.09, 0.01);
  CHECK(std::abs(d.p_i - 0.9009) <= 1e-15);
  CHECK(std::abs(d.p_x - 0.0891) <= 1e-15);
  CHECK(std::abs(d.p_z - 0.0091) <= 1e-15);
  CHECK(std::abs(d.p_y - 0.0009) <= 1e-15);

  CHECK_THROWS_AS(skewed_dist(-0.1, 0), std::invalid_argument);
  CHECK_THROWS_AS(skewed_dist(0, 1.5), std::invalid_argument);
}

TEST_CASE("skewed_dist sums to one exactly") {
  for (double q_x : {0.0, 1e-9, 0.1, 0.23, 0.5, 0.77, 1.0}) {
    for (double q_z : {0.0, 1e-12, 0.025, 0.3, 1.0}) {
      PauliDist d = skewed_dist(q_x, q_z);
      CHECK(std::abs(d.p_i + d.p_x + d.p_y + d.p_z - 1.0) <= 1e-15);
    }
  }
}

TEST_CASE("dist_from_total_p") {
  CHECK(dist_from_total_p(0, 5) == PauliDist{1, 0, 0, 0});

  // smaller quadratic root at (p=0.25, eta=9): q_Z = (10 - sqrt(91)) / 18
  SkewedParams q = skewed_from_total_error(0.25, 9);
  CHECK(std::abs(q.q_z - (10.0 - std::sqrt(91.0)) / 18.0) <= 1e-16);
  CHECK(std::abs(q.q_x - 9 * q.q_z) <= 1e-16);
  PauliDist d = dist_from_total_p(0.25, 9);
  CHECK(std::abs((1.0 - d.p_i) - 0.25) <= 1e-12);

  // eta=1, p=0.19: (1-q)^2 = 0.81
  SkewedParams sym = skewed_from_total_error(0.19, 1);
  CHECK(std::abs(sym.q_x - 0.1) <= 1e-12);
  CHECK(std::abs(sym.q_z - 0.1) <= 1e-12);

  CHECK_THROWS_AS(dist_from_total_p(1.0, 9), std::invalid_argument);
  CHECK_THROWS_AS(dist_from_total_p(-0.1, 9), std::invalid_argument);
  CHECK_THROWS_AS(dist_from_total_p(0.2, 0.0), std::invalid_argument);
}

TEST_CASE("dist_from_total_p round trip on a grid") {
  for (double eta : {1.0, 3.0, 9.0}) {
    for (double p = 0.0; p <= 0.5 + 1e-9; p += 0.025) {
      PauliDist d = dist_from_total_p(p, eta);
      CHECK(std::abs((1.0 - d.p_i) - p) <= 1e-12);
    }
  }
}

TEST_CASE("pattern_prob") {
  PauliDist d = make_dist(0.9009, 0.0891, 0.0009, 0.0091);
  CHECK(pattern_prob(d, PauliVec{3, 0, 0}) == doctest::Approx(0.9009 * 0.9009 * 0.9009).epsilon(1e-14));
  CHECK(pattern_prob(d, pauli_from_string("Y")) == 0.0009);
  CHECK(pattern_prob(d, pauli_from_string("XIZ")) ==
        doctest::Approx(0.0891 * 0.9009 * 0.0091).epsilon(1e-14));
}

TEST_CASE("pattern_prob sums to one over all patterns") {
  PauliDist d = make_dist(0.55, 0.25, 0.08, 0.12);
  for (std::uint32_t n = 1; n <= 6; ++n) {
    double total = 0.0;
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << (2 * n)); ++u) {
      total += pattern_prob(d, unpacked(n, u));
    }
    CHECK(std::abs(total - 1.0) <= 1e-10);
  }
}

TEST_CASE("hashing_bound") {
  CHECK(hashing_bound(PauliDist{1, 0, 0, 0}) == 1.0);
  CHECK(hashing_bound(make_dist(0.25, 0.25, 0.25, 0.25)) == -1.0);

  // skewed eta=9 at the first plot point
  PauliDist d = dist_from_total_p(0.249677777777778, 9);
  CHECK(std::abs(hashing_bound(d) - 0.0504004990623609) <= 1e-9);
}

TEST_CASE("hashing_bound is invariant under error-label permutation") {
  double p[3] = {0.2, 0.05, 0.15};
  double base = hashing_bound(make_dist(0.6, p[0], p[1], p[2]));
  int idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& perm : idx) {
    double v = hashing_bound(make_dist(0.6, p[perm[0]], p[perm[1]], p[perm[2]]));
    CHECK(std::abs(v - base) <= 1e-15);
  }
}

TEST_CASE("entropy helpers") {
  double quarter[4] = {0.25, 0.25, 0.25, 0.25};
  CHECK(entropy_bits(quarter) == 2.0);
  double with_zeros[4] = {0.5, 0.5, 0.0, 0.0};
  CHECK(entropy_bits(with_zeros) == 1.0);
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(std::abs(binary_entropy(0.244) - testref::h2(0.244)) == 0.0);
}
