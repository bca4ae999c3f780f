#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "indrate/codes.hpp"
#include "indrate/errors.hpp"
#include "indrate/induced.hpp"
#include "indrate/search.hpp"
#include "reference.hpp"

using namespace indrate;

namespace {

const DenseStrategy kDenseStrategies[] = {DenseStrategy::kDirectBinning,
                                          DenseStrategy::kCoordinate,
                                          DenseStrategy::kConvolution};

std::vector<PauliVec> permute_qubits(const std::vector<PauliVec>& rows,
                                     const std::vector<std::uint32_t>& perm) {
  std::vector<PauliVec> out;
  out.reserve(rows.size());
  for (const PauliVec& row : rows) {
    PauliVec p{row.n, 0, 0};
    for (std::uint32_t i = 0; i < row.n; ++i) {
      p.x |= ((row.x >> i) & 1) << perm[i];
      p.z |= ((row.z >> i) & 1) << perm[i];
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("noiseless channel gives a point mass") {
  for (const char* code : {"ZZ", "ZZI,IZZ", "allz:n=4"}) {
    Tableau tab = build_tableau(parse_code(code));
    PauliDist noiseless{1, 0, 0, 0};
    InducedJoint joint = induced_joint_dense(tab, noiseless);
    CHECK(joint.table[0] == 1.0);
    for (std::size_t i = 1; i < joint.table.size(); ++i) CHECK(joint.table[i] == 0.0);
    EntropySummary s = summarize(joint);
    CHECK(s.h_conditional == 0.0);
    CHECK(s.rate == static_cast<double>(tab.k) / tab.n);
    EntropySummary st = induced_joint_streaming(tab, noiseless);
    CHECK(st.h_conditional == 0.0);
    CHECK(st.rate == s.rate);
  }
}

TEST_CASE("[[2,1]] ZZ with pure X noise, enumerated by hand") {
  // 16 two-qubit patterns, only X parts have mass at q_X=0.1, q_Z=0:
  //   II -> 0.81 at (0,0,0); X1X2 -> 0.01, the logical with s=0;
  //   X1, X2 -> 0.09 each, two distinct labels with s=1.
  Tableau tab = build_tableau(parse_code("ZZ"));
  PauliDist dist = skewed_dist(0.1, 0.0);
  InducedJoint joint = induced_joint_dense(tab, dist);
  REQUIRE(joint.table.size() == 8);

  CHECK(std::abs(joint.table[joint.index(0, 0, 0)] - 0.81) <= 1e-15);
  Coords both = decompose(pauli_from_string("XX"), tab);
  CHECK(std::abs(joint.table[joint.index(both.a, both.b, 0)] - 0.01) <= 1e-15);
  Coords one = decompose(pauli_from_string("XI"), tab);
  Coords two = decompose(pauli_from_string("IX"), tab);
  REQUIRE(one.s == 1);
  REQUIRE(two.s == 1);
  CHECK((one.a | one.b) != (two.a | two.b));
  CHECK(std::abs(joint.table[joint.index(one.a, one.b, 1)] - 0.09) <= 1e-15);
  CHECK(std::abs(joint.table[joint.index(two.a, two.b, 1)] - 0.09) <= 1e-15);

  EntropySummary s = summarize(joint);
  double expected = 0.82 * testref::h2(0.01 / 0.82) + 0.18 * testref::h2(0.5);
  CHECK(std::abs(s.h_conditional - expected) <= 1e-12);
  CHECK(std::abs(s.rate - (1.0 - expected) / 2.0) <= 1e-12);
}

TEST_CASE("[[3,1]] Z-repetition under pure Z noise") {
  // All Z patterns commute with the Z stabilizers, so s = 0 everywhere and
  // the logical-Z label collects odd-parity patterns:
  // 3 (0.1)(0.9)^2 + 0.1^3 = 0.244.
  Tableau tab = build_tableau(parse_code("ZZI,IZZ"));
  PauliDist dist = skewed_dist(0.0, 0.1);
  InducedJoint joint = induced_joint_dense(tab, dist);
  for (std::uint64_t s = 1; s < 4; ++s) {
    for (std::uint64_t a = 0; a < 2; ++a) {
      for (std::uint64_t b = 0; b < 2; ++b) {
        CHECK(joint.table[joint.index(a, b, s)] == 0.0);
      }
    }
  }
  Coords lz = decompose(pauli_from_string("ZII"), tab);
  REQUIRE(lz.s == 0);
  CHECK(std::abs(joint.table[joint.index(lz.a, lz.b, 0)] - 0.244) <= 1e-15);

  EntropySummary s = summarize(joint);
  CHECK(std::abs(s.h_conditional - testref::h2(0.244)) <= 1e-12);
  CHECK(std::abs(s.rate - (1.0 - testref::h2(0.244)) / 3.0) <= 1e-12);
}

TEST_CASE("all strategies agree with each other and the naive oracle") {
  std::vector<std::vector<PauliVec>> codes;
  std::size_t seen = 0;
  for (StandardFormShape shape :
       {StandardFormShape{2, 1, 1}, StandardFormShape{3, 1, 2},
        StandardFormShape{3, 2, 1}, StandardFormShape{4, 2, 0},
        StandardFormShape{4, 3, 1}}) {
    dfs_enumerate(shape, 1 << 16, [&](const CheckRows& rows) {
      if (seen++ % 7 == 0) codes.push_back(rows);  // thin the stream
    });
  }
  REQUIRE(codes.size() > 20);
  const PauliDist dists[] = {dist_from_total_p(0.249677777777778, 9),
                             dist_from_total_p(0.27, 9),
                             make_dist(0.7, 0.2, 0.06, 0.04)};
  for (const auto& rows : codes) {
    Tableau tab = build_tableau(rows);
    for (const PauliDist& dist : dists) {
      double reference = testref::naive_h_cond(rows, dist);
      for (DenseStrategy strategy : kDenseStrategies) {
        EntropySummary s = summarize(induced_joint_dense(tab, dist, strategy));
        CHECK(std::abs(s.h_conditional - reference) <= 1e-10);
      }
      EntropySummary st = induced_joint_streaming(tab, dist);
      CHECK(std::abs(st.h_conditional - reference) <= 1e-10);
    }
  }
}

TEST_CASE("dense tables normalize and marginals match the streaming bins") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t n = 2 + rng() % 7;  // up to n = 8
    std::uint32_t k = 1 + rng() % (n - 1);
    std::uint32_t r_x = rng() % (n - k + 1);
    auto rows = random_candidate(StandardFormShape{n, k, r_x}, rng);
    if (!rows) continue;
    Tableau tab = build_tableau(*rows);
    PauliDist dist = dist_from_total_p(0.26, 3);
    InducedJoint joint = induced_joint_dense(tab, dist);
    double total = 0.0;
    for (double p : joint.table) {
      CHECK(p >= 0.0);
      total += p;
    }
    CHECK(std::abs(total - 1.0) <= 1e-9);
    EntropySummary dense = summarize(joint);
    EntropySummary streaming = induced_joint_streaming(tab, dist);
    CHECK(std::abs(dense.h_conditional - streaming.h_conditional) <= 1e-10);
    CHECK(std::abs(dense.h_syndrome - streaming.h_syndrome) <= 1e-10);
    CHECK(std::abs(dense.h_joint - streaming.h_joint) <= 1e-10);
  }
}

TEST_CASE("summary identity and rate bound") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint32_t n = 2 + rng() % 5;
    std::uint32_t k = 1 + rng() % (n - 1);
    auto rows = random_candidate(StandardFormShape{n, k, 0}, rng);
    if (!rows) continue;
    Tableau tab = build_tableau(*rows);
    PauliDist dist = skewed_dist(0.1 + 0.3 * (trial % 3), 0.05);
    EntropySummary s = summarize(induced_joint_dense(tab, dist));
    CHECK(std::abs(s.h_conditional - (s.h_joint - s.h_syndrome)) <= 1e-9);
    CHECK(s.h_conditional >= -1e-12);
    CHECK(s.h_conditional <= 2.0 * k + 1e-12);
    // noisy channel: strictly below k/n
    CHECK(s.rate < static_cast<double>(tab.k) / tab.n);
  }
}

TEST_CASE("apply_correction permutes labels and preserves H(L|S)") {
  Tableau tab = build_tableau(parse_code("ZZI,IZZ"));
  PauliDist dist = dist_from_total_p(0.26, 9);
  InducedJoint joint = induced_joint_dense(tab, dist);
  EntropySummary base = summarize(joint);

  CorrectionRule identity(std::size_t{1} << joint.r, {0, 0});
  CHECK(apply_correction(joint, identity).table == joint.table);

  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    CorrectionRule rule;
    for (std::size_t s = 0; s < (std::size_t{1} << joint.r); ++s) {
      rule.push_back({rng() & 1, rng() & 1});
    }
    InducedJoint shifted = apply_correction(joint, rule);
    EntropySummary s = summarize(shifted);
    CHECK(std::abs(s.h_conditional - base.h_conditional) <= 1e-12);
    // same multiset per syndrome block
    double total = 0.0;
    for (double p : shifted.table) total += p;
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }

  // coset-ML moves each syndrome's mode to label (0,0)
  InducedJoint corrected = apply_correction(joint, coset_ml_rule(joint));
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << joint.r); ++s) {
    double mode = corrected.table[corrected.index(0, 0, s)];
    for (std::uint64_t a = 0; a < 2; ++a) {
      for (std::uint64_t b = 0; b < 2; ++b) {
        CHECK(corrected.table[corrected.index(a, b, s)] <= mode);
      }
    }
  }
  CHECK(std::abs(summarize(corrected).h_conditional - base.h_conditional) <= 1e-12);
}

TEST_CASE("qubit permutations leave the summary unchanged") {
  std::mt19937_64 rng(31);
  for (const char* code : {"ZZI,IZZ", "XXXX,ZZII", "allz:n=5", "zrep:n=6"}) {
    auto rows = parse_code(code);
    std::uint32_t n = rows[0].n;
    PauliDist dist = dist_from_total_p(0.255, 9);
    EntropySummary base = evaluate(build_tableau(rows), dist);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::uint32_t> perm(n);
      for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      EntropySummary permuted = evaluate(build_tableau(permute_qubits(rows, perm)), dist);
      CHECK(std::abs(permuted.h_conditional - base.h_conditional) <= 1e-10);
      CHECK(std::abs(permuted.h_syndrome - base.h_syndrome) <= 1e-10);
      CHECK(std::abs(permuted.rate - base.rate) <= 1e-10);
    }
  }
}

TEST_CASE("streaming is thread-count independent and partition-stable") {
  // n = 12 all-Z crosses the internal partition threshold
  Tableau tab = build_tableau(all_z_code(12));
  PauliDist dist = dist_from_total_p(0.2501, 9);
  EntropySummary one = induced_joint_streaming(tab, dist, {}, 1);
  EntropySummary two = induced_joint_streaming(tab, dist, {}, 2);
  CHECK(one.h_conditional == two.h_conditional);
  CHECK(one.h_syndrome == two.h_syndrome);
  CHECK(one.h_joint == two.h_joint);
  // against the closed form for the family
  SkewedParams q = skewed_from_total_error(0.2501, 9);
  CHECK(std::abs(one.h_conditional - testref::all_z_h_cond(12, q.q_x, q.q_z)) <= 1e-10);
}

TEST_CASE("Z-repetition under pure X noise matches the parity-pair oracle") {
  for (int n : {3, 4, 5, 6, 7}) {
    Tableau tab = build_tableau(z_repetition_code(n));
    PauliDist dist = skewed_dist(0.13, 0.0);
    EntropySummary s = evaluate(tab, dist);
    CHECK(std::abs(s.h_conditional - testref::zrep_h_cond(n, 0.13, 0.0)) <= 1e-12);
  }
}

TEST_CASE("evaluation caps") {
  Tableau allz8 = build_tableau(all_z_code(8));  // 2k+r = 15
  EvalLimits tight;
  tight.max_dense_bits = 10;
  CHECK_THROWS_AS(induced_joint_dense(allz8, skewed_dist(0.1, 0.01), DenseStrategy::kAuto, tight),
                  MemoryCapExceededError);
  // evaluate() falls back to streaming under the same limits
  EntropySummary viaCap = evaluate(allz8, skewed_dist(0.1, 0.01), tight);
  EntropySummary direct = summarize(induced_joint_dense(allz8, skewed_dist(0.1, 0.01)));
  CHECK(std::abs(viaCap.h_conditional - direct.h_conditional) <= 1e-10);

  Tableau zrep6 = build_tableau(z_repetition_code(6));  // r = 5
  EvalLimits tiny;
  tiny.max_syndrome_bits = 3;
  CHECK_THROWS_AS(induced_joint_streaming(zrep6, skewed_dist(0.1, 0.01), tiny),
                  CosetCapExceededError);
}

TEST_CASE("degenerate k=0 codes evaluate to rate zero") {
  Tableau tab = build_tableau(parse_code("XZ,ZX"));  // commuting pair, k = 0
  CHECK(tab.k == 0);
  EntropySummary s = summarize(induced_joint_dense(tab, dist_from_total_p(0.26, 9)));
  CHECK(s.h_conditional == 0.0);
  CHECK(s.rate == 0.0);
}
