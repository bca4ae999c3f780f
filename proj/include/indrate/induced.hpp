#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "indrate/channel.hpp"
#include "indrate/tableau.hpp"

namespace indrate {

// Joint pmf of logical label (a,b) and syndrome s under the physical
// channel, aggregated over the stabilizer coset index. Dense layout:
// index = a | b << k | s << 2k.
struct InducedJoint {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t r = 0;
  std::vector<double> table;  // 4^k * 2^r entries

  std::size_t index(std::uint64_t a, std::uint64_t b, std::uint64_t s) const {
    return static_cast<std::size_t>(a | (b << k) | (s << (2 * k)));
  }
};

struct EntropySummary {
  double h_joint = 0.0;        // H(L,S) in bits
  double h_syndrome = 0.0;     // H(S)
  double h_conditional = 0.0;  // H(L|S) = H(L,S) - H(S)
  double rate = 0.0;           // (k - H(L|S)) / n, per physical channel use
};

struct EvalLimits {
  // Dense tables need 2k + r <= max_dense_bits (the default is a 512 MiB
  // table); the streaming path needs r <= max_syndrome_bits.
  std::uint32_t max_dense_bits = 26;
  std::uint32_t max_syndrome_bits = 8;
};

enum class DenseStrategy {
  kAuto,           // convolution when small, coordinate enumeration otherwise
  kDirectBinning,  // all 4^n patterns through decompose
  kCoordinate,     // all 2^{2n} coordinate tuples, Gray-coded row XOR
  kConvolution,    // n-fold XOR convolution of per-qubit signature pmfs
};

// Exact dense table; the three strategies are algebraically identical and
// differ only in enumeration order. Throws MemoryCapExceededError when
// 2k + r exceeds limits.max_dense_bits.
InducedJoint induced_joint_dense(const Tableau& tab, const PauliDist& dist,
                                 DenseStrategy strategy = DenseStrategy::kAuto,
                                 const EvalLimits& limits = {});

EntropySummary summarize(const InducedJoint& joint);

// Same summary as summarize(induced_joint_dense(...)) without materializing
// the table: enumerates all 4^n patterns, visits each stabilizer coset at
// its minimal representative, and accumulates -P log P plus the 2^r-entry
// syndrome marginal with compensated summation. O(2^r) memory. Throws
// CosetCapExceededError when r > limits.max_syndrome_bits.
//
// The enumeration range is always cut into the same fixed partitions and
// merged in order, so results do not depend on the thread count.
EntropySummary induced_joint_streaming(const Tableau& tab, const PauliDist& dist,
                                       const EvalLimits& limits = {},
                                       unsigned threads = 1);

// Deterministic per-syndrome label permutation: rule[s] = (a_c, b_c) maps
// p'(a,b,s) = p(a ^ a_c, b ^ b_c, s). Leaves H(L|S) unchanged.
using CorrectionRule = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

InducedJoint apply_correction(const InducedJoint& joint, const CorrectionRule& rule);

// Offsets that move each syndrome's most likely label to (0,0), ties by
// lowest index.
CorrectionRule coset_ml_rule(const InducedJoint& joint);

// Picks a strategy from the dimensions: convolution when 2k + r <= 20,
// otherwise streaming when r fits, otherwise a dense coordinate pass.
EntropySummary evaluate(const Tableau& tab, const PauliDist& dist,
                        const EvalLimits& limits = {}, unsigned threads = 1);

}  // namespace indrate
