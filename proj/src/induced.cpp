#include "indrate/induced.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "indrate/errors.hpp"
#include "indrate/f2.hpp"
#include "indrate/parallel.hpp"

namespace indrate {

namespace {

constexpr double kZeroCutoff = 1e-300;

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// P_phys(u) as a product of one lookup per 8-qubit group; key per group is
// the x byte in the low half and the z byte in the high half.
class GroupTables {
 public:
  GroupTables(std::uint32_t n, const PauliDist& dist) : n_(n) {
    const double per_label[4] = {dist.p_i, dist.p_x, dist.p_z, dist.p_y};
    groups_ = (n + 7) / 8;
    tables_.assign(groups_, std::vector<double>(1u << 16, 1.0));
    for (std::uint32_t g = 0; g < groups_; ++g) {
      std::uint32_t width = std::min<std::uint32_t>(8, n - 8 * g);
      for (std::uint32_t key = 0; key < (1u << 16); ++key) {
        double p = 1.0;
        for (std::uint32_t i = 0; i < width; ++i) {
          p *= per_label[((key >> i) & 1) | (((key >> (8 + i)) & 1) << 1)];
        }
        tables_[g][key] = p;
      }
    }
  }

  double prob(std::uint64_t u) const {
    std::uint64_t x = u & ((std::uint64_t{1} << n_) - 1);
    std::uint64_t z = u >> n_;
    double p = 1.0;
    for (std::uint32_t g = 0; g < groups_; ++g) {
      std::uint64_t key = ((x >> (8 * g)) & 0xFF) | (((z >> (8 * g)) & 0xFF) << 8);
      p *= tables_[g][key];
    }
    return p;
  }

 private:
  std::uint32_t n_;
  std::uint32_t groups_;
  std::vector<std::vector<double>> tables_;
};

// Dual masks that read the (a,b,s) coordinates of packed(e) as parities,
// bit j of the index from mask j (layout a | b<<k | s<<2k).
std::vector<std::uint64_t> label_masks(const Tableau& tab) {
  std::vector<std::uint64_t> masks;
  masks.reserve(2 * tab.k + tab.r);
  for (const PauliVec& lz : tab.logical_z) masks.push_back(dual_mask(lz));
  for (const PauliVec& lx : tab.logical_x) masks.push_back(dual_mask(lx));
  for (const PauliVec& h : tab.stabilizers) masks.push_back(dual_mask(h));
  return masks;
}

std::uint32_t dense_bits(const Tableau& tab) { return 2 * tab.k + tab.r; }

void check_dense_cap(const Tableau& tab, const EvalLimits& limits) {
  if (dense_bits(tab) > limits.max_dense_bits) {
    throw MemoryCapExceededError(
        "dense table needs 2k+r = " + std::to_string(dense_bits(tab)) +
        " bits, cap is " + std::to_string(limits.max_dense_bits) +
        "; use the streaming evaluator");
  }
}

void fill_direct_binning(const Tableau& tab, const PauliDist& dist,
                         std::vector<double>& table) {
  GroupTables tables(tab.n, dist);
  std::vector<std::uint64_t> masks = label_masks(tab);
  const std::uint64_t space = std::uint64_t{1} << (2 * tab.n);
  for (std::uint64_t u = 0; u < space; ++u) {
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      idx |= std::uint64_t{static_cast<unsigned>(f2::parity(u & masks[j]))} << j;
    }
    table[idx] += tables.prob(u);
  }
}

void fill_coordinate(const Tableau& tab, const PauliDist& dist,
                     std::vector<double>& table) {
  GroupTables tables(tab.n, dist);
  // Coordinate bit order (t, a, b, s) from least significant, so dropping
  // the t bits of the Gray code is exactly the table index.
  std::vector<std::uint64_t> rows;
  rows.reserve(2 * tab.n);
  for (const PauliVec& h : tab.stabilizers) rows.push_back(packed(h));
  for (const PauliVec& lx : tab.logical_x) rows.push_back(packed(lx));
  for (const PauliVec& lz : tab.logical_z) rows.push_back(packed(lz));
  for (const PauliVec& g : tab.destabilizers) rows.push_back(packed(g));
  const std::uint64_t space = std::uint64_t{1} << (2 * tab.n);
  std::uint64_t gray = 0;
  std::uint64_t e = 0;
  table[0] += tables.prob(0);
  for (std::uint64_t c = 1; c < space; ++c) {
    int j = std::countr_zero(c);
    gray ^= std::uint64_t{1} << j;
    e ^= rows[static_cast<std::size_t>(j)];
    table[gray >> tab.r] += tables.prob(e);
  }
}

void fill_convolution(const Tableau& tab, const PauliDist& dist,
                      std::vector<double>& table) {
  const double per_label[4] = {dist.p_i, dist.p_x, dist.p_z, dist.p_y};
  std::vector<std::uint64_t> masks = label_masks(tab);
  auto signature = [&](const PauliVec& e) {
    std::uint64_t u = packed(e);
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < masks.size(); ++j) {
      idx |= std::uint64_t{static_cast<unsigned>(f2::parity(u & masks[j]))} << j;
    }
    return idx;
  };
  std::vector<double> cur(table.size(), 0.0);
  std::vector<double> next(table.size(), 0.0);
  cur[0] = 1.0;
  for (std::uint32_t q = 0; q < tab.n; ++q) {
    // Signatures of X, Z, Y on qubit q; identity contributes at offset 0.
    std::uint64_t sx = signature(PauliVec{tab.n, std::uint64_t{1} << q, 0});
    std::uint64_t sz = signature(PauliVec{tab.n, 0, std::uint64_t{1} << q});
    std::uint64_t sy = sx ^ sz;
    for (std::uint64_t v = 0; v < table.size(); ++v) {
      next[v] = per_label[0] * cur[v] + per_label[1] * cur[v ^ sx] +
                per_label[2] * cur[v ^ sz] + per_label[3] * cur[v ^ sy];
    }
    std::swap(cur, next);
  }
  table = std::move(cur);
}

}  // namespace

InducedJoint induced_joint_dense(const Tableau& tab, const PauliDist& dist,
                                 DenseStrategy strategy, const EvalLimits& limits) {
  check_dense_cap(tab, limits);
  InducedJoint joint{tab.n, tab.k, tab.r, {}};
  joint.table.assign(std::size_t{1} << dense_bits(tab), 0.0);
  if (strategy == DenseStrategy::kAuto) {
    strategy = dense_bits(tab) <= 20 ? DenseStrategy::kConvolution
                                     : DenseStrategy::kCoordinate;
  }
  switch (strategy) {
    case DenseStrategy::kDirectBinning:
      fill_direct_binning(tab, dist, joint.table);
      break;
    case DenseStrategy::kCoordinate:
      fill_coordinate(tab, dist, joint.table);
      break;
    case DenseStrategy::kConvolution:
      fill_convolution(tab, dist, joint.table);
      break;
    case DenseStrategy::kAuto:
      break;  // unreachable
  }
  return joint;
}

EntropySummary summarize(const InducedJoint& joint) {
  const std::size_t block = std::size_t{1} << (2 * joint.k);
  const std::size_t syndromes = std::size_t{1} << joint.r;
  KahanSum joint_entropy;
  KahanSum h_cond;
  KahanSum h_syn;
  for (std::size_t s = 0; s < syndromes; ++s) {
    KahanSum marginal;
    KahanSum block_entropy;
    for (std::size_t i = s * block; i < (s + 1) * block; ++i) {
      double p = joint.table[i];
      marginal.add(p);
      if (p > kZeroCutoff) {
        double term = -p * std::log2(p);
        block_entropy.add(term);
        joint_entropy.add(term);
      }
    }
    double p_s = marginal.sum;
    if (p_s > kZeroCutoff) {
      // p(s) H(p(.|s)) = -sum_l p(l,s) log p(l,s) + p(s) log p(s)
      h_cond.add(block_entropy.sum + p_s * std::log2(p_s));
      h_syn.add(-p_s * std::log2(p_s));
    }
  }
  EntropySummary summary;
  summary.h_joint = joint_entropy.sum;
  summary.h_syndrome = h_syn.sum;
  // No logical qubits, no residual entropy; the accumulators only carry
  // rounding residue in that case.
  summary.h_conditional = joint.k == 0 ? 0.0 : h_cond.sum;
  summary.rate = (static_cast<double>(joint.k) - summary.h_conditional) / joint.n;
  return summary;
}

EntropySummary induced_joint_streaming(const Tableau& tab, const PauliDist& dist,
                                       const EvalLimits& limits, unsigned threads) {
  if (tab.r > limits.max_syndrome_bits) {
    throw CosetCapExceededError("streaming evaluator needs r <= " +
                                std::to_string(limits.max_syndrome_bits) +
                                ", code has r = " + std::to_string(tab.r));
  }
  const std::uint32_t n = tab.n;
  const std::uint32_t r = tab.r;
  const std::size_t cosets = std::size_t{1} << r;

  // All 2^r coset offsets, Gray-filled from the packed stabilizer rows.
  std::vector<std::uint64_t> combos(cosets, 0);
  for (std::size_t t = 1; t < cosets; ++t) {
    combos[t] = combos[t & (t - 1)] ^ packed(tab.stabilizers[static_cast<std::size_t>(
                    std::countr_zero(t))]);
  }
  std::vector<std::uint64_t> duals;
  duals.reserve(r);
  for (const PauliVec& h : tab.stabilizers) duals.push_back(dual_mask(h));

  // A pattern is its coset's minimal representative iff it has zeros at
  // every pivot column of the row space (pivots at the highest set bits).
  f2::Matrix m;
  m.cols = 2 * n;
  for (const PauliVec& h : tab.stabilizers) m.rows.push_back(packed(h));
  const std::uint64_t pivot_mask = f2::reduce(m).pivot_mask;

  const std::uint64_t reps = std::uint64_t{1} << (2 * n - r);
  const std::uint64_t top_mask = ((std::uint64_t{1} << r) - 1) << (2 * n - r);
  const bool contiguous = pivot_mask == top_mask;
  const std::uint64_t limit = contiguous ? reps : (std::uint64_t{1} << (2 * n));

  GroupTables tables(n, dist);

  // Fixed partition count regardless of thread count, merged in order, so
  // the result is a pure function of (tableau, dist).
  const std::size_t parts = limit >= (std::uint64_t{1} << 22) ? 64 : 1;
  struct Partial {
    KahanSum h_joint;
    KahanSum total;
    std::array<KahanSum, 256> bins{};
  };
  std::vector<Partial> partials(parts);

  parallel_for(parts, threads, [&](std::size_t pi) {
    Partial& acc = partials[pi];
    const std::uint64_t lo = limit / parts * pi + std::min<std::uint64_t>(pi, limit % parts);
    const std::uint64_t hi = lo + limit / parts + (pi < limit % parts ? 1 : 0);
    for (std::uint64_t u = lo; u < hi; ++u) {
      if (!contiguous && (u & pivot_mask) != 0) continue;
      double prob = tables.prob(u);
      for (std::size_t t = 1; t < cosets; ++t) prob += tables.prob(u ^ combos[t]);
      std::uint32_t s = 0;
      for (std::uint32_t i = 0; i < r; ++i) {
        s |= static_cast<std::uint32_t>(f2::parity(u & duals[i])) << i;
      }
      if (prob > kZeroCutoff) acc.h_joint.add(-prob * std::log2(prob));
      acc.bins[s].add(prob);
      acc.total.add(prob);
    }
  });

  KahanSum h_joint;
  KahanSum total;
  std::vector<double> marginal(cosets, 0.0);
  for (const Partial& acc : partials) {
    h_joint.add(acc.h_joint.sum);
    total.add(acc.total.sum);
    for (std::size_t s = 0; s < cosets; ++s) marginal[s] += acc.bins[s].sum;
  }
  if (std::abs(total.sum - 1.0) > 1e-6) {
    throw std::logic_error("streaming evaluator lost mass: total = " +
                           std::to_string(total.sum));
  }
  EntropySummary summary;
  summary.h_joint = h_joint.sum;
  summary.h_syndrome = entropy_bits(marginal);
  summary.h_conditional = tab.k == 0 ? 0.0 : summary.h_joint - summary.h_syndrome;
  summary.rate = (static_cast<double>(tab.k) - summary.h_conditional) / tab.n;
  return summary;
}

InducedJoint apply_correction(const InducedJoint& joint, const CorrectionRule& rule) {
  const std::size_t syndromes = std::size_t{1} << joint.r;
  if (rule.size() != syndromes) {
    throw std::invalid_argument("correction rule must cover every syndrome");
  }
  const std::uint64_t labels = std::uint64_t{1} << joint.k;
  InducedJoint out{joint.n, joint.k, joint.r, std::vector<double>(joint.table.size(), 0.0)};
  for (std::uint64_t s = 0; s < syndromes; ++s) {
    auto [a_c, b_c] = rule[s];
    if (a_c >= labels || b_c >= labels) {
      throw std::invalid_argument("correction offset out of range");
    }
    for (std::uint64_t a = 0; a < labels; ++a) {
      for (std::uint64_t b = 0; b < labels; ++b) {
        out.table[out.index(a, b, s)] = joint.table[joint.index(a ^ a_c, b ^ b_c, s)];
      }
    }
  }
  return out;
}

CorrectionRule coset_ml_rule(const InducedJoint& joint) {
  const std::size_t syndromes = std::size_t{1} << joint.r;
  const std::uint64_t labels = std::uint64_t{1} << joint.k;
  CorrectionRule rule(syndromes, {0, 0});
  for (std::uint64_t s = 0; s < syndromes; ++s) {
    double best = -1.0;
    for (std::uint64_t b = 0; b < labels; ++b) {
      for (std::uint64_t a = 0; a < labels; ++a) {
        double p = joint.table[joint.index(a, b, s)];
        if (p > best) {  // strict: ties keep the lowest index
          best = p;
          rule[s] = {a, b};
        }
      }
    }
  }
  return rule;
}

EntropySummary evaluate(const Tableau& tab, const PauliDist& dist,
                        const EvalLimits& limits, unsigned threads) {
  const std::uint32_t bits = dense_bits(tab);
  if (bits <= 20 && bits <= limits.max_dense_bits) {
    return summarize(induced_joint_dense(tab, dist, DenseStrategy::kConvolution, limits));
  }
  if (tab.r <= limits.max_syndrome_bits) {
    return induced_joint_streaming(tab, dist, limits, threads);
  }
  return summarize(induced_joint_dense(tab, dist, DenseStrategy::kCoordinate, limits));
}

}  // namespace indrate
