#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "indrate/pauli.hpp"

namespace indrate {

// Dimensions of the canonical standard-form check matrix
//
//   ( I_{r_X}  A1  A2 | B   C1     C2 )      X columns: r_X | r_Z | k
//   ( 0        0   0  | D   I_{r_Z} E )      Z columns: r_X | r_Z | k
//
// with r_X rows carrying X support and r_Z = r - r_X pure-Z rows.
struct StandardFormShape {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t r_x = 0;

  std::uint32_t r() const { return n - k; }
  std::uint32_t r_z() const { return r() - r_x; }
};

// Free binary entries in the blocks above, before commutation constraints:
// r_X^2 + 3 r_X r_Z + 2 r_X k + r_Z k.
std::uint64_t free_bit_count(const StandardFormShape& shape);

using CheckRows = std::vector<PauliVec>;
using CodeSink = std::function<void(const CheckRows&)>;

struct DfsStats {
  std::uint64_t rx_assignments = 0;   // r_X-block odometer states visited
  std::uint64_t rx_commuting = 0;     // ... of which had pairwise-commuting rows
  std::uint64_t rz_enumerations = 0;  // r_Z-block odometers started (prune check)
  std::uint64_t emitted = 0;
};

// Exhaustive enumeration of commuting standard-form matrices for one shape,
// most significant block first (A1 ... C2, then D, E; C2/E increment
// fastest). The r_Z blocks are never enumerated under an r_X assignment
// whose rows fail to commute. Every emitted matrix is a valid generator
// set (independence comes with the identity blocks). Throws
// BudgetExceededError when 2^{N_free} > budget.
DfsStats dfs_enumerate(const StandardFormShape& shape, std::uint64_t budget,
                       const CodeSink& sink);

// One attempt at the relaxed-form random construction: random X parts row
// by row with Z parts solved from the commutation constraint, then pure-Z
// rows from a randomly mixed full-rank subset of ker(V_X). nullopt means
// the attempt must be rejected and restarted (inconsistent solve or kernel
// too small). Accepted outputs always validate.
std::optional<CheckRows> random_candidate(const StandardFormShape& shape,
                                          std::mt19937_64& rng);

struct SearchConfig {
  std::uint32_t n_min = 2;
  std::uint32_t n_max = 4;
  std::uint64_t budget = 1'000'000;   // T: max DFS iterations per (n,k,r_X)
  std::uint64_t seed = 0;
  std::uint32_t sample_count = 10'000;  // random candidates per oversized cell
};

// All triples (n_min <= n <= n_max, 1 <= k <= n-1, 0 <= r_X <= n-k), DFS
// when 2^{N_free} <= budget and random sampling otherwise. The stream is a
// pure function of the config: cells are seeded independently from
// (seed, n, k, r_X).
void sweep(const SearchConfig& config,
           const std::function<void(const StandardFormShape&, const CheckRows&)>& sink);

}  // namespace indrate
