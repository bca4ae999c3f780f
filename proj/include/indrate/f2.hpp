#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace indrate::f2 {

// Vectors over F2 are bit masks; bit j is column j. One machine word per
// vector keeps rank/kernel/solve and all symplectic products branch-free.
using Word = std::uint64_t;

inline constexpr std::size_t kMaxCols = 64;

inline int parity(Word w) { return std::popcount(w) & 1; }

struct Matrix {
  std::size_t cols = 0;
  std::vector<Word> rows;
};

// Row echelon form with pivots at the highest set bit, so a vector with
// zeros at every pivot column is the numerically smallest member of its
// coset of the row space.
struct Echelon {
  std::size_t cols = 0;
  std::vector<Word> rows;  // nonzero rows only, fully reduced, pivots descending
  Word pivot_mask = 0;
};

Echelon reduce(Matrix m);

std::size_t rank(const Matrix& m);

// Basis of {v : M v^T = 0}; size is cols - rank(M).
std::vector<Word> kernel_basis(const Matrix& m);

// Solve A v^T = b (bit i of b is equation i). Returns the solution with all
// free coordinates zero, or a uniform sample of the affine solution space
// when an rng is supplied; nullopt when the system is inconsistent.
std::optional<Word> solve(const Matrix& a, Word b, std::mt19937_64* rng = nullptr);

// Low `bits` random bits from the raw engine stream.
inline Word random_bits(std::mt19937_64& rng, std::size_t bits) {
  if (bits == 0) return 0;
  Word w = rng();
  return bits >= 64 ? w : (w & ((Word{1} << bits) - 1));
}

}  // namespace indrate::f2
