#include "indrate/f2.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace indrate::f2 {

namespace {

inline int highest_bit(Word w) { return 63 - std::countl_zero(w); }

}  // namespace

Echelon reduce(Matrix m) {
  if (m.cols > kMaxCols) throw std::invalid_argument("f2: too many columns");
  Echelon ech;
  ech.cols = m.cols;
  for (Word row : m.rows) {
    // Reduce against existing pivots, highest bit first.
    for (Word pivot_row : ech.rows) {
      Word pivot = Word{1} << highest_bit(pivot_row);
      if (row & pivot) row ^= pivot_row;
    }
    if (row == 0) continue;
    Word pivot = Word{1} << highest_bit(row);
    // Clear the new pivot from earlier rows to keep the form fully reduced.
    for (Word& prev : ech.rows) {
      if (prev & pivot) prev ^= row;
    }
    ech.rows.push_back(row);
    ech.pivot_mask |= pivot;
  }
  // Keep rows sorted by descending pivot so the encoding is canonical.
  std::sort(ech.rows.begin(), ech.rows.end(), std::greater<Word>());
  return ech;
}

std::size_t rank(const Matrix& m) { return reduce(m).rows.size(); }

std::vector<Word> kernel_basis(const Matrix& m) {
  Echelon ech = reduce(m);
  std::vector<Word> basis;
  for (std::size_t c = 0; c < m.cols; ++c) {
    Word col = Word{1} << c;
    if (ech.pivot_mask & col) continue;
    Word v = col;
    for (Word row : ech.rows) {
      if (row & col) v |= Word{1} << highest_bit(row);
    }
    basis.push_back(v);
  }
  return basis;
}

std::optional<Word> solve(const Matrix& a, Word b, std::mt19937_64* rng) {
  if (a.cols > kMaxCols) throw std::invalid_argument("f2: too many columns");
  // Eliminate on (row, rhs bit) pairs; pivots at the highest set bit.
  std::vector<std::pair<Word, int>> reduced;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    Word row = a.rows[i];
    int rhs = static_cast<int>((b >> i) & 1);
    for (auto& [prow, prhs] : reduced) {
      Word pivot = Word{1} << highest_bit(prow);
      if (row & pivot) {
        row ^= prow;
        rhs ^= prhs;
      }
    }
    if (row == 0) {
      if (rhs != 0) return std::nullopt;  // 0 = 1
      continue;
    }
    Word pivot = Word{1} << highest_bit(row);
    for (auto& [prow, prhs] : reduced) {
      if (prow & pivot) {
        prow ^= row;
        prhs ^= rhs;
      }
    }
    reduced.emplace_back(row, rhs);
  }
  // Fully reduced system: with free coordinates at zero each row reads
  // v[pivot] = rhs.
  Word v = 0;
  for (auto& [row, rhs] : reduced) {
    if (rhs) v |= Word{1} << highest_bit(row);
  }
  if (rng != nullptr) {
    Matrix m{a.cols, a.rows};
    for (Word kvec : kernel_basis(m)) {
      if ((*rng)() & 1) v ^= kvec;
    }
  }
  return v;
}

}  // namespace indrate::f2
