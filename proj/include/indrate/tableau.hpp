#pragma once

#include <cstdint>
#include <vector>

#include "indrate/pauli.hpp"

namespace indrate {

// Full symplectic basis of F2^{2n} for an [[n,k]] code with r = n-k
// stabilizer generators:
//
//   <h_i,h_j> = 0        <h_i,g_j> = delta_ij     <g_i,g_j> = 0
//   <lx_i,lz_j> = delta_ij   <lx_i,lx_j> = <lz_i,lz_j> = 0
//
// and every stabilizer/destabilizer row commutes with every logical row.
struct Tableau {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t r = 0;
  std::vector<PauliVec> stabilizers;    // the given generators, verbatim
  std::vector<PauliVec> destabilizers;  // pure errors paired with them
  std::vector<PauliVec> logical_x;
  std::vector<PauliVec> logical_z;
};

// Throws NotCommutingError / NotIndependentError / ZeroRowError on an
// invalid generator set. Same checks as build_tableau, minus the basis
// completion; returns n.
std::uint32_t validate_check_rows(const std::vector<PauliVec>& rows);

// Completes the given commuting, independent, nonzero generators to a full
// tableau by constrained linear solves (destabilizers) and symplectic
// Gram-Schmidt pairing of the centralizer complement (logicals).
Tableau build_tableau(const std::vector<PauliVec>& stabilizer_rows);

// Coordinates of e = t.H + a.LX + b.LZ + s.G (componentwise XOR of selected
// rows). Read off by symplectic products against the dual rows:
// s_i = <e,h_i>, t_i = <e,g_i>, a_j = <e,lz_j>, b_j = <e,lx_j>.
struct Coords {
  std::uint64_t t = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t s = 0;

  friend bool operator==(const Coords&, const Coords&) = default;
};

Coords decompose(const PauliVec& e, const Tableau& tab);
PauliVec recompose(const Coords& c, const Tableau& tab);

}  // namespace indrate
