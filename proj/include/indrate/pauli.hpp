#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "indrate/f2.hpp"

namespace indrate {

// Packed vectors for a code span 2n bits of one word, so n is capped where
// the bit tricks stay single-word.
inline constexpr std::uint32_t kMaxQubits = 31;

// An n-qubit Pauli modulo phase, as the binary pair [x|z]. Bit i of each
// half is qubit i+1; per qubit (x,z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y.
struct PauliVec {
  std::uint32_t n = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  friend bool operator==(const PauliVec&, const PauliVec&) = default;
};

// 0 iff the Paulis commute.
int symplectic_product(const PauliVec& a, const PauliVec& b);

PauliVec pauli_xor(const PauliVec& a, const PauliVec& b);

// 2n-bit packing used by the F2 layer and the enumeration loops: x in the
// low n bits, z in the high n bits.
inline std::uint64_t packed(const PauliVec& e) { return e.x | (e.z << e.n); }

inline PauliVec unpacked(std::uint32_t n, std::uint64_t u) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return PauliVec{n, u & mask, (u >> n) & mask};
}

// <e,f> = parity(dual_mask(e) & packed(f)): the symplectic form as a plain
// dot product against the half-swapped word.
inline std::uint64_t dual_mask(const PauliVec& e) { return e.z | (e.x << e.n); }

// One character per qubit from {I,X,Y,Z}, qubit i at position i.
std::string to_string(const PauliVec& e);
PauliVec pauli_from_string(std::string_view row);

}  // namespace indrate
