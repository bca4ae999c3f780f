#include "indrate/pauli.hpp"

#include <stdexcept>

#include "indrate/errors.hpp"

namespace indrate {

int symplectic_product(const PauliVec& a, const PauliVec& b) {
  if (a.n != b.n) throw std::invalid_argument("symplectic_product: dimension mismatch");
  return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1;
}

PauliVec pauli_xor(const PauliVec& a, const PauliVec& b) {
  if (a.n != b.n) throw std::invalid_argument("pauli_xor: dimension mismatch");
  return PauliVec{a.n, a.x ^ b.x, a.z ^ b.z};
}

std::string to_string(const PauliVec& e) {
  static constexpr char kLabel[4] = {'I', 'X', 'Z', 'Y'};
  std::string out(e.n, 'I');
  for (std::uint32_t i = 0; i < e.n; ++i) {
    out[i] = kLabel[((e.x >> i) & 1) | (((e.z >> i) & 1) << 1)];
  }
  return out;
}

PauliVec pauli_from_string(std::string_view row) {
  if (row.empty() || row.size() > kMaxQubits) {
    throw std::invalid_argument("pauli_from_string: need 1.." +
                                std::to_string(kMaxQubits) + " characters");
  }
  PauliVec e{static_cast<std::uint32_t>(row.size()), 0, 0};
  for (std::size_t i = 0; i < row.size(); ++i) {
    switch (row[i]) {
      case 'I':
        break;
      case 'X':
        e.x |= std::uint64_t{1} << i;
        break;
      case 'Z':
        e.z |= std::uint64_t{1} << i;
        break;
      case 'Y':
        e.x |= std::uint64_t{1} << i;
        e.z |= std::uint64_t{1} << i;
        break;
      default:
        throw BadCharacterError("bad character '" + std::string(1, row[i]) +
                                "' in Pauli row \"" + std::string(row) + "\"");
    }
  }
  return e;
}

}  // namespace indrate
