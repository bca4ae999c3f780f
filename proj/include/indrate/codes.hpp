#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "indrate/pauli.hpp"

namespace indrate {

// Comma-separated Pauli rows ("ZZI,IZZ") or a preset:
//   allz:n=<int>  [[n,n-1]], single row Z...Z
//   zrep:n=<int>  [[n,1]],   rows Z_i Z_{i+1}
// Rows are validated as a generator set (commuting, independent, nonzero).
std::vector<PauliVec> parse_code(std::string_view text);

std::string render_code(const std::vector<PauliVec>& rows);

std::vector<PauliVec> all_z_code(std::uint32_t n);
std::vector<PauliVec> z_repetition_code(std::uint32_t n);

// Row-reduced packed rows: a canonical encoding of the row space, used for
// caching and deterministic tie-breaks.
std::vector<std::uint64_t> canonical_key(const std::vector<PauliVec>& rows);

}  // namespace indrate
