#include "indrate/codes.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

#include "indrate/errors.hpp"
#include "indrate/f2.hpp"
#include "indrate/tableau.hpp"

namespace indrate {

namespace {

std::uint32_t parse_preset_n(std::string_view text, std::string_view prefix) {
  std::string_view arg = text.substr(prefix.size());
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
    throw std::invalid_argument("bad preset argument in \"" + std::string(text) +
                                "\"");
  }
  return n;
}

}  // namespace

std::vector<PauliVec> all_z_code(std::uint32_t n) {
  if (n < 2 || n > kMaxQubits) throw std::invalid_argument("allz: n out of range");
  return {PauliVec{n, 0, (std::uint64_t{1} << n) - 1}};
}

std::vector<PauliVec> z_repetition_code(std::uint32_t n) {
  if (n < 2 || n > kMaxQubits) throw std::invalid_argument("zrep: n out of range");
  std::vector<PauliVec> rows;
  rows.reserve(n - 1);
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    rows.push_back(PauliVec{n, 0, std::uint64_t{0b11} << i});
  }
  return rows;
}

std::vector<PauliVec> parse_code(std::string_view text) {
  std::vector<PauliVec> rows;
  if (text.starts_with("allz:n=")) {
    rows = all_z_code(parse_preset_n(text, "allz:n="));
  } else if (text.starts_with("zrep:n=")) {
    rows = z_repetition_code(parse_preset_n(text, "zrep:n="));
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view row =
          text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      rows.push_back(pauli_from_string(row));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].n != rows[0].n) {
        throw LengthMismatchError("row " + std::to_string(i + 1) + " (\"" +
                                  to_string(rows[i]) + "\") has length " +
                                  std::to_string(rows[i].n) + ", expected " +
                                  std::to_string(rows[0].n));
      }
    }
  }
  validate_check_rows(rows);
  return rows;
}

std::string render_code(const std::vector<PauliVec>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(rows[i]);
  }
  return out;
}

std::vector<std::uint64_t> canonical_key(const std::vector<PauliVec>& rows) {
  if (rows.empty()) return {};
  f2::Matrix m{2 * std::size_t{rows[0].n}, {}};
  for (const PauliVec& row : rows) m.rows.push_back(packed(row));
  f2::Echelon ech = f2::reduce(std::move(m));
  std::vector<std::uint64_t> key;
  key.reserve(ech.rows.size() + 1);
  key.push_back(rows[0].n);
  key.insert(key.end(), ech.rows.begin(), ech.rows.end());
  return key;
}

}  // namespace indrate
