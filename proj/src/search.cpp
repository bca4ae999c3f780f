#include "indrate/search.hpp"

#include <stdexcept>
#include <string>

#include "indrate/errors.hpp"
#include "indrate/f2.hpp"

namespace indrate {

namespace {

void check_shape(const StandardFormShape& shape) {
  if (shape.n < 2 || shape.n > kMaxQubits) {
    throw std::invalid_argument("shape: n out of range");
  }
  if (shape.k < 1 || shape.k >= shape.n) {
    throw std::invalid_argument("shape: need 1 <= k <= n-1");
  }
  if (shape.r_x > shape.r()) throw std::invalid_argument("shape: r_X > r");
}

// Free bits of the r_X rows in significance order A1, A2, B, C1, C2 (A1
// highest). Within a block: row-major, row 0 / column 0 most significant.
struct RxLayout {
  struct Slot {
    std::uint32_t row;
    std::uint32_t col;   // qubit index
    bool z_half;
  };
  std::vector<Slot> slots;  // slots[0] is the most significant bit

  explicit RxLayout(const StandardFormShape& s) {
    auto block = [&](bool z_half, std::uint32_t col_lo, std::uint32_t col_hi) {
      for (std::uint32_t row = 0; row < s.r_x; ++row) {
        for (std::uint32_t col = col_lo; col < col_hi; ++col) {
          slots.push_back({row, col, z_half});
        }
      }
    };
    const std::uint32_t rx = s.r_x, rz = s.r_z();
    block(false, rx, rx + rz);          // A1
    block(false, rx + rz, s.n);         // A2
    block(true, 0, rx);                 // B
    block(true, rx, rx + rz);           // C1
    block(true, rx + rz, s.n);          // C2
  }

  void fill(std::uint64_t bits, std::vector<PauliVec>& rows) const {
    for (std::size_t i = 0; i < slots.size(); ++i) {
      // slot 0 = most significant bit of the odometer value
      std::uint64_t bit = (bits >> (slots.size() - 1 - i)) & 1;
      const Slot& slot = slots[i];
      if (slot.z_half) {
        rows[slot.row].z = (rows[slot.row].z & ~(std::uint64_t{1} << slot.col)) |
                           (bit << slot.col);
      } else {
        rows[slot.row].x = (rows[slot.row].x & ~(std::uint64_t{1} << slot.col)) |
                           (bit << slot.col);
      }
    }
  }
};

bool rows_commute(const std::vector<PauliVec>& rows, std::uint32_t count) {
  for (std::uint32_t i = 0; i < count; ++i) {
    for (std::uint32_t j = i + 1; j < count; ++j) {
      if (symplectic_product(rows[i], rows[j]) != 0) return false;
    }
  }
  return true;
}

std::uint64_t cell_seed(std::uint64_t seed, const StandardFormShape& shape) {
  // splitmix64 over (seed, n, k, r_x) so cells are independent streams.
  std::uint64_t z = seed ^ (std::uint64_t{shape.n} << 42) ^
                    (std::uint64_t{shape.k} << 21) ^ std::uint64_t{shape.r_x};
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t free_bit_count(const StandardFormShape& shape) {
  check_shape(shape);
  const std::uint64_t rx = shape.r_x, rz = shape.r_z(), k = shape.k;
  return rx * rx + 3 * rx * rz + 2 * rx * k + rz * k;
}

DfsStats dfs_enumerate(const StandardFormShape& shape, std::uint64_t budget,
                       const CodeSink& sink) {
  check_shape(shape);
  const std::uint64_t n_free = free_bit_count(shape);
  if (n_free >= 63 || (std::uint64_t{1} << n_free) > budget) {
    throw BudgetExceededError("2^N_free exceeds the enumeration budget (N_free = " +
                              std::to_string(n_free) + ")");
  }
  const std::uint32_t rx = shape.r_x, rz = shape.r_z(), r = shape.r();
  const std::uint32_t k = shape.k;
  DfsStats stats;

  std::vector<PauliVec> rows(r, PauliVec{shape.n, 0, 0});
  for (std::uint32_t i = 0; i < rx; ++i) rows[i].x |= std::uint64_t{1} << i;
  for (std::uint32_t j = 0; j < rz; ++j) rows[rx + j].z |= std::uint64_t{1} << (rx + j);

  RxLayout layout(shape);
  const std::uint64_t rx_states = std::uint64_t{1} << layout.slots.size();

  // r_Z rows carry only Z support, so they commute with each other for
  // free; against an r_X row only x . z survives in the symplectic product.
  // The rows are filled from one odometer over [D | E], D most significant,
  // row-major within each block.
  const std::uint32_t d_total = rz * rx;
  const std::uint32_t e_total = rz * k;
  const std::uint32_t rz_total = d_total + e_total;
  auto enumerate_rz = [&] {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rz_total); ++bits) {
      bool ok = true;
      for (std::uint32_t j = 0; j < rz && ok; ++j) {
        std::uint64_t z = std::uint64_t{1} << (rx + j);  // identity block
        for (std::uint32_t c = 0; c < rx; ++c) {
          std::uint64_t bit = (bits >> (rz_total - 1 - (j * rx + c))) & 1;
          z |= bit << c;
        }
        for (std::uint32_t c = 0; c < k; ++c) {
          std::uint64_t bit = (bits >> (e_total - 1 - (j * k + c))) & 1;
          z |= bit << (rx + rz + c);
        }
        for (std::uint32_t i = 0; i < rx; ++i) {
          if (f2::parity(rows[i].x & z)) {
            ok = false;
            break;
          }
        }
        rows[rx + j].z = z;
      }
      if (!ok) continue;
      ++stats.emitted;
      sink(rows);
    }
  };

  for (std::uint64_t bits = 0; bits < rx_states; ++bits) {
    ++stats.rx_assignments;
    layout.fill(bits, rows);
    if (!rows_commute(rows, rx)) continue;  // prune: no r_Z enumeration below
    ++stats.rx_commuting;
    ++stats.rz_enumerations;
    enumerate_rz();
  }
  return stats;
}

std::optional<CheckRows> random_candidate(const StandardFormShape& shape,
                                          std::mt19937_64& rng) {
  check_shape(shape);
  const std::uint32_t n = shape.n, rx = shape.r_x, rz = shape.r_z();
  CheckRows rows;
  rows.reserve(shape.r());

  // Relaxed form: X part is I | random over the last n - r_X columns; the Z
  // part of row 1 is fully random, later rows solve the commutation system.
  for (std::uint32_t u = 0; u < rx; ++u) {
    PauliVec row{n, 0, 0};
    row.x = (std::uint64_t{1} << u) | (f2::random_bits(rng, n - rx) << rx);
    if (u == 0) {
      row.z = f2::random_bits(rng, n);
    } else {
      // V_X u_Z^T = V_Z u_X^T over the previous rows.
      f2::Matrix v_x{n, {}};
      std::uint64_t rhs = 0;
      for (std::uint32_t i = 0; i < u; ++i) {
        v_x.rows.push_back(rows[i].x);
        rhs |= std::uint64_t{static_cast<unsigned>(f2::parity(rows[i].z & row.x))} << i;
      }
      auto z = f2::solve(v_x, rhs, &rng);
      if (!z) return std::nullopt;
      row.z = *z;
    }
    rows.push_back(row);
  }

  if (rz > 0) {
    // Pure-Z rows: a randomly mixed full-rank subset of ker(V_X). The mixing
    // matrix is rejection-sampled until it has rank r_Z.
    f2::Matrix v_x{n, {}};
    for (std::uint32_t i = 0; i < rx; ++i) v_x.rows.push_back(rows[i].x);
    std::vector<f2::Word> kernel = f2::kernel_basis(v_x);
    if (kernel.size() < rz) return std::nullopt;
    f2::Matrix mix{kernel.size(), {}};
    for (int attempt = 0; attempt < 64; ++attempt) {
      mix.rows.clear();
      for (std::uint32_t j = 0; j < rz; ++j) {
        mix.rows.push_back(f2::random_bits(rng, kernel.size()));
      }
      if (f2::rank(mix) == rz) break;
      if (attempt == 63) return std::nullopt;
    }
    for (std::uint32_t j = 0; j < rz; ++j) {
      std::uint64_t z = 0;
      for (std::size_t b = 0; b < kernel.size(); ++b) {
        if ((mix.rows[j] >> b) & 1) z ^= kernel[b];
      }
      rows.push_back(PauliVec{n, 0, z});
    }
  }

  return rows;
}

void sweep(const SearchConfig& config,
           const std::function<void(const StandardFormShape&, const CheckRows&)>& sink) {
  if (config.n_min < 2) throw std::invalid_argument("sweep: n_min must be >= 2");
  if (config.n_max < config.n_min || config.n_max > kMaxQubits) {
    throw std::invalid_argument("sweep: n_max out of range");
  }
  for (std::uint32_t n = config.n_min; n <= config.n_max; ++n) {
    for (std::uint32_t k = 1; k <= n - 1; ++k) {
      for (std::uint32_t r_x = 0; r_x <= n - k; ++r_x) {
        StandardFormShape shape{n, k, r_x};
        const std::uint64_t n_free = free_bit_count(shape);
        if (n_free < 63 && (std::uint64_t{1} << n_free) <= config.budget) {
          dfs_enumerate(shape, config.budget,
                        [&](const CheckRows& rows) { sink(shape, rows); });
        } else {
          std::mt19937_64 rng(cell_seed(config.seed, shape));
          std::uint32_t accepted = 0;
          std::uint64_t attempts = 0;
          const std::uint64_t max_attempts =
              std::uint64_t{1000} * config.sample_count + 1000;
          while (accepted < config.sample_count) {
            if (++attempts > max_attempts) {
              throw Error("sweep: random candidate acceptance stalled for shape (" +
                          std::to_string(n) + "," + std::to_string(k) + "," +
                          std::to_string(r_x) + ")");
            }
            auto rows = random_candidate(shape, rng);
            if (!rows) continue;
            ++accepted;
            sink(shape, *rows);
          }
        }
      }
    }
  }
}

}  // namespace indrate
