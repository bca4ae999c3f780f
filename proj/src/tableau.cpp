#include "indrate/tableau.hpp"

#include <stdexcept>
#include <string>

#include "indrate/errors.hpp"
#include "indrate/f2.hpp"

namespace indrate {

namespace {

// Solve <c_j, g> = rhs_j for all constraint rows c_j: the functional
// e -> <c,e> is the plain dot product against dual_mask(c).
PauliVec solve_symplectic(std::uint32_t n, const std::vector<PauliVec>& constraints,
                          std::uint64_t rhs) {
  f2::Matrix m;
  m.cols = 2 * n;
  m.rows.reserve(constraints.size());
  for (const PauliVec& c : constraints) m.rows.push_back(dual_mask(c));
  auto v = f2::solve(m, rhs);
  if (!v) {
    // The constraint functionals are independent whenever the constraint
    // vectors are, so this cannot happen for a validated generator set.
    throw std::logic_error("tableau: symplectic solve inconsistent");
  }
  return unpacked(n, *v);
}

}  // namespace

std::uint32_t validate_check_rows(const std::vector<PauliVec>& rows) {
  if (rows.empty()) throw std::invalid_argument("check matrix: no rows");
  const std::uint32_t n = rows[0].n;
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("check matrix: qubit count out of range");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].n != n) {
      throw LengthMismatchError("check matrix: row " + std::to_string(i + 1) +
                                " has a different qubit count");
    }
    if (rows[i].x == 0 && rows[i].z == 0) {
      throw ZeroRowError("check matrix: row " + std::to_string(i + 1) +
                         " is the identity");
    }
  }
  if (rows.size() > n) throw NotIndependentError("check matrix: more than n rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (symplectic_product(rows[i], rows[j]) != 0) {
        throw NotCommutingError("check matrix: rows " + std::to_string(i + 1) +
                                " and " + std::to_string(j + 1) + " anticommute");
      }
    }
  }
  f2::Matrix m;
  m.cols = 2 * n;
  for (const PauliVec& row : rows) m.rows.push_back(packed(row));
  if (f2::rank(m) != rows.size()) {
    throw NotIndependentError("check matrix: rows are linearly dependent");
  }
  return n;
}

Tableau build_tableau(const std::vector<PauliVec>& stabilizer_rows) {
  const std::uint32_t n = validate_check_rows(stabilizer_rows);
  const auto r = static_cast<std::uint32_t>(stabilizer_rows.size());
  Tableau tab;
  tab.n = n;
  tab.r = r;
  tab.k = n - r;
  tab.stabilizers = stabilizer_rows;

  // Destabilizers: g_i pairs with h_i and commutes with everything chosen
  // so far, i.e. <h_j,g_i> = delta_ij and <g_j,g_i> = 0 for j < i.
  std::vector<PauliVec> constraints = stabilizer_rows;
  for (std::uint32_t i = 0; i < r; ++i) {
    PauliVec g = solve_symplectic(n, constraints, std::uint64_t{1} << i);
    tab.destabilizers.push_back(g);
    constraints.push_back(g);
  }

  // The centralizer of {H, G} carries the logical algebra; pair it up by
  // symplectic Gram-Schmidt.
  f2::Matrix m;
  m.cols = 2 * n;
  for (const PauliVec& c : constraints) m.rows.push_back(dual_mask(c));
  std::vector<PauliVec> pool;
  for (f2::Word v : f2::kernel_basis(m)) pool.push_back(unpacked(n, v));

  while (!pool.empty()) {
    PauliVec u = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (symplectic_product(u, pool[j]) == 1) {
        partner = j;
        break;
      }
    }
    if (partner == pool.size()) {
      // Impossible: the form is nondegenerate on the centralizer complement.
      throw std::logic_error("tableau: no symplectic partner in logical pool");
    }
    PauliVec w = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    for (PauliVec& v : pool) {
      if (symplectic_product(v, w)) v = pauli_xor(v, u);
      if (symplectic_product(v, u)) v = pauli_xor(v, w);
    }
    tab.logical_x.push_back(u);
    tab.logical_z.push_back(w);
  }
  if (tab.logical_x.size() != tab.k) {
    throw std::logic_error("tableau: logical pairing produced wrong count");
  }
  return tab;
}

Coords decompose(const PauliVec& e, const Tableau& tab) {
  if (e.n != tab.n) throw std::invalid_argument("decompose: dimension mismatch");
  Coords c;
  auto bit = [](int v) { return static_cast<std::uint64_t>(v); };
  for (std::uint32_t i = 0; i < tab.r; ++i) {
    c.s |= bit(symplectic_product(e, tab.stabilizers[i])) << i;
    c.t |= bit(symplectic_product(e, tab.destabilizers[i])) << i;
  }
  for (std::uint32_t j = 0; j < tab.k; ++j) {
    c.a |= bit(symplectic_product(e, tab.logical_z[j])) << j;
    c.b |= bit(symplectic_product(e, tab.logical_x[j])) << j;
  }
  return c;
}

PauliVec recompose(const Coords& c, const Tableau& tab) {
  auto width_ok = [](std::uint64_t v, std::uint32_t bits) {
    return bits >= 64 || (v >> bits) == 0;
  };
  if (!width_ok(c.t, tab.r) || !width_ok(c.s, tab.r) || !width_ok(c.a, tab.k) ||
      !width_ok(c.b, tab.k)) {
    throw std::invalid_argument("recompose: coordinate width mismatch");
  }
  PauliVec e{tab.n, 0, 0};
  for (std::uint32_t i = 0; i < tab.r; ++i) {
    if ((c.t >> i) & 1) e = pauli_xor(e, tab.stabilizers[i]);
    if ((c.s >> i) & 1) e = pauli_xor(e, tab.destabilizers[i]);
  }
  for (std::uint32_t j = 0; j < tab.k; ++j) {
    if ((c.a >> j) & 1) e = pauli_xor(e, tab.logical_x[j]);
    if ((c.b >> j) & 1) e = pauli_xor(e, tab.logical_z[j]);
  }
  return e;
}

}  // namespace indrate
