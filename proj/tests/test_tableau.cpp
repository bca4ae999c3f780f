#include <random>

#include "doctest.h"
#include "indrate/codes.hpp"
#include "indrate/errors.hpp"
#include "indrate/search.hpp"
#include "indrate/tableau.hpp"

using namespace indrate;

namespace {

// The full pairing contract from the type definition, checked exactly.
void check_tableau_invariants(const Tableau& tab) {
  REQUIRE(tab.stabilizers.size() == tab.r);
  REQUIRE(tab.destabilizers.size() == tab.r);
  REQUIRE(tab.logical_x.size() == tab.k);
  REQUIRE(tab.logical_z.size() == tab.k);
  for (std::uint32_t i = 0; i < tab.r; ++i) {
    for (std::uint32_t j = 0; j < tab.r; ++j) {
      CHECK(symplectic_product(tab.stabilizers[i], tab.stabilizers[j]) == 0);
      CHECK(symplectic_product(tab.destabilizers[i], tab.destabilizers[j]) == 0);
      CHECK(symplectic_product(tab.stabilizers[i], tab.destabilizers[j]) ==
            (i == j ? 1 : 0));
    }
    for (std::uint32_t j = 0; j < tab.k; ++j) {
      CHECK(symplectic_product(tab.stabilizers[i], tab.logical_x[j]) == 0);
      CHECK(symplectic_product(tab.stabilizers[i], tab.logical_z[j]) == 0);
      CHECK(symplectic_product(tab.destabilizers[i], tab.logical_x[j]) == 0);
      CHECK(symplectic_product(tab.destabilizers[i], tab.logical_z[j]) == 0);
    }
  }
  for (std::uint32_t i = 0; i < tab.k; ++i) {
    for (std::uint32_t j = 0; j < tab.k; ++j) {
      CHECK(symplectic_product(tab.logical_x[i], tab.logical_z[j]) ==
            (i == j ? 1 : 0));
      CHECK(symplectic_product(tab.logical_x[i], tab.logical_x[j]) == 0);
      CHECK(symplectic_product(tab.logical_z[i], tab.logical_z[j]) == 0);
    }
  }
  // the 2n rows together span F2^{2n}
  f2::Matrix m{2 * std::size_t{tab.n}, {}};
  for (const auto& rows : {tab.stabilizers, tab.destabilizers, tab.logical_x,
                           tab.logical_z}) {
    for (const PauliVec& row : rows) m.rows.push_back(packed(row));
  }
  CHECK(f2::rank(m) == 2 * tab.n);
}

void check_round_trip_exhaustive(const Tableau& tab) {
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << (2 * tab.n)); ++u) {
    PauliVec e = unpacked(tab.n, u);
    Coords c = decompose(e, tab);
    CHECK(recompose(c, tab) == e);
  }
}

}  // namespace

TEST_CASE("single-qubit phase-flip code") {
  Tableau tab = build_tableau({pauli_from_string("Z")});
  CHECK(tab.n == 1);
  CHECK(tab.k == 0);
  CHECK(tab.r == 1);
  check_tableau_invariants(tab);
  CHECK(tab.stabilizers[0] == pauli_from_string("Z"));
}

TEST_CASE("[[2,1]] ZZ code") {
  Tableau tab = build_tableau(parse_code("ZZ"));
  CHECK(tab.k == 1);
  check_tableau_invariants(tab);

  // X1X2 commutes with ZZ but is outside the stabilizer group: a logical
  Coords both = decompose(pauli_from_string("XX"), tab);
  CHECK(both.s == 0);
  CHECK((both.a | both.b) != 0);
  // X1 anticommutes
  Coords one = decompose(pauli_from_string("XI"), tab);
  CHECK(one.s == 1);
}

TEST_CASE("[[3,1]] Z-repetition tableau") {
  Tableau tab = build_tableau(parse_code("ZZI,IZZ"));
  CHECK(tab.k == 1);
  check_tableau_invariants(tab);
  check_round_trip_exhaustive(tab);
}

TEST_CASE("invalid generator sets") {
  CHECK_THROWS_AS(build_tableau(parse_code("XI,ZI")), NotCommutingError);
  CHECK_THROWS_AS(build_tableau({pauli_from_string("ZZ"), pauli_from_string("ZZ")}),
                  NotIndependentError);
  CHECK_THROWS_AS(build_tableau({pauli_from_string("II")}), ZeroRowError);
  CHECK_THROWS_AS(
      build_tableau({pauli_from_string("ZZ"), pauli_from_string("ZI"),
                     pauli_from_string("IZ")}),
      NotIndependentError);
}

TEST_CASE("identity and basis rows decompose to unit coordinates") {
  Tableau tab = build_tableau(parse_code("ZZI,IZZ"));
  CHECK(decompose(PauliVec{3, 0, 0}, tab) == Coords{});
  for (std::uint32_t i = 0; i < tab.r; ++i) {
    Coords c = decompose(tab.stabilizers[i], tab);
    CHECK(c.t == (std::uint64_t{1} << i));
    CHECK(c.a == 0);
    CHECK(c.b == 0);
    CHECK(c.s == 0);
  }
  // unit t recomposes to the stabilizer row
  CHECK(recompose(Coords{1, 0, 0, 0}, tab) == tab.stabilizers[0]);
  CHECK(recompose(Coords{}, tab) == PauliVec{3, 0, 0});
  CHECK_THROWS_AS(recompose(Coords{0b100, 0, 0, 0}, tab), std::invalid_argument);
}

TEST_CASE("decompose is linear") {
  for (const char* code : {"ZZ", "ZZI,IZZ", "XXX,ZZI"}) {
    Tableau tab = build_tableau(parse_code(code));
    const std::uint64_t space = std::uint64_t{1} << (2 * tab.n);
    for (std::uint64_t u = 0; u < space; ++u) {
      for (std::uint64_t v = 0; v < space; ++v) {
        PauliVec e = unpacked(tab.n, u), f = unpacked(tab.n, v);
        Coords ce = decompose(e, tab);
        Coords cf = decompose(f, tab);
        Coords cx = decompose(pauli_xor(e, f), tab);
        CHECK(cx.t == (ce.t ^ cf.t));
        CHECK(cx.a == (ce.a ^ cf.a));
        CHECK(cx.b == (ce.b ^ cf.b));
        CHECK(cx.s == (ce.s ^ cf.s));
      }
    }
  }
}

TEST_CASE("tableau invariants on random and enumerated codes") {
  std::mt19937_64 rng(2024);
  int built = 0;
  while (built < 120) {
    std::uint32_t n = 2 + rng() % 4;  // up to n = 5
    std::uint32_t k = 1 + rng() % (n - 1);
    std::uint32_t r_x = rng() % (n - k + 1);
    auto rows = random_candidate(StandardFormShape{n, k, r_x}, rng);
    if (!rows) continue;
    Tableau tab = build_tableau(*rows);
    check_tableau_invariants(tab);
    if (tab.n <= 4) check_round_trip_exhaustive(tab);
    ++built;
  }

  // every DFS-enumerated code for a few shapes builds and validates
  for (StandardFormShape shape : {StandardFormShape{3, 1, 1}, StandardFormShape{4, 2, 1},
                                  StandardFormShape{4, 3, 0}}) {
    dfs_enumerate(shape, 1 << 20, [&](const CheckRows& rows) {
      Tableau tab = build_tableau(rows);
      CHECK(tab.k == shape.k);
    });
  }
}
