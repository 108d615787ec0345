#include <random>
#include <set>

#include "doctest.h"
#include "solv/config.hpp"
#include "solv/fpmatrix.hpp"
#include "solv/subspace.hpp"

using namespace solv;

TEST_CASE("rref identity over GF(2)") {
  FpMatrix id = FpMatrix::identity(3, 2);
  RrefResult r = rref(id);
  CHECK(r.m == id);
  CHECK(r.rank == 3);
  CHECK(r.pivot_columns == std::vector<int>{0, 1, 2});
}

TEST_CASE("rref hand-reduced example over GF(5)") {
  FpMatrix m = FpMatrix::from_rows({{2, 4}, {1, 2}}, 5, 2);
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivot_columns == std::vector<int>{0});
  CHECK(r.m == FpMatrix::from_rows({{1, 2}, {0, 0}}, 5, 2));
}

TEST_CASE("rref zero matrix over GF(3)") {
  FpMatrix z(2, 2, 3);
  RrefResult r = rref(z);
  CHECK(r.rank == 0);
  CHECK(r.pivot_columns.empty());
  CHECK(r.m == z);
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937 rng(12345);
  for (u32 p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 8), cols = 1 + static_cast<int>(rng() % 8);
      FpMatrix m(rows, cols, p);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = rng() % p;
      FpMatrix once = rref(m).m;
      CHECK(is_rref(once));
      CHECK(rref(once).m == once);
    }
  }
}

TEST_CASE("nullspace basics") {
  SUBCASE("identity has zero nullspace") {
    CHECK(nullspace(FpMatrix::identity(4, 7)).rows() == 0);
  }
  SUBCASE("zero matrix has full nullspace") {
    FpMatrix z(3, 3, 3);
    CHECK(nullspace(z).rows() == 3);
  }
  SUBCASE("[[1,1]] over GF(2), oracle by exhausting vectors") {
    FpMatrix m = FpMatrix::from_rows({{1, 1}}, 2, 2);
    FpMatrix ns = nullspace(m);
    CHECK(ns.rows() == 1);
    // exhaustive oracle: count vectors v with m v^T = 0
    int solutions = 0;
    for (u32 a = 0; a < 2; ++a)
      for (u32 b = 0; b < 2; ++b)
        if ((a + b) % 2 == 0) ++solutions;
    CHECK(solutions == 2);  // the zero vector and (1,1)
    CHECK(ns.row(0) == std::vector<u32>{1, 1});
  }
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 80; ++trial) {
    u32 p = std::vector<u32>{2, 3, 5}[rng() % 3];
    int rows = 1 + static_cast<int>(rng() % 7), cols = 1 + static_cast<int>(rng() % 7);
    FpMatrix m(rows, cols, p);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng() % p;
    RrefResult r = rref(m);
    CHECK(r.rank + nullspace(m).rows() == cols);
  }
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
  SUBCASE("d=2 p=2 gives 5 subspaces") {
    auto all = enumerate_subspaces(2, 2);
    CHECK(all.size() == 5);
    std::set<Subspace> distinct(all.begin(), all.end());
    CHECK(distinct.size() == 5);
  }
  SUBCASE("d=1 p=5 gives 2 subspaces") { CHECK(enumerate_subspaces(1, 5).size() == 2); }
  SUBCASE("d=3 p=2 lines") {
    auto lines = enumerate_subspaces(3, 2, std::set<int>{1});
    CHECK(lines.size() == 7);
    CHECK(gaussian_binomial(3, 1, 2) == 7);
  }
  SUBCASE("total count d=4 p=3") {
    u64 expect = 0;
    for (int k = 0; k <= 4; ++k) expect += gaussian_binomial(4, k, 3);
    auto all = enumerate_subspaces(4, 3);
    CHECK(all.size() == expect);
    std::set<Subspace> distinct(all.begin(), all.end());
    CHECK(distinct.size() == expect);
    for (const Subspace& s : all) CHECK(is_rref(s.basis()));
  }
  SUBCASE("0-dimensional ambient space has exactly one subspace") {
    CHECK(enumerate_subspaces(0, 2).size() == 1);
  }
}

TEST_CASE("invariant subspace closure") {
  FpMatrix swap = FpMatrix::from_rows({{0, 1}, {1, 0}}, 2, 2);
  SUBCASE("seed = full") {
    Subspace full = Subspace::full(2, 2);
    CHECK(invariant_subspace_closure(full, {swap}) == full);
  }
  SUBCASE("seed = 0") {
    Subspace zero(2, 2);
    CHECK(invariant_subspace_closure(zero, {swap}) == zero);
  }
  SUBCASE("line spun by swap is everything") {
    Subspace line = Subspace::span(FpMatrix::from_rows({{1, 0}}, 2, 2));
    Subspace spun = invariant_subspace_closure(line, {swap});
    CHECK(spun.dim() == 2);
  }
  SUBCASE("closure output is fixed by the action") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
      u32 p = (trial % 2) ? 2 : 3;
      int d = 3 + static_cast<int>(rng() % 3);
      std::vector<FpMatrix> action;
      for (int k = 0; k < 2; ++k) {
        FpMatrix m(d, d, p);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) m.at(i, j) = rng() % p;
        action.push_back(m);
      }
      FpMatrix seedm(1, d, p);
      for (int j = 0; j < d; ++j) seedm.at(0, j) = rng() % p;
      Subspace res = invariant_subspace_closure(Subspace::span(seedm), action);
      for (const FpMatrix& m : action)
        for (int r = 0; r < res.dim(); ++r) CHECK(res.contains(m.apply(res.basis().row(r))));
    }
  }
}

TEST_CASE("subspace sum and intersection") {
  Subspace a = Subspace::span(FpMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}, 2, 3));
  Subspace b = Subspace::span(FpMatrix::from_rows({{0, 1, 0}, {0, 0, 1}}, 2, 3));
  CHECK(a.sum(b).dim() == 3);
  Subspace i = a.intersect(b);
  CHECK(i.dim() == 1);
  CHECK(i.contains(std::vector<u32>{0, 1, 0}));
}

TEST_CASE("solve_left solves row systems") {
  FpMatrix m = FpMatrix::from_rows({{1, 2, 0}, {0, 1, 1}}, 5, 3);
  std::vector<u32> x{3, 4};
  std::vector<u32> rhs = m.apply(x);
  auto sol = solve_left(m, rhs);
  REQUIRE(sol.has_value());
  CHECK(m.apply(*sol) == rhs);
  // inconsistent system
  auto none = solve_left(FpMatrix::from_rows({{1, 0}}, 2, 2), std::vector<u32>{0, 1});
  CHECK(!none.has_value());
}
