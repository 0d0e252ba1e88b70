#include "coxstack/matrix.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace coxstack;

namespace {

void check_smith_contract(const IntMatrix& m) {
  SmithDecomposition d = smith_normal_form(m);
  CHECK(d.u * m * d.v == d.s);
  CHECK(abs(determinant(d.u)) == 1);
  CHECK(abs(determinant(d.v)) == 1);
  auto diag = d.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0)
        CHECK(diag[i + 1] == 0);
      else
        CHECK(diag[i + 1] % diag[i] == 0);
    }
  }
  for (std::size_t i = 0; i < d.s.rows(); ++i)
    for (std::size_t j = 0; j < d.s.cols(); ++j)
      if (i != j) CHECK(d.s.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form of the identity") {
  IntMatrix id = IntMatrix::identity(2);
  SmithDecomposition d = smith_normal_form(id);
  CHECK(d.s == id);
  CHECK(d.u * id * d.v == d.s);
}

TEST_CASE("smith normal form of [[2,4],[6,8]]") {
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  SmithDecomposition d = smith_normal_form(m);
  CHECK(d.diagonal() == std::vector<Int>{2, 4});
  CHECK(oracle::invariant_factors_by_minors(m) == std::vector<Int>{2, 4});
  check_smith_contract(m);
}

TEST_CASE("smith normal form of a zero matrix") {
  IntMatrix m(2, 3);
  SmithDecomposition d = smith_normal_form(m);
  CHECK(d.s.is_zero());
  CHECK(d.u == IntMatrix::identity(2));
  CHECK(d.v == IntMatrix::identity(3));
}

TEST_CASE("smith normal form on random matrices up to 6x6") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int trial = 0; trial < 140; ++trial) {
    IntMatrix m = oracle::random_matrix(rng, size(rng), size(rng), -20, 20);
    CAPTURE(m.to_string());
    check_smith_contract(m);

    SmithDecomposition d = smith_normal_form(m);
    std::vector<Int> nonzero;
    for (const Int& e : d.diagonal())
      if (e != 0) nonzero.push_back(e);
    CHECK(nonzero == oracle::invariant_factors_by_minors(m));
  }
}

TEST_CASE("invariant factors survive unimodular pre/post composition") {
  std::mt19937_64 rng(987654);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m = oracle::random_matrix(rng, 6, 6, -20, 20);
    IntMatrix p = oracle::random_unimodular(rng, 6);
    IntMatrix q = oracle::random_unimodular(rng, 6);
    SmithDecomposition base = smith_normal_form(m);
    SmithDecomposition moved = smith_normal_form(p * m * q);
    CHECK(base.diagonal() == moved.diagonal());
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    IntMatrix m = oracle::random_matrix(rng, 0, 0, 0, 0);
    std::size_t n = size(rng);
    m = oracle::random_matrix(rng, n, n, -9, 9);
    CHECK(determinant(m) == oracle::det_cofactor(m));
  }
}

TEST_CASE("hermite row basis is a lattice invariant") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 80; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    std::size_t r = size(rng), c = size(rng);
    IntMatrix m = oracle::random_matrix(rng, r, c, -10, 10);
    IntMatrix u = oracle::random_unimodular(rng, r);
    CHECK(hermite_row_basis(m) == hermite_row_basis(u * m));
  }
  // Different lattices separate.
  CHECK(hermite_row_basis(IntMatrix::from_rows({{2, 0}, {0, 2}})) !=
        hermite_row_basis(IntMatrix::from_rows({{1, 0}, {0, 2}})));
}

TEST_CASE("solve_linear finds exact solutions and rejects inconsistencies") {
  std::mt19937_64 rng(1111);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    std::size_t r = size(rng), c = size(rng);
    IntMatrix m = oracle::random_matrix(rng, r, c, -8, 8);
    IntMatrix xs = oracle::random_matrix(rng, c, 1, -5, 5);
    std::vector<Int> rhs = m * xs.column(0);
    auto sol = solve_linear(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == rhs);
  }
  // 2x = 1 has no integer solution.
  CHECK_FALSE(solve_linear(IntMatrix::from_rows({{2}}), {Int(1)}).has_value());
}

TEST_CASE("kernel basis spans the kernel") {
  std::mt19937_64 rng(2222);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    IntMatrix m = oracle::random_matrix(rng, size(rng), size(rng), -6, 6);
    for (const auto& v : kernel_basis(m)) {
      std::vector<Int> img = m * v;
      for (const Int& e : img) CHECK(e == 0);
    }
  }
}
