#include "doctest.h"
#include "support.hpp"

#include "mmpair/matrix.hpp"

using namespace mmpair;

TEST_SUITE("rational") {
  TEST_CASE("parse and print canonical forms") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    // denominators are written without a sign
    for (const char* bad : {"3/-6", "-2/-4", "", "1/0", "abc", "1/", "/2", "1.5", "1 /2", "--1"})
      CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }

  TEST_CASE("printing round-trips") {
    test::RationalGen gen(11);
    for (int i = 0; i < 200; ++i) {
      const Rational r = gen.next();
      CHECK(parse_rational(to_string(r)) == r);
    }
  }

  TEST_CASE("vector helpers") {
    Vector a{1, 2}, b{Rational(1, 2), -1};
    CHECK(a + b == Vector{Rational(3, 2), 1});
    CHECK(a - b == Vector{Rational(1, 2), 3});
    CHECK(Rational(2) * b == Vector{1, -2});
    CHECK(is_zero(a - a));
    CHECK(unit_vector(3, 1) == Vector{0, 1, 0});
    CHECK(to_strings(b) == std::vector<std::string>{"1/2", "-1"});
  }
}

TEST_SUITE("matrix") {
  TEST_CASE("products and commutator") {
    Matrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 0}};
    CHECK(a * b == Matrix{{2, 1}, {4, 3}});
    CHECK(commutator(a, b) == Matrix{{-1, -3}, {3, 1}});
    CHECK(a * Vector{1, -1} == Vector{-1, -1});
    CHECK(commutator(a, a).is_zero());
    CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), ShapeError);
  }

  TEST_CASE("row echelon of a rank-deficient matrix") {
    const Echelon e = reduced_row_echelon(Matrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced == Matrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  }

  TEST_CASE("solve_linear examples") {
    const Matrix a{{1, 1}, {1, -1}};
    const SolutionSet s = solve_linear(a, {3, 1});
    CHECK(s.consistent);
    CHECK(s.particular == Vector{2, 1});
    CHECK(s.null_basis.empty());
    CHECK_FALSE(solve_linear(Matrix{{1, 1}, {2, 2}}, {1, 3}).consistent);
    const SolutionSet k = solve_linear(Matrix{{1, 2, 3}}, {0});
    CHECK(k.rank == 1);
    CHECK(k.null_basis.size() == 2);
  }

  TEST_CASE("solve_linear agrees with substitution on random systems") {
    test::RationalGen gen(5);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + gen.index(4), cols = 1 + gen.index(4);
      Matrix a(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = (gen.index(3) == 0) ? Rational(0) : gen.next();
      // b in the column space, so the system is solvable
      const Vector x = gen.vector(cols);
      const Vector b = a * x;
      const SolutionSet s = solve_linear(a, b);
      REQUIRE(s.consistent);
      CHECK(a * s.particular == b);
      CHECK(s.rank + s.null_basis.size() == cols);
      for (const auto& n : s.null_basis) {
        CHECK(is_zero(a * n));
        CHECK_FALSE(is_zero(n));
      }
    }
  }
}
