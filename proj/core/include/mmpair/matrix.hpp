#pragma once

#include "mmpair/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mmpair {

class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  const std::vector<Rational>& data() const { return data_; }

  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Rational& c, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

/// a·b − b·a; both operands square of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact solution set of A·x = b.
struct SolutionSet {
  bool consistent = false;
  Vector particular;           // free variables set to zero
  std::vector<Vector> null_basis; // one vector per free column, in column order
  std::size_t rank = 0;
};

/// Reduced row echelon form; pivots are the leftmost nonzero column, taking
/// the smallest row index at or below the current row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};
Echelon reduced_row_echelon(Matrix a);

SolutionSet solve_linear(const Matrix& a, const Vector& b);

std::string to_string(const Matrix& m);

} // namespace mmpair
