#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pwpoly/rational.hpp"

namespace pwpoly {

/// Dense row-major matrix over the rationals.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<RVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RVec row(std::size_t r) const;
  void append_row(const RVec& row);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Pivots are chosen in the earliest column that has
/// a nonzero entry at or below the current row, taking the first such row.
struct RowEchelon {
  Matrix reduced;                   // only the nonzero rows are kept
  std::vector<std::size_t> pivots;  // pivot column of each kept row

  std::size_t rank() const { return pivots.size(); }

  /// Reduces v against the rows; the result is zero iff v is in the row space.
  RVec normal_form(RVec v) const;
  bool contains(const RVec& v) const;
};

RowEchelon row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of { x : m x = 0 }.
std::vector<RVec> nullspace(const Matrix& m);

/// Unique solution of a x = b, or nullopt if the system is singular or inconsistent.
std::optional<RVec> solve_unique(const Matrix& a, const RVec& b);

/// Some solution of a x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<RVec> solve_any(const Matrix& a, const RVec& b);

Rational dot(const RVec& x, const RVec& y);
bool is_zero(const RVec& v);

} // namespace pwpoly
