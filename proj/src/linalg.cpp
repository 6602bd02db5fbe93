#include "pwpoly/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace pwpoly {

Matrix Matrix::from_rows(const std::vector<RVec>& rows, std::size_t cols)
{
  Matrix m(0, cols);
  for (const auto& r : rows)
    m.append_row(r);
  return m;
}

RVec Matrix::row(std::size_t r) const
{
  return RVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const RVec& row)
{
  if (row.size() != cols_)
    throw std::invalid_argument("row length does not match matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

namespace {

// In-place reduction of m to RREF; returns the pivot columns.
std::vector<std::size_t> reduce_in_place(Matrix& m)
{
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0)
      ++sel;
    if (sel == m.rows())
      continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0)
        continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

RowEchelon row_echelon(const Matrix& m)
{
  Matrix work = m;
  auto pivots = reduce_in_place(work);
  Matrix kept(0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    kept.append_row(work.row(r));
  return {std::move(kept), std::move(pivots)};
}

RVec RowEchelon::normal_form(RVec v) const
{
  assert(v.size() == reduced.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Rational factor = v[pivots[r]];
    if (factor == 0)
      continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      v[c] -= factor * reduced(r, c);
  }
  return v;
}

bool RowEchelon::contains(const RVec& v) const
{
  return is_zero(normal_form(v));
}

std::size_t rank(const Matrix& m)
{
  return row_echelon(m).rank();
}

std::vector<RVec> nullspace(const Matrix& m)
{
  auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots)
    is_pivot[p] = true;
  std::vector<RVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    RVec x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      x[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

Matrix augment(const Matrix& a, const RVec& b)
{
  if (b.size() != a.rows())
    throw std::invalid_argument("right-hand side length does not match row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c)
      aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  return aug;
}

} // namespace

std::optional<RVec> solve_any(const Matrix& a, const RVec& b)
{
  Matrix aug = augment(a, b);
  auto pivots = reduce_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    return std::nullopt;
  RVec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::optional<RVec> solve_unique(const Matrix& a, const RVec& b)
{
  Matrix aug = augment(a, b);
  auto pivots = reduce_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols())
    return std::nullopt;
  if (pivots.size() != a.cols())
    return std::nullopt;
  RVec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug(r, a.cols());
  return x;
}

Rational dot(const RVec& x, const RVec& y)
{
  assert(x.size() == y.size());
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += x[i] * y[i];
  return s;
}

bool is_zero(const RVec& v)
{
  for (const auto& q : v) {
    if (q != 0)
      return false;
  }
  return true;
}

} // namespace pwpoly
