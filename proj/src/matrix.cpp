#include "nilcoh/matrix.hpp"

#include <string>

#include "nilcoh/errors.hpp"

namespace nilcoh {

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace(i, 1);
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.rows_[r].emplace(c, rows[r][c]);
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InputError("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r)
      if (columns[c][r] != 0) m.rows_[r].emplace(c, columns[c][r]);
  }
  return m;
}

void RatMatrix::check_index(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= cols_)
    throw InputError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                     ") out of range");
}

Rational RatMatrix::at(std::size_t r, std::size_t c) const {
  check_index(r, c);
  const auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Rational(0) : it->second;
}

void RatMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  if (value == 0)
    rows_[r].erase(c);
  else
    rows_[r][c] = value;
}

void RatMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  check_index(r, c);
  if (value == 0) return;
  auto [it, inserted] = rows_[r].try_emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) rows_[r].erase(it);
  }
}

RatVector RatMatrix::column(std::size_t c) const {
  if (c >= cols_) throw InputError("column index out of range");
  RatVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto it = rows_[r].find(c);
    if (it != rows_[r].end()) out[r] = it->second;
  }
  return out;
}

std::size_t RatMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

RatVector RatMatrix::operator*(const RatVector& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  RatVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, value] : rows_[r]) out[r] += value * v[c];
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows()) throw InputError("matrix product size mismatch");
  RatMatrix out(rows_.size(), other.cols());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Row& target = out.rows_[r];
    for (const auto& [k, a] : rows_[r]) {
      for (const auto& [c, b] : other.rows_[k]) {
        auto [it, inserted] = target.try_emplace(c, a * b);
        if (!inserted) it->second += a * b;
      }
    }
    std::erase_if(target, [](const auto& entry) { return entry.second == 0; });
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
  if (rows() != other.rows() || cols_ != other.cols_) throw InputError("matrix sum size mismatch");
  RatMatrix out = *this;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, value] : other.rows_[r]) out.add(r, c, value);
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
  return *this + other.scaled(-1);
}

RatMatrix RatMatrix::scaled(const Rational& factor) const {
  if (factor == 0) return RatMatrix(rows(), cols_);
  RatMatrix out = *this;
  for (auto& row : out.rows_)
    for (auto& entry : row) entry.second *= factor;
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix out(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, value] : rows_[r]) out.rows_[c].emplace(r, value);
  return out;
}

std::vector<RatVector> RatMatrix::to_dense() const {
  std::vector<RatVector> out(rows_.size(), RatVector(cols_));
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, value] : rows_[r]) out[r][c] = value;
  return out;
}

}  // namespace nilcoh
