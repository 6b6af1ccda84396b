#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nilcoh/rational.hpp"

namespace nilcoh {

using RatVector = std::vector<Rational>;

bool is_zero(const RatVector& v);

/// Sparse exact matrix. Rows are stored as ordered column -> value maps and
/// never hold explicit zeros.
class RatMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix identity(std::size_t n);
  /// Dense row-major input; every row must have `cols` entries.
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);

  const Row& row(std::size_t r) const { return rows_.at(r); }
  Row& mutable_row(std::size_t r) { return rows_.at(r); }
  RatVector column(std::size_t c) const;

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  RatVector operator*(const RatVector& v) const;
  RatMatrix operator*(const RatMatrix& other) const;
  RatMatrix operator+(const RatMatrix& other) const;
  RatMatrix operator-(const RatMatrix& other) const;
  RatMatrix scaled(const Rational& factor) const;
  RatMatrix transpose() const;

  std::vector<RatVector> to_dense() const;

  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_.at(a), rows_.at(b)); }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const;

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

}  // namespace nilcoh
