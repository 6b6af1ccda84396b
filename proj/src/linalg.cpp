#include "nilcoh/linalg.hpp"

#include "nilcoh/errors.hpp"

namespace nilcoh {

namespace {

// row[target] -= factor * row[source]
void subtract_scaled(RatMatrix::Row& target, const RatMatrix::Row& source, const Rational& factor) {
  for (const auto& [c, value] : source) {
    auto [it, inserted] = target.try_emplace(c, -factor * value);
    if (!inserted) {
      it->second -= factor * value;
      if (it->second == 0) target.erase(it);
    }
  }
}

// Gauss-Jordan elimination choosing pivots only among the first
// `pivot_limit` columns; row operations act on whole rows.
std::vector<std::size_t> eliminate(RatMatrix& m, std::size_t pivot_limit) {
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < pivot_limit && next_row < m.rows(); ++col) {
    // Sparsest candidate row keeps fill-in down.
    std::size_t best = m.rows();
    for (std::size_t r = next_row; r < m.rows(); ++r) {
      const auto& row = m.row(r);
      if (row.empty() || row.begin()->first != col) continue;
      if (best == m.rows() || row.size() < m.row(best).size()) best = r;
    }
    if (best == m.rows()) continue;
    m.swap_rows(next_row, best);

    auto& pivot_row = m.mutable_row(next_row);
    const Rational inverse = 1 / pivot_row.begin()->second;
    if (inverse != 1)
      for (auto& entry : pivot_row) entry.second *= inverse;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next_row) continue;
      auto& row = m.mutable_row(r);
      const auto it = row.find(col);
      if (it == row.end()) continue;
      const Rational factor = it->second;
      subtract_scaled(row, m.row(next_row), factor);
    }
    pivots.push_back(col);
    ++next_row;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const RatMatrix& m) {
  RrefResult result{m, {}};
  result.pivots = eliminate(result.reduced, m.cols());
  return result;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const Rational entry = r.reduced.at(i, free);
      if (entry != 0) v[r.pivots[i]] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVector> image_basis(const RatMatrix& m) {
  std::vector<RatVector> basis;
  for (auto p : rref(m).pivots) basis.push_back(m.column(p));
  return basis;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  RatMatrix work = m;
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (!work.row(r).empty() && work.row(r).begin()->first == col) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return 0;
    if (pivot != col) {
      work.swap_rows(pivot, col);
      det = -det;
    }
    const Rational p = work.row(col).begin()->second;
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      auto& row = work.mutable_row(r);
      const auto it = row.find(col);
      if (it == row.end()) continue;
      const Rational factor = it->second / p;
      subtract_scaled(row, work.row(col), factor);
    }
  }
  return det;
}

SpanSolver::SpanSolver(std::span<const RatVector> generators, std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), generator_count_(generators.size()) {
  const std::size_t g = generators.size();
  RatMatrix augmented(ambient_dim, g + ambient_dim);
  for (std::size_t c = 0; c < g; ++c) {
    if (generators[c].size() != ambient_dim) throw InputError("generator length mismatch");
    for (std::size_t r = 0; r < ambient_dim; ++r)
      if (generators[c][r] != 0) augmented.set(r, c, generators[c][r]);
  }
  for (std::size_t r = 0; r < ambient_dim; ++r) augmented.set(r, g + r, 1);

  pivots_ = eliminate(augmented, g);

  transform_ = RatMatrix(ambient_dim, ambient_dim);
  for (std::size_t r = 0; r < ambient_dim; ++r)
    for (const auto& [c, value] : augmented.row(r))
      if (c >= g) transform_.set(r, c - g, value);
}

std::optional<RatVector> SpanSolver::solve(const RatVector& target) const {
  if (target.size() != ambient_dim_) throw InputError("target length mismatch");
  const RatVector reduced = transform_ * target;
  for (std::size_t r = pivots_.size(); r < ambient_dim_; ++r)
    if (reduced[r] != 0) return std::nullopt;
  RatVector coefficients(generator_count_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) coefficients[pivots_[i]] = reduced[i];
  return coefficients;
}

std::optional<RatVector> solve_in_span(const RatVector& target,
                                       std::span<const RatVector> generators) {
  for (const auto& g : generators)
    if (g.size() != target.size()) throw InputError("solve_in_span: dimension mismatch");
  return SpanSolver(generators, target.size()).solve(target);
}

RatVector linear_combination(std::span<const Rational> coefficients,
                             std::span<const RatVector> vectors, std::size_t length) {
  if (coefficients.size() != vectors.size()) throw InputError("coefficient count mismatch");
  RatVector out(length);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (coefficients[i] == 0) continue;
    if (vectors[i].size() != length) throw InputError("vector length mismatch");
    for (std::size_t j = 0; j < length; ++j) out[j] += coefficients[i] * vectors[i][j];
  }
  return out;
}

}  // namespace nilcoh
