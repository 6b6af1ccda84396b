#include "nilcoh/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "nilcoh/errors.hpp"
#include "nilcoh/linalg.hpp"
#include "nilcoh/polynomial.hpp"

namespace nilcoh {

LieAlgebra::LieAlgebra(std::string name, std::size_t dim, std::vector<StructureConstant> constants)
    : name_(std::move(name)), dim_(dim) {
  if (dim == 0) throw InputError("Lie algebra of dimension 0");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> folded;
  for (const auto& c : constants) {
    if (c.i >= dim || c.j >= dim || c.k >= dim)
      throw InputError("structure constant index out of range: (" + std::to_string(c.i + 1) + "," +
                       std::to_string(c.j + 1) + "," + std::to_string(c.k + 1) + ") for dim " +
                       std::to_string(dim));
    if (c.i == c.j) {
      if (c.value != 0)
        throw InputError("nonzero structure constant with i = j: (" + std::to_string(c.i + 1) + "," +
                         std::to_string(c.j + 1) + "," + std::to_string(c.k + 1) + ")");
      continue;
    }
    const bool swapped = c.i > c.j;
    const auto key = swapped ? std::make_tuple(c.j, c.i, c.k) : std::make_tuple(c.i, c.j, c.k);
    const Rational value = swapped ? Rational(-c.value) : c.value;
    if (!folded.emplace(key, value).second)
      throw InputError("duplicate structure constant (" + std::to_string(std::get<0>(key) + 1) + "," +
                       std::to_string(std::get<1>(key) + 1) + "," +
                       std::to_string(std::get<2>(key) + 1) + ")");
  }
  brackets_.assign(dim * dim, RatVector(dim));
  for (const auto& [key, value] : folded) {
    if (value == 0) continue;
    const auto [i, j, k] = key;
    constants_.push_back({i, j, k, value});
    brackets_[i * dim + j][k] = value;
    brackets_[j * dim + i][k] = -value;
  }
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  return bracket(i, j).at(k);
}

const RatVector& LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw InputError("basis index out of range");
  return brackets_[i * dim_ + j];
}

RatVector LieAlgebra::bracket(const RatVector& u, const RatVector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw InputError("bracket: vector length mismatch");
  RatVector out(dim_);
  for (const auto& c : constants_) {
    // [e_i,e_j] contributes (u_i v_j - u_j v_i) c_{ij}^k
    const Rational w = u[c.i] * v[c.j] - u[c.j] * v[c.i];
    if (w != 0) out[c.k] += w * c.value;
  }
  return out;
}

RatMatrix LieAlgebra::ad(std::size_t i) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const RatVector& column = bracket(i, j);
    for (std::size_t k = 0; k < dim_; ++k)
      if (column[k] != 0) m.set(k, j, column[k]);
  }
  return m;
}

RatMatrix LieAlgebra::ad(const RatVector& x) const {
  RatMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    RatVector e(dim_);
    e[j] = 1;
    const RatVector column = bracket(x, e);
    for (std::size_t k = 0; k < dim_; ++k)
      if (column[k] != 0) m.set(k, j, column[k]);
  }
  return m;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

ValidationReport validate(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        RatVector e_i(n), e_j(n), e_k(n);
        e_i[i] = e_j[j] = e_k[k] = 1;
        RatVector sum = a.bracket(a.bracket(i, j), e_k);
        const RatVector second = a.bracket(a.bracket(j, k), e_i);
        const RatVector third = a.bracket(a.bracket(k, i), e_j);
        for (std::size_t t = 0; t < n; ++t) sum[t] += second[t] + third[t];
        if (!is_zero(sum)) return {JacobiViolation{i, j, k, std::move(sum)}};
      }
  return {};
}

namespace {

std::vector<RatVector> span_basis(const std::vector<RatVector>& vectors, std::size_t n) {
  std::vector<RatVector> out;
  if (vectors.empty()) return out;
  const RrefResult r = rref(RatMatrix::from_rows(vectors, n));
  for (std::size_t i = 0; i < r.rank(); ++i) {
    RatVector row(n);
    for (const auto& [c, value] : r.reduced.row(i)) row[c] = value;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<RatVector> bracket_span(const LieAlgebra& a, const std::vector<RatVector>& u,
                                    const std::vector<RatVector>& v) {
  std::vector<RatVector> products;
  for (const auto& x : u)
    for (const auto& y : v) {
      RatVector z = a.bracket(x, y);
      if (!is_zero(z)) products.push_back(std::move(z));
    }
  return span_basis(products, a.dim());
}

std::vector<RatVector> standard_basis(std::size_t n) {
  std::vector<RatVector> basis(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  return basis;
}

template <class Step>
std::vector<std::size_t> series(const LieAlgebra& a, Step step) {
  std::vector<RatVector> current = standard_basis(a.dim());
  std::vector<std::size_t> dims{a.dim()};
  while (true) {
    current = step(current);
    if (current.size() == dims.back()) break;
    dims.push_back(current.size());
  }
  return dims;
}

}  // namespace

std::vector<std::size_t> lower_central_series(const LieAlgebra& a) {
  const auto g = standard_basis(a.dim());
  return series(a, [&](const std::vector<RatVector>& v) { return bracket_span(a, g, v); });
}

bool is_nilpotent(const LieAlgebra& a) { return lower_central_series(a).back() == 0; }

std::vector<std::size_t> derived_series(const LieAlgebra& a) {
  return series(a, [&](const std::vector<RatVector>& v) { return bracket_span(a, v, v); });
}

bool is_solvable(const LieAlgebra& a) { return derived_series(a).back() == 0; }

bool is_ideal(const LieAlgebra& a, const std::vector<RatVector>& subspace) {
  const SpanSolver solver(subspace, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    RatVector e(a.dim());
    e[i] = 1;
    for (const auto& s : subspace)
      if (!solver.contains(a.bracket(e, s))) return false;
  }
  return true;
}

namespace {

// Flag search: extend an ideal I by a common eigenvector of the induced ad
// action on g/I. Quotient coordinates are the non-pivot columns of rref(I).
class FlagSearch {
 public:
  explicit FlagSearch(const LieAlgebra& a) : a_(a), n_(a.dim()) {}

  bool extend(std::vector<RatVector>& flag) {
    if (flag.size() == n_) return true;
    if (budget_ == 0) {
      note_ = "search budget exhausted";
      return false;
    }
    --budget_;

    Quotient quotient = make_quotient(flag);
    const std::size_t q = quotient.free.size();
    std::vector<RatMatrix> operators;
    std::vector<std::vector<Rational>> eigenvalues;
    for (std::size_t i = 0; i < n_; ++i) {
      RatMatrix op(q, q);
      for (std::size_t t = 0; t < q; ++t) {
        const RatVector image = quotient.reduce(a_.bracket(i, quotient.free[t]));
        for (std::size_t s = 0; s < q; ++s)
          if (image[s] != 0) op.set(s, t, image[s]);
      }
      const RatPolynomial chi = characteristic_polynomial(op);
      if (!sturm_real_rooted(chi)) {
        note_ = "ad e" + std::to_string(i + 1) + " has non-real eigenvalues on a quotient of dimension " +
                std::to_string(q);
        return false;
      }
      std::vector<Rational> roots = rational_roots(chi);
      if (roots.empty()) {
        note_ = "ad e" + std::to_string(i + 1) + " has only irrational eigenvalues on a quotient of dimension " +
                std::to_string(q);
        return false;
      }
      operators.push_back(std::move(op));
      eigenvalues.push_back(std::move(roots));
    }

    std::vector<RatVector> candidates;
    collect_common_eigenvectors(operators, eigenvalues, 0, standard_basis(q), candidates);
    if (candidates.empty()) {
      note_ = "no rational common eigenvector on a quotient of dimension " + std::to_string(q);
      return false;
    }
    for (const auto& c : candidates) {
      RatVector lifted(n_);
      for (std::size_t t = 0; t < q; ++t) lifted[quotient.free[t]] = c[t];
      flag.push_back(std::move(lifted));
      if (extend(flag)) return true;
      flag.pop_back();
    }
    return false;
  }

  const std::string& note() const { return note_; }

 private:
  struct Quotient {
    std::vector<RatVector> rows;  // rref rows of I
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free;

    RatVector reduce(RatVector v) const {
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational factor = v[pivots[r]];
        if (factor == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * rows[r][c];
      }
      RatVector out(free.size());
      for (std::size_t t = 0; t < free.size(); ++t) out[t] = v[free[t]];
      return out;
    }
  };

  Quotient make_quotient(const std::vector<RatVector>& flag) const {
    Quotient quotient;
    std::vector<bool> is_pivot(n_, false);
    if (!flag.empty()) {
      const RrefResult r = rref(RatMatrix::from_rows(flag, n_));
      quotient.pivots = r.pivots;
      for (std::size_t i = 0; i < r.rank(); ++i) {
        RatVector row(n_);
        for (const auto& [c, value] : r.reduced.row(i)) row[c] = value;
        quotient.rows.push_back(std::move(row));
        is_pivot[r.pivots[i]] = true;
      }
    }
    for (std::size_t c = 0; c < n_; ++c)
      if (!is_pivot[c]) quotient.free.push_back(c);
    return quotient;
  }

  // Depth-first over eigenvalue choices, intersecting eigenspaces.
  void collect_common_eigenvectors(const std::vector<RatMatrix>& operators,
                                   const std::vector<std::vector<Rational>>& eigenvalues,
                                   std::size_t depth, const std::vector<RatVector>& space,
                                   std::vector<RatVector>& out) const {
    if (space.empty()) return;
    const std::size_t q = space.front().size();
    if (depth == operators.size()) {
      for (auto& v : high_index_basis(space, q))
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
      return;
    }
    for (const auto& lambda : eigenvalues[depth]) {
      const RatMatrix shifted = operators[depth] - RatMatrix::identity(q).scaled(lambda);
      std::vector<RatVector> images;
      for (const auto& w : space) images.push_back(shifted * w);
      std::vector<RatVector> next;
      for (const auto& k : kernel_basis(RatMatrix::from_columns(images, q)))
        next.push_back(linear_combination(k, space, q));
      collect_common_eigenvectors(operators, eigenvalues, depth + 1, next, out);
    }
  }

  // Echelon basis whose vectors lead with their highest coordinate, so the
  // flag grows from the end of the basis (e_n first for abelian quotients).
  static std::vector<RatVector> high_index_basis(const std::vector<RatVector>& space, std::size_t q) {
    std::vector<RatVector> reversed;
    for (const auto& v : space) reversed.emplace_back(v.rbegin(), v.rend());
    std::vector<RatVector> out;
    for (auto& v : span_basis(reversed, q)) out.emplace_back(v.rbegin(), v.rend());
    return out;
  }

  const LieAlgebra& a_;
  std::size_t n_;
  std::size_t budget_ = 10000;
  std::string note_;
};

}  // namespace

std::optional<IdealFlag> find_ideal_flag(const LieAlgebra& a, std::string* note) {
  FlagSearch search(a);
  std::vector<RatVector> flag;
  if (search.extend(flag)) {
    if (note) note->clear();
    return IdealFlag{std::move(flag)};
  }
  if (note) *note = search.note();
  return std::nullopt;
}

ClassificationReport classify(const LieAlgebra& a) {
  ClassificationReport report;
  report.is_abelian = a.is_abelian();
  report.lower_central_series = lower_central_series(a);
  report.is_nilpotent = report.lower_central_series.back() == 0;
  report.derived_series = derived_series(a);
  report.is_solvable = report.derived_series.back() == 0;
  report.real_spectrum_on_basis = true;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!sturm_real_rooted(characteristic_polynomial(a.ad(i)))) report.real_spectrum_on_basis = false;
  if (!report.is_solvable) {
    report.certificate_note = "not solvable";
    return report;
  }
  report.completely_solvable_certificate = find_ideal_flag(a, &report.certificate_note);
  return report;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<StructureConstant> constants = a.structure_constants();
  const std::size_t shift = a.dim();
  for (const auto& c : b.structure_constants())
    constants.push_back({c.i + shift, c.j + shift, c.k + shift, c.value});
  return LieAlgebra(a.name() + "+" + b.name(), a.dim() + b.dim(), std::move(constants));
}

LieAlgebra change_basis(const LieAlgebra& a, const RatMatrix& basis) {
  const std::size_t n = a.dim();
  if (basis.rows() != n || basis.cols() != n) throw InputError("change_basis: size mismatch");
  std::vector<RatVector> columns;
  for (std::size_t c = 0; c < n; ++c) columns.push_back(basis.column(c));
  const SpanSolver solver(columns, n);
  if (solver.rank() != n) throw InputError("change_basis: basis is singular");
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto coords = solver.solve(a.bracket(columns[i], columns[j]));
      for (std::size_t k = 0; k < n; ++k)
        if ((*coords)[k] != 0) constants.push_back({i, j, k, (*coords)[k]});
    }
  return LieAlgebra(a.name(), n, std::move(constants));
}

}  // namespace nilcoh
