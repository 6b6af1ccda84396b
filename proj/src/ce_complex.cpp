#include "nilcoh/ce_complex.hpp"

#include <string>

#include "nilcoh/errors.hpp"

namespace nilcoh {

ExteriorElement differential_on_generator(const LieAlgebra& a, std::size_t k) {
  if (k >= a.dim()) throw InputError("generator index out of range");
  ExteriorElement out(a.dim());
  for (const auto& c : a.structure_constants())
    if (c.k == k) out.add_term(Monomial::from_indices({c.i, c.j}), c.value);
  return out;
}

namespace {

ExteriorElement differential_of_monomial(const LieAlgebra& a, const std::vector<ExteriorElement>& dx,
                                         Monomial m) {
  const std::size_t n = a.dim();
  ExteriorElement out(n);
  const auto idx = m.indices();
  // d(x_{i1} ... x_{ik}) = sum_t (-1)^t x_{i1}..x_{i(t-1)} ^ dx_{it} ^ x_{i(t+1)}..x_{ik}
  std::uint64_t prefix = 0;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    const std::uint64_t here = std::uint64_t{1} << idx[t];
    const std::uint64_t suffix = m.bits() & ~prefix & ~here;
    if (!dx[idx[t]].is_zero()) {
      ExteriorElement term = wedge(wedge(ExteriorElement::monomial(n, Monomial::from_bits(prefix)), dx[idx[t]]),
                                   ExteriorElement::monomial(n, Monomial::from_bits(suffix)));
      if (t % 2 == 1) term *= -1;
      out += term;
    }
    prefix |= here;
  }
  return out;
}

std::vector<ExteriorElement> generator_differentials(const LieAlgebra& a) {
  std::vector<ExteriorElement> dx;
  for (std::size_t k = 0; k < a.dim(); ++k) dx.push_back(differential_on_generator(a, k));
  return dx;
}

}  // namespace

ExteriorElement differential_by_leibniz(const LieAlgebra& a, const ExteriorElement& u) {
  if (u.ambient_dim() != a.dim()) throw InputError("element and algebra dimensions differ");
  const auto dx = generator_differentials(a);
  ExteriorElement out(a.dim());
  for (const auto& [m, c] : u.terms()) out += c * differential_of_monomial(a, dx, m);
  return out;
}

CEComplex::CEComplex(LieAlgebra algebra, std::optional<std::size_t> max_degree)
    : algebra_(std::move(algebra)) {
  const std::size_t n = algebra_.dim();
  if (n > kMaxGenerators) throw InputError("more than 64 generators are not supported");
  const std::size_t top = max_degree ? *max_degree : n;
  if (top > n) throw InputError("max degree " + std::to_string(top) + " exceeds dimension " + std::to_string(n));

  const std::size_t basis_top = std::min(top + 1, n);
  for (std::size_t k = 0; k <= basis_top; ++k) {
    bases_.push_back(monomial_basis(n, k));
    std::unordered_map<std::uint64_t, std::size_t> pos;
    for (std::size_t i = 0; i < bases_.back().size(); ++i) pos.emplace(bases_.back()[i].bits(), i);
    positions_.push_back(std::move(pos));
  }

  const auto dx = generator_differentials(algebra_);
  for (std::size_t k = 0; k <= top; ++k) {
    const std::size_t target_size = k + 1 <= n ? bases_[k + 1].size() : 0;
    RatMatrix d(target_size, bases_[k].size());
    if (k < n) {
      for (std::size_t col = 0; col < bases_[k].size(); ++col) {
        const ExteriorElement image = differential_of_monomial(algebra_, dx, bases_[k][col]);
        for (const auto& [m, c] : image.terms()) d.set(positions_[k + 1].at(m.bits()), col, c);
      }
    }
    differentials_.push_back(std::move(d));
  }

  for (std::size_t k = 0; k + 1 <= top; ++k) {
    if (!(differentials_[k + 1] * differentials_[k]).is_zero())
      throw ConsistencyError("d^2 != 0 on degree " + std::to_string(k) + " for algebra '" + algebra_.name() +
                             "' (Jacobi identity fails)");
  }
}

const std::vector<Monomial>& CEComplex::basis(std::size_t k) const {
  if (k >= bases_.size()) throw InputError("degree " + std::to_string(k) + " not materialized");
  return bases_[k];
}

std::size_t CEComplex::index_of(Monomial m) const {
  const std::size_t k = m.degree();
  if (k >= positions_.size()) throw InputError("degree " + std::to_string(k) + " not materialized");
  const auto it = positions_[k].find(m.bits());
  if (it == positions_[k].end()) throw InputError("monomial outside the ambient dimension");
  return it->second;
}

const RatMatrix& CEComplex::differential(std::size_t k) const {
  if (k >= differentials_.size()) throw InputError("d_" + std::to_string(k) + " not materialized");
  return differentials_[k];
}

RatVector CEComplex::coordinates(const ExteriorElement& u, std::size_t k) const {
  if (u.ambient_dim() != dim()) throw InputError("element and complex dimensions differ");
  RatVector v(basis(k).size());
  for (const auto& [m, c] : u.terms()) {
    if (m.degree() != k) throw InputError("element is not homogeneous of degree " + std::to_string(k));
    v[index_of(m)] = c;
  }
  return v;
}

ExteriorElement CEComplex::element(const RatVector& coordinates, std::size_t k) const {
  const auto& b = basis(k);
  if (coordinates.size() != b.size()) throw InputError("coordinate vector length mismatch");
  ExteriorElement out(dim());
  for (std::size_t i = 0; i < b.size(); ++i) out.add_term(b[i], coordinates[i]);
  return out;
}

ExteriorElement CEComplex::apply_d(const ExteriorElement& u) const {
  if (u.ambient_dim() != dim()) throw InputError("element and complex dimensions differ");
  if (u.is_zero()) return ExteriorElement(dim());
  const auto k = u.degree();
  if (!k) throw InputError("apply_d needs a homogeneous element");
  if (*k == dim()) return ExteriorElement(dim());
  return element(differential(*k) * coordinates(u, *k), *k + 1);
}

CEComplex build_complex(const LieAlgebra& a, std::optional<std::size_t> max_degree) {
  return CEComplex(a, max_degree);
}

}  // namespace nilcoh
