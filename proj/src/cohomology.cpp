#include "nilcoh/cohomology.hpp"

#include <string>

#include "nilcoh/errors.hpp"

namespace nilcoh {

DegreeCohomology cohomology(const CEComplex& complex, std::size_t k) {
  if (k > complex.dim()) throw InputError("degree " + std::to_string(k) + " exceeds dimension");
  if (k > complex.max_degree()) throw InputError("degree " + std::to_string(k) + " not materialized");

  DegreeCohomology out;
  out.degree = k;
  const std::size_t size = complex.basis(k).size();

  const std::vector<RatVector> cocycles = kernel_basis(complex.differential(k));
  std::vector<RatVector> coboundaries;
  if (k > 0) coboundaries = image_basis(complex.differential(k - 1));

  // rref([B | Z]): pivots inside the Z block are the admitted cocycles.
  std::vector<RatVector> columns = coboundaries;
  columns.insert(columns.end(), cocycles.begin(), cocycles.end());
  const RrefResult r = rref(RatMatrix::from_columns(columns, size));
  for (auto p : r.pivots)
    if (p >= coboundaries.size()) out.representatives.push_back(complex.element(columns[p], k));

  for (const auto& b : coboundaries) out.coboundary_basis.push_back(complex.element(b, k));
  for (const auto& z : cocycles) out.cocycle_basis.push_back(complex.element(z, k));
  out.betti = out.representatives.size();
  return out;
}

CohClass operator+(const CohClass& a, const CohClass& b) {
  if (a.degree != b.degree || a.coordinates.size() != b.coordinates.size())
    throw InputError("adding classes of different degrees");
  CohClass out = a;
  for (std::size_t i = 0; i < out.coordinates.size(); ++i) out.coordinates[i] += b.coordinates[i];
  return out;
}

CohClass operator*(const Rational& c, const CohClass& a) {
  CohClass out = a;
  for (auto& x : out.coordinates) x *= c;
  return out;
}

CohomologyRing::CohomologyRing(CEComplex complex) : complex_(std::move(complex)) {
  if (!complex_.is_complete()) throw InputError("cohomology ring needs the complex in all degrees");
  for (std::size_t k = 0; k <= dim(); ++k) {
    degrees_.push_back(cohomology(complex_, k));
    const auto& d = degrees_.back();
    std::vector<RatVector> generators;
    for (const auto& b : d.coboundary_basis) generators.push_back(complex_.coordinates(b, k));
    for (const auto& r : d.representatives) generators.push_back(complex_.coordinates(r, k));
    reducers_.emplace_back(generators, complex_.basis(k).size());
  }
}

std::vector<std::size_t> CohomologyRing::betti_numbers() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees_) out.push_back(d.betti);
  return out;
}

const DegreeCohomology& CohomologyRing::degree(std::size_t k) const {
  if (k >= degrees_.size()) throw InputError("degree " + std::to_string(k) + " out of range 0.." + std::to_string(dim()));
  return degrees_[k];
}

CohClass CohomologyRing::reduce(const ExteriorElement& z) const {
  if (z.is_zero()) throw InputError("reduce: the zero form has no degree; pass it explicitly");
  const auto k = z.degree();
  if (!k) throw InputError("reduce: form is not homogeneous");
  return reduce(z, *k);
}

CohClass CohomologyRing::reduce(const ExteriorElement& z, std::size_t k) const {
  if (z.ambient_dim() != dim()) throw InputError("reduce: form and ring dimensions differ");
  if (k > dim()) throw InputError("reduce: degree out of range");
  const ExteriorElement dz = complex_.apply_d(z.is_zero() ? ExteriorElement(dim()) : z);
  if (!dz.is_zero()) throw NotClosedError("reduce: form is not closed", dz);
  const auto solution = reducers_[k].solve(complex_.coordinates(z, k));
  if (!solution) throw ConsistencyError("closed form outside span of coboundaries and representatives");
  const std::size_t skip = degrees_[k].coboundary_basis.size();
  return CohClass{k, RatVector(solution->begin() + static_cast<std::ptrdiff_t>(skip), solution->end())};
}

void CohomologyRing::check_class(const CohClass& c) const {
  if (c.degree > dim()) {
    if (!c.coordinates.empty()) throw InputError("class above the top degree must be empty");
    return;
  }
  if (c.coordinates.size() != degrees_[c.degree].betti)
    throw InputError("class coordinate length does not match betti number");
}

ExteriorElement CohomologyRing::form(const CohClass& c) const {
  check_class(c);
  ExteriorElement out(dim());
  if (c.degree > dim()) return out;
  const auto& reps = degrees_[c.degree].representatives;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (c.coordinates[i] != 0) out += c.coordinates[i] * reps[i];
  return out;
}

CohClass CohomologyRing::cup(const CohClass& u, const CohClass& v) const {
  check_class(u);
  check_class(v);
  const std::size_t k = u.degree + v.degree;
  if (k > dim()) return CohClass{k, {}};
  return reduce(wedge(form(u), form(v)), k);
}

CohClass CohomologyRing::zero_class(std::size_t k) const {
  if (k > dim()) return CohClass{k, {}};
  return CohClass{k, RatVector(degrees_[k].betti)};
}

CohClass CohomologyRing::basis_class(std::size_t k, std::size_t i) const {
  CohClass c = zero_class(k);
  if (i >= c.coordinates.size()) throw InputError("basis class index out of range");
  c.coordinates[i] = 1;
  return c;
}

std::vector<CohClass> CohomologyRing::positive_basis() const {
  std::vector<CohClass> out;
  for (std::size_t k = 1; k <= dim(); ++k)
    for (std::size_t i = 0; i < degrees_[k].betti; ++i) out.push_back(basis_class(k, i));
  return out;
}

long euler_characteristic(const CohomologyRing& ring) {
  long chi = 0;
  for (std::size_t k = 0; k <= ring.dim(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(ring.betti(k));
  return chi;
}

bool poincare_check(const CohomologyRing& ring) {
  const std::size_t n = ring.dim();
  for (std::size_t k = 0; k <= n; ++k)
    if (ring.betti(k) != ring.betti(n - k)) return false;
  return true;
}

}  // namespace nilcoh
