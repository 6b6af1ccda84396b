#include "support.hpp"

#include <algorithm>

#include "nilcoh/catalog.hpp"
#include "nilcoh/linalg.hpp"

namespace nilcoh::testing {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Sorts in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<std::size_t>& v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        s = -s;
      }
    }
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return 0;
  return s;
}

}  // namespace

Rational random_rational(Rng& rng, long bound, long max_den) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

RatMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_rational(rng, 2, 2));
    if (determinant(m) != 0) return m;
  }
}

LieAlgebra random_two_step(Rng& rng, std::size_t dim) {
  std::uniform_int_distribution<std::size_t> center_size(1, std::max<std::size_t>(1, dim / 2));
  const std::size_t c = center_size(rng);
  const std::size_t p = dim - c;
  std::bernoulli_distribution keep(0.35);
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      for (std::size_t k = p; k < dim; ++k)
        if (keep(rng)) {
          Rational v = random_rational(rng);
          if (v != 0) constants.push_back({i, j, k, v});
        }
  return LieAlgebra("two_step", dim, constants);
}

LieAlgebra random_valid_algebra(Rng& rng) {
  std::uniform_int_distribution<int> kind(0, 1);
  if (kind(rng) == 0) {
    std::uniform_int_distribution<std::size_t> dim(2, 6);
    return random_two_step(rng, dim(rng));
  }
  static const std::vector<std::string> sources = {"heisenberg(3)", "kodaira_thurston", "heisenberg(5)",
                                                   "solv3",         "euclid3",          "heisenberg(3)+torus(1)",
                                                   "solv3_sqrt2"};
  std::uniform_int_distribution<std::size_t> pick(0, sources.size() - 1);
  const LieAlgebra base = catalog::lookup(sources[pick(rng)]);
  return change_basis(base, random_invertible(rng, base.dim())).renamed(base.name() + "_rebased");
}

ExteriorElement random_homogeneous(Rng& rng, std::size_t n, std::size_t k, std::size_t max_terms) {
  ExteriorElement u(n);
  const auto basis = monomial_basis(n, k);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1), count(1, max_terms);
  const std::size_t terms = count(rng);
  for (std::size_t t = 0; t < terms; ++t) u.add_term(basis[pick(rng)], random_rational(rng));
  return u;
}

std::size_t oracle_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool oracle_jacobi(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  // c(i,j,k) straight from the stored list, extended by antisymmetry.
  std::vector<Rational> c(n * n * n);
  for (const auto& sc : a.structure_constants()) {
    c[(sc.i * n + sc.j) * n + sc.k] = sc.value;
    c[(sc.j * n + sc.i) * n + sc.k] = -sc.value;
  }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return c[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          Rational s = 0;
          for (std::size_t l = 0; l < n; ++l)
            s += at(i, j, l) * at(l, k, m) + at(j, k, l) * at(l, i, m) + at(k, i, l) * at(l, j, m);
          if (s != 0) return false;
        }
  return true;
}

Dense oracle_differential(const LieAlgebra& a, std::size_t k) {
  const std::size_t n = a.dim();
  const auto source = subsets(n, k);
  const auto target = subsets(n, k + 1);
  Dense d(target.size(), std::vector<Rational>(source.size()));
  auto row_of = [&](const std::vector<std::size_t>& t) {
    return static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), t) - target.begin());
  };
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& s = source[col];
    for (std::size_t p = 0; p < k; ++p) {
      const int sign_p = p % 2 == 0 ? 1 : -1;
      for (const auto& sc : a.structure_constants()) {
        if (sc.k != s[p]) continue;
        std::vector<std::size_t> word;
        for (std::size_t q = 0; q < p; ++q) word.push_back(s[q]);
        word.push_back(sc.i);
        word.push_back(sc.j);
        for (std::size_t q = p + 1; q < k; ++q) word.push_back(s[q]);
        const int sgn = sort_with_sign(word);
        if (sgn == 0) continue;
        d[row_of(word)][col] += sign_p * sgn * sc.value;
      }
    }
  }
  return d;
}

std::vector<std::size_t> oracle_betti(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) ranks[k] = oracle_rank(oracle_differential(a, k));
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k <= n; ++k) betti.push_back(binomial(n, k) - ranks[k] - (k ? ranks[k - 1] : 0));
  return betti;
}

bool is_exact(const CohomologyRing& ring, const ExteriorElement& form) {
  if (form.is_zero()) return true;
  const std::size_t k = *form.degree();
  if (k == 0) return false;
  const auto& complex = ring.complex();
  const Dense d = oracle_differential(complex.algebra(), k - 1);
  Dense augmented = d;
  const RatVector target = complex.coordinates(form, k);
  for (std::size_t r = 0; r < augmented.size(); ++r) augmented[r].push_back(target[r]);
  return oracle_rank(augmented) == oracle_rank(d);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<LieAlgebra> nilpotent_catalog() {
  return {catalog::heisenberg(3), catalog::heisenberg(5), catalog::kodaira_thurston(),
          catalog::lookup("heisenberg(3)+heisenberg(3)"), catalog::lookup("heisenberg(5)+torus(1)")};
}

}  // namespace nilcoh::testing
