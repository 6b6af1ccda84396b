#include <doctest.h>

#include "nilcoh/catalog.hpp"
#include "nilcoh/ce_complex.hpp"
#include "nilcoh/errors.hpp"
#include "nilcoh/exterior.hpp"
#include "support.hpp"

using namespace nilcoh;
using namespace nilcoh::testing;

namespace {

ExteriorElement e(std::size_t n, std::initializer_list<std::size_t> indices, long c = 1) {
  return ExteriorElement::monomial(n, Monomial::from_indices(indices), c);
}

int parity_sign(std::size_t p, std::size_t q) { return (p * q) % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("monomial ordering and wedge signs") {
  CHECK(Monomial::from_indices({0, 3}) < Monomial::from_indices({1, 2}));
  CHECK(Monomial::from_indices({0}) < Monomial::from_indices({0, 1}));
  CHECK(wedge_sign(Monomial::from_indices({1}), Monomial::from_indices({0})) == -1);
  CHECK(wedge_sign(Monomial::from_indices({0, 2}), Monomial::from_indices({1, 3})) == -1);
  CHECK(wedge_sign(Monomial::from_indices({0}), Monomial::from_indices({0})) == 0);
  CHECK(monomial_basis(4, 2).size() == 6);
  // (e1^e4 + e2^e3)^2 = 2 e1^e2^e3^e4
  const ExteriorElement omega = e(4, {0, 3}) + e(4, {1, 2});
  CHECK(wedge(omega, omega) == e(4, {0, 1, 2, 3}, 2));
  CHECK_THROWS_AS(wedge(e(3, {0}), e(4, {0})), InputError);
  CHECK_THROWS_AS(ExteriorElement(3).add_term(Monomial::generator(3), 1), InputError);
}

TEST_CASE("wedge is graded commutative and associative") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(2, 7);
    const std::size_t n = dim(rng);
    std::uniform_int_distribution<std::size_t> deg(0, n / 2);
    const std::size_t p = deg(rng), q = deg(rng), r = deg(rng);
    const auto u = random_homogeneous(rng, n, p), v = random_homogeneous(rng, n, q), w = random_homogeneous(rng, n, r);
    CHECK(wedge(u, v) == Rational(parity_sign(p, q)) * wedge(v, u));
    CHECK(wedge(wedge(u, v), w) == wedge(u, wedge(v, w)));
  }
}

TEST_CASE("the differential on h3 and KT") {
  const LieAlgebra kt = catalog::kodaira_thurston();
  CHECK(differential_on_generator(kt, 2) == e(4, {0, 1}));
  CHECK(differential_on_generator(kt, 0).is_zero());
  const CEComplex complex = build_complex(kt);
  CHECK(complex.is_complete());
  CHECK(complex.apply_d(e(4, {2, 3})) == e(4, {0, 1, 3}));
  CHECK(complex.differential(4).rows() == 0);
  CHECK_THROWS_AS(complex.apply_d(e(4, {0}) + e(4, {1, 2})), InputError);
}

TEST_CASE("matrix differential, Leibniz extension and dense oracle agree") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const LieAlgebra a = random_valid_algebra(rng);
    const CEComplex complex = build_complex(a);
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Dense oracle = oracle_differential(a, k);
      const RatMatrix& d = complex.differential(k);
      REQUIRE(d.rows() == oracle.size());
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) CHECK(d.at(r, c) == oracle[r][c]);
    }
  }
}

TEST_CASE("d is a graded derivation with d^2 = 0 on random elements") {
  Rng rng(43);
  int checked = 0;
  while (checked < 500) {
    const LieAlgebra a = random_valid_algebra(rng);
    const CEComplex complex = build_complex(a);
    const std::size_t n = a.dim();
    for (int t = 0; t < 25; ++t, ++checked) {
      std::uniform_int_distribution<std::size_t> deg(0, n / 2);
      const std::size_t p = deg(rng), q = deg(rng);
      const auto u = random_homogeneous(rng, n, p), v = random_homogeneous(rng, n, q);
      const ExteriorElement lhs = complex.apply_d(wedge(u, v));
      const ExteriorElement rhs =
          wedge(complex.apply_d(u), v) + Rational(p % 2 == 0 ? 1 : -1) * wedge(u, complex.apply_d(v));
      CHECK(lhs == rhs);
      CHECK(complex.apply_d(u) == differential_by_leibniz(a, u));
      CHECK(complex.apply_d(complex.apply_d(u)).is_zero());
    }
  }
}

TEST_CASE("truncated complexes") {
  const CEComplex partial = build_complex(catalog::heisenberg(5), 2);
  CHECK(partial.max_degree() == 2);
  CHECK_FALSE(partial.is_complete());
  CHECK(partial.basis(2).size() == 10);
}
