#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nilcoh/errors.hpp"
#include "nilcoh/linalg.hpp"
#include "nilcoh/rational.hpp"
#include "support.hpp"

using namespace nilcoh;
using namespace nilcoh::testing;

namespace {

RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution fill(density);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (fill(rng)) m.set(i, j, random_rational(rng));
  return m;
}

Dense dense(const RatMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m.at(i, j);
  return d;
}

Rational leibniz_det(const RatMatrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Rational term = sign;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m.at(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("rational parsing is strict and normalizing") {
  CHECK(parse_rational("6/4") == make_rational(3, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("+1"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
}

TEST_CASE("rref, kernel and image on a hand example") {
  const RatMatrix m = RatMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  const auto kernel = kernel_basis(m);
  REQUIRE(kernel.size() == 1);
  CHECK(kernel[0] == RatVector{-1, -1, 1});
  const auto image = image_basis(m);
  REQUIRE(image.size() == 2);
  CHECK(image[0] == RatVector{1, 2, 1});
  CHECK(image[1] == RatVector{2, 4, 0});
}

TEST_CASE("rank-nullity and kernel/image properties on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 7);
    const RatMatrix m = random_matrix(rng, size(rng), size(rng), 0.5);
    const std::size_t r = rank(m);
    CHECK(r == oracle_rank(dense(m)));
    const auto kernel = kernel_basis(m);
    CHECK(r + kernel.size() == m.cols());
    for (const auto& v : kernel) CHECK(is_zero(m * v));
    const auto image = image_basis(m);
    CHECK(image.size() == r);
    // The image basis together with all columns has the same rank.
    RatMatrix combined = RatMatrix::from_columns(image, m.rows());
    CHECK(rank(combined) == r);
    const RrefResult red = rref(m);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) CHECK(red.reduced.at(i, red.pivots[i]) == 1);
  }
}

TEST_CASE("determinant agrees with the permutation expansion") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 5);
    const std::size_t n = size(rng);
    const RatMatrix m = random_matrix(rng, n, n, 0.7);
    CHECK(determinant(m) == leibniz_det(m));
  }
  CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), InputError);
}

TEST_CASE("span solver reproduces the target") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> count(1, 5), length(1, 6);
    const std::size_t len = length(rng), g = count(rng);
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < g; ++i) {
      RatVector v(len);
      for (auto& x : v) x = random_rational(rng);
      gens.push_back(v);
    }
    RatVector coeffs(g);
    for (auto& x : coeffs) x = random_rational(rng);
    const RatVector target = linear_combination(coeffs, gens, len);
    const auto solved = solve_in_span(target, gens);
    REQUIRE(solved.has_value());
    CHECK(linear_combination(*solved, gens, len) == target);
  }
  const std::vector<RatVector> gens = {{1, 0, 0}, {0, 1, 0}};
  CHECK_FALSE(solve_in_span({0, 0, 1}, gens).has_value());
  CHECK_THROWS_AS(solve_in_span({0, 1}, gens), InputError);
}
