#include "nilcoh/polynomial.hpp"

#include <algorithm>

#include "nilcoh/errors.hpp"

namespace nilcoh {

RatPolynomial::RatPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void RatPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coefficients(degree + 1);
  coefficients[degree] = c;
  return RatPolynomial(std::move(coefficients));
}

RatPolynomial RatPolynomial::from_roots(const std::vector<Rational>& roots) {
  RatPolynomial p = constant(1);
  for (const auto& r : roots) p = p * RatPolynomial({-r, 1});
  return p;
}

Rational RatPolynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

const Rational& RatPolynomial::leading() const {
  if (coefficients_.empty()) throw InputError("leading coefficient of the zero polynomial");
  return coefficients_.back();
}

Rational RatPolynomial::operator()(const Rational& t) const {
  Rational value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * t + *it;
  return value;
}

RatPolynomial RatPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<Rational> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i)
    out[i - 1] = coefficients_[i] * static_cast<unsigned long>(i);
  return RatPolynomial(std::move(out));
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  return (1 / leading()) * *this;
}

RatPolynomial RatPolynomial::operator-() const { return Rational(-1) * *this; }

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<Rational> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return RatPolynomial(std::move(out));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return a + (-b); }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return RatPolynomial(std::move(out));
}

RatPolynomial operator*(const Rational& c, const RatPolynomial& p) {
  std::vector<Rational> out = p.coefficients_;
  for (auto& x : out) x *= c;
  return RatPolynomial(std::move(out));
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> remainder = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<Rational> quotient(a.degree() - db + 1);
  const Rational& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational factor = remainder[k + db] / lead;
    quotient[k] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) remainder[k + j] -= factor * b.coefficient(j);
  }
  return {RatPolynomial(std::move(quotient)), RatPolynomial(std::move(remainder))};
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatPolynomial square_free_part(const RatPolynomial& p) {
  if (p.is_zero()) throw InputError("square-free part of the zero polynomial");
  if (p.degree() == 0) return RatPolynomial::constant(1);
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p) {
  std::vector<RatPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  RatPolynomial next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    next = -divmod(a, b).second;
  }
  return seq;
}

namespace {

std::size_t sign_changes(const std::vector<int>& signs) {
  std::size_t changes = 0;
  int previous = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

std::size_t changes_at(const std::vector<RatPolynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(sgn(q(x)));
  return sign_changes(signs);
}

std::size_t changes_at_infinity(const std::vector<RatPolynomial>& seq, bool positive) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

}  // namespace

std::size_t count_real_roots(const RatPolynomial& p) {
  const auto seq = sturm_sequence(square_free_part(p));
  return changes_at_infinity(seq, false) - changes_at_infinity(seq, true);
}

std::size_t count_real_roots(const RatPolynomial& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return 0;
  const auto seq = sturm_sequence(square_free_part(p));
  return changes_at(seq, lo) - changes_at(seq, hi);
}

bool sturm_real_rooted(const RatPolynomial& p) {
  if (p.is_zero()) throw InputError("sturm_real_rooted: zero polynomial");
  const RatPolynomial q = square_free_part(p);
  return count_real_roots(q) == static_cast<std::size_t>(q.degree());
}

namespace {

// Integer roots of a monic integer polynomial g inside (lo, hi], found by
// Sturm-guided bisection on integer endpoints.
void integer_roots_in(const std::vector<RatPolynomial>& seq, const RatPolynomial& g,
                      const Integer& lo, const Integer& hi, std::vector<Integer>& out) {
  if (changes_at(seq, Rational(lo)) == changes_at(seq, Rational(hi))) return;
  if (hi - lo == 1) {
    if (g(Rational(hi)) == 0) out.push_back(hi);
    return;
  }
  Integer mid = lo + (hi - lo) / 2;
  integer_roots_in(seq, g, lo, mid, out);
  integer_roots_in(seq, g, mid, hi, out);
}

}  // namespace

std::vector<Rational> rational_roots(const RatPolynomial& p) {
  if (p.is_zero()) throw InputError("rational_roots: zero polynomial");
  const RatPolynomial q = square_free_part(p);
  const int d = q.degree();
  if (d <= 0) return {};

  // Integer coefficients a_0..a_d.
  Integer denominator_lcm = 1;
  for (const auto& c : q.coefficients()) mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> a;
  for (const auto& c : q.coefficients()) {
    Rational scaled = c * denominator_lcm;
    a.push_back(scaled.get_num());
  }
  const Integer lead = a.back();

  // g(y) = lead^(d-1) q(y / lead) is monic with integer coefficients; its
  // integer roots y are exactly lead * r for the rational roots r of q.
  std::vector<Rational> g_coefficients(d + 1);
  Integer bound = 0;
  Integer power = 1;  // lead^(d-1-i), built from i = d-1 downward
  for (int i = d - 1; i >= 0; --i) {
    g_coefficients[i] = Rational(a[i] * power);
    Integer magnitude = abs(a[i] * power);
    if (magnitude > bound) bound = magnitude;
    power *= lead;
  }
  g_coefficients[d] = 1;
  const RatPolynomial g(std::move(g_coefficients));
  bound += 1;  // Cauchy bound: every root satisfies |y| < 1 + max |g_i|

  std::vector<Integer> integer_roots;
  integer_roots_in(sturm_sequence(g), g, -bound - 1, bound, integer_roots);

  std::vector<Rational> roots;
  for (const auto& y : integer_roots) {
    Rational r(y, lead);
    r.canonicalize();
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RatPolynomial characteristic_polynomial(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const RatMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am.at(i, i);
    c[n - k] = -trace / static_cast<unsigned long>(k);
    m = am + RatMatrix::identity(n).scaled(c[n - k]);
  }
  return RatPolynomial(std::move(c));
}

}  // namespace nilcoh
