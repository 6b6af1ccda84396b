#include "nilcoh/exterior.hpp"

#include <bit>
#include <string>

#include "nilcoh/errors.hpp"

namespace nilcoh {

Monomial Monomial::from_indices(const std::vector<std::size_t>& indices) {
  std::uint64_t bits = 0;
  for (auto i : indices) {
    if (i >= kMaxGenerators) throw InputError("generator index exceeds 64");
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (bits & bit) throw InputError("repeated generator in monomial");
    bits |= bit;
  }
  return Monomial(bits);
}

Monomial Monomial::generator(std::size_t i) {
  if (i >= kMaxGenerators) throw InputError("generator index exceeds 64");
  return Monomial(std::uint64_t{1} << i);
}

std::size_t Monomial::degree() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> Monomial::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::optional<std::size_t> Monomial::max_index() const {
  if (bits_ == 0) return std::nullopt;
  return 63 - std::countl_zero(bits_);
}

std::strong_ordering operator<=>(Monomial a, Monomial b) {
  std::uint64_t x = a.bits_, y = b.bits_;
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i <=> j;
    x &= x - 1;
    y &= y - 1;
  }
  // A proper prefix sorts first.
  return (x != 0) <=> (y != 0);
}

int wedge_sign(Monomial a, Monomial b) {
  if (a.bits() & b.bits()) return 0;
  // Inversions: pairs (i in a, j in b) with i > j.
  std::size_t inversions = 0;
  for (std::uint64_t y = b.bits(); y != 0; y &= y - 1) {
    const int j = std::countr_zero(y);
    const std::uint64_t above = j == 63 ? 0 : (~std::uint64_t{0} << (j + 1));
    inversions += std::popcount(a.bits() & above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& current,
                  std::vector<Monomial>& out) {
  if (current.size() == k) {
    out.push_back(Monomial::from_indices(current));
    return;
  }
  for (std::size_t i = start; i + (k - current.size()) <= n; ++i) {
    current.push_back(i);
    combinations(n, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, std::size_t k) {
  std::vector<Monomial> out;
  if (k > n) return out;
  std::vector<std::size_t> current;
  combinations(n, k, 0, current, out);
  return out;
}

ExteriorElement::ExteriorElement(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim > kMaxGenerators) throw InputError("more than 64 generators are not supported");
}

ExteriorElement ExteriorElement::generator(std::size_t ambient_dim, std::size_t i) {
  if (i >= ambient_dim) throw InputError("generator index out of range");
  return monomial(ambient_dim, Monomial::generator(i));
}

ExteriorElement ExteriorElement::monomial(std::size_t ambient_dim, Monomial m, const Rational& coefficient) {
  ExteriorElement e(ambient_dim);
  e.add_term(m, coefficient);
  return e;
}

std::optional<std::size_t> ExteriorElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

ExteriorElement ExteriorElement::part(std::size_t degree) const {
  ExteriorElement out(ambient_dim_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) out.terms_.emplace(m, c);
  return out;
}

Rational ExteriorElement::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorElement::add_term(Monomial m, const Rational& coefficient) {
  if (coefficient == 0) return;
  if (const auto top = m.max_index(); top && *top >= ambient_dim_)
    throw InputError("monomial uses generator x" + std::to_string(*top + 1) + " outside ambient dimension " +
                     std::to_string(ambient_dim_));
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void ExteriorElement::check_compatible(const ExteriorElement& other) const {
  if (ambient_dim_ != other.ambient_dim_)
    throw InputError("exterior elements over different generator counts (" + std::to_string(ambient_dim_) +
                     " vs " + std::to_string(other.ambient_dim_) + ")");
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ExteriorElement& ExteriorElement::operator*=(const Rational& factor) {
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

ExteriorElement wedge(const ExteriorElement& u, const ExteriorElement& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw InputError("wedge: ambient dimension mismatch (" + std::to_string(u.ambient_dim()) + " vs " +
                     std::to_string(v.ambient_dim()) + ")");
  ExteriorElement out(u.ambient_dim());
  for (const auto& [a, x] : u.terms())
    for (const auto& [b, y] : v.terms()) {
      const int s = wedge_sign(a, b);
      if (s == 0) continue;
      const Monomial merged = Monomial::from_bits(a.bits() | b.bits());
      out.add_term(merged, s > 0 ? Rational(x * y) : Rational(-(x * y)));
    }
  return out;
}

}  // namespace nilcoh
