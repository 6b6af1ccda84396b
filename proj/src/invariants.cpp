#include "nilcoh/invariants.hpp"

#include <cstdlib>
#include <random>
#include <string>

#include "nilcoh/errors.hpp"

namespace nilcoh {

namespace {

// A basis vector of V_k tagged with the positive-basis indices whose product
// it is.
struct ProductEntry {
  CohClass value;
  std::vector<std::size_t> factors;
};

}  // namespace

CupLengthResult cup_length(const CohomologyRing& ring) {
  const std::size_t n = ring.dim();
  const std::vector<CohClass> generators = ring.positive_basis();

  CupLengthResult result;
  result.spans_by_stage.push_back(1);

  std::vector<ProductEntry> current;
  for (std::size_t g = 0; g < generators.size(); ++g) current.push_back({generators[g], {g}});

  std::vector<std::size_t> best;
  while (!current.empty()) {
    result.spans_by_stage.push_back(current.size());
    best = current.front().factors;

    // V_{k+1}: products w*b, keeping those independent of earlier ones in
    // the same degree.
    std::vector<ProductEntry> next;
    std::vector<std::vector<RatVector>> kept(n + 1);
    for (const auto& w : current) {
      for (std::size_t g = 0; g < generators.size(); ++g) {
        const CohClass product = ring.cup(w.value, generators[g]);
        if (product.degree > n || product.is_zero()) continue;
        auto& basis = kept[product.degree];
        if (!basis.empty() && solve_in_span(product.coordinates, basis)) continue;
        basis.push_back(product.coordinates);
        auto factors = w.factors;
        factors.push_back(g);
        next.push_back({product, std::move(factors)});
      }
    }
    current = std::move(next);
  }
  result.spans_by_stage.push_back(0);
  result.cl = result.spans_by_stage.size() - 2;
  for (auto g : best) result.witness.push_back(generators[g]);
  return result;
}

std::size_t default_oracle_cap() {
  if (const char* env = std::getenv("NILCOH_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError(std::string("NILCOH_ORACLE_CAP is not a number: '") + env + "'");
    }
  }
  return 64;
}

namespace {

bool is_exact(const CohomologyRing& ring, const ExteriorElement& form, std::size_t degree) {
  return ring.reduce(form, degree).is_zero();
}

void oracle_search(const CohomologyRing& ring, const std::vector<ExteriorElement>& forms,
                   const std::vector<std::size_t>& degrees, const ExteriorElement& product, std::size_t degree,
                   std::size_t length, std::size_t max_k, std::size_t& best) {
  if (length > best) best = length;
  if (length == max_k) return;
  for (std::size_t g = 0; g < forms.size(); ++g) {
    const std::size_t d = degree + degrees[g];
    if (d > ring.dim()) continue;
    const ExteriorElement next = wedge(product, forms[g]);
    if (next.is_zero() || is_exact(ring, next, d)) continue;  // exact ^ closed stays exact
    oracle_search(ring, forms, degrees, next, d, length + 1, max_k, best);
  }
}

}  // namespace

std::size_t cup_length_oracle(const CohomologyRing& ring, std::optional<std::size_t> max_k, std::size_t cap) {
  std::size_t total = 0;
  for (auto b : ring.betti_numbers()) total += b;
  if (total > cap)
    throw CapExceededError("cup_length_oracle: sum of Betti numbers " + std::to_string(total) + " exceeds cap " +
                           std::to_string(cap));
  std::vector<ExteriorElement> forms;
  std::vector<std::size_t> degrees;
  for (std::size_t k = 1; k <= ring.dim(); ++k)
    for (const auto& r : ring.representatives(k)) {
      forms.push_back(r);
      degrees.push_back(k);
    }
  std::size_t best = 0;
  oracle_search(ring, forms, degrees, ExteriorElement::unit(ring.dim()), 0, 0, max_k.value_or(ring.dim()), best);
  return best;
}

CohClass top_power(const CohomologyRing& ring, const CohClass& omega) {
  if (omega.degree != 2) throw InputError("top_power needs a degree-2 class");
  if (ring.dim() % 2 != 0) throw InputError("odd dimension: not a candidate symplectic dimension");
  CohClass power = ring.unit();
  for (std::size_t i = 0; i < ring.dim() / 2; ++i) power = ring.cup(power, omega);
  return power;
}

namespace {

// Nondecreasing index tuples suffice: degree-2 classes commute.
bool some_tuple_nonzero(const CohomologyRing& ring, std::span<const CohClass> basis, std::size_t start,
                        std::size_t remaining, const CohClass& product) {
  if (product.is_zero()) return false;
  if (remaining == 0) return true;
  for (std::size_t i = start; i < basis.size(); ++i)
    if (some_tuple_nonzero(ring, basis, i, remaining - 1, ring.cup(product, basis[i]))) return true;
  return false;
}

CohClass combine(const CohomologyRing& ring, std::span<const CohClass> basis, const std::vector<long>& a) {
  CohClass omega = ring.zero_class(2);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) omega = omega + Rational(a[i]) * basis[i];
  return omega;
}

// Vectors in {0..m}^len with the given total, lexicographically decreasing.
bool sweep_total(const CohomologyRing& ring, std::span<const CohClass> basis, long m, std::size_t pos,
                 long remaining, std::vector<long>& a, SymplecticnessResult& out) {
  const std::size_t len = a.size();
  if (pos == len) {
    if (remaining != 0) return false;
    CohClass omega = combine(ring, basis, a);
    CohClass power = top_power(ring, omega);
    if (power.is_zero()) return false;
    out.witness = std::move(omega);
    out.top_power = std::move(power);
    return true;
  }
  const long slots_after = static_cast<long>(len - pos - 1);
  const long hi = std::min(m, remaining);
  const long lo = std::max(0L, remaining - m * slots_after);
  for (long v = hi; v >= lo; --v) {
    a[pos] = v;
    if (sweep_total(ring, basis, m, pos + 1, remaining - v, a, out)) return true;
  }
  a[pos] = 0;
  return false;
}

}  // namespace

bool has_nonvanishing_top_power(const CohomologyRing& ring, std::span<const CohClass> degree_two_basis) {
  if (ring.dim() % 2 != 0) throw InputError("odd dimension: not a candidate symplectic dimension");
  return some_tuple_nonzero(ring, degree_two_basis, 0, ring.dim() / 2, ring.unit());
}

SymplecticnessResult is_cohomologically_symplectic(const CohomologyRing& ring) {
  if (ring.dim() % 2 != 0)
    throw InputError("dimension " + std::to_string(ring.dim()) + " is odd: not a candidate symplectic dimension");
  SymplecticnessResult out;
  out.half_dim = ring.dim() / 2;
  std::vector<CohClass> basis;
  for (std::size_t i = 0; i < ring.betti(2); ++i) basis.push_back(ring.basis_class(2, i));

  out.is_cohomologically_symplectic = has_nonvanishing_top_power(ring, basis);
  if (!out.is_cohomologically_symplectic) return out;

  const long m = static_cast<long>(out.half_dim);
  const std::size_t b2 = basis.size();
  long swept = 0;
  if (b2 > 12) {
    // The grid prefix of totals <= m is C(b2+m, m) - 1 points; sweep it while
    // that stays small, then random probes, then the rest of the grid.
    mpz_class prefix;
    mpz_bin_uiui(prefix.get_mpz_t(), b2 + out.half_dim, out.half_dim);
    if (prefix <= 10001) {
      std::vector<long> a(b2);
      for (long total = 1; total <= m; ++total)
        if (sweep_total(ring, basis, m, 0, total, a, out)) return out;
      swept = m;
    }
    const long range = m * static_cast<long>(b2);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long> coefficient(-range, range);
    for (int attempt = 0; attempt < 10000; ++attempt) {
      std::vector<long> a(b2);
      for (auto& x : a) x = coefficient(rng);
      CohClass omega = combine(ring, basis, a);
      CohClass power = top_power(ring, omega);
      if (!power.is_zero()) {
        out.witness = std::move(omega);
        out.top_power = std::move(power);
        return out;
      }
    }
  }
  std::vector<long> a(b2);
  for (long total = swept + 1; total <= m * static_cast<long>(b2); ++total)
    if (sweep_total(ring, basis, m, 0, total, a, out)) return out;
  throw ConsistencyError("symplectic witness grid exhausted although the decision was positive");
}

ClassVerdict verify_class(const CohomologyRing& ring, const ExteriorElement& omega) {
  if (ring.dim() % 2 != 0)
    throw InputError("dimension " + std::to_string(ring.dim()) + " is odd: not a candidate symplectic dimension");
  if (omega.ambient_dim() != ring.dim()) throw InputError("form and ring dimensions differ");
  if (!omega.is_zero() && omega.degree() != std::optional<std::size_t>(2))
    throw InputError("verify_class needs a 2-form");
  ClassVerdict verdict;
  verdict.differential = ring.complex().apply_d(omega);
  verdict.closed = verdict.differential.is_zero();
  if (!verdict.closed) return verdict;
  const CohClass c = ring.reduce(omega, 2);
  verdict.exact = c.is_zero();
  verdict.top_power = top_power(ring, c);
  verdict.symplectic = !verdict.top_power->is_zero();
  return verdict;
}

}  // namespace nilcoh
