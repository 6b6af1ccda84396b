#include "nilcoh/catalog.hpp"

#include <charconv>
#include <optional>
#include <string>

#include "nilcoh/errors.hpp"

namespace nilcoh::catalog {

LieAlgebra torus(std::size_t n) {
  if (n == 0) throw LookupError("torus(0) is not a manifold of positive dimension");
  return LieAlgebra("torus(" + std::to_string(n) + ")", n, {});
}

LieAlgebra heisenberg(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw LookupError("heisenberg(n) needs odd n >= 3");
  const std::size_t k = (n - 1) / 2;
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < k; ++i) constants.push_back({2 * i, 2 * i + 1, n - 1, 1});
  return LieAlgebra("heisenberg(" + std::to_string(n) + ")", n, std::move(constants));
}

LieAlgebra kodaira_thurston() {
  return direct_sum(heisenberg(3), torus(1)).renamed("kodaira_thurston");
}

LieAlgebra solv3() { return LieAlgebra("solv3", 3, {{0, 2, 0, 1}, {1, 2, 1, -1}}); }

LieAlgebra euclid3() { return LieAlgebra("euclid3", 3, {{2, 0, 1, 1}, {2, 1, 0, -1}}); }

LieAlgebra solv3_sqrt2() { return LieAlgebra("solv3_sqrt2", 3, {{2, 0, 1, 1}, {2, 1, 0, 2}}); }

namespace {

bool parse_family(std::string_view name, std::string_view family, std::size_t& n) {
  if (name.size() < family.size() + 3 || name.substr(0, family.size()) != family ||
      name[family.size()] != '(' || name.back() != ')')
    return false;
  const std::string_view digits = name.substr(family.size() + 1, name.size() - family.size() - 2);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

LieAlgebra lookup_single(std::string_view name) {
  std::size_t n = 0;
  if (parse_family(name, "torus", n)) return torus(n);
  if (parse_family(name, "heisenberg", n)) return heisenberg(n);
  if (name == "kodaira_thurston") return kodaira_thurston();
  if (name == "solv3") return solv3();
  if (name == "euclid3") return euclid3();
  if (name == "solv3_sqrt2") return solv3_sqrt2();
  throw LookupError("unknown catalog algebra '" + std::string(name) + "'");
}

}  // namespace

LieAlgebra lookup(std::string_view name) {
  if (name.empty()) throw LookupError("empty catalog name");
  std::size_t start = 0;
  std::optional<LieAlgebra> result;
  while (start <= name.size()) {
    const std::size_t plus = name.find('+', start);
    const std::string_view part = name.substr(start, plus == std::string_view::npos ? plus : plus - start);
    LieAlgebra piece = lookup_single(part);
    result = result ? direct_sum(*result, piece) : piece;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return result->renamed(std::string(name));
}

std::vector<std::string> names() {
  return {"torus(1)",
          "torus(2)",
          "torus(3)",
          "torus(4)",
          "torus(5)",
          "torus(6)",
          "heisenberg(3)",
          "heisenberg(5)",
          "kodaira_thurston",
          "heisenberg(3)+heisenberg(3)",
          "heisenberg(5)+torus(1)",
          "heisenberg(3)+torus(3)",
          "solv3",
          "euclid3",
          "solv3_sqrt2"};
}

}  // namespace nilcoh::catalog
