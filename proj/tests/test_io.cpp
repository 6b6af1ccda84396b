#include <doctest.h>

#include "algebra_file.hpp"
#include "class_expression.hpp"
#include "nilcoh/catalog.hpp"
#include "support.hpp"

using namespace nilcoh;
using namespace nilcoh::cli;
using namespace nilcoh::testing;

TEST_CASE("algebra files round-trip byte for byte") {
  for (const auto& name : catalog::names()) {
    const LieAlgebra a = catalog::lookup(name);
    const std::string text = serialize_algebra(a);
    const LieAlgebra back = parse_algebra_file(text);
    CHECK(back == a);
    CHECK(back.name() == name);
    CHECK(serialize_algebra(back) == text);
  }
  CHECK(serialize_algebra(catalog::kodaira_thurston()) ==
        "{\"name\":\"kodaira_thurston\",\"dim\":4,\"brackets\":[{\"i\":1,\"j\":2,\"k\":3,\"c\":\"1\"}]}\n");
}

TEST_CASE("algebra files are normalized on input") {
  const LieAlgebra a = parse_algebra_file(
      R"({"dim": 3, "brackets": [{"i": 2, "j": 1, "k": 3, "c": "-2/4"}]})", "fallback");
  CHECK(a.name() == "fallback");
  CHECK(serialize_algebra(a) == "{\"name\":\"fallback\",\"dim\":3,\"brackets\":[{\"i\":1,\"j\":2,\"k\":3,\"c\":\"1/2\"}]}\n");
}

TEST_CASE("malformed algebra files are rejected") {
  const char* bad[] = {
      R"({"dim": 3, "brackets": [], "extra": 1})",
      R"({"dim": 3, "dim": 3, "brackets": []})",
      R"({"dim": 3, "brackets": [{"i": 1, "j": 1, "k": 1, "c": "1"}]})",
      R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": 1}]})",
      R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1.5"}]})",
      R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 4, "c": "1"}]})",
      R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1", "x": 0}]})",
      R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 1, "j": 2, "k": 3, "c": "2"}]})",
      R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1"}, {"i": 2, "j": 1, "k": 3, "c": "2"}]})",
      R"({"dim": 3, "brackets": [{"i": 1, "j": 2, "k": 3, "c": "1", "c": "2"}]})",
      R"({"dim": 0, "brackets": []})",
      R"({"brackets": []})",
      R"({"dim": 3})",
      R"([1, 2])",
      R"({"dim": 3, "brackets": [)",
  };
  for (const char* text : bad) CHECK_THROWS_AS_MESSAGE(parse_algebra_file(text), ParseError, text);
}

TEST_CASE("class expressions parse") {
  const auto omega = parse_class_expression("e1^e4 + e2^e3", 4);
  CHECK(render_element(omega) == "e1^e4 + e2^e3");
  CHECK(render_element(parse_class_expression("  -e2 ^ e1 ", 4)) == "e1^e2");
  CHECK(render_element(parse_class_expression("2*e1^e2 - 1/2*e3^e4", 4)) == "2*e1^e2 - 1/2*e3^e4");
  CHECK(render_element(parse_class_expression("e1^e1", 4)) == "0");
  CHECK(render_element(parse_class_expression("e1^e2 - e1^e2", 4)) == "0");
  CHECK(render_element(parse_class_expression("-3*e2", 4)) == "-3*e2");
}

TEST_CASE("class expression errors carry positions") {
  auto position_of = [](const char* text, std::size_t dim) -> std::size_t {
    try {
      parse_class_expression(text, dim);
    } catch (const ParseError& e) {
      return e.position().value_or(999);
    }
    return 1000;
  };
  CHECK(position_of("e1^e5", 4) == 4);
  CHECK(position_of("e1 + e2^e3", 4) == 5);
  CHECK(position_of("e1 e2", 4) == 3);
  CHECK(position_of("2e1", 4) == 1);
  CHECK(position_of("x1", 4) == 0);
  CHECK(position_of("e1 +", 4) == 4);
  CHECK(position_of("1/0*e1", 4) == 2);
  CHECK(position_of("", 4) == 0);
  CHECK(position_of("e0", 4) == 1);
}

TEST_CASE("random elements survive render and parse") {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    const std::size_t n = dim(rng);
    std::uniform_int_distribution<std::size_t> deg(1, n);
    const auto u = random_homogeneous(rng, n, deg(rng));
    if (u.is_zero()) continue;
    CHECK(parse_class_expression(render_element(u), n) == u);
  }
}

TEST_CASE("class rendering") {
  const CohomologyRing ring(build_complex(catalog::kodaira_thurston()));
  const auto omega = ring.reduce(parse_class_expression("e1^e4 + e2^e3", 4));
  CHECK(render_class(ring, omega) == "[e1^e4] + [e2^e3]");
  CHECK(render_class(ring, ring.cup(omega, omega)) == "2·[e1^e2^e3^e4]");
  CHECK(render_class(ring, ring.zero_class(2)) == "0");
  CHECK(render_class(ring, Rational(-1) * ring.basis_class(1, 0)) == "-[e1]");
}
