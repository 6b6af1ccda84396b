#include "class_expression.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace nilcoh::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim) : text_(text), dim_(dim), result_(dim) {}

  ExteriorElement parse() {
    skip_space();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign);
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      term(sign);
    }
    return result_;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message + " at position " + std::to_string(pos_ + 1), pos_);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void term(int sign) {
    skip_space();
    const std::size_t start = pos_;
    Rational coefficient = sign;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string literal = digits();
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_start = pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_start;
          fail("zero denominator");
        }
        literal += "/" + den;
      }
      coefficient *= parse_rational(literal);
      skip_space();
      if (peek() != '*') fail("expected '*'");
      ++pos_;
      skip_space();
    }
    ExteriorElement product = ExteriorElement::unit(dim_);
    std::size_t factors = 0;
    for (;;) {
      product = wedge(product, ExteriorElement::generator(dim_, generator()));
      ++factors;
      skip_space();
      if (peek() != '^') break;
      ++pos_;
      skip_space();
    }
    if (degree_ && *degree_ != factors) {
      pos_ = start;
      fail("term of degree " + std::to_string(factors) + " in an expression of degree " + std::to_string(*degree_));
    }
    degree_ = factors;
    result_ += coefficient * product;
  }

  std::size_t generator() {
    if (peek() != 'e') fail("expected generator 'e<index>'");
    ++pos_;
    const std::size_t at = pos_;
    const std::string index = digits();
    if (index.empty()) fail("expected generator index");
    const Integer value(index);
    if (value < 1 || value > static_cast<unsigned long>(dim_)) {
      pos_ = at;
      fail("generator index " + index + " outside 1.." + std::to_string(dim_));
    }
    return value.get_ui() - 1;
  }

  std::string_view text_;
  std::size_t dim_;
  std::size_t pos_ = 0;
  std::optional<std::size_t> degree_;
  ExteriorElement result_;
};

std::string coefficient_prefix(const Rational& magnitude, const char* times) {
  return magnitude == 1 ? std::string() : to_string(magnitude) + times;
}

}  // namespace

ExteriorElement parse_class_expression(std::string_view text, std::size_t dim) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty expression", 0);
  return Parser(text, dim).parse();
}

std::string render_monomial(Monomial m) {
  if (m.degree() == 0) return "1";
  std::string out;
  for (auto i : m.indices()) {
    if (!out.empty()) out += "^";
    out += "e" + std::to_string(i + 1);
  }
  return out;
}

std::string render_element(const ExteriorElement& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : u.terms()) {
    const Rational magnitude = abs(c);
    if (out.empty())
      out += sign(c) < 0 ? "-" : "";
    else
      out += sign(c) < 0 ? " - " : " + ";
    if (m.degree() == 0)
      out += to_string(magnitude);
    else
      out += coefficient_prefix(magnitude, "*") + render_monomial(m);
  }
  return out;
}

std::string render_class(const CohomologyRing& ring, const CohClass& c) {
  if (c.is_zero()) return "0";
  const auto& reps = ring.representatives(c.degree);
  std::string out;
  for (std::size_t i = 0; i < c.coordinates.size(); ++i) {
    const Rational& x = c.coordinates[i];
    if (x == 0) continue;
    if (out.empty())
      out += sign(x) < 0 ? "-" : "";
    else
      out += sign(x) < 0 ? " - " : " + ";
    out += coefficient_prefix(abs(x), "·") + "[" + render_element(reps[i]) + "]";
  }
  return out;
}

}  // namespace nilcoh::cli
