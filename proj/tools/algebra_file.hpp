#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "nilcoh/errors.hpp"
#include "nilcoh/lie_algebra.hpp"

namespace nilcoh::cli {

/// Malformed input text; `position` is a 0-based character offset when known.
class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& what, std::optional<std::size_t> position = std::nullopt)
      : InputError(what), position_(position) {}
  std::optional<std::size_t> position() const { return position_; }

 private:
  std::optional<std::size_t> position_;
};

/// Strict reader for {"name", "dim", "brackets": [{"i","j","k","c"}]} with
/// 1-based indices and string rationals. "name" is optional and defaults to
/// `fallback_name`. Does not check the Jacobi identity.
LieAlgebra parse_algebra_file(std::string_view text, const std::string& fallback_name = "algebra");
LieAlgebra read_algebra_file(const std::filesystem::path& path);

/// Canonical compact form, keys name/dim/brackets, brackets sorted by
/// (i,j,k) with i < j, terminated by a newline.
std::string serialize_algebra(const LieAlgebra& a);

}  // namespace nilcoh::cli
