#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nilcoh/lie_algebra.hpp"

namespace nilcoh::catalog {

/// Abelian R^n.
LieAlgebra torus(std::size_t n);

/// h_{2k+1}: [e_{2i-1}, e_{2i}] = e_{2k+1} for i <= k. n must be odd and >= 3.
LieAlgebra heisenberg(std::size_t n);

/// heisenberg(3) + R, i.e. the single bracket [e1,e2] = e3 in dimension 4.
LieAlgebra kodaira_thurston();

/// [e1,e3] = e1, [e2,e3] = -e2: completely solvable, not nilpotent.
LieAlgebra solv3();

/// [e3,e1] = e2, [e3,e2] = -e1: solvable with ad e3 rotating (eigenvalues +-i).
LieAlgebra euclid3();

/// [e3,e1] = e2, [e3,e2] = 2 e1: real but irrational spectrum (+-sqrt 2).
LieAlgebra solv3_sqrt2();

/// Resolves a name such as "torus(4)", "heisenberg(5)", "kodaira_thurston",
/// or a '+'-separated direct sum like "heisenberg(3)+torus(1)".
/// Throws LookupError for unknown names.
LieAlgebra lookup(std::string_view name);

/// The named entries advertised by `catalog list`.
std::vector<std::string> names();

}  // namespace nilcoh::catalog
