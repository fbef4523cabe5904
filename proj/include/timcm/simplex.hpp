#pragma once

#include <vector>

#include "timcm/rational.hpp"

namespace timcm {

struct LpSolution {
  Rational value;
  std::vector<Rational> x;
};

// Maximizes c*x subject to A x <= b, x >= 0, in exact rational arithmetic.
// Requires b >= 0 componentwise so the slack basis is an immediate starting
// point. Pivots by Bland's rule, which cannot cycle. Throws std::logic_error
// on an unbounded program (the programs built here are always bounded).
LpSolution lp_maximize(const std::vector<std::vector<Rational>>& a,
                       const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace timcm
