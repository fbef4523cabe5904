#pragma once

#include <optional>

#include "timcm/topology.hpp"

namespace timcm {

// Which way the two users' cross-interferer sets nest in a blocking pair.
enum class InterfererNesting {
  first_inside_second,   // I_i \ {j} is contained in I_j \ {i}
  second_inside_first,   // I_j \ {i} is contained in I_i \ {j}
  equal,
};

// A pair that forces the symmetric secure rate to zero: each user hears the
// other, and their remaining interferer sets nest.
struct BlockingPair {
  int first = 0;   // i
  int second = 0;  // j, with first < second
  InterfererNesting nesting = InterfererNesting::equal;
};

struct FeasibilityResult {
  bool feasible = true;
  std::optional<BlockingPair> witness;  // first blocking pair in (i, j) scan order
};

// Positive symmetric secure rate is achievable iff no blocking pair exists.
FeasibilityResult check_feasibility(const Topology& t);

const char* nesting_name(InterfererNesting n);

}  // namespace timcm
