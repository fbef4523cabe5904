#include "timcm/feasibility.hpp"

namespace timcm {

FeasibilityResult check_feasibility(const Topology& t) {
  int k = t.user_count();
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      if (!t.heard(j).contains(i) || !t.heard(i).contains(j)) continue;
      UserSet a = t.interferers(i) - UserSet{j};
      UserSet b = t.interferers(j) - UserSet{i};
      bool ab = a.subset_of(b);
      bool ba = b.subset_of(a);
      if (!ab && !ba) continue;
      InterfererNesting n = ab && ba ? InterfererNesting::equal
                            : ab     ? InterfererNesting::first_inside_second
                                     : InterfererNesting::second_inside_first;
      return {false, BlockingPair{i, j, n}};
    }
  return {true, std::nullopt};
}

const char* nesting_name(InterfererNesting n) {
  switch (n) {
    case InterfererNesting::first_inside_second: return "first_inside_second";
    case InterfererNesting::second_inside_first: return "second_inside_first";
    case InterfererNesting::equal: return "equal";
  }
  return "unknown";
}

}  // namespace timcm
