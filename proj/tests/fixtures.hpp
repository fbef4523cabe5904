#pragma once

#include <algorithm>
#include <random>

#include "timcm/feasibility.hpp"
#include "timcm/topology.hpp"

namespace fixtures {

// Six-user network with a rich secure-set structure: singletons everywhere,
// three shielded pairs through user 6, and a certified gap between the
// fractional bound (1/5) and the generator bound (1/4).
inline timcm::Topology six_user() {
  return timcm::Topology::parse_text("6\n100100\n111100\n101000\n001110\n001010\n001001\n");
}

// Five-user network where fractional time sharing (2/5) beats the best
// partition (1/3) and the upper bounds sit at 1/2.
inline timcm::Topology five_user() {
  return timcm::Topology::parse_text("5\n10101\n01000\n00100\n11010\n00001\n");
}

// One receiver hears everyone, nobody else hears anything foreign.
inline timcm::Topology hub3() {
  return timcm::Topology(3, {timcm::UserSet{1}, timcm::UserSet{1, 2, 3}, timcm::UserSet{3}});
}

// Nested chain: receiver 2 hears 1, receiver 3 hears 1 and 2.
inline timcm::Topology chain3() {
  return timcm::Topology(3, {timcm::UserSet{1}, timcm::UserSet{1, 2}, timcm::UserSet{1, 2, 3}});
}

// Two receivers hear everything: a blocking pair, secure rate 0.
inline timcm::Topology blocked3() {
  return timcm::Topology(3, {timcm::UserSet{1}, timcm::UserSet{1, 2, 3}, timcm::UserSet{1, 2, 3}});
}

inline timcm::Topology complete(int k) {
  std::vector<timcm::UserSet> heard(k, timcm::UserSet::full(k));
  return timcm::Topology(k, std::move(heard));
}

// Five users where the greedy slot for sender 1 must fall back to jammer 5:
// receiver 2 is exposed, but 1's own receiver hears 2 and 4, leaving 5 as
// the only transmitter receiver 2 hears that receiver 1 does not.
inline timcm::Topology remote_jammer5() {
  return timcm::Topology(5, {timcm::UserSet{1, 2, 4}, timcm::UserSet{1, 2, 5}, timcm::UserSet{3},
                             timcm::UserSet{4}, timcm::UserSet{5}});
}

inline timcm::Topology random_topology(std::mt19937& rng, int k, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<timcm::UserSet> heard(k);
  for (int j = 1; j <= k; ++j) {
    heard[j - 1].add(j);
    for (int i = 1; i <= k; ++i)
      if (i != j && edge(rng)) heard[j - 1].add(i);
  }
  return timcm::Topology(k, std::move(heard));
}

// Rejection sampling over falling densities; terminates because the
// edgeless topology is always feasible.
inline timcm::Topology random_feasible(std::mt19937& rng, int k) {
  double density = 0.35;
  for (int attempt = 0;; ++attempt) {
    timcm::Topology t = random_topology(rng, k, density);
    if (timcm::check_feasibility(t).feasible) return t;
    if (attempt % 25 == 24) density *= 0.7;
  }
}

inline std::vector<int> random_permutation(std::mt19937& rng, int k) {
  std::vector<int> perm(k);
  for (int i = 0; i < k; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace fixtures
