#pragma once

#include <vector>

#include "timcm/rational.hpp"
#include "timcm/topology.hpp"

namespace timcm {

// One interference-removal opportunity: the receiver may strike one
// occurrence of one of its interferers from the tracked pool.
struct RemovalSlot {
  int receiver = 0;
  int pick = 0;        // chosen interferer
  bool removed = false;  // whether an occurrence was still available
  bool operator==(const RemovalSlot&) const = default;
};

// Residual size of the interference pool gathered from group2's heard sets
// after every receiver in group2 then group1 with interferers strikes at
// most one occurrence. The strikes are chosen optimally via bipartite
// matching; the recorded picks reproduce the residual when replayed.
struct CancellationCount {
  int residual = 0;
  std::vector<RemovalSlot> group2_slots;
  std::vector<RemovalSlot> group1_slots;
};
// Throws std::invalid_argument when the groups overlap or leave 1..K.
CancellationCount cancellation_residual(const Topology& t, UserSet group1, UserSet group2);

// Upper bound on the symmetric secure rate by exhaustive minimization of
//   (|S1| + residual) / (|S1| + #group1 slots + #group2 slots)
// over disjoint S1 != {} and S2. Ties broken toward the lexicographically
// least (S1, S2).
struct CancellationBound {
  UserSet s1, s2;
  int residual = 0;
  Rational value;
  std::vector<RemovalSlot> s2_slots;
  std::vector<RemovalSlot> s1_slots;
};
CancellationBound cancellation_upper_bound(const Topology& t);

// A set G of a receiver's interferers admitting an order u1..un in which
// every element is decodable from its successors: {u_{i+1},...,un} is
// contained in interferers(u_i) for every i. admissible_last collects the
// members that can close such an order.
struct Generator {
  UserSet set;
  UserSet admissible_last;
  bool operator==(const Generator&) const = default;
};

// All subsets of interferers(receiver) that admit a valid order (the empty
// set included), ascending mask order. Throws std::invalid_argument on an
// out-of-range receiver.
std::vector<Generator> enumerate_generators(const Topology& t, int receiver);

// A concrete valid order for g ending at `last`, greedily least-first.
// Returns {} for empty g. Throws std::invalid_argument when no such order
// exists.
std::vector<int> generator_order(const Topology& t, int receiver, UserSet g, int last);

// A receiver's chosen generator in a generator-based bound, with a valid
// order ending at the element it strikes from the pool.
struct GeneratorChoice {
  int receiver = 0;
  UserSet generated;
  std::vector<int> order;
  int last = 0;
};

// Sharper upper bound: receivers strike with the last element of a chosen
// generator, and every generator element enlarges the denominator:
//   (|S1| + residual) / (|S1| + sum of generator sizes).
// Minimized over disjoint (S1 != {}, S2) and per-receiver generator and
// last-element choices. Dominates the plain cancellation bound, which is the
// all-singletons special case.
struct GeneratorBound {
  UserSet s1, s2;
  int residual = 0;
  Rational value;
  std::vector<GeneratorChoice> s2_choices;
  std::vector<GeneratorChoice> s1_choices;
};
GeneratorBound generator_upper_bound(const Topology& t);

// Best proven upper bound on the symmetric secure rate: 0 when infeasible,
// otherwise the smaller of the two bounds above (the generator bound by
// dominance).
Rational combined_upper_bound(const Topology& t);

}  // namespace timcm
