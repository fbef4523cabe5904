#pragma once

#include <optional>
#include <vector>

#include "timcm/rational.hpp"
#include "timcm/schedule.hpp"
#include "timcm/secure_sets.hpp"
#include "timcm/topology.hpp"

namespace timcm {

// One user per slot over K slots, each slot shielded by greedily chosen
// jammers: for every exposed receiver, the least transmitter it hears that
// the sender's receiver does not. Such a jammer always exists when the
// topology admits a positive rate (its absence produces a blocking pair).
// Achieves symmetric rate 1/K. Throws std::invalid_argument on an infeasible
// topology.
Schedule secure_tdma_schedule(const Topology& t);

// Partition of all users into the fewest shielded independent parts, found
// by subset DP; achieves rate 1/(part count). nullopt when some user belongs
// to no shielded set, which is exactly the infeasible case.
struct PartitionBound {
  std::vector<SecureSet> parts;
  Rational value;
  Schedule schedule;  // one slot per part
};
std::optional<PartitionBound> best_secure_partition(const Topology& t);

// Which set family the fractional bound packs over.
enum class SetFamily {
  all_secure,      // every shielded independent set
  maximum_secure,  // only the maximum-cardinality ones
};

struct WeightedSet {
  UserSet users;
  UserSet jammers;
  Rational weight;
};

// Best fractional time-sharing over the family: maximize the minimum user
// coverage subject to total weight 1. Exact LP. weights holds the support
// only. nullopt when the family fails to cover some user (with all_secure
// that is again exactly the infeasible case).
struct FractionalBound {
  Rational value;
  std::vector<WeightedSet> weights;
};
std::optional<FractionalBound> fractional_sis_bound(const Topology& t,
                                                    SetFamily family = SetFamily::all_secure);

// Realizes a fractional bound as a concrete schedule over T slots, T being
// the least common denominator of the weights: weight p/q occupies p*T/q
// consecutive slots with the set's stored jammers.
Schedule schedule_from_weights(const Topology& t, const FractionalBound& bound);

// The same packing LP over plain independent sets, ignoring jamming: the
// baseline rate without the confidentiality requirement. Always defined,
// since singletons are independent.
Rational nonsecure_fractional_is_bound(const Topology& t);

}  // namespace timcm
