#pragma once

#include <optional>
#include <vector>

#include "timcm/topology.hpp"
#include "timcm/user_set.hpp"

namespace timcm {

// An independent set of users together with a jamming set that shields it:
// no jammer is heard at a member's receiver, and every outside receiver that
// hears a member also hears a jammer.
struct SecureSet {
  UserSet users;
  UserSet jammers;
  bool operator==(const SecureSet&) const = default;
};

// No member hears another member's transmitter.
bool is_independent_set(const Topology& t, UserSet u);

// Smallest jamming set shielding independent u, ties broken by lexicographic
// member order; nullopt when no jamming set exists. Only users whose entire
// audience avoids u can jam, so the search is over subsets of those.
// Throws std::invalid_argument when u is empty or not independent.
std::optional<UserSet> find_jammer_set(const Topology& t, UserSet u);

// All nonempty independent sets, ascending mask order.
std::vector<UserSet> independent_sets(const Topology& t);

// All nonempty independent sets admitting a jamming set, each with its
// find_jammer_set witness, ascending mask order.
std::vector<SecureSet> secure_independent_sets(const Topology& t);

// Maximum-cardinality members of the respective families, enumeration order
// preserved.
std::vector<UserSet> maximum_independent_sets(const Topology& t);
std::vector<SecureSet> maximum_secure_independent_sets(const Topology& t);

}  // namespace timcm
