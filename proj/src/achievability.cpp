#include "timcm/achievability.hpp"

#include <stdexcept>

#include "timcm/feasibility.hpp"
#include "timcm/simplex.hpp"

namespace timcm {

Schedule secure_tdma_schedule(const Topology& t) {
  if (!check_feasibility(t).feasible)
    throw std::invalid_argument("secure TDMA requested for a topology with zero secure rate");
  int k = t.user_count();
  Schedule s;
  s.k = k;
  for (int sender = 1; sender <= k; ++sender) {
    UserSet jammers;
    for (int j : t.audience(sender) - UserSet{sender}) {
      // Least jammer the exposed receiver hears that the sender's own
      // receiver does not. If none existed, heard(j) \ {sender} would sit
      // inside heard(sender) and (sender, j) would be a blocking pair.
      int pick = ((t.heard(j) - t.heard(sender)) - UserSet{sender}).lowest();
      if (pick == 0) throw std::logic_error("no jammer for an exposed receiver on a feasible topology");
      jammers.add(pick);
    }
    s.slots.push_back({UserSet{sender}, jammers});
  }
  return s;
}

std::optional<PartitionBound> best_secure_partition(const Topology& t) {
  auto sis = secure_independent_sets(t);
  UserSet covered;
  for (const SecureSet& s : sis) covered |= s.users;
  if (covered != t.all_users()) return std::nullopt;

  std::uint32_t full = t.all_users().mask();
  std::vector<bool> usable(full + 1, false);
  std::vector<UserSet> jammers_of(full + 1);
  for (const SecureSet& s : sis) {
    usable[s.users.mask()] = true;
    jammers_of[s.users.mask()] = s.jammers;
  }

  // parts[m] = fewest shielded parts covering member set m; the chosen part
  // always contains m's lowest user, so each split is considered once.
  constexpr int kUnreachable = 1 << 20;
  std::vector<int> parts(full + 1, kUnreachable);
  std::vector<std::uint32_t> choice(full + 1, 0);
  parts[0] = 0;
  for (std::uint32_t m = 1; m <= full; ++m) {
    std::uint32_t low = m & -m;
    for (std::uint32_t sub = m; sub; sub = (sub - 1) & m) {
      if (!(sub & low) || !usable[sub]) continue;
      if (parts[m ^ sub] + 1 < parts[m]) {
        parts[m] = parts[m ^ sub] + 1;
        choice[m] = sub;
      }
    }
  }
  if (parts[full] >= kUnreachable) return std::nullopt;  // unreachable: covered implies a partition

  PartitionBound out;
  out.value = Rational(1, parts[full]);
  out.schedule.k = t.user_count();
  for (std::uint32_t m = full; m;) {
    UserSet users = UserSet::from_mask(choice[m]);
    out.parts.push_back({users, jammers_of[choice[m]]});
    out.schedule.slots.push_back({users, jammers_of[choice[m]]});
    m ^= choice[m];
  }
  return out;
}

namespace {

// max lambda s.t. sum x = 1 and every user's coverage >= lambda, as
// max c*x / A x <= b with the slack basis feasible.
std::optional<FractionalBound> pack_sets(const Topology& t, const std::vector<SecureSet>& sets) {
  UserSet covered;
  for (const SecureSet& s : sets) covered |= s.users;
  if (covered != t.all_users()) return std::nullopt;

  int k = t.user_count();
  std::size_t n = sets.size() + 1;  // lambda first, then one weight per set
  std::vector<std::vector<Rational>> a(1 + k, std::vector<Rational>(n));
  std::vector<Rational> b(1 + k), c(n);
  c[0] = Rational(1);
  for (std::size_t i = 0; i < sets.size(); ++i) a[0][i + 1] = Rational(1);
  b[0] = Rational(1);
  for (int user = 1; user <= k; ++user) {
    a[user][0] = Rational(1);
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i].users.contains(user)) a[user][i + 1] = Rational(-1);
    b[user] = Rational(0);
  }

  LpSolution sol = lp_maximize(a, b, c);
  if (!sol.value.positive()) throw std::logic_error("covering set family packed to zero");

  FractionalBound out;
  out.value = sol.value;
  Rational total;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sol.x[i + 1].zero()) continue;
    out.weights.push_back({sets[i].users, sets[i].jammers, sol.x[i + 1]});
    total += sol.x[i + 1];
  }
  // Scaling any sub-stochastic optimum up would raise every coverage, so the
  // optimum uses the full time budget.
  if (total != Rational(1)) throw std::logic_error("optimal packing does not sum to one");
  return out;
}

}  // namespace

std::optional<FractionalBound> fractional_sis_bound(const Topology& t, SetFamily family) {
  auto sets = family == SetFamily::all_secure ? secure_independent_sets(t)
                                              : maximum_secure_independent_sets(t);
  return pack_sets(t, sets);
}

Schedule schedule_from_weights(const Topology& t, const FractionalBound& bound) {
  mpz_class period(1);
  for (const WeightedSet& w : bound.weights) mpz_lcm(period.get_mpz_t(), period.get_mpz_t(), w.weight.den().get_mpz_t());
  if (!period.fits_slong_p()) throw std::overflow_error("schedule period exceeds long");
  long t_len = period.get_si();

  Schedule s;
  s.k = t.user_count();
  s.slots.reserve(t_len);
  for (const WeightedSet& w : bound.weights) {
    mpz_class count_z = w.weight.num() * (period / w.weight.den());
    long count = count_z.get_si();
    for (long i = 0; i < count; ++i) s.slots.push_back({w.users, w.jammers});
  }
  if (static_cast<long>(s.slots.size()) != t_len)
    throw std::logic_error("expanded schedule length disagrees with the weight period");
  return s;
}

Rational nonsecure_fractional_is_bound(const Topology& t) {
  std::vector<SecureSet> sets;
  for (UserSet u : independent_sets(t)) sets.push_back({u, UserSet{}});
  auto bound = pack_sets(t, sets);
  if (!bound) throw std::logic_error("independent singletons failed to cover");
  return bound->value;
}

}  // namespace timcm
