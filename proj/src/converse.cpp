#include "timcm/converse.hpp"

#include <algorithm>
#include <stdexcept>

#include "timcm/feasibility.hpp"

namespace timcm {

namespace {

// Kuhn's augmenting-path matching between removal slots and pool
// occurrences. Deterministic: slots are processed in order, occurrences
// probed in index order.
struct SlotMatcher {
  const std::vector<UserSet>& choices;     // per slot
  const std::vector<int>& occ_user;        // per occurrence
  std::vector<int> occ_slot;               // matched slot per occurrence, -1 free
  std::vector<int> slot_occ;               // matched occurrence per slot, -1 free
  std::vector<char> seen;

  SlotMatcher(const std::vector<UserSet>& ch, const std::vector<int>& occ)
      : choices(ch), occ_user(occ), occ_slot(occ.size(), -1), slot_occ(ch.size(), -1) {}

  bool augment(int s) {
    for (std::size_t o = 0; o < occ_user.size(); ++o) {
      if (seen[o] || !choices[s].contains(occ_user[o])) continue;
      seen[o] = 1;
      if (occ_slot[o] < 0 || augment(occ_slot[o])) {
        occ_slot[o] = static_cast<int>(s);
        slot_occ[s] = static_cast<int>(o);
        return true;
      }
    }
    return false;
  }

  int run() {
    int matched = 0;
    for (std::size_t s = 0; s < choices.size(); ++s) {
      seen.assign(occ_user.size(), 0);
      if (augment(static_cast<int>(s))) ++matched;
    }
    return matched;
  }
};

void check_groups(const Topology& t, UserSet group1, UserSet group2) {
  if (!group1.subset_of(t.all_users()) || !group2.subset_of(t.all_users()))
    throw std::invalid_argument("group member outside 1..k");
  if (group1.intersects(group2)) throw std::invalid_argument("groups must be disjoint");
}

}  // namespace

CancellationCount cancellation_residual(const Topology& t, UserSet group1, UserSet group2) {
  check_groups(t, group1, group2);

  std::vector<int> occ_user;
  for (int m : group2)
    for (int u : t.heard(m)) occ_user.push_back(u);

  std::vector<int> slot_receiver;
  std::vector<UserSet> slot_choices;
  for (UserSet group : {group2, group1})
    for (int r : group)
      if (!t.interferers(r).empty()) {
        slot_receiver.push_back(r);
        slot_choices.push_back(t.interferers(r));
      }

  SlotMatcher matcher(slot_choices, occ_user);
  int matched = matcher.run();

  CancellationCount out;
  out.residual = static_cast<int>(occ_user.size()) - matched;
  std::size_t group2_slots = 0;
  for (int r : group2)
    if (!t.interferers(r).empty()) ++group2_slots;
  for (std::size_t s = 0; s < slot_choices.size(); ++s) {
    RemovalSlot slot;
    slot.receiver = slot_receiver[s];
    if (matcher.slot_occ[s] >= 0) {
      slot.pick = occ_user[matcher.slot_occ[s]];
      slot.removed = true;
    } else {
      // A maximum matching leaves no free compatible occurrence, so the
      // default pick cannot remove anything; recorded for replay only.
      slot.pick = slot_choices[s].lowest();
      slot.removed = false;
    }
    (s < group2_slots ? out.group2_slots : out.group1_slots).push_back(slot);
  }
  return out;
}

CancellationBound cancellation_upper_bound(const Topology& t) {
  std::uint32_t full = t.all_users().mask();
  CancellationBound best;
  bool have = false;
  for (std::uint32_t m1 = 1; m1 <= full; ++m1) {
    UserSet s1 = UserSet::from_mask(m1);
    std::uint32_t comp = full & ~m1;
    for (std::uint32_t m2 = comp;; m2 = (m2 - 1) & comp) {
      UserSet s2 = UserSet::from_mask(m2);
      CancellationCount cc = cancellation_residual(t, s1, s2);
      int slots = static_cast<int>(cc.group1_slots.size() + cc.group2_slots.size());
      Rational value(s1.size() + cc.residual, s1.size() + slots);
      bool better = !have || value < best.value ||
                    (value == best.value &&
                     (set_lex_less(s1, best.s1) ||
                      (s1 == best.s1 && set_lex_less(s2, best.s2))));
      if (better) {
        best.s1 = s1;
        best.s2 = s2;
        best.residual = cc.residual;
        best.value = value;
        best.s2_slots = cc.group2_slots;
        best.s1_slots = cc.group1_slots;
        have = true;
      }
      if (m2 == 0) break;
    }
  }
  return best;
}

namespace {

// Subset DP over interferers(receiver): valid[g] marks sets admitting a
// peel order, last[g] the elements that can come final. Peeling u first
// requires the remainder to sit inside interferers(u).
struct GeneratorTable {
  UserSet interferers;
  std::vector<char> valid;   // by mask
  std::vector<UserSet> last;  // by mask

  GeneratorTable(const Topology& t, int receiver)
      : interferers(t.interferers(receiver)),
        valid(interferers.mask() + 1, 0),
        last(interferers.mask() + 1) {
    valid[0] = 1;
    std::uint32_t im = interferers.mask();
    for (std::uint32_t g = 1; g <= im; ++g) {
      if ((g & im) != g) continue;
      UserSet gs = UserSet::from_mask(g);
      for (int u : gs) {
        std::uint32_t rest = g & ~UserSet{u}.mask();
        if (!valid[rest]) continue;
        if (!UserSet::from_mask(rest).subset_of(t.interferers(u))) continue;
        valid[g] = 1;
        last[g] |= rest == 0 ? UserSet{u} : last[rest];
      }
    }
  }
};

}  // namespace

std::vector<Generator> enumerate_generators(const Topology& t, int receiver) {
  if (receiver < 1 || receiver > t.user_count())
    throw std::invalid_argument("receiver outside 1..k");
  GeneratorTable table(t, receiver);
  std::vector<Generator> out;
  for (std::uint32_t g = 0; g <= table.interferers.mask(); ++g) {
    if ((g & table.interferers.mask()) != g || !table.valid[g]) continue;
    out.push_back({UserSet::from_mask(g), table.last[g]});
  }
  return out;
}

std::vector<int> generator_order(const Topology& t, int receiver, UserSet g, int last) {
  if (receiver < 1 || receiver > t.user_count())
    throw std::invalid_argument("receiver outside 1..k");
  if (g.empty()) return {};
  GeneratorTable table(t, receiver);
  if (!g.subset_of(table.interferers) || !g.contains(last) ||
      g.mask() >= table.valid.size() || !table.valid[g.mask()] ||
      !table.last[g.mask()].contains(last))
    throw std::invalid_argument("no valid order for the requested generator");

  std::vector<int> order;
  UserSet current = g;
  while (current.size() > 1) {
    int pick = 0;
    for (int u : current - UserSet{last}) {
      UserSet rest = current - UserSet{u};
      if (rest.subset_of(t.interferers(u)) && table.valid[rest.mask()] &&
          table.last[rest.mask()].contains(last)) {
        pick = u;
        break;
      }
    }
    if (pick == 0) throw std::logic_error("admissible last element with no peel order");
    order.push_back(pick);
    current.remove(pick);
  }
  order.push_back(last);
  return order;
}

namespace {

// Per-receiver options for the generator bound: for each strikeable
// interferer x, the largest generator that can end at x. Larger generators
// only enlarge the denominator, so maximum size dominates for fixed x.
struct ReceiverOptions {
  int receiver = 0;
  std::vector<int> pick;     // candidate last elements, ascending
  std::vector<int> size;     // size of the chosen generator per pick
  std::vector<UserSet> gen;  // the generator itself per pick
  int max_size = 0;
};

ReceiverOptions receiver_options(const Topology& t, int receiver) {
  ReceiverOptions out;
  out.receiver = receiver;
  GeneratorTable table(t, receiver);
  for (int x : table.interferers) {
    int best_size = 0;
    UserSet best_gen;
    for (std::uint32_t g = 0; g <= table.interferers.mask(); ++g) {
      if ((g & table.interferers.mask()) != g || !table.valid[g]) continue;
      if (!table.last[g].contains(x)) continue;
      UserSet gs = UserSet::from_mask(g);
      if (gs.size() > best_size) {
        best_size = gs.size();
        best_gen = gs;
      }
    }
    // The singleton {x} is always a valid generator ending at x.
    out.pick.push_back(x);
    out.size.push_back(best_size);
    out.gen.push_back(best_gen);
    out.max_size = std::max(out.max_size, best_size);
  }
  return out;
}

// Exhaustive minimization for one (s1, s2) pair: depth-first over each
// slot receiver's strike choice, counting removals against the pool.
struct PairSearch {
  const std::vector<ReceiverOptions*>& slots;
  std::array<int, kMaxUsers + 1> pool{};  // occurrences left per user
  int pool_total = 0;
  int s1_size = 0;
  std::vector<int> suffix_max_size;  // of slots d..end
  long best_num = 0, best_den = 0;   // global best across pairs (copied in)
  bool beat_global = false;          // improved or tied-with-lex-preference
  std::vector<int> picks, best_picks;
  int best_removed = 0, best_gsum = 0;
  bool tie_prefers_this_pair = false;

  PairSearch(const std::vector<ReceiverOptions*>& s) : slots(s) {}

  void run() {
    suffix_max_size.assign(slots.size() + 1, 0);
    for (int d = static_cast<int>(slots.size()) - 1; d >= 0; --d)
      suffix_max_size[d] = suffix_max_size[d + 1] + slots[d]->max_size;
    picks.assign(slots.size(), 0);
    dfs(0, 0, 0);
  }

  void dfs(std::size_t d, int removed, int gsum) {
    // Least ratio still reachable: strike everything remaining, grow the
    // denominator maximally.
    long low_num = s1_size + std::max(0, pool_total - removed - static_cast<int>(slots.size() - d));
    long low_den = s1_size + gsum + suffix_max_size[d];
    if (best_den != 0 && low_num * best_den > best_num * low_den) return;

    if (d == slots.size()) {
      long num = s1_size + pool_total - removed;
      long den = s1_size + gsum;
      bool better = best_den == 0 || num * best_den < best_num * den ||
                    (num * best_den == best_num * den && tie_prefers_this_pair);
      if (better) {
        best_num = num;
        best_den = den;
        best_picks = picks;
        best_removed = removed;
        best_gsum = gsum;
        beat_global = true;
        tie_prefers_this_pair = false;  // later ties within this pair keep the first
      }
      return;
    }

    const ReceiverOptions& opt = *slots[d];
    for (std::size_t i = 0; i < opt.pick.size(); ++i) {
      int x = opt.pick[i];
      bool strikes = pool[x] > 0;
      if (strikes) --pool[x];
      picks[d] = static_cast<int>(i);
      dfs(d + 1, removed + (strikes ? 1 : 0), gsum + opt.size[i]);
      if (strikes) ++pool[x];
    }
  }
};

}  // namespace

GeneratorBound generator_upper_bound(const Topology& t) {
  int k = t.user_count();
  std::vector<ReceiverOptions> options;
  options.reserve(k);
  for (int r = 1; r <= k; ++r) options.push_back(receiver_options(t, r));

  std::uint32_t full = t.all_users().mask();
  GeneratorBound best;
  bool have = false;
  long best_num = 0, best_den = 0;
  std::vector<int> best_picks;
  std::vector<int> best_receivers;
  std::size_t best_s2_slots = 0;

  for (std::uint32_t m1 = 1; m1 <= full; ++m1) {
    UserSet s1 = UserSet::from_mask(m1);
    std::uint32_t comp = full & ~m1;
    for (std::uint32_t m2 = comp;; m2 = (m2 - 1) & comp) {
      UserSet s2 = UserSet::from_mask(m2);

      std::vector<ReceiverOptions*> slots;
      std::size_t s2_slots = 0;
      for (int r : s2)
        if (!options[r - 1].pick.empty()) {
          slots.push_back(&options[r - 1]);
          ++s2_slots;
        }
      for (int r : s1)
        if (!options[r - 1].pick.empty()) slots.push_back(&options[r - 1]);

      PairSearch search(slots);
      search.s1_size = s1.size();
      for (int m : s2)
        for (int u : t.heard(m)) {
          ++search.pool[u];
          ++search.pool_total;
        }
      search.best_num = best_num;
      search.best_den = best_den;
      search.tie_prefers_this_pair =
          have && (set_lex_less(s1, best.s1) || (s1 == best.s1 && set_lex_less(s2, best.s2)));
      search.run();

      if (search.beat_global) {
        best_num = search.best_num;
        best_den = search.best_den;
        best_picks = search.best_picks;
        best_receivers.clear();
        for (ReceiverOptions* o : slots) best_receivers.push_back(o->receiver);
        best_s2_slots = s2_slots;
        best.s1 = s1;
        best.s2 = s2;
        best.residual = search.best_num - s1.size();
        best.value = Rational(search.best_num, search.best_den);
        have = true;
      }
      if (m2 == 0) break;
    }
  }

  best.s1_choices.clear();
  best.s2_choices.clear();
  for (std::size_t d = 0; d < best_receivers.size(); ++d) {
    int r = best_receivers[d];
    const ReceiverOptions& opt = options[r - 1];
    GeneratorChoice choice;
    choice.receiver = r;
    choice.last = opt.pick[best_picks[d]];
    choice.generated = opt.gen[best_picks[d]];
    choice.order = generator_order(t, r, choice.generated, choice.last);
    (d < best_s2_slots ? best.s2_choices : best.s1_choices).push_back(choice);
  }
  return best;
}

Rational combined_upper_bound(const Topology& t) {
  if (!check_feasibility(t).feasible) return Rational(0);
  Rational a = cancellation_upper_bound(t).value;
  Rational b = generator_upper_bound(t).value;
  return a < b ? a : b;
}

}  // namespace timcm
