#include "timcm/verifier.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "timcm/secure_sets.hpp"

namespace timcm {

std::vector<SlotReport> verify_schedule(const Topology& t, const Schedule& s) {
  if (s.k != t.user_count())
    throw std::invalid_argument("schedule is for " + std::to_string(s.k) + " users, topology has " +
                                std::to_string(t.user_count()));
  std::vector<SlotReport> reports;
  reports.reserve(s.slots.size());
  for (std::size_t i = 0; i < s.slots.size(); ++i) {
    const Slot& slot = s.slots[i];
    SlotReport rep;
    rep.slot = static_cast<int>(i) + 1;
    rep.overlap = slot.senders & slot.jammers;
    UserSet active = slot.senders | slot.jammers;
    for (int sender : slot.senders)
      for (int other : (t.heard(sender) & active) - UserSet{sender})
        rep.decode.emplace_back(sender, other);
    UserSet jammed = t.audience_of(slot.jammers);
    for (int sender : slot.senders)
      for (int receiver : t.audience(sender) - slot.senders)
        if (!jammed.contains(receiver)) rep.secrecy.emplace_back(sender, receiver);
    reports.push_back(std::move(rep));
  }
  return reports;
}

bool schedule_valid(const std::vector<SlotReport>& reports) {
  for (const SlotReport& r : reports)
    if (!r.ok()) return false;
  return true;
}

Rational symmetric_rate(const Schedule& s) {
  if (s.slots.empty()) throw std::invalid_argument("rate of an empty schedule");
  int slots = static_cast<int>(s.slots.size());
  int least = slots;
  for (int user = 1; user <= s.k; ++user) {
    int sends = 0;
    for (const Slot& slot : s.slots)
      if (slot.senders.contains(user)) ++sends;
    least = std::min(least, sends);
  }
  return Rational(least, slots);
}

namespace {

struct OracleSearch {
  const std::vector<SecureSet>& sets;
  int k;
  int t_max;
  Rational best_rate;
  std::vector<int> chosen, best_chosen;
  std::array<int, kMaxUsers + 1> coverage{};

  OracleSearch(const std::vector<SecureSet>& s, int k_, int t_max_)
      : sets(s), k(k_), t_max(t_max_), best_rate(0) {}

  // Non-decreasing index sequences, depth-first; every prefix length up to
  // t_max is scored.
  void extend(std::size_t from) {
    int t_len = static_cast<int>(chosen.size());
    if (t_len > 0) {
      int least = coverage[1];
      for (int u = 2; u <= k; ++u) least = std::min(least, coverage[u]);
      Rational rate(least, t_len);
      if (rate > best_rate) {
        best_rate = rate;
        best_chosen = chosen;
      }
    }
    if (t_len == t_max) return;
    for (std::size_t i = from; i < sets.size(); ++i) {
      chosen.push_back(static_cast<int>(i));
      for (int u : sets[i].users) ++coverage[u];
      extend(i);
      for (int u : sets[i].users) --coverage[u];
      chosen.pop_back();
    }
  }
};

}  // namespace

OracleResult brute_force_best_schedule(const Topology& t, int t_max) {
  if (t_max < 1) throw std::invalid_argument("oracle horizon must be at least 1");
  auto sets = secure_independent_sets(t);
  OracleSearch search(sets, t.user_count(), t_max);
  search.extend(0);

  OracleResult out;
  out.rate = search.best_rate;
  out.schedule.k = t.user_count();
  for (int i : search.best_chosen)
    out.schedule.slots.push_back({sets[i].users, sets[i].jammers});
  return out;
}

}  // namespace timcm
