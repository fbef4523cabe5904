#pragma once

#include <utility>
#include <vector>

#include "timcm/rational.hpp"
#include "timcm/schedule.hpp"
#include "timcm/topology.hpp"

namespace timcm {

// Per-slot audit. A slot is sound iff all three lists are empty:
//  - decode: (sender, other active transmitter its receiver hears) pairs;
//    a sender's receiver must hear no other sender or jammer.
//  - secrecy: (sender, exposed receiver hearing no jammer) pairs; every
//    non-member receiver that hears a sender must also hear a jammer.
//  - overlap: users listed as both sender and jammer.
struct SlotReport {
  int slot = 0;  // 1-based position in the schedule
  std::vector<std::pair<int, int>> decode;
  std::vector<std::pair<int, int>> secrecy;
  UserSet overlap;

  bool ok() const { return decode.empty() && secrecy.empty() && overlap.empty(); }
};

// Audits every slot. Throws std::invalid_argument when the schedule's user
// count disagrees with the topology.
std::vector<SlotReport> verify_schedule(const Topology& t, const Schedule& s);

bool schedule_valid(const std::vector<SlotReport>& reports);

// min over users of (slots where the user sends) / (total slots).
// Throws std::invalid_argument on an empty schedule.
Rational symmetric_rate(const Schedule& s);

// Best symmetric rate over all schedules of at most t_max slots whose slots
// are shielded independent sets with their stored jammers. Exhaustive over
// slot multisets; cost grows as C(#sets + T - 1, T) per length T, fine for
// the small networks this targets. Rate 0 with an empty schedule when no
// user can ever be covered.
struct OracleResult {
  Rational rate;
  Schedule schedule;
};
OracleResult brute_force_best_schedule(const Topology& t, int t_max);

}  // namespace timcm
