#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "timcm/user_set.hpp"

namespace timcm {

// One time slot: who transmits a message and who transmits cover noise.
struct Slot {
  UserSet senders;
  UserSet jammers;
  bool operator==(const Slot&) const = default;
};

// A periodic transmission plan over slots.size() slots for a k-user network.
struct Schedule {
  int k = 0;
  std::vector<Slot> slots;

  bool operator==(const Schedule&) const = default;

  // {"k": K, "slots": [{"senders": [...], "jammers": [...]}, ...]},
  // 1-based ascending user lists. from_json validates ranges and throws
  // std::invalid_argument on malformed input.
  static Schedule from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  static Schedule parse(const std::string& text);
};

}  // namespace timcm
