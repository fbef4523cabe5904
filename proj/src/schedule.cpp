#include "timcm/schedule.hpp"

#include <stdexcept>

namespace timcm {

namespace {

UserSet read_user_list(const nlohmann::json& arr, int k, const char* what, std::size_t slot) {
  UserSet s;
  for (const auto& u : arr) {
    int user = u.get<int>();
    if (user < 1 || user > k)
      throw std::invalid_argument("slot " + std::to_string(slot + 1) + ": " + what +
                                  " contains out-of-range user " + std::to_string(user));
    s.add(user);
  }
  return s;
}

}  // namespace

Schedule Schedule::from_json(const nlohmann::json& j) {
  try {
    Schedule s;
    s.k = j.at("k").get<int>();
    if (s.k < 1 || s.k > kMaxUsers)
      throw std::invalid_argument("user count must be between 1 and " +
                                  std::to_string(kMaxUsers));
    for (const auto& slot : j.at("slots"))
      s.slots.push_back({read_user_list(slot.at("senders"), s.k, "senders", s.slots.size()),
                         read_user_list(slot.at("jammers"), s.k, "jammers", s.slots.size())});
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad schedule JSON: ") + e.what());
  }
}

nlohmann::json Schedule::to_json() const {
  nlohmann::json slots_json = nlohmann::json::array();
  for (const Slot& s : slots)
    slots_json.push_back({{"senders", s.senders.to_vector()}, {"jammers", s.jammers.to_vector()}});
  return {{"k", k}, {"slots", slots_json}};
}

Schedule Schedule::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad schedule JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace timcm
