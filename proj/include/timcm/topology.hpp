#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "timcm/user_set.hpp"

namespace timcm {

// A K-user interference topology: for each receiver k, the set of
// transmitters it hears. Every receiver hears its own transmitter, so the
// diagonal is always present; a description violating that is rejected.
//
// Users are numbered 1..K. K is capped at kMaxUsers (8).
class Topology {
 public:
  // heard[j-1] = transmitters heard at receiver j, own transmitter included.
  // Throws std::invalid_argument on bad sizes, out-of-range members, or a
  // missing diagonal entry.
  Topology(int k, std::vector<UserSet> heard);

  int user_count() const { return k_; }
  UserSet all_users() const { return UserSet::full(k_); }

  // Transmitters heard at receiver j (includes j).
  UserSet heard(int j) const { return heard_[j - 1]; }
  // Cross links into receiver j: heard(j) minus j itself.
  UserSet interferers(int j) const { return heard_[j - 1] - UserSet{j}; }
  // Receivers that hear transmitter i (includes i).
  UserSet audience(int i) const { return audience_[i - 1]; }
  // Union of audiences over a set of transmitters.
  UserSet audience_of(UserSet s) const {
    UserSet r;
    for (int i : s) r |= audience_[i - 1];
    return r;
  }

  bool operator==(const Topology& o) const { return k_ == o.k_ && heard_ == o.heard_; }

  // Matrix text form: first line K, then K rows of K characters, row j
  // position i holding '1' iff receiver j hears transmitter i.
  // parse_text(to_text()) is an exact round trip.
  static Topology parse_text(const std::string& text);
  std::string to_text() const;

  // JSON form: {"k": K, "heard": [[...], ...]} with ascending 1-based lists.
  static Topology from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  // Accepts either format, sniffing for a leading '{'.
  static Topology parse_any(const std::string& text);

  // Relabels users: perm[u-1] is the new name of user u.
  Topology relabeled(const std::vector<int>& perm) const;

  // Row-major bit encoding of the adjacency matrix, first matrix bit in the
  // most significant position, so numeric order on keys is lexicographic
  // order on matrices. Only comparable between topologies of equal K.
  std::uint64_t matrix_key() const;

  // Lexicographically least relabeling of this topology: the representative
  // of its isomorphism class. Full K! scan.
  Topology canonical() const;

  // All canonical representatives for the given K, in ascending matrix_key
  // order. Practical up to k == 5 (9608 classes); larger K is rejected
  // because the off-diagonal mask space (2^(K(K-1))) becomes intractable.
  static std::vector<Topology> enumerate_all(int k);

 private:
  int k_;
  std::vector<UserSet> heard_;
  std::vector<UserSet> audience_;
};

}  // namespace timcm
