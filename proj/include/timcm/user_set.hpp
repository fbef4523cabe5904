#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace timcm {

// Hard cap on network size. Canonicalization walks all K! relabelings and the
// upper-bound searches are exponential in K, so 8 is already generous.
inline constexpr int kMaxUsers = 8;

// Set of user indices drawn from {1..kMaxUsers}, stored as a bitmask
// (bit u-1 represents user u). Value type, cheap to copy.
class UserSet {
 public:
  constexpr UserSet() = default;
  constexpr UserSet(std::initializer_list<int> users) {
    for (int u : users) add(u);
  }

  static constexpr UserSet from_mask(std::uint32_t mask) {
    UserSet s;
    s.bits_ = mask;
    return s;
  }

  // {1..k}
  static constexpr UserSet full(int k) {
    return from_mask((k >= 32 ? ~0u : (1u << k) - 1u));
  }

  constexpr std::uint32_t mask() const { return bits_; }
  constexpr bool contains(int u) const { return (bits_ >> (u - 1)) & 1u; }
  constexpr void add(int u) { bits_ |= 1u << (u - 1); }
  constexpr void remove(int u) { bits_ &= ~(1u << (u - 1)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  // Smallest member; 0 when empty.
  constexpr int lowest() const {
    return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
  }

  constexpr UserSet operator|(UserSet o) const { return from_mask(bits_ | o.bits_); }
  constexpr UserSet operator&(UserSet o) const { return from_mask(bits_ & o.bits_); }
  // Set difference.
  constexpr UserSet operator-(UserSet o) const { return from_mask(bits_ & ~o.bits_); }
  constexpr UserSet& operator|=(UserSet o) { bits_ |= o.bits_; return *this; }
  constexpr UserSet& operator&=(UserSet o) { bits_ &= o.bits_; return *this; }
  constexpr UserSet& operator-=(UserSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const UserSet&) const = default;
  constexpr bool subset_of(UserSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(UserSet o) const { return (bits_ & o.bits_) != 0; }

  // Iterates members in ascending order.
  class iterator {
   public:
    explicit constexpr iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(size());
    for (int u : *this) v.push_back(u);
    return v;
  }

 private:
  std::uint32_t bits_ = 0;
};

// True lexicographic order on the ascending member sequences, with the empty
// set first. Distinct from numeric mask order: {1,4} precedes {2,3} here.
// Used wherever a deterministic tie-break between sets is required.
inline bool set_lex_less(UserSet a, UserSet b) {
  while (!a.empty() && !b.empty()) {
    int x = a.lowest();
    int y = b.lowest();
    if (x != y) return x < y;
    a.remove(x);
    b.remove(y);
  }
  return a.empty() && !b.empty();
}

// Multiset of user indices. Small fixed-capacity counter table.
struct UserMultiset {
  std::array<int, kMaxUsers + 1> count{};
  int total = 0;

  void add(int u) {
    ++count[u];
    ++total;
  }
  void add_all(UserSet s) {
    for (int u : s) add(u);
  }
  // Removes one occurrence if present; false when u is absent.
  bool remove_one(int u) {
    if (count[u] == 0) return false;
    --count[u];
    --total;
    return true;
  }
  // Members with multiplicity, ascending.
  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(total);
    for (int u = 1; u <= kMaxUsers; ++u)
      for (int i = 0; i < count[u]; ++i) v.push_back(u);
    return v;
  }
  bool operator==(const UserMultiset&) const = default;
};

}  // namespace timcm
