#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "timcm/feasibility.hpp"
#include "timcm/secure_sets.hpp"

using timcm::SecureSet;
using timcm::Topology;
using timcm::UserSet;

TEST_CASE("independence requires hearing no other member") {
  Topology t = fixtures::five_user();
  CHECK(timcm::is_independent_set(t, UserSet{4}));
  CHECK(timcm::is_independent_set(t, UserSet{2, 3, 5}));
  CHECK(timcm::is_independent_set(t, UserSet{3, 4, 5}));
  CHECK(!timcm::is_independent_set(t, UserSet{1, 3}));  // receiver 1 hears 3
  CHECK(!timcm::is_independent_set(t, UserSet{1, 4}));  // receiver 4 hears 1
  CHECK(!timcm::is_independent_set(t, UserSet::full(5)));
}

TEST_CASE("jammer search rejects bad inputs") {
  Topology t = fixtures::five_user();
  CHECK_THROWS_AS(timcm::find_jammer_set(t, UserSet{}), std::invalid_argument);
  CHECK_THROWS_AS(timcm::find_jammer_set(t, UserSet{1, 3}), std::invalid_argument);
}

TEST_CASE("six-user fixture has exactly nine shielded sets with known jammers") {
  Topology t = fixtures::six_user();
  std::vector<SecureSet> expected{
      {UserSet{1}, UserSet{3}}, {UserSet{2}, UserSet{}},     {UserSet{3}, UserSet{2, 5, 6}},
      {UserSet{4}, UserSet{1}}, {UserSet{5}, UserSet{4}},    {UserSet{2, 6}, UserSet{}},
      {UserSet{6}, UserSet{}},  {UserSet{4, 6}, UserSet{1}}, {UserSet{5, 6}, UserSet{4}},
  };
  // ascending mask order
  std::sort(expected.begin(), expected.end(),
            [](const SecureSet& a, const SecureSet& b) { return a.users.mask() < b.users.mask(); });
  CHECK(timcm::secure_independent_sets(t) == expected);

  // {1,5} is independent but unshieldable: nothing covers receivers 3 and 4.
  CHECK(timcm::is_independent_set(t, UserSet{1, 5}));
  CHECK(!timcm::find_jammer_set(t, UserSet{1, 5}).has_value());
}

TEST_CASE("five-user fixture has exactly twelve shielded sets with known jammers") {
  Topology t = fixtures::five_user();
  std::vector<SecureSet> expected{
      {UserSet{1}, UserSet{2}},    {UserSet{2}, UserSet{1}},    {UserSet{3}, UserSet{1}},
      {UserSet{4}, UserSet{}},     {UserSet{5}, UserSet{1}},    {UserSet{1, 2}, UserSet{4}},
      {UserSet{2, 3}, UserSet{1}}, {UserSet{2, 5}, UserSet{1}}, {UserSet{3, 4}, UserSet{5}},
      {UserSet{3, 5}, UserSet{1}}, {UserSet{4, 5}, UserSet{3}}, {UserSet{2, 3, 5}, UserSet{1}},
  };
  std::sort(expected.begin(), expected.end(),
            [](const SecureSet& a, const SecureSet& b) { return a.users.mask() < b.users.mask(); });
  CHECK(timcm::secure_independent_sets(t) == expected);

  // {3,4,5} is independent, but both potential jammers are heard inside it.
  CHECK(timcm::is_independent_set(t, UserSet{3, 4, 5}));
  CHECK(!timcm::find_jammer_set(t, UserSet{3, 4, 5}).has_value());
}

TEST_CASE("maximum families keep only the largest sets") {
  Topology six = fixtures::six_user();
  CHECK(timcm::maximum_independent_sets(six) ==
        std::vector<UserSet>{UserSet{1, 5, 6}, UserSet{2, 5, 6}});
  std::vector<SecureSet> smis = timcm::maximum_secure_independent_sets(six);
  std::vector<UserSet> smis_users;
  for (const SecureSet& s : smis) smis_users.push_back(s.users);
  CHECK(smis_users == std::vector<UserSet>{UserSet{2, 6}, UserSet{4, 6}, UserSet{5, 6}});

  std::vector<SecureSet> five = timcm::maximum_secure_independent_sets(fixtures::five_user());
  REQUIRE(five.size() == 1);
  CHECK(five[0].users == UserSet{2, 3, 5});
  CHECK(five[0].jammers == UserSet{1});
}

TEST_CASE("families are ascending in mask order and nested") {
  std::mt19937 rng(511);
  for (int trial = 0; trial < 40; ++trial) {
    Topology t = fixtures::random_topology(rng, 2 + trial % 4, 0.35);
    auto is = timcm::independent_sets(t);
    auto sis = timcm::secure_independent_sets(t);
    for (std::size_t i = 1; i < is.size(); ++i) CHECK(is[i - 1].mask() < is[i].mask());
    for (std::size_t i = 1; i < sis.size(); ++i) CHECK(sis[i - 1].users.mask() < sis[i].users.mask());
    std::size_t at = 0;
    for (const SecureSet& s : sis) {
      while (at < is.size() && is[at] != s.users) ++at;
      CHECK(at < is.size());  // every shielded set is independent
    }
  }
}

TEST_CASE("jammer witnesses agree with exhaustive search") {
  std::mt19937 rng(902);
  for (int trial = 0; trial < 150; ++trial) {
    int k = 2 + trial % 4;
    Topology t = fixtures::random_topology(rng, k, 0.15 + 0.1 * (trial % 5));
    for (std::uint32_t m = 1; m < (1u << k); ++m) {
      UserSet u = UserSet::from_mask(m);
      if (!timcm::is_independent_set(t, u)) continue;
      CHECK(timcm::find_jammer_set(t, u) == oracles::jammer_witness_oracle(t, u));
    }
  }
}

TEST_CASE("witness jammers actually shield their set") {
  std::mt19937 rng(141);
  for (int trial = 0; trial < 60; ++trial) {
    Topology t = fixtures::random_topology(rng, 2 + trial % 4, 0.3);
    for (const SecureSet& s : timcm::secure_independent_sets(t)) {
      CHECK(!s.users.intersects(s.jammers));
      for (int u : s.users) CHECK(!t.heard(u).intersects(s.jammers));  // members decode
      CHECK((t.audience_of(s.users) - s.users).subset_of(t.audience_of(s.jammers)));
    }
  }
}

TEST_CASE("positive rate is equivalent to every singleton being shieldable") {
  std::mt19937 rng(360);
  for (int trial = 0; trial < 120; ++trial) {
    int k = 2 + trial % 5;
    Topology t = fixtures::random_topology(rng, k, 0.2 + 0.12 * (trial % 5));
    bool all_singletons = true;
    for (int u = 1; u <= k; ++u)
      if (!timcm::find_jammer_set(t, UserSet{u})) all_singletons = false;
    CHECK(all_singletons == timcm::check_feasibility(t).feasible);
  }
}
