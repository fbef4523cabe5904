#include "timcm/secure_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace timcm {

bool is_independent_set(const Topology& t, UserSet u) {
  for (int i : u)
    if ((t.heard(i) & u) != UserSet{i}) return false;
  return true;
}

std::optional<UserSet> find_jammer_set(const Topology& t, UserSet u) {
  if (u.empty()) throw std::invalid_argument("jamming set requested for empty user set");
  if (!is_independent_set(t, u))
    throw std::invalid_argument("jamming set requested for a non-independent user set");

  UserSet exposed = t.audience_of(u) - u;
  std::vector<int> candidates;
  UserSet reachable;
  for (int c : t.all_users() - u)
    if (!t.audience(c).intersects(u)) {
      candidates.push_back(c);
      reachable |= t.audience(c);
    }
  if (!exposed.subset_of(reachable)) return std::nullopt;

  // Smallest covering subset of the candidates. The candidate pool is tiny
  // (< K), so sorted exhaustive search is fine.
  std::vector<UserSet> subsets;
  subsets.reserve(std::size_t{1} << candidates.size());
  for (std::uint32_t m = 0; m < (1u << candidates.size()); ++m) {
    UserSet s;
    for (std::size_t b = 0; b < candidates.size(); ++b)
      if ((m >> b) & 1) s.add(candidates[b]);
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end(), [](UserSet a, UserSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return set_lex_less(a, b);
  });
  for (UserSet s : subsets)
    if (exposed.subset_of(t.audience_of(s))) return s;
  return std::nullopt;  // unreachable: the full candidate set covers
}

std::vector<UserSet> independent_sets(const Topology& t) {
  std::vector<UserSet> out;
  std::uint32_t all = t.all_users().mask();
  for (std::uint32_t m = 1; m <= all; ++m) {
    UserSet u = UserSet::from_mask(m);
    if (is_independent_set(t, u)) out.push_back(u);
  }
  return out;
}

std::vector<SecureSet> secure_independent_sets(const Topology& t) {
  std::vector<SecureSet> out;
  for (UserSet u : independent_sets(t))
    if (auto jammers = find_jammer_set(t, u)) out.push_back({u, *jammers});
  return out;
}

std::vector<UserSet> maximum_independent_sets(const Topology& t) {
  auto all = independent_sets(t);
  int best = 0;
  for (UserSet u : all) best = std::max(best, u.size());
  std::vector<UserSet> out;
  for (UserSet u : all)
    if (u.size() == best) out.push_back(u);
  return out;
}

std::vector<SecureSet> maximum_secure_independent_sets(const Topology& t) {
  auto all = secure_independent_sets(t);
  int best = 0;
  for (const SecureSet& s : all) best = std::max(best, s.users.size());
  std::vector<SecureSet> out;
  for (const SecureSet& s : all)
    if (s.users.size() == best) out.push_back(s);
  return out;
}

}  // namespace timcm
