#include "timcm/topology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace timcm {

namespace {

void check_user_count(int k) {
  if (k < 1 || k > kMaxUsers)
    throw std::invalid_argument("user count must be between 1 and " +
                                std::to_string(kMaxUsers) + ", got " + std::to_string(k));
}

// Positions of the off-diagonal matrix cells in row-major order. The packed
// word over these positions orders matrices exactly like matrix_key does,
// since the diagonal bits are identical (all ones) across topologies.
struct OffDiagonal {
  int k;
  int bits;                   // k*(k-1)
  std::vector<int> row, col;  // 1-based cell per packed bit, MSB-first

  explicit OffDiagonal(int k_) : k(k_), bits(k_ * (k_ - 1)) {
    for (int r = 1; r <= k; ++r)
      for (int c = 1; c <= k; ++c)
        if (r != c) {
          row.push_back(r);
          col.push_back(c);
        }
  }

  int index(int r, int c) const {
    // Row-major offset with the diagonal cells removed.
    int before = (r - 1) * (k - 1) + (c - 1) - (c > r ? 1 : 0);
    return before;
  }

  std::uint64_t pack(const Topology& t) const {
    std::uint64_t w = 0;
    for (int q = 0; q < bits; ++q)
      if (t.heard(row[q]).contains(col[q])) w |= std::uint64_t{1} << (bits - 1 - q);
    return w;
  }

  Topology unpack(std::uint64_t w) const {
    std::vector<UserSet> heard(k);
    for (int j = 1; j <= k; ++j) heard[j - 1].add(j);
    for (int q = 0; q < bits; ++q)
      if ((w >> (bits - 1 - q)) & 1) heard[row[q] - 1].add(col[q]);
    return Topology(k, std::move(heard));
  }
};

std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

Topology::Topology(int k, std::vector<UserSet> heard) : k_(k), heard_(std::move(heard)) {
  check_user_count(k_);
  if (static_cast<int>(heard_.size()) != k_)
    throw std::invalid_argument("expected " + std::to_string(k_) + " heard sets, got " +
                                std::to_string(heard_.size()));
  UserSet valid = UserSet::full(k_);
  for (int j = 1; j <= k_; ++j) {
    if (!heard_[j - 1].subset_of(valid))
      throw std::invalid_argument("receiver " + std::to_string(j) + " hears a user outside 1..k");
    if (!heard_[j - 1].contains(j))
      throw std::invalid_argument("receiver " + std::to_string(j) +
                                  " does not hear its own transmitter");
  }
  audience_.resize(k_);
  for (int j = 1; j <= k_; ++j)
    for (int i : heard_[j - 1]) audience_[i - 1].add(j);
}

Topology Topology::parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty topology description");
  int k = 0;
  try {
    std::size_t pos = 0;
    k = std::stoi(line, &pos);
    if (pos != line.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("line 1: expected user count, got \"" + line + "\"");
  }
  check_user_count(k);
  std::vector<UserSet> heard(k);
  for (int j = 1; j <= k; ++j) {
    if (!std::getline(in, line))
      throw std::invalid_argument("expected " + std::to_string(k) + " matrix rows, got " +
                                  std::to_string(j - 1));
    if (static_cast<int>(line.size()) != k)
      throw std::invalid_argument("row " + std::to_string(j) + ": expected " + std::to_string(k) +
                                  " characters, got " + std::to_string(line.size()));
    for (int i = 1; i <= k; ++i) {
      char c = line[i - 1];
      if (c != '0' && c != '1')
        throw std::invalid_argument("row " + std::to_string(j) + ": invalid character '" +
                                    std::string(1, c) + "'");
      if (c == '1') heard[j - 1].add(i);
    }
  }
  while (std::getline(in, line))
    if (!line.empty())
      throw std::invalid_argument("unexpected trailing content: \"" + line + "\"");
  return Topology(k, std::move(heard));
}

std::string Topology::to_text() const {
  std::string out = std::to_string(k_) + "\n";
  for (int j = 1; j <= k_; ++j) {
    for (int i = 1; i <= k_; ++i) out += heard_[j - 1].contains(i) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Topology Topology::from_json(const nlohmann::json& j) {
  try {
    int k = j.at("k").get<int>();
    check_user_count(k);
    const auto& rows = j.at("heard");
    if (!rows.is_array() || static_cast<int>(rows.size()) != k)
      throw std::invalid_argument("\"heard\" must list one set per user");
    std::vector<UserSet> heard(k);
    for (int r = 0; r < k; ++r)
      for (const auto& u : rows[r]) {
        int user = u.get<int>();
        if (user < 1 || user > k)
          throw std::invalid_argument("heard set " + std::to_string(r + 1) +
                                      " contains out-of-range user " + std::to_string(user));
        heard[r].add(user);
      }
    return Topology(k, std::move(heard));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad topology JSON: ") + e.what());
  }
}

nlohmann::json Topology::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 1; j <= k_; ++j) rows.push_back(heard_[j - 1].to_vector());
  return {{"k", k_}, {"heard", rows}};
}

Topology Topology::parse_any(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("bad topology JSON: ") + e.what());
    }
    return from_json(j);
  }
  return parse_text(text);
}

Topology Topology::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != k_)
    throw std::invalid_argument("permutation size does not match user count");
  std::vector<UserSet> heard(k_);
  for (int j = 1; j <= k_; ++j)
    for (int i : heard_[j - 1]) heard[perm[j - 1] - 1].add(perm[i - 1]);
  return Topology(k_, std::move(heard));
}

std::uint64_t Topology::matrix_key() const {
  std::uint64_t w = 0;
  for (int j = 1; j <= k_; ++j)
    for (int i = 1; i <= k_; ++i) {
      w <<= 1;
      w |= heard_[j - 1].contains(i) ? 1 : 0;
    }
  return w;
}

Topology Topology::canonical() const {
  std::vector<int> perm(k_);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_perm;
  do {
    // Key of the relabeled matrix, computed without building the topology:
    // cell (j,i) lands on (perm[j], perm[i]).
    std::uint64_t w = 0;
    for (int j = 1; j <= k_; ++j)
      for (int i : heard_[j - 1]) {
        int pos = (perm[j - 1] - 1) * k_ + (perm[i - 1] - 1);
        w |= std::uint64_t{1} << (k_ * k_ - 1 - pos);
      }
    if (w < best) {
      best = w;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return relabeled(best_perm);
}

std::vector<Topology> Topology::enumerate_all(int k) {
  check_user_count(k);
  if (k > 5)
    throw std::invalid_argument("exhaustive enumeration supported for k <= 5, got " +
                                std::to_string(k));
  OffDiagonal od(k);
  auto perms = all_permutations(k);
  // table[p][q] = packed position the q-th off-diagonal bit lands on under
  // permutation p.
  std::vector<std::vector<int>> table(perms.size(), std::vector<int>(od.bits));
  for (std::size_t p = 0; p < perms.size(); ++p)
    for (int q = 0; q < od.bits; ++q)
      table[p][q] = od.index(perms[p][od.row[q] - 1], perms[p][od.col[q] - 1]);

  std::vector<bool> visited(std::uint64_t{1} << od.bits, false);
  std::vector<Topology> reps;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << od.bits); ++m) {
    if (visited[m]) continue;
    // m is the least packed word of its orbit: all smaller orbit members
    // would have marked it. Its unpacked form is the canonical matrix.
    reps.push_back(od.unpack(m));
    for (std::size_t p = 0; p < perms.size(); ++p) {
      std::uint64_t image = 0;
      for (int q = 0; q < od.bits; ++q)
        if ((m >> (od.bits - 1 - q)) & 1)
          image |= std::uint64_t{1} << (od.bits - 1 - table[p][q]);
      visited[image] = true;
    }
  }
  return reps;
}

}  // namespace timcm
