#include "timcm/simplex.hpp"

#include <stdexcept>

namespace timcm {

LpSolution lp_maximize(const std::vector<std::vector<Rational>>& a,
                       const std::vector<Rational>& b, const std::vector<Rational>& c) {
  std::size_t m = a.size();
  std::size_t n = c.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("constraint row width mismatch");
  if (b.size() != m) throw std::invalid_argument("right-hand side size mismatch");
  for (const auto& v : b)
    if (v.negative()) throw std::invalid_argument("negative right-hand side");

  // Tableau: m constraint rows over columns [vars | slacks | rhs], plus the
  // objective row holding negated reduced costs.
  std::size_t cols = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(cols));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) t[r][j] = a[r][j];
    t[r][n + r] = Rational(1);
    t[r][cols - 1] = b[r];
    basis[r] = n + r;
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];

  for (;;) {
    // Bland: entering variable is the lowest-index column with a negative
    // objective entry.
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (t[m][j].negative()) {
        enter = j;
        break;
      }
    if (enter == cols - 1) break;

    // Bland: among the tightest rows, leave on the lowest basis index.
    bool found = false;
    std::size_t leave = 0;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (!t[r][enter].positive()) continue;
      Rational ratio = t[r][cols - 1] / t[r][enter];
      if (!found || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        found = true;
        leave = r;
        best_ratio = ratio;
      }
    }
    if (!found) throw std::logic_error("unbounded linear program");

    Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v = v / pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter].zero()) continue;
      Rational f = t[r][enter];
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  sol.value = t[m][cols - 1];
  sol.x.assign(n, Rational());
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) sol.x[basis[r]] = t[r][cols - 1];
  return sol;
}

}  // namespace timcm
