#include "heegaard/domains.hpp"

namespace heegaard {

// Phase-1 simplex over exact rationals. Minimizes the sum of artificial
// variables with Bland's rule (lowest eligible index enters; ratio ties break
// to the lowest basic index), which guarantees termination.
std::optional<std::vector<Rat>> feasible_point(const std::vector<std::vector<Rat>>& E,
                                               const std::vector<Rat>& f) {
  int m = static_cast<int>(E.size());
  int n = m == 0 ? 0 : static_cast<int>(E[0].size());
  require(static_cast<int>(f.size()) == m, Code::Precondition, "feasible_point shape mismatch");
  if (m == 0) return std::vector<Rat>(0);

  // Tableau rows: n structural + m artificial columns, then the rhs.
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1, Rat(0)));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    int s = f[i] < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) t[i][j] = s * E[i][j];
    t[i][n + i] = Rat(1);
    t[i][n + m] = s * f[i];
    basis[i] = n + i;
  }
  // Reduced costs for the objective sum of artificials.
  std::vector<Rat> red(n + m, Rat(0));
  Rat obj(0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) red[j] -= t[i][j];
    obj += t[i][n + m];
  }

  for (;;) {
    int enter = -1;
    for (int j = 0; j < n + m; ++j)
      if (red[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n + m] / t[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    require(leave >= 0, Code::Internal, "phase-1 objective unbounded");
    Rat piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat factor = t[i][enter];
      for (int j = 0; j <= n + m; ++j) t[i][j] -= factor * t[leave][j];
    }
    Rat rfactor = red[enter];
    if (rfactor != 0) {
      for (int j = 0; j < n + m; ++j) red[j] -= rfactor * t[leave][j];
      obj += rfactor * t[leave][n + m];
    }
    basis[leave] = enter;
  }

  if (obj != 0) return std::nullopt;
  std::vector<Rat> x(n, Rat(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][n + m];
  return x;
}

}  // namespace heegaard
