#include "linelab/lp.hpp"

#include <stdexcept>

namespace linelab {

void LinearSystem::add_eq(std::vector<Rat> lhs, Rat rhs) {
  if (static_cast<int>(lhs.size()) != nvars) throw std::invalid_argument("lp: row length != nvars");
  eq_lhs.push_back(std::move(lhs));
  eq_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_ge(std::vector<Rat> lhs, Rat rhs) {
  if (static_cast<int>(lhs.size()) != nvars) throw std::invalid_argument("lp: row length != nvars");
  ge_lhs.push_back(std::move(lhs));
  ge_rhs.push_back(std::move(rhs));
}

std::optional<std::vector<Rat>> lp_feasible_point(const LinearSystem& s) {
  const int neq = static_cast<int>(s.eq_lhs.size());
  const int nge = static_cast<int>(s.ge_lhs.size());
  const int m = neq + nge;
  const int nstruct = s.nvars + nge;      // structural vars + surplus vars
  const int ncols = nstruct + m;          // + one artificial per row
  const int rhs = ncols;                  // rhs column index

  // tab[r]: row over [structural | surplus | artificial | rhs], rhs >= 0.
  std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(ncols + 1, Rat(0)));
  for (int i = 0; i < neq; i++) {
    for (int j = 0; j < s.nvars; j++) tab[i][j] = s.eq_lhs[i][j];
    tab[i][rhs] = s.eq_rhs[i];
  }
  for (int k = 0; k < nge; k++) {
    int i = neq + k;
    for (int j = 0; j < s.nvars; j++) tab[i][j] = s.ge_lhs[k][j];
    tab[i][s.nvars + k] = Rat(-1);
    tab[i][rhs] = s.ge_rhs[k];
  }
  for (int i = 0; i < m; i++) {
    if (sgn(tab[i][rhs]) < 0)
      for (auto& x : tab[i]) x = -x;
    tab[i][nstruct + i] = Rat(1);
  }

  // Phase-1 objective: minimize the sum of artificials. zrow holds reduced
  // costs; zrow[rhs] is minus the current objective value.
  std::vector<int> basis(m);
  std::vector<Rat> zrow(ncols + 1, Rat(0));
  for (int i = 0; i < m; i++) {
    basis[i] = nstruct + i;
    for (int j = 0; j <= ncols; j++)
      if (j < nstruct || j == rhs) zrow[j] -= tab[i][j];
  }

  for (;;) {
    // Bland: entering = lowest-index structural/surplus column with negative
    // reduced cost. Artificials never re-enter.
    int col = -1;
    for (int j = 0; j < nstruct; j++)
      if (sgn(zrow[j]) < 0) { col = j; break; }
    if (col < 0) break;

    // Bland: leaving = min ratio, ties by lowest basis index.
    int row = -1;
    Rat best;
    for (int i = 0; i < m; i++) {
      if (sgn(tab[i][col]) <= 0) continue;
      Rat ratio = tab[i][rhs] / tab[i][col];
      if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
        row = i;
        best = ratio;
      }
    }
    if (row < 0) throw std::logic_error("lp: phase-1 objective unbounded");

    Rat piv = tab[row][col];
    for (int j = 0; j <= ncols; j++) tab[row][j] /= piv;
    for (int i = 0; i < m; i++) {
      if (i == row || sgn(tab[i][col]) == 0) continue;
      Rat f = tab[i][col];
      for (int j = 0; j <= ncols; j++) tab[i][j] -= f * tab[row][j];
    }
    if (sgn(zrow[col]) != 0) {
      Rat f = zrow[col];
      for (int j = 0; j <= ncols; j++) zrow[j] -= f * tab[row][j];
    }
    basis[row] = col;
  }

  if (sgn(zrow[rhs]) != 0) return std::nullopt;  // artificials stuck positive

  std::vector<Rat> x(s.nvars, Rat(0));
  for (int i = 0; i < m; i++)
    if (basis[i] < s.nvars) x[basis[i]] = tab[i][rhs];
  return x;
}

}  // namespace linelab
