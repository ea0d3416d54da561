#pragma once

// Independent dense fraction-free elimination over the integers, used as a
// cross-check oracle for the production sparse rational elimination.  Kept
// deliberately separate from core: no shared code paths.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace oracle {

using IntMat = std::vector<std::vector<long long>>;

// Rank by Bareiss one-step fraction-free Gaussian elimination.  All divisions
// are exact; entries stay integral throughout.
inline int bareiss_rank(IntMat a) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  long long prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(a[r], a[sel]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        long long num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        if (num % prev != 0) throw std::logic_error("bareiss: inexact division");
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Determinant of a square integer matrix by the same elimination.
inline long long bareiss_det(IntMat a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  long long prev = 1;
  long long sign = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) { sel = i; break; }
    if (sel < 0) return 0;
    if (sel != c) {
      std::swap(a[c], a[sel]);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        long long num = a[c][c] * a[i][j] - a[i][c] * a[c][j];
        if (num % prev != 0) throw std::logic_error("bareiss: inexact division");
        a[i][j] = num / prev;
      }
      a[i][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace oracle
