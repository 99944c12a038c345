#include "chkit/laurent.hpp"

#include <algorithm>

namespace chkit {

std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int n = std::min(rows, cols);
  std::vector<mpz_class> diag;

  int t = 0;
  while (t < n) {
    // find pivot with minimal |value|
    int pr = -1, pc = -1;
    mpz_class best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c)
        if (m[r][c] != 0 && (pr < 0 || abs(m[r][c]) < best)) {
          best = abs(m[r][c]);
          pr = r;
          pc = c;
        }
    if (pr < 0) break;
    std::swap(m[t], m[pr]);
    for (int r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);

    bool clean = true;
    for (int r = t + 1; r < rows; ++r) {
      if (m[r][t] == 0) continue;
      mpz_class q = m[r][t] / m[t][t];
      for (int c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
      if (m[r][t] != 0) clean = false;
    }
    for (int c = t + 1; c < cols; ++c) {
      if (m[t][c] == 0) continue;
      mpz_class q = m[t][c] / m[t][t];
      for (int r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
      if (m[t][c] != 0) clean = false;
    }
    if (!clean) continue;  // repeat with smaller pivot

    // enforce divisibility d_t | m[r][c]
    bool fixed = true;
    for (int r = t + 1; r < rows && fixed; ++r)
      for (int c = t + 1; c < cols && fixed; ++c)
        if (m[r][c] % m[t][t] != 0) {
          for (int cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
          fixed = false;
        }
    if (!fixed) continue;

    diag.push_back(abs(m[t][t]));
    ++t;
  }
  while (static_cast<int>(diag.size()) < n) diag.push_back(0);
  return diag;
}

std::vector<mpz_class> group_invariant_factors(const std::vector<std::vector<mpz_class>>& rel,
                                               int generators) {
  std::vector<std::vector<mpz_class>> m = rel;
  if (m.empty()) m.push_back(std::vector<mpz_class>(generators, 0));
  for (auto& row : m) row.resize(generators, 0);
  std::vector<mpz_class> d = smith_normal_form(m);
  int rank = 0;
  std::vector<mpz_class> out;
  for (const auto& v : d) {
    if (v != 0) {
      ++rank;
      if (v > 1) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  int free_rank = generators - rank;
  for (int i = 0; i < free_rank; ++i) out.push_back(0);
  return out;
}

}  // namespace chkit
