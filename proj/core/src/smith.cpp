#include "tracefree/smith.hpp"

#include <algorithm>
#include <utility>

#include "tracefree/error.hpp"

namespace tracefree {

std::vector<Integer> smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) throw Error(ErrorKind::NonSquare, "ragged integer matrix");
  }
  const std::size_t r = std::min(rows, cols);

  for (std::size_t t = 0; t < r; ++t) {
    // Move the smallest nonzero entry of the remaining block to (t, t), clear
    // its row and column, and repeat until nothing is left to clear.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
  }

  std::vector<Integer> diag(r);
  for (std::size_t t = 0; t < r; ++t) diag[t] = abs(m[t][t]);
  return diag;
}

std::vector<Integer> cokernel_invariants(const IntMatrix& relations, std::size_t generators) {
  std::vector<Integer> diag = relations.empty() ? std::vector<Integer>{} : smith_normal_form(relations);
  std::vector<Integer> out;
  for (const auto& d : diag) {
    if (d != 1) out.push_back(d);
  }
  for (std::size_t k = diag.size(); k < generators; ++k) out.push_back(0);
  return out;
}

}  // namespace tracefree
