#pragma once

// Reference computations that share no code with the library's algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "plcw/moves.hpp"

namespace plcw::test {

inline constexpr std::int64_t kPrime = 1000000007;

inline std::int64_t power_mod(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b %= kPrime;
  for (; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) r = r * b % kPrime;
  return r;
}

// Rank over GF(p) by Gaussian elimination.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if ((m[r][c] % kPrime + kPrime) % kPrime) pivot = r;
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const std::int64_t inv = power_mod((m[rank][c] % kPrime + kPrime) % kPrime, kPrime - 2);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::int64_t f = (m[r][c] % kPrime + kPrime) % kPrime * inv % kPrime;
      if (!f) continue;
      for (int k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % kPrime + kPrime) % kPrime;
    }
    ++rank;
  }
  return rank;
}

// Betti numbers of a simplicial complex from vertex sets with the usual
// alternating-sign boundary.
inline std::vector<int> simplicial_betti(const Complex& t) {
  const auto sets = vertex_sets(t);
  const int top = static_cast<int>(sets.size()) - 1;
  std::vector<int> ranks(top + 2, 0);
  for (int n = 1; n <= top; ++n) {
    std::map<std::vector<int>, int> row;
    for (std::size_t i = 0; i < sets[n - 1].size(); ++i) row[sets[n - 1][i]] = static_cast<int>(i);
    std::vector<std::vector<std::int64_t>> m(sets[n - 1].size(), std::vector<std::int64_t>(sets[n].size(), 0));
    for (std::size_t j = 0; j < sets[n].size(); ++j)
      for (int i = 0; i <= n; ++i) {
        std::vector<int> face = sets[n][j];
        face.erase(face.begin() + i);
        m[row.at(face)][j] = i % 2 ? -1 : 1;
      }
    ranks[n] = rank_mod_p(m);
  }
  std::vector<int> betti(top + 1);
  for (int n = 0; n <= top; ++n) betti[n] = static_cast<int>(sets[n].size()) - ranks[n] - ranks[n + 1];
  return betti;
}

// f-vector of the join from those of the factors.
inline FVector join_counts(const FVector& a, const FVector& b) {
  const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  FVector f(std::max({da, db, da + db + 1}) + 1, 0);
  for (int i = 0; i <= da; ++i) f[i] += a[i];
  for (int j = 0; j <= db; ++j) f[j] += b[j];
  for (int i = 0; i <= da; ++i)
    for (int j = 0; j <= db; ++j) f[i + j + 1] += a[i] * b[j];
  return f;
}

inline FVector product_counts(const FVector& a, const FVector& b) {
  if (a.empty() || b.empty()) return {};
  FVector f(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) f[i + j] += a[i] * b[j];
  return f;
}

// Radially subdividing an n-cell with boundary model of f-vector m replaces the
// cell by an apex and one cone cell per model cell.
inline FVector radial_counts(const FVector& f, int n, const FVector& m) {
  FVector out = f;
  out[0] += 1;
  for (std::size_t d = 0; d < m.size(); ++d) out[d + 1] += m[d];
  out[n] -= 1;
  return out;
}

}  // namespace plcw::test
