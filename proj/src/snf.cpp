#include <algorithm>
#include <set>

#include "plcw/algebra.hpp"

namespace plcw {

namespace {

using boost::multiprecision::abs;

// Dense reduction with optional transform tracking. Pivot: smallest nonzero
// absolute value in the remaining block.
struct DenseSmith {
  IntegerMatrix a;
  IntegerMatrix u;
  IntegerMatrix v;
  bool track;

  DenseSmith(IntegerMatrix m, bool with_transforms)
      : a(std::move(m)),
        u(with_transforms ? IntegerMatrix::identity(a.rows()) : IntegerMatrix()),
        v(with_transforms ? IntegerMatrix::identity(a.cols()) : IntegerMatrix()),
        track(with_transforms) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (track)
      for (int c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (track)
      for (int r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i += q * row_j
  void add_row(int i, int j, const Integer& q) {
    for (int c = 0; c < a.cols(); ++c)
      if (a(j, c) != 0) a(i, c) += q * a(j, c);
    if (track)
      for (int c = 0; c < u.cols(); ++c)
        if (u(j, c) != 0) u(i, c) += q * u(j, c);
  }
  // col_i += q * col_j
  void add_col(int i, int j, const Integer& q) {
    for (int r = 0; r < a.rows(); ++r)
      if (a(r, j) != 0) a(r, i) += q * a(r, j);
    if (track)
      for (int r = 0; r < v.rows(); ++r)
        if (v(r, j) != 0) v(r, i) += q * v(r, j);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (track)
      for (int c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  bool move_min_to(int t) {
    int br = -1, bc = -1;
    Integer best;
    for (int r = t; r < a.rows(); ++r)
      for (int c = t; c < a.cols(); ++c)
        if (a(r, c) != 0 && (br < 0 || abs(a(r, c)) < best)) {
          best = abs(a(r, c));
          br = r;
          bc = c;
        }
    if (br < 0) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  std::vector<Integer> run() {
    std::vector<Integer> diag;
    const int limit = std::min(a.rows(), a.cols());
    for (int t = 0; t < limit; ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        bool clean = true;
        for (int r = t + 1; r < a.rows(); ++r) {
          if (a(r, t) == 0) continue;
          Integer q = a(r, t) / a(t, t);
          if (q != 0) add_row(r, t, -q);
          if (a(r, t) != 0) clean = false;
        }
        for (int c = t + 1; c < a.cols(); ++c) {
          if (a(t, c) == 0) continue;
          Integer q = a(t, c) / a(t, t);
          if (q != 0) add_col(c, t, -q);
          if (a(t, c) != 0) clean = false;
        }
        if (!clean) {
          // A smaller remainder sits in row t or column t; bring it to the pivot.
          int br = t, bc = t;
          for (int r = t + 1; r < a.rows(); ++r)
            if (a(r, t) != 0 && abs(a(r, t)) < abs(a(br, bc))) br = r, bc = t;
          for (int c = t + 1; c < a.cols(); ++c)
            if (a(t, c) != 0 && abs(a(t, c)) < abs(a(br, bc))) br = t, bc = c;
          swap_rows(t, br);
          swap_cols(t, bc);
          continue;
        }
        int bad = -1;
        for (int r = t + 1; r < a.rows() && bad < 0; ++r)
          for (int c = t + 1; c < a.cols(); ++c)
            if (a(r, c) % a(t, t) != 0) {
              bad = r;
              break;
            }
        if (bad < 0) break;
        add_row(t, bad, 1);
      }
      if (a(t, t) < 0) negate_row(t);
      diag.push_back(a(t, t));
    }
    return diag;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  DenseSmith s(m, true);
  SmithForm out;
  out.diagonal = s.run();
  out.left = std::move(s.u);
  out.right = std::move(s.v);
  return out;
}

std::vector<Integer> smith_invariants(int rows, const std::vector<std::map<int, int>>& columns) {
  // Unit pivots are eliminated sparsely first; they contribute invariant 1 and
  // never change the remaining invariants. The residue goes to the dense pass.
  const int cols = static_cast<int>(columns.size());
  std::vector<std::map<int, Integer>> row(rows);
  std::vector<std::set<int>> col_rows(cols);
  for (int c = 0; c < cols; ++c)
    for (auto [r, e] : columns[c]) {
      if (e == 0) continue;
      row[r][c] = e;
      col_rows[c].insert(r);
    }

  std::vector<Integer> invariants;
  std::vector<char> row_alive(rows, 1);
  for (;;) {
    int pr = -1, pc = -1;
    for (int r = 0; r < rows && pr < 0; ++r) {
      if (!row_alive[r]) continue;
      for (auto& [c, e] : row[r])
        if (e == 1 || e == -1) {
          pr = r;
          pc = c;
          break;
        }
    }
    if (pr < 0) break;
    const Integer unit = row[pr][pc];
    std::vector<int> others(col_rows[pc].begin(), col_rows[pc].end());
    for (int r : others) {
      if (r == pr) continue;
      const Integer factor = row[r][pc] * unit;
      for (auto& [c, e] : row[pr]) {
        Integer& target = row[r][c];
        target -= factor * e;
        if (target == 0) {
          row[r].erase(c);
          col_rows[c].erase(r);
        } else {
          col_rows[c].insert(r);
        }
      }
    }
    for (auto& [c, e] : row[pr]) col_rows[c].erase(pr);
    row[pr].clear();
    row_alive[pr] = 0;
    invariants.push_back(1);
  }

  std::vector<int> live_rows, live_cols;
  for (int r = 0; r < rows; ++r)
    if (!row[r].empty()) live_rows.push_back(r);
  for (int c = 0; c < cols; ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);
  if (!live_rows.empty()) {
    IntegerMatrix dense(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (auto& [c, e] : row[live_rows[i]]) {
        auto j = std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin();
        dense(static_cast<int>(i), static_cast<int>(j)) = e;
      }
    DenseSmith s(std::move(dense), false);
    for (auto& d : s.run()) invariants.push_back(d);
  }
  std::sort(invariants.begin(), invariants.end());
  return invariants;
}

}  // namespace plcw
