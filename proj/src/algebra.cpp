#include "plcw/algebra.hpp"

#include <deque>
#include <sstream>

namespace plcw {

int iso_sign(const SphereData& from, const SphereData& to, const CellMap& iso) {
  const int top = from.model.dimension();
  if (top < 0) return 1;
  const int image = iso.assign[top][0];
  int sign = from.cycle[0] * to.cycle[image];
  if (top >= 1)
    sign *= iso_sign(from.model.attachment({top, 0}).sphere, to.model.attachment({top, image}).sphere,
                     iso.ident[top][0]);
  return sign;
}

namespace {

// Signed contribution of the j-th top model cell of c to the boundary of c.
int model_cell_sign(const Complex& k, const Attachment& att, int j) {
  const int m = att.sphere.model.dimension();
  int sign = att.sphere.cycle[j];
  if (m >= 1) {
    const int target = att.map.assign[m][j];
    sign *= iso_sign(att.sphere.model.attachment({m, j}).sphere, k.attachment({m, target}).sphere,
                     att.map.ident[m][j]);
  }
  return sign;
}

}  // namespace

BoundaryMultiset boundary_multiset(const Complex& k, OrientedCell c) {
  if (c.cell.dim == 0) throw Error("boundary multiset of a vertex");
  if (c.sign != 1 && c.sign != -1) throw Error("orientation sign must be +1 or -1");
  const Attachment& att = k.attachment(c.cell);
  const int m = c.cell.dim - 1;
  BoundaryMultiset out;
  for (int j = 0; j < att.sphere.model.count(m); ++j)
    out.push_back({{m, att.map.assign[m][j]}, c.sign * model_cell_sign(k, att, j)});
  return out;
}

int incidence_number(const Complex& k, OrientedCell c, OrientedCell d) {
  if (d.cell.dim != c.cell.dim - 1)
    throw Error("incidence number needs dim D = dim C - 1 (got " + to_string(c.cell) + ", " + to_string(d.cell) + ")");
  k.cell(d.cell);
  int sum = 0;
  for (const OrientedCell& e : boundary_multiset(k, c))
    if (e.cell == d.cell) sum += e.sign;
  return sum * d.sign;
}

std::vector<std::map<int, int>> boundary_columns(const Complex& k, int n) {
  std::vector<std::map<int, int>> cols;
  if (n <= 0 || n > k.dimension()) return cols;
  cols.resize(k.count(n));
  for (int i = 0; i < k.count(n); ++i) {
    const Attachment& att = k.attachment({n, i});
    for (int j = 0; j < att.sphere.model.count(n - 1); ++j) {
      int& entry = cols[i][att.map.assign[n - 1][j]];
      entry += model_cell_sign(k, att, j);
    }
    for (auto it = cols[i].begin(); it != cols[i].end();) it = it->second == 0 ? cols[i].erase(it) : std::next(it);
  }
  return cols;
}

std::optional<std::vector<int>> fundamental_cycle(const Complex& model) {
  const int m = model.dimension();
  if (m < 0) return std::vector<int>{};
  if (m == 0) {
    if (model.count(0) != 2) return std::nullopt;
    return std::vector<int>{1, -1};
  }
  const int tops = model.count(m);
  auto cols = boundary_columns(model, m);
  std::vector<std::vector<std::pair<int, int>>> by_face(model.count(m - 1));
  for (int t = 0; t < tops; ++t)
    for (auto [f, e] : cols[t]) by_face[f].push_back({t, e});

  std::vector<int> x(tops, 0);
  x[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    for (auto [f, e] : cols[t]) {
      if (by_face[f].size() != 2) continue;
      for (auto [u, eu] : by_face[f]) {
        if (u == t || (eu != 1 && eu != -1) || (e != 1 && e != -1)) continue;
        const int want = -x[t] * e * eu;
        if (x[u] == 0) {
          x[u] = want;
          queue.push_back(u);
        } else if (x[u] != want) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v : x)
    if (v == 0) return std::nullopt;
  std::vector<long> total(model.count(m - 1), 0);
  for (int t = 0; t < tops; ++t)
    for (auto [f, e] : cols[t]) total[f] += static_cast<long>(x[t]) * e;
  for (long v : total)
    if (v != 0) return std::nullopt;
  return x;
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
  data_.reserve(std::size_t(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw Error("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw Error("matrix shape mismatch");
  IntegerMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

bool IntegerMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntegerMatrix chain_boundary_matrix(const Complex& k, int n) {
  if (n <= 0 || n > k.dimension()) return {};
  IntegerMatrix m(k.count(n - 1), k.count(n));
  auto cols = boundary_columns(k, n);
  for (int j = 0; j < k.count(n); ++j)
    for (auto [r, e] : cols[j]) m(r, j) = e;
  for (int r = 0; r < k.count(n - 1); ++r) m.row_labels.push_back({n - 1, r});
  for (int j = 0; j < k.count(n); ++j) m.col_labels.push_back({n, j});
  return m;
}

std::string to_string(const HomologyGroup& h) {
  std::ostringstream out;
  bool first = true;
  if (h.betti > 0) {
    out << "Z";
    if (h.betti > 1) out << "^" << h.betti;
    first = false;
  }
  for (const auto& t : h.torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::vector<HomologyGroup> homology(const Complex& k) {
  const int dim = k.dimension();
  std::vector<HomologyGroup> h(std::max(dim + 1, 0));
  std::vector<int> rank(dim + 2, 0);
  std::vector<std::vector<Integer>> torsion(dim + 2);
  for (int n = 1; n <= dim; ++n) {
    auto inv = smith_invariants(k.count(n - 1), boundary_columns(k, n));
    rank[n] = static_cast<int>(inv.size());
    for (auto& v : inv)
      if (v > 1) torsion[n].push_back(v);
  }
  for (int n = 0; n <= dim; ++n) {
    h[n].betti = k.count(n) - rank[n] - rank[n + 1];
    h[n].torsion = torsion[n + 1];
  }
  return h;
}

bool boundary_squared_zero(const Complex& k) {
  for (int n = 2; n <= k.dimension(); ++n) {
    auto upper = boundary_columns(k, n);
    auto lower = boundary_columns(k, n - 1);
    for (const auto& col : upper) {
      std::map<int, long> total;
      for (auto [f, e] : col)
        for (auto [g, e2] : lower[f]) total[g] += static_cast<long>(e) * e2;
      for (auto [g, v] : total)
        if (v != 0) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> orient_top_cells(const Complex& k) {
  const int n = k.dimension();
  if (n <= 0) return std::vector<int>(std::max(k.count(0), 0), 1);
  // One entry per occurrence, so a face used twice by the same cell is seen twice.
  std::vector<std::vector<std::pair<int, int>>> occurrences(k.count(n)), by_face(k.count(n - 1));
  for (int t = 0; t < k.count(n); ++t)
    for (const OrientedCell& o : boundary_multiset(k, {{n, t}, 1})) {
      occurrences[t].push_back({o.cell.index, o.sign});
      by_face[o.cell.index].push_back({t, o.sign});
    }
  for (const auto& uses : by_face)
    if (uses.size() == 2 && uses[0].first == uses[1].first && uses[0].second == uses[1].second) return std::nullopt;
  std::vector<int> x(k.count(n), 0);
  for (int seed = 0; seed < k.count(n); ++seed) {
    if (x[seed] != 0) continue;
    x[seed] = 1;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop_front();
      for (auto [f, e] : occurrences[t]) {
        const auto& uses = by_face[f];
        if (uses.size() != 2 || uses[0].first == uses[1].first) continue;
        const auto [u, eu] = uses[0].first == t ? uses[1] : uses[0];
        const int want = -x[t] * e * eu;
        if (x[u] == 0) {
          x[u] = want;
          queue.push_back(u);
        } else if (x[u] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return x;
}

BoundaryPairing boundary_pairing(const Complex& k, std::optional<std::vector<int>> orientation) {
  BoundaryPairing out;
  const int n = k.dimension();
  if (n < 1) {
    out.problems.push_back("boundary pairing needs dimension >= 1");
    return out;
  }
  if (!orientation) orientation = orient_top_cells(k);
  if (!orientation) {
    out.problems.push_back("no coherent orientation of the " + std::to_string(n) + "-cells exists (non-orientable)");
    return out;
  }
  if (static_cast<int>(orientation->size()) != k.count(n)) {
    out.problems.push_back("orientation has wrong length");
    return out;
  }
  std::vector<std::vector<int>> occurrences(k.count(n - 1));
  for (int t = 0; t < k.count(n); ++t) {
    const int s = (*orientation)[t];
    if (s != 1 && s != -1) {
      out.problems.push_back("orientation entries must be +1 or -1");
      return out;
    }
    for (const OrientedCell& e : boundary_multiset(k, {{n, t}, s})) occurrences[e.cell.index].push_back(e.sign);
  }
  // (n-1)-cells that are faces of no n-cell are not part of a manifold decomposition.
  for (int f = 0; f < k.count(n - 1); ++f) {
    const auto& occ = occurrences[f];
    const CellId id{n - 1, f};
    if (occ.size() == 1) {
      out.boundary.push_back(id);
    } else if (occ.size() == 2 && occ[0] == -occ[1]) {
      out.interior.push_back(id);
    } else {
      std::ostringstream msg;
      msg << "cell " << k.name(id) << " occurs " << occ.size() << " time(s)";
      if (occ.size() == 2) msg << " with equal orientations";
      out.problems.push_back(msg.str());
    }
  }
  return out;
}

}  // namespace plcw
