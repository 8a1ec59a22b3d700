#include "plcw/validate.hpp"

#include <numeric>
#include <sstream>

#include "plcw/algebra.hpp"
#include "plcw/maps.hpp"

namespace plcw {

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i) out << "; ";
    if (!issues[i].path.empty()) out << issues[i].path << ": ";
    out << issues[i].message;
  }
  return out.str();
}

void ValidationReport::merge(const ValidationReport& other) {
  issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  partial = partial || other.partial;
}

namespace {

std::string join_path(const std::string& prefix, const std::string& rest) {
  if (prefix.empty()) return rest;
  if (rest.empty()) return prefix;
  return prefix + " > " + rest;
}

void prefix_all(ValidationReport& r, const std::string& prefix, std::size_t from = 0) {
  for (std::size_t i = from; i < r.issues.size(); ++i) r.issues[i].path = join_path(prefix, r.issues[i].path);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int components() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i) n += find(i) == i;
    return n;
  }
};

// Flat index of each cell, for union-find over the whole complex.
std::vector<int> offsets(const Complex& k) {
  std::vector<int> off(k.dimension() + 2, 0);
  for (int d = 0; d <= k.dimension(); ++d) off[d + 1] = off[d] + k.count(d);
  return off;
}

bool connected(const Complex& k) {
  if (k.empty()) return false;
  auto off = offsets(k);
  UnionFind uf(off.back());
  for (int d = 1; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i) {
      const CellMap& m = k.attachment({d, i}).map;
      for (int e = 0; e < d; ++e)
        for (int t : m.assign[e]) uf.unite(off[d] + i, off[e] + t);
    }
  return uf.components() == 1;
}

// Every cell lies in the closure of a top-dimensional cell.
bool pure(const Complex& k) {
  const int top = k.dimension();
  std::vector<std::vector<char>> hit(top + 1);
  for (int d = 0; d <= top; ++d) hit[d].assign(k.count(d), d == top);
  for (int i = 0; i < k.count(top); ++i) {
    if (top == 0) break;
    const CellMap& m = k.attachment({top, i}).map;
    for (int e = 0; e < top; ++e)
      for (int t : m.assign[e]) hit[e][t] = 1;
  }
  for (const auto& row : hit)
    for (char h : row)
      if (!h) return false;
  return true;
}

// How many times each codimension-one cell appears in the boundary models of top cells.
std::vector<int> codim_one_use(const Complex& k) {
  const int top = k.dimension();
  std::vector<int> use(top >= 1 ? k.count(top - 1) : 0, 0);
  if (top < 1) return use;
  for (int i = 0; i < k.count(top); ++i)
    for (int t : k.attachment({top, i}).map.assign[top - 1]) ++use[t];
  return use;
}

// Vertex links of a closed 2-dimensional model must be connected.
void check_vertex_links(const Complex& k, ValidationReport& report) {
  // Nodes: (edge, end) pairs; end = index of the point in the edge's S^0 model.
  const int edges = k.count(1);
  UnionFind uf(2 * edges);
  for (int f = 0; f < k.count(2); ++f) {
    const Attachment& face = k.attachment({2, f});
    const Complex& circle = face.sphere.model;
    // For each circle vertex, the (edge-end) nodes meeting there.
    std::vector<std::vector<int>> at(circle.count(0));
    for (int x = 0; x < circle.count(1); ++x) {
      const Attachment& model_edge = circle.attachment({1, x});
      const int e = face.map.assign[1][x];
      const CellMap& iota = face.map.ident[1][x];
      for (int q = 0; q < 2; ++q) at[model_edge.map.assign[0][q]].push_back(2 * e + iota.assign[0][q]);
    }
    for (const auto& nodes : at)
      for (std::size_t j = 1; j < nodes.size(); ++j) uf.unite(nodes[0], nodes[j]);
  }
  std::vector<int> roots_per_vertex(k.count(0), -1);
  for (int e = 0; e < edges; ++e) {
    const CellMap& m = k.attachment({1, e}).map;
    for (int q = 0; q < 2; ++q) {
      const int v = m.assign[0][q];
      const int root = uf.find(2 * e + q);
      if (roots_per_vertex[v] == -1) {
        roots_per_vertex[v] = root;
      } else if (roots_per_vertex[v] != root) {
        report.add(to_string(CellId{0, v}), "vertex link is not connected (model is not a surface)");
        roots_per_vertex[v] = -2;
      }
    }
  }
}

bool sphere_homology(const Complex& k) {
  const int top = k.dimension();
  auto h = homology(k);
  for (int d = 0; d <= top; ++d) {
    const int want = (d == 0 || d == top) ? 1 : 0;
    if (h[d].betti != want || !h[d].torsion.empty()) return false;
  }
  return true;
}

void check_cells(const Complex& k, ValidationReport& report);

void check_sphere_into(const SphereData& sphere, ValidationReport& report) {
  const Complex& m = sphere.model;
  const int top = m.dimension();
  const std::size_t before = report.issues.size();
  check_cells(m, report);
  if (report.issues.size() != before) return;
  if (top < 0) {
    report.add("", "boundary model is empty");
    return;
  }
  if (static_cast<int>(sphere.cycle.size()) != m.count(top)) {
    report.add("", "cycle has " + std::to_string(sphere.cycle.size()) + " coefficients for " +
                       std::to_string(m.count(top)) + " top cells");
    return;
  }
  for (int c : sphere.cycle)
    if (c != 1 && c != -1) {
      report.add("", "cycle coefficients must be +1 or -1");
      return;
    }
  if (top == 0) {
    if (m.count(0) != 2) report.add("", "S^0 model must have exactly two points, has " + std::to_string(m.count(0)));
    else if (sphere.cycle[0] + sphere.cycle[1] != 0) report.add("", "cycle is not a fundamental cycle of S^0");
    return;
  }
  if (!connected(m)) report.add("", "boundary model is not connected");
  if (!pure(m)) report.add("", "boundary model has cells outside the closure of its top cells");
  auto use = codim_one_use(m);
  for (int f = 0; f < static_cast<int>(use.size()); ++f)
    if (use[f] != 2)
      report.add(to_string(CellId{top - 1, f}),
                 "used " + std::to_string(use[f]) + " times by top cells of the boundary model (need 2)");
  const std::int64_t chi = m.euler_characteristic();
  const std::int64_t want = 1 + (top % 2 == 0 ? 1 : -1);
  if (chi != want) report.add("", "Euler characteristic " + std::to_string(chi) + " != " + std::to_string(want));
  if (report.issues.size() != before) return;
  if (top == 2) check_vertex_links(m, report);
  if (top >= 3) {
    report.partial = true;
    if (!sphere_homology(m)) report.add("", "homology of the boundary model is not that of a sphere");
  }
  if (report.issues.size() != before) return;
  auto cols = boundary_columns(m, top);
  std::vector<long> total(m.count(top - 1), 0);
  for (int t = 0; t < m.count(top); ++t)
    for (auto [f, e] : cols[t]) total[f] += static_cast<long>(sphere.cycle[t]) * e;
  for (long v : total)
    if (v != 0) {
      report.add("", "stored cycle is not a cycle (nonzero boundary)");
      break;
    }
}

void check_map_into(const Complex& source, const Complex& target, const CellMap& map, bool bijective,
                    ValidationReport& report) {
  const int dim = source.dimension();
  if (map.dimension() != dim || static_cast<int>(map.ident.size()) != dim + 1) {
    report.add("", "map has dimension " + std::to_string(map.dimension()) + ", source has " + std::to_string(dim));
    return;
  }
  for (int d = 0; d <= dim; ++d) {
    if (static_cast<int>(map.assign[d].size()) != source.count(d)) {
      report.add("", "map has wrong number of " + std::to_string(d) + "-cells");
      return;
    }
    for (int i = 0; i < source.count(d); ++i) {
      const int t = map.assign[d][i];
      if (t < 0 || t >= target.count(d)) {
        report.add(to_string(CellId{d, i}), "assigned to missing " + std::to_string(d) + "-cell " + std::to_string(t) +
                                                " (dimension must be preserved)");
        return;
      }
    }
    if (d > 0 && static_cast<int>(map.ident[d].size()) != source.count(d)) {
      report.add("", "missing identifications for " + std::to_string(d) + "-cells");
      return;
    }
  }
  if (bijective) {
    for (int d = 0; d <= std::max(dim, target.dimension()); ++d) {
      if (source.count(d) != target.count(d)) {
        report.add("", "not a bijection in dimension " + std::to_string(d));
        return;
      }
      std::vector<char> hit(target.count(d), 0);
      for (int t : map.assign[d]) {
        if (hit[t]) {
          report.add("", "not a bijection in dimension " + std::to_string(d));
          return;
        }
        hit[t] = 1;
      }
    }
  }
  for (int d = 1; d <= dim; ++d)
    for (int i = 0; i < source.count(d); ++i) {
      const CellId id{d, i};
      const Attachment& src = source.attachment(id);
      const Attachment& dst = target.attachment({d, map.assign[d][i]});
      const CellMap& ident = map.ident[d][i];
      const std::size_t before = report.issues.size();
      check_map_into(src.sphere.model, dst.sphere.model, ident, true, report);
      prefix_all(report, to_string(id) + " ident", before);
      if (report.issues.size() != before) continue;
      if (!(compose(map, src.map) == compose(dst.map, ident)))
        report.add(to_string(id), "identification is not compatible with the attaching maps");
    }
}

void check_cells(const Complex& k, ValidationReport& report) {
  for (int d = 1; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i) {
      const CellId id{d, i};
      const Cell& cell = k.cell(id);
      const std::string here = cell.label.empty() ? to_string(id) : to_string(id) + " (" + cell.label + ")";
      if (!cell.attachment) {
        report.add(here, "cell of positive dimension without attachment");
        continue;
      }
      const Attachment& att = *cell.attachment;
      if (att.sphere.model.dimension() != d - 1) {
        report.add(here, "boundary model has dimension " + std::to_string(att.sphere.model.dimension()) +
                             ", expected " + std::to_string(d - 1));
        continue;
      }
      std::size_t before = report.issues.size();
      check_sphere_into(att.sphere, report);
      prefix_all(report, here + " > model", before);
      if (report.issues.size() != before) continue;
      before = report.issues.size();
      check_map_into(att.sphere.model, k, att.map, false, report);
      prefix_all(report, here + " > attach", before);
    }
  for (int i = 0; i < k.count(0); ++i)
    if (k.cell({0, i}).attachment) report.add(to_string(CellId{0, i}), "vertex with an attachment");
}

}  // namespace

ValidationReport validate(const Complex& k) {
  ValidationReport report;
  check_cells(k, report);
  return report;
}

ValidationReport check_attachment(const Complex& k, const Attachment& att) {
  ValidationReport report;
  check_sphere_into(att.sphere, report);
  prefix_all(report, "model");
  if (!report.ok()) return report;
  check_map_into(att.sphere.model, k, att.map, false, report);
  return report;
}

ValidationReport check_sphere(const SphereData& sphere) {
  ValidationReport report;
  check_sphere_into(sphere, report);
  return report;
}

ValidationReport check_ball(const Complex& model) {
  ValidationReport report;
  const int top = model.dimension();
  check_cells(model, report);
  if (!report.ok()) return report;
  if (top < 0) {
    report.add("", "empty ball");
    return report;
  }
  if (top == 0) {
    if (model.count(0) != 1) report.add("", "0-ball must be a single point");
    return report;
  }
  if (!connected(model)) report.add("", "not connected");
  if (!pure(model)) report.add("", "not pure");
  if (model.euler_characteristic() != 1) report.add("", "Euler characteristic is not 1");
  auto use = codim_one_use(model);
  std::vector<CellId> rim;
  for (int f = 0; f < static_cast<int>(use.size()); ++f) {
    if (use[f] == 1) rim.push_back({top - 1, f});
    else if (use[f] != 2) report.add(to_string(CellId{top - 1, f}), "used " + std::to_string(use[f]) + " times");
  }
  if (!report.ok()) return report;
  if (rim.empty()) {
    report.add("", "ball has no boundary");
    return report;
  }
  Subcomplex boundary = closure(model, rim);
  auto cycle = fundamental_cycle(boundary.complex);
  if (!cycle) {
    report.add("", "boundary of the ball is not an oriented sphere");
    return report;
  }
  ValidationReport sphere = check_sphere(SphereData{boundary.complex, *cycle});
  prefix_all(sphere, "ball boundary");
  report.merge(sphere);
  if (top >= 3) report.partial = true;
  return report;
}

ValidationReport check_map(const Complex& source, const Complex& target, const CellMap& map, bool bijective) {
  ValidationReport report;
  check_map_into(source, target, map, bijective, report);
  return report;
}

bool is_regular_cellular(const RegularMap& f) { return check_map(f.source, f.target, f.map).ok(); }

}  // namespace plcw
