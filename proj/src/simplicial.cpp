#include <algorithm>
#include <map>
#include <set>

#include "plcw/algebra.hpp"
#include "plcw/isomorphism.hpp"
#include "plcw/maps.hpp"
#include "plcw/moves.hpp"

namespace plcw {

namespace {

// Boundary of the standard d-simplex on vertices 0..d.
const Complex& simplex_boundary(int d) {
  static std::map<int, Complex> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= d; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(f);
  }
  Complex b = from_simplices(d + 1, facets);
  return cache.emplace(d, std::move(b)).first->second;
}

}  // namespace

Complex from_simplices(int vertex_count, const std::vector<std::vector<int>>& simplices,
                       const std::vector<std::string>& vertex_labels) {
  std::vector<std::set<std::vector<int>>> by_dim(1);
  for (auto s : simplices) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("simplex with a repeated vertex");
    for (int v : s)
      if (v < 0 || v >= vertex_count) throw Error("simplex vertex out of range");
    const int n = static_cast<int>(s.size());
    if (n == 0) continue;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(s[i]);
      const int d = static_cast<int>(face.size()) - 1;
      if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
      by_dim[d].insert(face);
    }
  }
  Complex k;
  for (int v = 0; v < vertex_count; ++v)
    k.append(0, nullptr, v < static_cast<int>(vertex_labels.size()) ? vertex_labels[v] : std::string());
  std::vector<std::map<std::vector<int>, int>> index(by_dim.size());
  for (int v = 0; v < vertex_count; ++v) index[0][{v}] = v;
  for (int d = 1; d < static_cast<int>(by_dim.size()); ++d) {
    const Complex& model = simplex_boundary(d);
    const auto cycle = fundamental_cycle(model);
    for (const auto& s : by_dim[d]) {
      CellMap map;
      map.assign.resize(d);
      map.ident.resize(d);
      for (int e = 0; e < d; ++e)
        for (int i = 0; i < model.count(e); ++i) {
          std::vector<int> face;
          if (e == 0) {
            face = {s[i]};
          } else {
            for (int p : model.attachment({e, i}).map.assign[0]) face.push_back(s[p]);
            std::sort(face.begin(), face.end());
            map.ident[e].push_back(identity_map(model.attachment({e, i}).sphere.model));
          }
          map.assign[e].push_back(index[e].at(face));
        }
      const CellId id = k.append(d, std::make_shared<const Attachment>(Attachment{{model, *cycle}, std::move(map)}));
      index[d][s] = id.index;
    }
  }
  return k;
}

bool is_simplicial(const Complex& k) {
  std::set<std::vector<int>> seen;
  for (int d = 0; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i) {
      if (d == 0) {
        seen.insert({i});
        continue;
      }
      const Attachment& att = k.attachment({d, i});
      for (const auto& row : att.map.assign) {
        std::vector<int> sorted = row;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      }
      if (static_cast<int>(att.map.assign[0].size()) != d + 1) return false;
      if (att.sphere.model.f_vector() != simplex_boundary(d).f_vector()) return false;
      if (!are_isomorphic(att.sphere.model, simplex_boundary(d))) return false;
      std::vector<int> vs = att.map.assign[0];
      std::sort(vs.begin(), vs.end());
      if (!seen.insert(vs).second) return false;
    }
  return true;
}

std::vector<std::vector<std::vector<int>>> vertex_sets(const Complex& k) {
  std::vector<std::vector<std::vector<int>>> out(k.dimension() + 1);
  for (int d = 0; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i) {
      std::vector<int> vs = d == 0 ? std::vector<int>{i} : k.attachment({d, i}).map.assign[0];
      std::sort(vs.begin(), vs.end());
      out[d].push_back(std::move(vs));
    }
  return out;
}

Complex stellar_subdivide(const Complex& t, CellId c) {
  if (!is_simplicial(t)) throw Error("stellar subdivision needs a simplicial complex");
  if (!t.contains(c)) throw Error("unknown cell " + to_string(c));
  const auto sets = vertex_sets(t);
  const std::vector<int>& sigma = sets[c.dim][c.index];
  const int apex = t.count(0);
  std::vector<std::vector<int>> simplices;
  for (int d = 0; d <= t.dimension(); ++d)
    for (const auto& tau : sets[d]) {
      if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) {
        simplices.push_back(tau);
        continue;
      }
      std::vector<int> rest;
      std::set_difference(tau.begin(), tau.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
      const int m = static_cast<int>(sigma.size());
      for (std::uint32_t mask = 0; mask + 1 < (1u << m); ++mask) {
        std::vector<int> s = rest;
        for (int i = 0; i < m; ++i)
          if (mask & (1u << i)) s.push_back(sigma[i]);
        s.push_back(apex);
        simplices.push_back(std::move(s));
      }
    }
  // Starring a vertex removes it; renumber the surviving vertices.
  std::vector<int> renumber(apex + 1, -1);
  for (const auto& s : simplices)
    for (int v : s) renumber[v] = 0;
  std::vector<std::string> labels;
  int next = 0;
  std::string label = "s" + std::to_string(c.dim) + "." + std::to_string(c.index);
  while (t.find(label)) label += "'";
  for (int v = 0; v <= apex; ++v) {
    if (renumber[v] < 0) continue;
    renumber[v] = next++;
    labels.push_back(v == apex ? label : t.label({0, v}));
  }
  for (auto& s : simplices)
    for (int& v : s) v = renumber[v];
  return from_simplices(next, simplices, labels);
}

}  // namespace plcw
