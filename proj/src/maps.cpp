#include "plcw/maps.hpp"

#include <algorithm>

namespace plcw {

CellMap identity_map(const Complex& k) {
  CellMap m;
  const int dim = k.dimension();
  m.assign.resize(dim + 1);
  m.ident.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    const int n = k.count(d);
    m.assign[d].resize(n);
    for (int i = 0; i < n; ++i) m.assign[d][i] = i;
    if (d > 0) {
      m.ident[d].reserve(n);
      for (int i = 0; i < n; ++i) m.ident[d].push_back(identity_map(k.attachment({d, i}).sphere.model));
    }
  }
  return m;
}

CellMap compose(const CellMap& outer, const CellMap& inner) {
  CellMap m;
  const int dim = inner.dimension();
  m.assign.resize(dim + 1);
  m.ident.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    const auto& in = inner.assign[d];
    m.assign[d].resize(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (d > outer.dimension() || in[i] < 0 || in[i] >= static_cast<int>(outer.assign[d].size()))
        throw Error("compose: cell " + std::to_string(d) + ":" + std::to_string(i) + " maps outside the outer map's domain");
      m.assign[d][i] = outer.assign[d][in[i]];
    }
    if (d > 0) {
      m.ident[d].reserve(in.size());
      for (std::size_t i = 0; i < in.size(); ++i)
        m.ident[d].push_back(compose(outer.ident[d][in[i]], inner.ident[d][i]));
    }
  }
  return m;
}

CellMap inverse(const CellMap& iso) {
  CellMap m;
  const int dim = iso.dimension();
  m.assign.resize(dim + 1);
  m.ident.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    const auto& a = iso.assign[d];
    const int n = static_cast<int>(a.size());
    m.assign[d].assign(n, -1);
    for (int i = 0; i < n; ++i) {
      if (a[i] < 0 || a[i] >= n || m.assign[d][a[i]] != -1) throw Error("inverse: map is not a bijection");
      m.assign[d][a[i]] = i;
    }
    if (d > 0) {
      m.ident[d].resize(n);
      for (int i = 0; i < n; ++i) m.ident[d][a[i]] = inverse(iso.ident[d][i]);
    }
  }
  return m;
}

bool is_bijective(const CellMap& map, const Complex& target) {
  if (map.dimension() != target.dimension()) return false;
  for (int d = 0; d <= map.dimension(); ++d) {
    const auto& a = map.assign[d];
    if (static_cast<int>(a.size()) != target.count(d)) return false;
    std::vector<char> hit(a.size(), 0);
    for (int t : a) {
      if (t < 0 || t >= static_cast<int>(a.size()) || hit[t]) return false;
      hit[t] = 1;
    }
    if (d > 0)
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_bijective(map.ident[d][i], target.attachment({d, a[i]}).sphere.model)) return false;
  }
  return true;
}

CellMap truncate(const CellMap& map, int dim) {
  CellMap m = map;
  if (m.dimension() > dim) {
    m.assign.resize(dim + 1);
    m.ident.resize(dim + 1);
  }
  return m;
}

Complex ball(const SphereData& sphere) {
  Complex b = sphere.model;
  const int top = sphere.model.dimension() + 1;
  b.append(top, std::make_shared<const Attachment>(Attachment{sphere, identity_map(sphere.model)}));
  return b;
}

CellMap ball_map(const Complex& k, CellId c) {
  CellMap m;
  if (c.dim == 0) {
    m.assign = {{c.index}};
    m.ident = {{}};
    return m;
  }
  const Attachment& att = k.attachment(c);
  m = att.map;
  m.assign.resize(c.dim + 1);
  m.ident.resize(c.dim + 1);
  m.assign[c.dim] = {c.index};
  m.ident[c.dim].clear();
  m.ident[c.dim].push_back(identity_map(att.sphere.model));
  return m;
}

CellMap extend_to_ball(const CellMap& boundary_iso, const Complex& model) {
  CellMap m = boundary_iso;
  const int top = model.dimension() + 1;
  m.assign.resize(top + 1);
  m.ident.resize(top + 1);
  m.assign[top] = {0};
  if (top > 0) m.ident[top] = {boundary_iso};
  return m;
}

CellMap Subcomplex::inclusion(const Complex& k) const {
  CellMap m;
  const int dim = complex.dimension();
  m.assign = origin;
  m.assign.resize(dim + 1);
  m.ident.resize(dim + 1);
  for (int d = 1; d <= dim; ++d)
    for (int i = 0; i < complex.count(d); ++i)
      m.ident[d].push_back(identity_map(k.attachment({d, origin[d][i]}).sphere.model));
  return m;
}

Subcomplex closure(const Complex& k, const std::vector<CellId>& roots) {
  const int dim = k.dimension();
  std::vector<std::vector<char>> keep(dim + 1);
  for (int d = 0; d <= dim; ++d) keep[d].assign(k.count(d), 0);
  for (CellId r : roots) {
    k.cell(r);
    keep[r.dim][r.index] = 1;
    if (r.dim > 0) {
      const CellMap& m = k.attachment(r).map;
      for (int d = 0; d < r.dim; ++d)
        for (int t : m.assign[d]) keep[d][t] = 1;
    }
  }
  Subcomplex sub;
  sub.origin.resize(dim + 1);
  sub.to_sub.resize(dim + 1);
  int top = -1;
  for (int d = 0; d <= dim; ++d) {
    sub.to_sub[d].assign(k.count(d), -1);
    for (int i = 0; i < k.count(d); ++i)
      if (keep[d][i]) {
        sub.to_sub[d][i] = static_cast<int>(sub.origin[d].size());
        sub.origin[d].push_back(i);
        top = d;
      }
  }
  sub.origin.resize(top + 1);
  for (int d = 0; d <= top; ++d)
    for (int old : sub.origin[d]) {
      const Cell& c = k.cell({d, old});
      if (d == 0) {
        sub.complex.append(0, nullptr, c.label);
        continue;
      }
      Attachment att = *c.attachment;
      for (int e = 0; e < d; ++e)
        for (int& t : att.map.assign[e]) t = sub.to_sub[e][t];
      sub.complex.append(d, std::make_shared<const Attachment>(std::move(att)), c.label);
    }
  return sub;
}

}  // namespace plcw
