#include "rewrite.hpp"

#include <algorithm>

#include "plcw/algebra.hpp"
#include "plcw/maps.hpp"

namespace plcw::detail {

void prepare(Replacement& r) {
  const int n = r.dim();
  r.interior_identity.assign(n + 1, {});
  for (int d = 1; d <= n; ++d)
    for (int i = r.boundary_count(d); i < r.ball.count(d); ++i)
      r.interior_identity[d].push_back(identity_map(r.ball.attachment({d, i}).sphere.model));

  const auto columns = boundary_columns(r.ball, n);
  const int rows = r.ball.count(n - 1);
  std::vector<int> target(rows, 0);
  for (int e = 0; e < r.boundary_count(n - 1); ++e) target[e] = r.boundary.cycle[e];
  std::vector<std::vector<std::pair<int, int>>> equations(rows);  // row -> (column, coefficient)
  for (int j = 0; j < static_cast<int>(columns.size()); ++j)
    for (auto [row, coef] : columns[j])
      if (coef != 0) equations[row].push_back({j, coef});

  std::vector<int> sigma(columns.size(), 0);
  for (bool progress = true; progress;) {
    progress = false;
    for (int row = 0; row < rows; ++row) {
      int unknown = -1, unknown_coef = 0, count = 0, rest = 0;
      for (auto [j, coef] : equations[row]) {
        if (sigma[j] == 0) {
          unknown = j;
          unknown_coef = coef;
          ++count;
        } else {
          rest += sigma[j] * coef;
        }
      }
      if (count != 1) continue;
      const int need = target[row] - rest;
      if (need % unknown_coef != 0 || (need / unknown_coef != 1 && need / unknown_coef != -1))
        throw Error("replacement is not a ball with the given boundary orientation");
      sigma[unknown] = need / unknown_coef;
      progress = true;
    }
  }
  for (int row = 0; row < rows; ++row) {
    int sum = 0;
    for (auto [j, coef] : equations[row]) sum += sigma[j] * coef;
    if (sum != target[row]) throw Error("replacement is not a ball with the given boundary orientation");
  }
  if (std::find(sigma.begin(), sigma.end(), 0) != sigma.end())
    throw Error("replacement has top cells not reached from its boundary");
  r.sigma = std::move(sigma);
}

namespace {

CellMap substitute_map(const CellMap& phi, const Substitution& sb, const Substitution& sa, const Replacement& r);

}  // namespace

Substitution substitute(const Complex& a, int n, const std::vector<Site>& sites, const Replacement& r,
                        const std::vector<int>& cycle) {
  Substitution out;
  out.n = n;
  const int dim = a.dimension();
  out.site_number.assign(a.count(n), -1);
  for (int k = 0; k < static_cast<int>(sites.size()); ++k) out.site_number[sites[k].cell] = k;

  out.forward.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    out.forward[d].resize(a.count(d));
    int next = 0;
    for (int i = 0; i < a.count(d); ++i)
      out.forward[d][i] = (d == n && out.site_number[i] >= 0) ? -1 : next++;
  }
  out.copy_base.assign(sites.size(), std::vector<int>(n + 1, 0));
  for (int d = 0; d <= n; ++d) {
    const int kept = a.count(d) - (d == n ? static_cast<int>(sites.size()) : 0);
    for (std::size_t k = 0; k < sites.size(); ++k)
      out.copy_base[k][d] = kept + static_cast<int>(k) * r.interior_count(d);
  }

  // rho[k]: R -> result, boundary through the attaching map of site k.
  std::vector<CellMap> rho(sites.size());
  for (std::size_t k = 0; k < sites.size(); ++k) {
    const Attachment& att = a.attachment({n, sites[k].cell});
    rho[k] = compose(att.map, inverse(sites[k].psi));
    rho[k].assign.resize(n);
    rho[k].ident.resize(n);
  }

  out.sub.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    out.sub[d].resize(a.count(d));
    for (int i = 0; i < a.count(d); ++i) {
      const CellId id{d, i};
      const Cell& cell = a.cell(id);
      if (d <= n) {
        if (d == n && out.site_number[i] >= 0) continue;
        out.result.append(d, cell.attachment, cell.label);
        continue;
      }
      const Attachment& att = *cell.attachment;
      std::vector<Site> inner;
      for (int z = 0; z < static_cast<int>(att.map.assign[n].size()); ++z) {
        const int k = out.site_number[att.map.assign[n][z]];
        if (k >= 0) inner.push_back({z, compose(sites[k].psi, att.map.ident[n][z])});
      }
      Attachment next;
      if (inner.empty()) {
        next = att;
        for (int& t : next.map.assign[n]) t = out.forward[n][t];
      } else {
        auto sub = std::make_shared<Substitution>(substitute(att.sphere.model, n, inner, r, att.sphere.cycle));
        next.sphere = {sub->result, sub->cycle};
        out.sub[d][i] = sub;
        next.map = substitute_map(att.map, *sub, out, r);
      }
      out.result.append(d, std::make_shared<const Attachment>(std::move(next)), cell.label);
    }
    if (d > n) continue;
    for (std::size_t k = 0; k < sites.size(); ++k) {
      if (d < n) {
        rho[k].assign[d].resize(r.boundary_count(d));
        if (d > 0) rho[k].ident[d].resize(r.boundary_count(d));
      }
      for (int j = 0; j < r.interior_count(d); ++j) {
        const CellId rc{d, r.boundary_count(d) + j};
        std::shared_ptr<const Attachment> att;
        if (d > 0) {
          const Attachment& ra = r.ball.attachment(rc);
          att = std::make_shared<const Attachment>(Attachment{ra.sphere, compose(rho[k], ra.map)});
        }
        const CellId made = out.result.append(d, att);
        if (made.index != out.copy(static_cast<int>(k), d, j)) throw Error("substitute: copy index mismatch");
        if (d < n) {
          rho[k].assign[d].push_back(made.index);
          if (d > 0) rho[k].ident[d].push_back(r.interior_identity[d][j]);
        }
      }
    }
  }

  if (dim == n && !cycle.empty()) {
    for (int i = 0; i < a.count(n); ++i)
      if (out.site_number[i] < 0) out.cycle.push_back(cycle[i]);
    for (std::size_t k = 0; k < sites.size(); ++k) {
      const int x = sites[k].cell;
      const int s = cycle[x] * iso_sign(a.attachment({n, x}).sphere, r.boundary, sites[k].psi);
      for (int j = 0; j < r.interior_count(n); ++j) out.cycle.push_back(s * r.sigma[j]);
    }
  } else {
    out.cycle = cycle;
  }
  return out;
}

namespace {

CellMap substitute_map(const CellMap& phi, const Substitution& sb, const Substitution& sa, const Replacement& r) {
  const int n = sb.n;
  const int dim = phi.dimension();
  CellMap m;
  m.assign.resize(dim + 1);
  m.ident.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    const int total = static_cast<int>(sb.forward[d].size()) -
                      (d == n ? static_cast<int>(sb.copy_base.size()) : 0) +
                      (d <= n ? static_cast<int>(sb.copy_base.size()) * r.interior_count(d) : 0);
    m.assign[d].assign(total, -1);
    if (d > 0) m.ident[d].resize(total);
    for (int t = 0; t < static_cast<int>(sb.forward[d].size()); ++t) {
      const int nt = sb.forward[d][t];
      if (nt < 0) continue;
      const int img = phi.assign[d][t];
      m.assign[d][nt] = sa.forward[d][img];
      if (m.assign[d][nt] < 0) throw Error("rewrite: kept cell maps onto a replaced cell");
      if (d == 0) continue;
      if (d > n && sb.sub[d][t]) {
        if (!sa.sub[d][img]) throw Error("rewrite: inconsistent identification");
        m.ident[d][nt] = substitute_map(phi.ident[d][t], *sb.sub[d][t], *sa.sub[d][img], r);
      } else {
        m.ident[d][nt] = phi.ident[d][t];
      }
    }
    if (d > n) continue;
    for (int k = 0; k < static_cast<int>(sb.copy_base.size()); ++k) {
      int x = -1;
      for (int i = 0; i < static_cast<int>(sb.site_number.size()); ++i)
        if (sb.site_number[i] == k) x = i;
      const int ka = sa.site_number[phi.assign[n][x]];
      if (ka < 0) throw Error("rewrite: replaced cell maps onto a kept cell");
      for (int j = 0; j < r.interior_count(d); ++j) {
        m.assign[d][sb.copy(k, d, j)] = sa.copy(ka, d, j);
        if (d > 0) m.ident[d][sb.copy(k, d, j)] = r.interior_identity[d][j];
      }
    }
  }
  return m;
}

}  // namespace

int unique_top_over(const Complex& a, int x, int n, int zero) {
  const auto& images = a.attachment({n, x}).map.assign[n - 1];
  int found = -1;
  for (int i = 0; i < static_cast<int>(images.size()); ++i)
    if (images[i] == zero) {
      if (found >= 0) throw Error(a.name({n, x}) + " contains " + a.name({n - 1, zero}) + " more than once");
      found = i;
    }
  if (found < 0) throw Error(a.name({n, x}) + " does not contain " + a.name({n - 1, zero}));
  return found;
}

namespace {

bool injective(const CellMap& m) {
  for (const auto& row : m.assign) {
    std::vector<int> seen(row.begin(), row.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

}  // namespace

Glue glue_models(const Complex& a, const Triple& t, int n) {
  const Attachment& ap = a.attachment({n, t.plus});
  const Attachment& am = a.attachment({n, t.minus});
  const Complex& mp = ap.sphere.model;
  const Complex& mm = am.sphere.model;
  const int top = n - 1;
  Glue g;
  g.t_plus = unique_top_over(a, t.plus, n, t.zero);
  g.t_minus = unique_top_over(a, t.minus, n, t.zero);

  std::vector<std::vector<int>> kappa(top + 1);
  std::vector<std::vector<CellMap>> kappa_ident(top + 1);
  for (int e = 0; e <= top; ++e) {
    kappa[e].assign(mm.count(e), -1);
    kappa_ident[e].resize(mm.count(e));
  }
  int sign_plus = 1, sign_minus = 1;
  if (top >= 1) {
    const Attachment& tp = mp.attachment({top, g.t_plus});
    const Attachment& tm = mm.attachment({top, g.t_minus});
    if (!injective(tp.map) || !injective(tm.map))
      throw Error("the boundary of " + a.name({n - 1, t.zero}) + " is not embedded in " + a.name({n, t.plus}) +
                  " or " + a.name({n, t.minus}));
    const CellMap& iota_p = ap.map.ident[top][g.t_plus];
    const CellMap& iota_m = am.map.ident[top][g.t_minus];
    const SphereData& zero_sphere = a.attachment({top, t.zero}).sphere;
    sign_plus = iso_sign(tp.sphere, zero_sphere, iota_p);
    sign_minus = iso_sign(tm.sphere, zero_sphere, iota_m);
    const CellMap mu = compose(tp.map, compose(inverse(iota_p), iota_m));
    for (int e = 0; e < top; ++e)
      for (int m = 0; m < static_cast<int>(tm.map.assign[e].size()); ++m) {
        const int cell = tm.map.assign[e][m];
        kappa[e][cell] = mu.assign[e][m];
        if (e > 0) kappa_ident[e][cell] = compose(mu.ident[e][m], inverse(tm.map.ident[e][m]));
      }
  }

  g.from_plus.resize(top + 1);
  g.from_minus.resize(top + 1);
  g.plus_origin.resize(top + 1);
  g.minus_origin.resize(top + 1);
  CellMap tau;  // model(x-) -> glued, built one dimension at a time
  tau.assign.resize(top);
  tau.ident.resize(top);
  for (int d = 0; d <= top; ++d) {
    g.from_plus[d].assign(mp.count(d), -1);
    g.from_minus[d].assign(mm.count(d), -1);
    for (int i = 0; i < mp.count(d); ++i) {
      if (d == top && i == g.t_plus) continue;
      const Cell& c = mp.cell({d, i});
      g.from_plus[d][i] = g.model.append(d, c.attachment).index;
      g.plus_origin[d].push_back(i);
      g.minus_origin[d].push_back(-1);
    }
    for (int i = 0; i < mm.count(d); ++i) {
      if (d == top && i == g.t_minus) continue;
      if (kappa[d][i] >= 0) {
        g.from_minus[d][i] = g.from_plus[d][kappa[d][i]];
        continue;
      }
      std::shared_ptr<const Attachment> att;
      if (d > 0) {
        const Attachment& old = mm.attachment({d, i});
        att = std::make_shared<const Attachment>(Attachment{old.sphere, compose(tau, old.map)});
      }
      g.from_minus[d][i] = g.model.append(d, att).index;
      g.plus_origin[d].push_back(-1);
      g.minus_origin[d].push_back(i);
    }
    if (d < top) {
      tau.assign[d] = g.from_minus[d];
      if (d > 0)
        for (int i = 0; i < mm.count(d); ++i)
          tau.ident[d].push_back(kappa[d][i] >= 0 ? kappa_ident[d][i]
                                                  : identity_map(mm.attachment({d, i}).sphere.model));
    }
  }
  const int b = -ap.sphere.cycle[g.t_plus] * am.sphere.cycle[g.t_minus] * sign_plus * sign_minus;
  for (int i = 0; i < mp.count(top); ++i)
    if (i != g.t_plus) g.cycle.push_back(ap.sphere.cycle[i]);
  for (int i = 0; i < mm.count(top); ++i)
    if (i != g.t_minus) g.cycle.push_back(b * am.sphere.cycle[i]);
  return g;
}

namespace {

CellMap glue_iso(const CellMap& ip, const CellMap& im, const Glue& gb, const Glue& ga) {
  const int dim = gb.model.dimension();
  CellMap m;
  m.assign.resize(dim + 1);
  m.ident.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    for (int g = 0; g < gb.model.count(d); ++g) {
      int img;
      const CellMap* ident = nullptr;
      if (const int p = gb.plus_origin[d][g]; p >= 0) {
        img = ga.from_plus[d][ip.assign[d][p]];
        if (d > 0) ident = &ip.ident[d][p];
      } else {
        const int q = gb.minus_origin[d][g];
        const int target = im.assign[d][q];
        if (ga.minus_origin[d].empty() || ga.from_minus[d][target] < 0) throw Error("glue: inconsistent identification");
        img = ga.from_minus[d][target];
        if (ga.minus_origin[d][img] != target) throw Error("glue: equator identification mismatch");
        if (d > 0) ident = &im.ident[d][q];
      }
      if (img < 0) throw Error("glue: cell maps onto a removed cell");
      m.assign[d].push_back(img);
      if (ident) m.ident[d].push_back(*ident);
    }
  }
  return m;
}

CellMap merge_map(const CellMap& phi, const Merge& mb, const Merge& ma) {
  const int n = mb.n;
  const int dim = phi.dimension();
  CellMap m;
  m.assign.resize(dim + 1);
  m.ident.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    const int total = mb.result.count(d);
    m.assign[d].assign(total, -1);
    if (d > 0) m.ident[d].resize(total);
    for (int t = 0; t < static_cast<int>(mb.forward[d].size()); ++t) {
      const int nt = mb.forward[d][t];
      if (nt < 0) continue;
      const int img = phi.assign[d][t];
      m.assign[d][nt] = ma.forward[d][img];
      if (m.assign[d][nt] < 0) throw Error("erase: a kept cell maps onto an erased cell");
      if (d == 0) continue;
      if (d > n && mb.sub[d][t]) {
        if (!ma.sub[d][img]) throw Error("erase: inconsistent identification");
        m.ident[d][nt] = merge_map(phi.ident[d][t], *mb.sub[d][t], *ma.sub[d][img]);
      } else {
        m.ident[d][nt] = phi.ident[d][t];
      }
    }
    if (d != n) continue;
    for (int j = 0; j < static_cast<int>(mb.triples.size()); ++j) {
      const Triple& tr = mb.triples[j];
      const int k = ma.triple_of_plus[phi.assign[n][tr.plus]];
      if (k < 0 || ma.triple_of_minus[phi.assign[n][tr.minus]] != k)
        throw Error("erase: merged cells do not correspond");
      m.assign[n][mb.merged_base + j] = ma.merged_base + k;
      m.ident[n][mb.merged_base + j] =
          glue_iso(phi.ident[n][tr.plus], phi.ident[n][tr.minus], mb.glue[j], ma.glue[k]);
    }
  }
  return m;
}

// Triples of model(y) lying over the triples of `outer`.
std::vector<Triple> inner_triples(const Complex& model, const CellMap& att, const Merge& outer) {
  const int n = outer.n;
  std::vector<Triple> found;
  std::vector<int> zero_of(outer.forward[n - 1].size(), -1);
  for (int k = 0; k < static_cast<int>(outer.triples.size()); ++k) zero_of[outer.triples[k].zero] = k;
  for (int z = 0; z < model.count(n - 1); ++z) {
    const int k = zero_of[att.assign[n - 1][z]];
    if (k < 0) continue;
    std::vector<std::pair<int, int>> around;  // n-cell, occurrences of z
    for (int x = 0; x < model.count(n); ++x) {
      const auto& images = model.attachment({n, x}).map.assign[n - 1];
      const int c = static_cast<int>(std::count(images.begin(), images.end(), z));
      if (c > 0) around.push_back({x, c});
    }
    Triple t{z, -1, -1};
    for (auto [x, c] : around) {
      if (c != 1) continue;
      if (att.assign[n][x] == outer.triples[k].plus && t.plus < 0)
        t.plus = x;
      else if (att.assign[n][x] == outer.triples[k].minus && t.minus < 0)
        t.minus = x;
    }
    if (around.size() != 2 || t.plus < 0 || t.minus < 0)
      throw Error("erase: a higher cell meets the erased cell other than between the two merged cells");
    found.push_back(t);
  }
  return found;
}

}  // namespace

Merge merge(const Complex& a, int n, const std::vector<Triple>& triples, const std::vector<int>& cycle) {
  Merge out;
  out.n = n;
  out.triples = triples;
  const int dim = a.dimension();
  out.triple_of_plus.assign(a.count(n), -1);
  out.triple_of_minus.assign(a.count(n), -1);
  std::vector<char> zero(a.count(n - 1), 0);
  for (int k = 0; k < static_cast<int>(triples.size()); ++k) {
    out.triple_of_plus[triples[k].plus] = k;
    out.triple_of_minus[triples[k].minus] = k;
    zero[triples[k].zero] = 1;
  }
  out.forward.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    out.forward[d].resize(a.count(d));
    int next = 0;
    for (int i = 0; i < a.count(d); ++i) {
      const bool gone = (d == n - 1 && zero[i]) || (d == n && (out.triple_of_plus[i] >= 0 || out.triple_of_minus[i] >= 0));
      out.forward[d][i] = gone ? -1 : next++;
    }
    if (d == n) out.merged_base = next;
  }
  for (const Triple& t : triples) out.glue.push_back(glue_models(a, t, n));

  out.sub.resize(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    out.sub[d].resize(a.count(d));
    for (int i = 0; i < a.count(d); ++i) {
      if (out.forward[d][i] < 0) continue;
      const Cell& cell = a.cell({d, i});
      if (d < n) {
        out.result.append(d, cell.attachment, cell.label);
        continue;
      }
      const Attachment& att = *cell.attachment;
      Attachment next;
      bool affected = false;
      for (int t : att.map.assign[n - 1]) affected = affected || zero[t];
      if (affected && d == n)
        throw Error("erase: " + a.name({n, i}) + " also contains the erased cell");
      if (!affected) {
        next = att;
        for (int e = n - 1; e <= std::min(n, d - 1); ++e)
          for (int& t : next.map.assign[e]) t = out.forward[e][t];
      } else {
        auto sub = std::make_shared<Merge>(merge(att.sphere.model, n, inner_triples(att.sphere.model, att.map, out),
                                                 att.sphere.cycle));
        next.sphere = {sub->result, sub->cycle};
        out.sub[d][i] = sub;
        next.map = merge_map(att.map, *sub, out);
      }
      out.result.append(d, std::make_shared<const Attachment>(std::move(next)), cell.label);
    }
    if (d != n) continue;
    for (int k = 0; k < static_cast<int>(triples.size()); ++k) {
      const Glue& g = out.glue[k];
      const Attachment& ap = a.attachment({n, triples[k].plus});
      const Attachment& am = a.attachment({n, triples[k].minus});
      CellMap map;
      const int top = n - 1;
      map.assign.resize(top + 1);
      map.ident.resize(top + 1);
      for (int e = 0; e <= top; ++e)
        for (int c = 0; c < g.model.count(e); ++c) {
          const bool plus = g.plus_origin[e][c] >= 0;
          const Attachment& src = plus ? ap : am;
          const int origin = plus ? g.plus_origin[e][c] : g.minus_origin[e][c];
          map.assign[e].push_back(out.forward[e][src.map.assign[e][origin]]);
          if (e > 0) map.ident[e].push_back(src.map.ident[e][origin]);
        }
      out.result.append(n, std::make_shared<const Attachment>(Attachment{{g.model, g.cycle}, std::move(map)}));
    }
  }
  if (dim == n && !cycle.empty()) {
    for (int i = 0; i < a.count(n); ++i)
      if (out.forward[n][i] >= 0) out.cycle.push_back(cycle[i]);
    for (const Triple& t : triples) out.cycle.push_back(cycle[t.plus]);
  } else {
    out.cycle = cycle;
  }
  return out;
}

}  // namespace plcw::detail
