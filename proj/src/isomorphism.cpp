#include "plcw/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "plcw/maps.hpp"

namespace plcw {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

std::uint64_t hash_fvector(const FVector& f) {
  std::uint64_t h = 0x1234567ULL;
  for (auto v : f) h = mix(h, static_cast<std::uint64_t>(v));
  return h;
}

// Per-cell invariants, refined once by the invariants of the top cells of the boundary model.
std::vector<std::vector<std::uint64_t>> signatures(const Complex& k) {
  const int dim = k.dimension();
  std::vector<std::vector<std::uint64_t>> occ(dim + 1), sig(dim + 1);
  for (int d = 0; d <= dim; ++d) occ[d].assign(k.count(d), 0);
  for (int d = 1; d <= dim; ++d)
    for (int i = 0; i < k.count(d); ++i) {
      const CellMap& m = k.attachment({d, i}).map;
      for (int e = 0; e < d; ++e)
        for (int t : m.assign[e]) occ[e][t] += 1 + 1000 * (d - e == 1);
    }
  for (int d = 0; d <= dim; ++d) {
    sig[d].resize(k.count(d));
    for (int i = 0; i < k.count(d); ++i) {
      std::uint64_t h = mix(static_cast<std::uint64_t>(d), occ[d][i]);
      if (d > 0) h = mix(h, hash_fvector(k.attachment({d, i}).sphere.model.f_vector()));
      sig[d][i] = h;
    }
  }
  std::vector<std::vector<std::uint64_t>> refined = sig;
  for (int d = 1; d <= dim; ++d)
    for (int i = 0; i < k.count(d); ++i) {
      const CellMap& m = k.attachment({d, i}).map;
      std::vector<std::uint64_t> around;
      for (int t : m.assign[d - 1]) around.push_back(sig[d - 1][t]);
      std::sort(around.begin(), around.end());
      std::uint64_t h = sig[d][i];
      for (auto v : around) h = mix(h, v);
      refined[d][i] = h;
    }
  return refined;
}

// Matching order: every cell comes after its faces; vertices are added along
// edges so that incidences prune early.
std::vector<CellId> matching_order(const Complex& k) {
  const int dim = k.dimension();
  std::vector<std::vector<int>> remaining(dim + 1);
  std::vector<std::vector<std::vector<CellId>>> up(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    remaining[d].assign(k.count(d), 0);
    up[d].resize(k.count(d));
  }
  for (int d = 1; d <= dim; ++d)
    for (int i = 0; i < k.count(d); ++i) {
      auto fs = faces(k, {d, i});
      remaining[d][i] = static_cast<int>(fs.size());
      for (CellId f : fs) up[f.dim][f.index].push_back({d, i});
    }
  std::vector<std::vector<char>> placed(dim + 1);
  for (int d = 0; d <= dim; ++d) placed[d].assign(k.count(d), 0);
  std::set<CellId> ready;
  for (int d = 1; d <= dim; ++d)
    for (int i = 0; i < k.count(d); ++i)
      if (remaining[d][i] == 0) ready.insert({d, i});
  std::set<int> frontier;  // vertices adjacent to placed ones
  std::vector<CellId> order;
  auto place = [&](CellId c) {
    placed[c.dim][c.index] = 1;
    order.push_back(c);
    frontier.erase(c.index);
    for (CellId u : up[c.dim][c.index])
      if (--remaining[u.dim][u.index] == 0) ready.insert(u);
    if (c.dim == 1)
      for (int v : k.attachment(c).map.assign[0])
        if (!placed[0][v]) frontier.insert(v);
    if (c.dim == 0)
      for (CellId u : up[0][c.index])
        if (u.dim == 1)
          for (int v : k.attachment(u).map.assign[0])
            if (!placed[0][v]) frontier.insert(v);
  };
  const std::size_t total = k.size();
  int next_vertex = 0;
  while (order.size() < total) {
    if (!ready.empty()) {
      CellId c = *ready.begin();
      ready.erase(ready.begin());
      place(c);
      continue;
    }
    if (!frontier.empty()) {
      place({0, *frontier.begin()});
      continue;
    }
    while (placed[0][next_vertex]) ++next_vertex;
    place({0, next_vertex});
  }
  return order;
}

struct ModelSearch {
  const Complex& mx;
  const Complex& my;
  const CellMap& att_x;
  const CellMap& att_y;
  const CellMap& outer;
  std::size_t limit;

  CellMap psi;
  std::vector<std::vector<char>> used;
  std::vector<CellMap> results;
  std::vector<std::vector<std::optional<CellMap>>> inverse_cache;

  ModelSearch(const Complex& mx_, const Complex& my_, const CellMap& ax, const CellMap& ay, const CellMap& o,
              std::size_t lim)
      : mx(mx_), my(my_), att_x(ax), att_y(ay), outer(o), limit(lim) {
    const int dim = mx.dimension();
    psi.assign.resize(dim + 1);
    psi.ident.resize(dim + 1);
    used.resize(dim + 1);
    inverse_cache.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
      psi.assign[d].assign(mx.count(d), -1);
      if (d > 0) psi.ident[d].resize(mx.count(d));
      used[d].assign(my.count(d), 0);
      inverse_cache[d].resize(my.count(d));
    }
  }

  const CellMap& inverse_y(int e, int z) {
    auto& slot = inverse_cache[e][z];
    if (!slot) slot = inverse(att_y.ident[e][z]);
    return *slot;
  }

  void run(int d, int w) {
    if (results.size() >= limit) return;
    if (d > mx.dimension()) {
      results.push_back(psi);
      return;
    }
    if (w == mx.count(d)) {
      run(d + 1, 0);
      return;
    }
    const int want = outer.assign[d][att_x.assign[d][w]];
    for (int z = 0; z < my.count(d); ++z) {
      if (used[d][z] || att_y.assign[d][z] != want) continue;
      if (d > 0) {
        CellMap iota = compose(inverse_y(d, z), compose(outer.ident[d][att_x.assign[d][w]], att_x.ident[d][w]));
        const CellMap& inner_x = mx.attachment({d, w}).map;
        const CellMap& inner_y = my.attachment({d, z}).map;
        if (!(compose(psi, inner_x) == compose(inner_y, iota))) continue;
        psi.ident[d][w] = std::move(iota);
      }
      psi.assign[d][w] = z;
      used[d][z] = 1;
      run(d, w + 1);
      used[d][z] = 0;
      psi.assign[d][w] = -1;
      if (results.size() >= limit) return;
    }
  }
};

std::vector<CellMap> model_isos(const Complex& a, CellId x, const Complex& b, CellId y, const CellMap& outer,
                                std::size_t limit) {
  const Attachment& ax = a.attachment(x);
  const Attachment& ay = b.attachment(y);
  if (ax.sphere.model.f_vector() != ay.sphere.model.f_vector()) return {};
  ModelSearch s(ax.sphere.model, ay.sphere.model, ax.map, ay.map, outer, limit);
  s.run(0, 0);
  return std::move(s.results);
}

struct TopSearch {
  const Complex& a;
  const Complex& b;
  bool bijective;
  const std::vector<std::vector<int>>* fixed;
  std::vector<CellId> order;
  std::vector<std::vector<std::uint64_t>> sig_a, sig_b;
  CellMap phi;
  std::vector<std::vector<char>> used;

  TopSearch(const Complex& a_, const Complex& b_, bool bij, const std::vector<std::vector<int>>* fix)
      : a(a_), b(b_), bijective(bij), fixed(fix) {
    order = matching_order(a);
    if (bijective) {
      sig_a = signatures(a);
      sig_b = signatures(b);
    }
    const int dim = a.dimension();
    phi.assign.resize(dim + 1);
    phi.ident.resize(dim + 1);
    used.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
      phi.assign[d].assign(a.count(d), -1);
      if (d > 0) phi.ident[d].resize(a.count(d));
      used[d].assign(b.count(d), 0);
    }
  }

  bool run(std::size_t pos) {
    if (pos == order.size()) return true;
    const CellId x = order[pos];
    auto try_candidate = [&](int y) -> bool {
      if (x.dim == 0) {
        phi.assign[0][x.index] = y;
        used[0][y] = 1;
        if (run(pos + 1)) return true;
        used[0][y] = 0;
        phi.assign[0][x.index] = -1;
        return false;
      }
      for (auto& iso : model_isos(a, x, b, {x.dim, y}, phi, 64)) {
        phi.assign[x.dim][x.index] = y;
        phi.ident[x.dim][x.index] = std::move(iso);
        used[x.dim][y] = 1;
        if (run(pos + 1)) return true;
        used[x.dim][y] = 0;
        phi.assign[x.dim][x.index] = -1;
      }
      return false;
    };
    if (fixed) {
      const int y = (*fixed)[x.dim][x.index];
      if (y < 0 || y >= b.count(x.dim)) return false;
      return try_candidate(y);
    }
    for (int y = 0; y < b.count(x.dim); ++y) {
      if (bijective && (used[x.dim][y] || sig_a[x.dim][x.index] != sig_b[x.dim][y])) continue;
      if (try_candidate(y)) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<CellMap> compatible_model_isos(const Complex& a, CellId x, const Complex& b, CellId y,
                                           const CellMap& outer) {
  return model_isos(a, x, b, y, outer, static_cast<std::size_t>(-1));
}

std::optional<CellMap> find_isomorphism(const Complex& a, const Complex& b) {
  if (a.f_vector() != b.f_vector()) return std::nullopt;
  {
    auto sa = signatures(a), sb = signatures(b);
    for (auto& row : sa) std::sort(row.begin(), row.end());
    for (auto& row : sb) std::sort(row.begin(), row.end());
    if (sa != sb) return std::nullopt;
  }
  TopSearch s(a, b, true, nullptr);
  if (!s.run(0)) return std::nullopt;
  return std::move(s.phi);
}

std::optional<CellMap> complete_regular_map(const Complex& source, const Complex& target,
                                            const std::vector<std::vector<int>>& assign) {
  if (static_cast<int>(assign.size()) != source.dimension() + 1) return std::nullopt;
  for (int d = 0; d <= source.dimension(); ++d)
    if (static_cast<int>(assign[d].size()) != source.count(d)) return std::nullopt;
  TopSearch s(source, target, false, &assign);
  if (!s.run(0)) return std::nullopt;
  return std::move(s.phi);
}

std::uint64_t invariant_hash(const Complex& k) {
  std::uint64_t h = hash_fvector(k.f_vector());
  for (auto row : signatures(k)) {
    std::sort(row.begin(), row.end());
    for (auto v : row) h = mix(h, v);
  }
  return h;
}

}  // namespace plcw
