#include "plcw/constructions.hpp"

#include <map>

#include "plcw/algebra.hpp"
#include "plcw/maps.hpp"

namespace plcw {

namespace {

std::int64_t at(const FVector& f, int d) { return d >= 0 && d < static_cast<int>(f.size()) ? f[d] : 0; }

// Cell indexing of a join (shift 1, factor cells kept) or product (shift 0)
// of two complexes, truncated at `top`.
struct PairLayout {
  bool is_join = true;
  FVector fa, fb;
  int top = -1;

  PairLayout(const Complex& a, const Complex& b, bool join, int max_dim) : is_join(join) {
    fa = a.f_vector();
    fb = b.f_vector();
    const int shift = join ? 1 : 0;
    int full = a.dimension() + b.dimension() + shift;
    if (join) full = std::max({full, a.dimension(), b.dimension()});
    top = std::min(full, max_dim);
  }

  int shift() const { return is_join ? 1 : 0; }
  int dim_a() const { return static_cast<int>(fa.size()) - 1; }
  int dim_b() const { return static_cast<int>(fb.size()) - 1; }

  int pair_base(int d) const { return is_join ? static_cast<int>(at(fa, d) + at(fb, d)) : 0; }

  int pair(CellId u, CellId v) const {
    const int d = u.dim + v.dim + shift();
    std::int64_t index = pair_base(d);
    for (int du = 0; du < u.dim; ++du) index += at(fa, du) * at(fb, d - shift() - du);
    return static_cast<int>(index + std::int64_t(u.index) * at(fb, v.dim) + v.index);
  }
  int left(CellId u) const { return u.index; }
  int right(CellId v) const { return static_cast<int>(at(fa, v.dim) + v.index); }
};

CellMap ball_extension(const CellMap& boundary_iso, int cell_dim) {
  CellMap m;
  if (cell_dim == 0) {
    m.assign = {{0}};
    m.ident = {{}};
    return m;
  }
  m = boundary_iso;
  m.assign.resize(cell_dim + 1);
  m.ident.resize(cell_dim + 1);
  m.assign[cell_dim] = {0};
  m.ident[cell_dim] = {boundary_iso};
  return m;
}

CellMap pair_map(const CellMap& f, const Complex& a, const Complex& a2, const CellMap& g, const Complex& b,
                 const Complex& b2, bool join, int max_dim) {
  const PairLayout src(a, b, join, max_dim);
  const PairLayout dst(a2, b2, join, std::max(max_dim, 0));
  CellMap m;
  m.assign.resize(src.top + 1);
  m.ident.resize(src.top + 1);
  for (int d = 0; d <= src.top; ++d) {
    m.assign[d].assign(static_cast<std::size_t>(src.pair_base(d)), -1);
    if (d > 0) m.ident[d].resize(m.assign[d].size());
  }
  auto put = [&](int d, int index, int image, CellMap ident) {
    if (static_cast<int>(m.assign[d].size()) <= index) {
      m.assign[d].resize(index + 1, -1);
      if (d > 0) m.ident[d].resize(index + 1);
    }
    m.assign[d][index] = image;
    if (d > 0) m.ident[d][index] = std::move(ident);
  };
  if (join) {
    for (int d = 0; d <= std::min(src.top, a.dimension()); ++d)
      for (int i = 0; i < a.count(d); ++i)
        put(d, src.left({d, i}), dst.left({d, f.assign[d][i]}), d > 0 ? f.ident[d][i] : CellMap{});
    for (int d = 0; d <= std::min(src.top, b.dimension()); ++d)
      for (int j = 0; j < b.count(d); ++j)
        put(d, src.right({d, j}), dst.right({d, g.assign[d][j]}), d > 0 ? g.ident[d][j] : CellMap{});
  }
  for (int du = 0; du <= a.dimension(); ++du)
    for (int dv = 0; dv <= b.dimension(); ++dv) {
      const int d = du + dv + src.shift();
      if (d > src.top) continue;
      for (int i = 0; i < a.count(du); ++i)
        for (int j = 0; j < b.count(dv); ++j) {
          const CellId u{du, i}, v{dv, j};
          const CellId fu{du, f.assign[du][i]}, gv{dv, g.assign[dv][j]};
          CellMap ident;
          if (d > 0) {
            const CellMap eu = ball_extension(du > 0 ? f.ident[du][i] : CellMap{}, du);
            const CellMap ev = ball_extension(dv > 0 ? g.ident[dv][j] : CellMap{}, dv);
            ident = pair_map(eu, cell_ball(a, u), cell_ball(a2, fu), ev, cell_ball(b, v), cell_ball(b2, gv), join,
                             d - 1);
          }
          put(d, src.pair(u, v), dst.pair(fu, gv), std::move(ident));
        }
    }
  return m;
}

std::string unique_label(const Complex& k, std::string label) {
  if (label.empty()) return label;
  while (k.find(label)) label += "'";
  return label;
}

// Fundamental cycle of the boundary model of u*v (join) or u x v (product),
// as laid out by PairLayout(ball(u), ball(v)).
std::vector<int> pair_cycle(const Complex& a, CellId u, const Complex& b, CellId v, bool join,
                            const PairLayout& model_layout, int model_top_count) {
  std::vector<int> cycle(model_top_count, 0);
  const int sign_v = ((u.dim + (join ? 1 : 0)) % 2 == 0) ? 1 : -1;
  const CellId top_u{u.dim, 0}, top_v{v.dim, 0};  // the top cell of each ball
  if (u.dim > 0) {
    const SphereData& su = a.attachment(u).sphere;
    for (int s = 0; s < static_cast<int>(su.cycle.size()); ++s)
      cycle[model_layout.pair({u.dim - 1, s}, top_v)] = su.cycle[s];
  }
  if (v.dim > 0) {
    const SphereData& sv = b.attachment(v).sphere;
    for (int t = 0; t < static_cast<int>(sv.cycle.size()); ++t)
      cycle[model_layout.pair(top_u, {v.dim - 1, t})] = sign_v * sv.cycle[t];
  }
  if (join) {
    if (v.dim == 0) cycle[model_layout.left(top_u)] = sign_v;
    if (u.dim == 0) cycle[model_layout.right(top_v)] = 1;
  }
  return cycle;
}

Complex build_pairs(const Complex& a, const Complex& b, bool join, int max_dim, bool labels) {
  const PairLayout layout(a, b, join, max_dim);
  Complex out;
  auto label_of = [&](const Complex& k, CellId c) { return labels ? k.label(c) : std::string(); };
  for (int d = 0; d <= layout.top; ++d) {
    if (join) {
      for (int i = 0; i < (d <= a.dimension() ? a.count(d) : 0); ++i) {
        std::shared_ptr<const Attachment> att;
        if (d > 0) {
          Attachment copy = a.attachment({d, i});
          for (int e = 0; e < d; ++e)
            for (int& t : copy.map.assign[e]) t = layout.left({e, t});
          att = std::make_shared<const Attachment>(std::move(copy));
        }
        out.append(d, att, unique_label(out, label_of(a, {d, i})));
      }
      for (int j = 0; j < (d <= b.dimension() ? b.count(d) : 0); ++j) {
        std::shared_ptr<const Attachment> att;
        if (d > 0) {
          Attachment copy = b.attachment({d, j});
          for (int e = 0; e < d; ++e)
            for (int& t : copy.map.assign[e]) t = layout.right({e, t});
          att = std::make_shared<const Attachment>(std::move(copy));
        }
        out.append(d, att, unique_label(out, label_of(b, {d, j})));
      }
    }
    for (int du = 0; du <= a.dimension(); ++du) {
      const int dv = d - layout.shift() - du;
      if (dv < 0 || dv > b.dimension()) continue;
      for (int i = 0; i < a.count(du); ++i)
        for (int j = 0; j < b.count(dv); ++j) {
          const CellId u{du, i}, v{dv, j};
          std::string label;
          if (labels && !a.label(u).empty() && !b.label(v).empty())
            label = join ? a.label(u) + "*" + b.label(v) : "(" + a.label(u) + "," + b.label(v) + ")";
          if (d == 0) {
            out.append(0, nullptr, unique_label(out, label));
            continue;
          }
          const Complex bu = cell_ball(a, u), bv = cell_ball(b, v);
          Attachment att;
          att.sphere.model = build_pairs(bu, bv, join, d - 1, false);
          const PairLayout model_layout(bu, bv, join, d - 1);
          att.sphere.cycle = pair_cycle(a, u, b, v, join, model_layout, att.sphere.model.count(d - 1));
          att.map = pair_map(ball_map(a, u), bu, a, ball_map(b, v), bv, b, join, d - 1);
          out.append(d, std::make_shared<const Attachment>(std::move(att)), unique_label(out, label));
        }
    }
  }
  return out;
}

}  // namespace

Complex cell_ball(const Complex& k, CellId c) {
  if (c.dim == 0) {
    Complex p;
    p.append(0, nullptr);
    return p;
  }
  return ball(k.attachment(c).sphere);
}

Complex join(const Complex& k, const Complex& l) {
  return build_pairs(k, l, true, k.dimension() + l.dimension() + 1, true);
}

Complex product(const Complex& k, const Complex& l) {
  if (k.empty() || l.empty()) return Complex();
  return build_pairs(k, l, false, k.dimension() + l.dimension(), true);
}

Complex cone(const Complex& k, const std::string& apex_label) {
  Complex apex;
  apex.append(0, nullptr, apex_label);
  return join(k, apex);
}

CellId join_cell(const Complex& k, const Complex& l, CellId a, CellId b) {
  const PairLayout layout(k, l, true, k.dimension() + l.dimension() + 1);
  return {a.dim + b.dim + 1, layout.pair(a, b)};
}

CellId join_right(const Complex& k, CellId b) { return {b.dim, static_cast<int>(at(k.f_vector(), b.dim) + b.index)}; }

CellId product_cell(const Complex& k, const Complex& l, CellId a, CellId b) {
  const PairLayout layout(k, l, false, k.dimension() + l.dimension());
  return {a.dim + b.dim, layout.pair(a, b)};
}

CellMap join_map(const CellMap& f, const Complex& a, const Complex& a2, const CellMap& g, const Complex& b,
                 const Complex& b2) {
  return pair_map(f, a, a2, g, b, b2, true, a.dimension() + b.dimension() + 1);
}

CellMap product_map(const CellMap& f, const Complex& a, const Complex& a2, const CellMap& g, const Complex& b,
                    const Complex& b2) {
  return pair_map(f, a, a2, g, b, b2, false, a.dimension() + b.dimension());
}

Complex from_polygon_presentation(const PolygonPresentation& p) {
  Complex k;
  for (const auto& v : p.vertices) k.add_vertex(v);
  auto vertex = [&](const std::string& name) {
    auto id = k.find(name);
    if (!id || id->dim != 0) throw Error("unknown vertex '" + name + "'");
    return id->index;
  };
  for (const auto& e : p.edges) {
    Attachment att;
    att.sphere.model.append(0, nullptr);
    att.sphere.model.append(0, nullptr);
    att.sphere.cycle = {-1, 1};
    att.map.assign = {{vertex(e.tail), vertex(e.head)}};
    att.map.ident = {{}};
    k.add_cell(std::move(att), e.name);
  }
  for (const auto& f : p.faces) {
    const int n = static_cast<int>(f.word.size());
    if (n == 0) throw Error("face '" + f.name + "' has an empty word");
    std::vector<int> edge(n), start(n), end(n);
    for (int i = 0; i < n; ++i) {
      auto id = k.find(f.word[i].edge);
      if (!id || id->dim != 1) throw Error("face '" + f.name + "': unknown edge '" + f.word[i].edge + "'");
      edge[i] = id->index;
      const auto& ends = k.attachment(*id).map.assign[0];
      start[i] = f.word[i].sign > 0 ? ends[0] : ends[1];
      end[i] = f.word[i].sign > 0 ? ends[1] : ends[0];
    }
    for (int i = 0; i < n; ++i)
      if (end[i] != start[(i + 1) % n])
        throw Error("face '" + f.name + "': word is not composable at letter " + std::to_string(i + 1) + " ('" +
                    f.word[i].edge + "' ends at " + k.name({0, end[i]}) + ", next letter starts at " +
                    k.name({0, start[(i + 1) % n]}) + ")");
    Attachment att;
    Complex& circle = att.sphere.model;
    for (int i = 0; i < n; ++i) circle.append(0, nullptr);
    att.map.assign.resize(2);
    att.map.ident.resize(2);
    for (int i = 0; i < n; ++i) {
      Attachment side;
      side.sphere.model.append(0, nullptr);
      side.sphere.model.append(0, nullptr);
      side.sphere.cycle = {-1, 1};
      side.map.assign = {{i, (i + 1) % n}};
      side.map.ident = {{}};
      circle.append(1, std::make_shared<const Attachment>(std::move(side)));
      att.map.assign[0].push_back(start[i]);
      att.map.assign[1].push_back(edge[i]);
      CellMap flip;
      flip.assign = {f.word[i].sign > 0 ? std::vector<int>{0, 1} : std::vector<int>{1, 0}};
      flip.ident = {{}};
      att.map.ident[1].push_back(std::move(flip));
    }
    att.sphere.cycle.assign(n, 1);
    k.add_cell(std::move(att), f.name);
  }
  return k;
}

Complex point(const std::string& label) {
  Complex k;
  k.add_vertex(label);
  return k;
}

namespace {

PolygonPresentation::Letter letter(const std::string& e, int sign = 1) { return {e, sign}; }

PolygonPresentation ring(int n) {
  if (n < 1) throw Error("a circle needs at least one edge");
  PolygonPresentation p;
  for (int i = 0; i < n; ++i) p.vertices.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) p.edges.push_back({"e" + std::to_string(i), p.vertices[i], p.vertices[(i + 1) % n]});
  return p;
}

}  // namespace

Complex circle(int k) { return from_polygon_presentation(ring(k)); }

Complex segment() { return from_polygon_presentation({{"v0", "v1"}, {{"e", "v0", "v1"}}, {}}); }

Complex simplex(int n) {
  if (n < 0) throw Error("simplex dimension must be >= 0");
  Complex k = point("v0");
  for (int i = 1; i <= n; ++i) k = join(k, point("v" + std::to_string(i)));
  return k;
}

Complex sphere_bihemisphere(int n) {
  if (n < 0) throw Error("sphere dimension must be >= 0");
  Complex k;
  k.add_vertex("s0-");
  k.add_vertex("s0+");
  for (int d = 1; d <= n; ++d) {
    SphereData s{k, *fundamental_cycle(k)};
    const CellMap id = identity_map(k);
    k.append(d, std::make_shared<const Attachment>(Attachment{s, id}), "s" + std::to_string(d) + "-");
    k.append(d, std::make_shared<const Attachment>(Attachment{s, id}), "s" + std::to_string(d) + "+");
  }
  return k;
}

Complex ball_bihemisphere(int n) {
  if (n < 0) throw Error("ball dimension must be >= 0");
  if (n == 0) return point("b0");
  Complex k = sphere_bihemisphere(n - 1);
  SphereData s{k, *fundamental_cycle(k)};
  k.append(n, std::make_shared<const Attachment>(Attachment{s, identity_map(k)}), "b" + std::to_string(n));
  return k;
}

Complex ngon_disk(int k) {
  PolygonPresentation p = ring(k);
  PolygonPresentation::Face f{"F", {}};
  for (const auto& e : p.edges) f.word.push_back(letter(e.name));
  p.faces.push_back(f);
  return from_polygon_presentation(p);
}

Complex two_globe() {
  return from_polygon_presentation({{"v", "w"},
                                    {{"a", "v", "w"}, {"b", "v", "w"}},
                                    {{"F1", {letter("a"), letter("b", -1)}}, {"F2", {letter("b"), letter("a", -1)}}}});
}

Complex annulus_with_radius() {
  return from_polygon_presentation(
      {{"v", "w"},
       {{"a", "w", "v"}, {"b", "v", "v"}, {"c", "w", "w"}},
       {{"F", {letter("b"), letter("a", -1), letter("c", -1), letter("a")}}}});
}

Complex disk_with_radius() {
  return from_polygon_presentation(
      {{"v", "w"}, {{"a", "w", "v"}, {"b", "w", "w"}}, {{"F", {letter("b"), letter("a"), letter("a", -1)}}}});
}

Complex cylinder_s1xIxI() {
  Complex s1 = from_polygon_presentation({{"p"}, {{"s", "p", "p"}}, {}});
  Complex i1 = from_polygon_presentation({{"0", "1"}, {{"i", "0", "1"}}, {}});
  Complex i2 = from_polygon_presentation({{"0", "1"}, {{"j", "0", "1"}}, {}});
  return product(s1, product(i1, i2));
}

Complex torus_square_word() {
  return from_polygon_presentation(
      {{"v"},
       {{"a", "v", "v"}, {"b", "v", "v"}},
       {{"F", {letter("a"), letter("b"), letter("a", -1), letter("b", -1)}}}});
}

Complex rectangle() {
  return from_polygon_presentation(
      {{"a1", "a2", "b1", "b2"},
       {{"bottom", "a1", "a2"}, {"right", "a2", "b2"}, {"top", "b1", "b2"}, {"left", "a1", "b1"}},
       {{"R", {letter("bottom"), letter("right"), letter("top", -1), letter("left", -1)}}}});
}

std::vector<std::string> standard_names() {
  return {"point",          "segment",          "circle:K",          "simplex:N",        "ball_bihemisphere:N",
          "sphere_bihemisphere:N", "ngon_disk:K", "one_cell_disk",   "two_globe",        "annulus_with_radius",
          "disk_with_radius", "cylinder_s1xIxI", "torus_square_word", "rectangle"};
}

Complex standard(const std::string& spec) {
  std::string name = spec;
  int param = -1;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    try {
      std::size_t used = 0;
      param = std::stoi(spec.substr(colon + 1), &used);
      if (used != spec.size() - colon - 1) throw Error("");
    } catch (...) {
      throw Error("bad parameter in '" + spec + "'");
    }
  }
  auto need = [&](int fallback) {
    if (param < 0) param = fallback;
    return param;
  };
  auto none = [&] {
    if (param >= 0) throw Error("'" + name + "' takes no parameter");
  };
  if (name == "simplex") return simplex(need(2));
  if (name == "ball_bihemisphere") return ball_bihemisphere(need(2));
  if (name == "sphere_bihemisphere") return sphere_bihemisphere(need(1));
  if (name == "ngon_disk") return ngon_disk(need(5));
  if (name == "circle") return circle(need(1));
  none();
  if (name == "point") return point();
  if (name == "segment") return segment();
  if (name == "one_cell_disk") return ngon_disk(1);
  if (name == "two_globe") return two_globe();
  if (name == "annulus_with_radius") return annulus_with_radius();
  if (name == "disk_with_radius") return disk_with_radius();
  if (name == "cylinder_s1xIxI") return cylinder_s1xIxI();
  if (name == "torus_square_word") return torus_square_word();
  if (name == "rectangle") return rectangle();
  throw Error("unknown standard complex '" + spec + "'");
}

}  // namespace plcw
