#include "plcw/moves.hpp"

#include <algorithm>

#include "plcw/algebra.hpp"
#include "plcw/constructions.hpp"
#include "plcw/maps.hpp"
#include "rewrite.hpp"

namespace plcw {

Move Move::radial(CellId c, std::string apex) { return {Kind::Radial, c, {}, {std::move(apex)}}; }

Move Move::elementary(const EquatorSplit& split, std::string plus_label, std::string minus_label,
                      std::string zero_label) {
  return {Kind::Elementary, split.cell, split.plus,
          {std::move(plus_label), std::move(minus_label), std::move(zero_label)}};
}

Move Move::erase(CellId c0, std::string merged_label) { return {Kind::Erase, c0, {}, {std::move(merged_label)}}; }

std::string to_string(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::Radial:
      return "radial";
    case Move::Kind::Elementary:
      return "elementary";
    case Move::Kind::Erase:
      return "erase";
  }
  return "?";
}

std::vector<Move> MoveTrace::moves() const {
  std::vector<Move> out;
  for (const auto& s : steps) out.push_back(s.move);
  return out;
}

bool MoveTrace::only(Move::Kind kind) const {
  return std::all_of(steps.begin(), steps.end(), [&](const MoveStep& s) { return s.move.kind == kind; });
}

void MoveTrace::append(const MoveTrace& other) { steps.insert(steps.end(), other.steps.begin(), other.steps.end()); }

namespace {

std::string label_at(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : std::string();
}

std::string free_label(const Complex& k, std::string label) {
  if (label.empty()) return label;
  while (k.find(label)) label += "'";
  return label;
}

std::string derived_label(const Complex& k, CellId c, const std::string& prefix, const std::string& suffix) {
  const std::string& base = k.label(c);
  if (base.empty()) return {};
  return prefix + base + suffix;
}

void require_cell(const Complex& k, CellId c) {
  if (!k.contains(c)) throw Error("unknown cell " + to_string(c));
}

// Applies a single-site substitution of cell c by r and records the step.
MoveResult substitute_cell(const Complex& k, CellId c, const detail::Replacement& r, Move move,
                           const std::vector<std::pair<CellId, std::string>>& labels) {
  const SphereData& s = k.attachment(c).sphere;
  detail::Substitution sub =
      detail::substitute(k, c.dim, {detail::Site{c.index, identity_map(s.model)}}, r, {});
  MoveResult out;
  out.complex = std::move(sub.result);
  MoveStep step;
  step.move = std::move(move);
  step.forward = std::move(sub.forward);
  for (const auto& [interior, label] : labels) {
    const CellId made{interior.dim, sub.copy(0, interior.dim, interior.index)};
    if (!label.empty()) out.complex.set_label(made, label);
    step.created.push_back(made);
  }
  out.trace.steps.push_back(std::move(step));
  return out;
}

// Ball decomposition S + C0 + C+ + C- of an elementary subdivision.
std::optional<detail::Replacement> elementary_replacement(const Complex& k, const EquatorSplit& split,
                                                          ValidationReport& report) {
  const CellId c = split.cell;
  if (!k.contains(c)) {
    report.add(to_string(c), "unknown cell");
    return std::nullopt;
  }
  if (c.dim == 0) {
    report.add(k.name(c), "a vertex cannot be split");
    return std::nullopt;
  }
  const SphereData& s = k.attachment(c).sphere;
  const int n = c.dim;
  const int tops = s.model.count(n - 1);
  std::vector<char> side(tops, 0);
  for (int p : split.plus) {
    if (p < 0 || p >= tops) {
      report.add(k.name(c), "P+ names top cell " + std::to_string(p) + " outside the boundary model");
      return std::nullopt;
    }
    if (side[p]) {
      report.add(k.name(c), "P+ lists top cell " + std::to_string(p) + " twice");
      return std::nullopt;
    }
    side[p] = 1;
  }
  std::vector<CellId> plus, minus;
  for (int i = 0; i < tops; ++i) (side[i] ? plus : minus).push_back({n - 1, i});
  if (plus.empty() || minus.empty()) {
    report.add(k.name(c), "P+ and P- must both be non-empty");
    return std::nullopt;
  }

  const Subcomplex cp = closure(s.model, plus);
  const Subcomplex cm = closure(s.model, minus);
  std::vector<CellId> common;
  for (int d = 0; d < n - 1; ++d)
    for (int i = 0; i < s.model.count(d); ++i)
      if (cp.to_sub[d][i] >= 0 && cm.to_sub[d][i] >= 0) common.push_back({d, i});
  if (n == 1 && (plus.size() != 1 || minus.size() != 1)) {
    report.add(k.name(c), "an edge splits into its two endpoints");
    return std::nullopt;
  }

  detail::Replacement r;
  r.boundary = s;
  r.ball = s.model;
  const int c0 = s.model.count(n - 1);
  if (n == 1) {
    r.ball.append(0, nullptr);
    for (const CellId& half : {plus[0], minus[0]}) {
      Attachment att;
      att.sphere.model.append(0, nullptr);
      att.sphere.model.append(0, nullptr);
      att.sphere.cycle = {-1, 1};
      att.map.assign = {{half.index, c0}};
      att.map.ident = {{}};
      r.ball.append(1, std::make_shared<const Attachment>(std::move(att)));
    }
  } else {
    if (common.empty()) {
      report.add(k.name(c), "the two halves do not meet");
      return std::nullopt;
    }
    const Subcomplex e = closure(s.model, common);
    if (e.complex.dimension() != n - 2) {
      report.add(k.name(c), "equator has dimension " + std::to_string(e.complex.dimension()) + ", expected " +
                                std::to_string(n - 2));
      return std::nullopt;
    }
    auto e_cycle = fundamental_cycle(e.complex);
    if (!e_cycle) {
      report.add(k.name(c), "equator is not a sphere (no fundamental cycle)");
      return std::nullopt;
    }
    SphereData equator{e.complex, *e_cycle};
    ValidationReport er = check_sphere(equator);
    if (!er.ok()) {
      for (auto& issue : er.issues) report.add(k.name(c) + " > equator" + (issue.path.empty() ? "" : " > " + issue.path), issue.message);
      return std::nullopt;
    }
    r.ball.append(n - 1, std::make_shared<const Attachment>(Attachment{equator, e.inclusion(s.model)}));
    for (const Subcomplex* half : {&cp, &cm}) {
      Complex model = half->complex;
      CellMap into_half;
      into_half.assign.resize(n - 1);
      into_half.ident.resize(n - 1);
      for (int d = 0; d < n - 1; ++d)
        for (int i = 0; i < e.complex.count(d); ++i) {
          into_half.assign[d].push_back(half->to_sub[d][e.origin[d][i]]);
          if (d > 0) into_half.ident[d].push_back(identity_map(e.complex.attachment({d, i}).sphere.model));
        }
      model.append(n - 1, std::make_shared<const Attachment>(Attachment{equator, std::move(into_half)}));
      auto cycle = fundamental_cycle(model);
      SphereData hs{model, cycle ? *cycle : std::vector<int>(model.count(n - 1), 1)};
      ValidationReport hr = check_sphere(hs);
      if (!cycle || !hr.ok()) {
        const std::string which = half == &cp ? "P+" : "P-";
        if (!cycle) report.add(k.name(c), which + " half is not a ball (its boundary sphere has no fundamental cycle)");
        for (auto& issue : hr.issues) report.add(k.name(c) + " > " + which + " half", issue.message);
        return std::nullopt;
      }
      CellMap into_ball = half->inclusion(s.model);
      into_ball.assign.resize(n);
      into_ball.ident.resize(n);
      into_ball.assign[n - 1].push_back(c0);
      into_ball.ident[n - 1].push_back(identity_map(e.complex));
      r.ball.append(n, std::make_shared<const Attachment>(Attachment{hs, std::move(into_ball)}));
    }
  }
  try {
    detail::prepare(r);
  } catch (const Error& err) {
    report.add(k.name(c), err.what());
    return std::nullopt;
  }
  return r;
}

}  // namespace

ValidationReport check_split(const Complex& k, const EquatorSplit& split) {
  ValidationReport report;
  elementary_replacement(k, split, report);
  return report;
}

MoveResult radial_subdivide(const Complex& k, CellId c, const std::string& apex_label) {
  require_cell(k, c);
  if (c.dim == 0) throw Error("cannot radially subdivide vertex " + k.name(c));
  detail::Replacement r;
  r.boundary = k.attachment(c).sphere;
  Complex apex;
  apex.append(0, nullptr);
  r.ball = join(r.boundary.model, apex);
  detail::prepare(r);
  std::string label = apex_label;
  if (label.empty()) {
    label = derived_label(k, c, "o", "");
    if (label.empty()) label = "o" + std::to_string(c.dim) + "." + std::to_string(c.index);
    label = free_label(k, label);
  }
  std::vector<std::pair<CellId, std::string>> labels{{{0, 0}, label}};
  for (int d = 1; d <= c.dim; ++d)
    for (int j = 0; j < r.interior_count(d); ++j) labels.push_back({{d, j}, {}});
  return substitute_cell(k, c, r, Move::radial(c, apex_label), labels);
}

MoveResult elementary_subdivide(const Complex& k, const EquatorSplit& split, const std::string& plus_label,
                                const std::string& minus_label, const std::string& zero_label) {
  ValidationReport report;
  auto r = elementary_replacement(k, split, report);
  if (!r) throw Error("invalid split: " + report.summary());
  const CellId c = split.cell;
  auto pick = [&](const std::string& given, const char* suffix) {
    return given.empty() ? free_label(k, derived_label(k, c, "", suffix)) : given;
  };
  std::string lp = pick(plus_label, "+"), lm = pick(minus_label, "-"), l0 = pick(zero_label, "0");
  if (lm == lp && !lm.empty()) lm += "'";
  return substitute_cell(k, c, *r, Move::elementary(split, plus_label, minus_label, zero_label),
                         {{{c.dim, 0}, lp}, {{c.dim, 1}, lm}, {{c.dim - 1, 0}, l0}});
}

ValidationReport check_erase(const Complex& k, CellId c0) {
  ValidationReport report;
  if (!k.contains(c0)) {
    report.add(to_string(c0), "unknown cell");
    return report;
  }
  const int n = c0.dim + 1;
  if (n > k.dimension()) {
    report.add(k.name(c0), "no cell of dimension " + std::to_string(n) + " contains it");
    return report;
  }
  std::vector<std::pair<int, int>> around;
  for (int i = 0; i < k.count(n); ++i) {
    const auto& images = k.attachment({n, i}).map.assign[n - 1];
    const int c = static_cast<int>(std::count(images.begin(), images.end(), c0.index));
    if (c > 0) around.push_back({i, c});
  }
  for (auto [cell, count] : around)
    if (count != 1)
      report.add(k.name({n, cell}), k.name(c0) + " occurs " + std::to_string(count) +
                                        " times in its boundary multiset (must be exactly once)");
  if (around.size() != 2)
    report.add(k.name(c0), "must separate exactly two distinct " + std::to_string(n) + "-cells, found " +
                               std::to_string(around.size()));
  if (!report.ok()) return report;
  try {
    detail::Glue g = detail::glue_models(k, {c0.index, around[0].first, around[1].first}, n);
    ValidationReport gr = check_sphere({g.model, g.cycle});
    for (auto& issue : gr.issues) report.add(k.name(c0) + " > glued sphere" + (issue.path.empty() ? "" : " > " + issue.path), issue.message);
  } catch (const Error& err) {
    report.add(k.name(c0), err.what());
  }
  return report;
}

MoveResult erase(const Complex& k, CellId c0, const std::string& merged_label) {
  ValidationReport report = check_erase(k, c0);
  if (!report.ok()) throw Error("cannot erase " + (k.contains(c0) ? k.name(c0) : to_string(c0)) + ": " + report.summary());
  const int n = c0.dim + 1;
  int plus = -1, minus = -1;
  for (int i = 0; i < k.count(n); ++i) {
    const auto& images = k.attachment({n, i}).map.assign[n - 1];
    if (std::find(images.begin(), images.end(), c0.index) == images.end()) continue;
    (plus < 0 ? plus : minus) = i;
  }
  detail::Merge m = detail::merge(k, n, {{c0.index, plus, minus}}, {});
  MoveResult out;
  out.complex = std::move(m.result);
  const CellId merged{n, m.merged_base};
  std::string label = merged_label.empty() ? k.label({n, plus}) : merged_label;
  if (!label.empty()) out.complex.set_label(merged, label);
  MoveStep step;
  step.move = Move::erase(c0, merged_label);
  step.forward = std::move(m.forward);
  step.created = {merged};
  out.trace.steps.push_back(std::move(step));
  return out;
}

MoveResult apply_move(const Complex& k, const Move& m) {
  switch (m.kind) {
    case Move::Kind::Radial:
      return radial_subdivide(k, m.cell, label_at(m.labels, 0));
    case Move::Kind::Elementary:
      return elementary_subdivide(k, {m.cell, m.plus}, label_at(m.labels, 0), label_at(m.labels, 1),
                                  label_at(m.labels, 2));
    case Move::Kind::Erase:
      return erase(k, m.cell, label_at(m.labels, 0));
  }
  throw Error("unknown move");
}

std::vector<EquatorSplit> enumerate_splits(const Complex& k, CellId c, std::size_t limit) {
  std::vector<EquatorSplit> out;
  if (c.dim == 0) return out;
  const int tops = k.attachment(c).sphere.model.count(c.dim - 1);
  if (tops < 2 || tops > 24) return out;
  const std::uint32_t all = (1u << (tops - 1)) - 1;
  for (std::uint32_t mask = 0; mask < all && out.size() < limit; ++mask) {
    EquatorSplit split{c, {0}};
    for (int i = 1; i < tops; ++i)
      if (mask & (1u << (i - 1))) split.plus.push_back(i);
    ValidationReport report;
    if (elementary_replacement(k, split, report)) out.push_back(std::move(split));
  }
  return out;
}

MoveResult triangulate(const Complex& k) {
  MoveResult out{k, {}};
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<CellId> todo;
    for (int d = 1; d <= out.complex.dimension(); ++d)
      for (int i = 0; i < out.complex.count(d); ++i) todo.push_back({d, i});
    for (std::size_t t = 0; t < todo.size(); ++t) {
      MoveResult step = radial_subdivide(out.complex, todo[t]);
      const auto& forward = step.trace.steps[0].forward;
      for (std::size_t u = t + 1; u < todo.size(); ++u) todo[u].index = forward[todo[u].dim][todo[u].index];
      out.complex = std::move(step.complex);
      out.trace.append(step.trace);
    }
  }
  return out;
}

}  // namespace plcw
