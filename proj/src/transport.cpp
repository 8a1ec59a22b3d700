#include <algorithm>
#include <set>

#include "plcw/constructions.hpp"
#include "plcw/search.hpp"

namespace plcw {

namespace {

// What a cell of the running join stands for. K references are indices into
// K before the current K move when >= 0, or -1-i for the i-th created cell.
struct Tag {
  enum class Type { K, L, Pair } type = Type::K;
  CellId k;
  CellId l;

  bool operator==(const Tag&) const = default;
};

using Tags = std::vector<std::vector<Tag>>;

Tags initial_tags(const Complex& k, const Complex& l, const Complex& j) {
  Tags tags(j.dimension() + 1);
  for (int d = 0; d <= j.dimension(); ++d) tags[d].resize(j.count(d));
  for (int d = 0; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i) tags[d][i] = {Tag::Type::K, {d, i}, {}};
  for (int d = 0; d <= l.dimension(); ++d)
    for (int i = 0; i < l.count(d); ++i) {
      const CellId b{d, i};
      const CellId r = join_right(k, b);
      tags[r.dim][r.index] = {Tag::Type::L, {}, b};
      for (int e = 0; e <= k.dimension(); ++e)
        for (int a = 0; a < k.count(e); ++a) {
          const CellId c = join_cell(k, l, {e, a}, b);
          tags[c.dim][c.index] = {Tag::Type::Pair, {e, a}, b};
        }
    }
  return tags;
}

CellId find_tag(const Tags& tags, const Tag& t) {
  for (int d = 0; d < static_cast<int>(tags.size()); ++d)
    for (int i = 0; i < static_cast<int>(tags[d].size()); ++i)
      if (tags[d][i] == t) return {d, i};
  throw Error("transport lost track of a join cell");
}

// Rewrites tags after one move on the join; `fresh` tags the created cells.
Tags advance(const Tags& tags, const Complex& j, const MoveStep& step, const std::vector<Tag>& fresh) {
  Tags out(j.dimension() + 1);
  for (int d = 0; d <= j.dimension(); ++d) out[d].resize(j.count(d));
  for (int d = 0; d < static_cast<int>(step.forward.size()); ++d)
    for (int i = 0; i < static_cast<int>(step.forward[d].size()); ++i)
      if (step.forward[d][i] >= 0) out[d][step.forward[d][i]] = tags[d][i];
  for (std::size_t c = 0; c < step.created.size(); ++c) out[step.created[c].dim][step.created[c].index] = fresh[c];
  return out;
}

// Points K references at K after its move.
void settle(Tags& tags, const MoveStep& kstep) {
  auto fix = [&](CellId& c) {
    if (c.index >= 0) {
      c.index = kstep.forward[c.dim][c.index];
      if (c.index < 0) throw Error("transport left a removed cell behind");
    } else {
      const CellId created = kstep.created[-1 - c.index];
      if (created.dim != c.dim) throw Error("transport dimension mismatch");
      c.index = created.index;
    }
  };
  for (auto& row : tags)
    for (Tag& t : row)
      if (t.type != Tag::Type::L) fix(t.k);
}

std::vector<int> pair_split_plus(const Complex& j, const Tags& tags, CellId jc, int n) {
  const Attachment& att = j.attachment(jc);
  const Complex& model = att.sphere.model;
  const int top = jc.dim - 1;
  auto tag_of = [&](int dim, int model_index) { return tags[dim][att.map.assign[dim][model_index]]; };
  int over_plus = -1;
  for (int i = 0; i < model.count(n); ++i) {
    const Tag t = tag_of(n, i);
    if (t.type == Tag::Type::K && t.k.index == -1) over_plus = i;
  }
  if (over_plus < 0) throw Error("transport: no model cell over the plus half");
  const auto& plus_faces = model.attachment({n, over_plus}).map.assign[n - 1];
  std::vector<int> plus;
  for (int y = 0; y < model.count(top); ++y) {
    const Tag t = tag_of(top, y);
    if (t.type == Tag::Type::L) throw Error("transport: unexpected boundary cell");
    if (t.k.index == -1 || t.k.index == -2) {
      if (t.k.index == -1) plus.push_back(y);
      continue;
    }
    std::set<int> ks;
    for (int f : model.attachment({top, y}).map.assign[n - 1])
      if (tag_of(n - 1, f).type == Tag::Type::K) ks.insert(f);
    if (ks.size() != 1) throw Error("transport: ambiguous equator face");
    if (std::find(plus_faces.begin(), plus_faces.end(), *ks.begin()) != plus_faces.end()) plus.push_back(y);
  }
  return plus;
}

}  // namespace

MoveResult transport_through_join(const Complex& k, const std::vector<Move>& moves, const Complex& l) {
  Complex kc = k;
  MoveResult out{join(k, l), {}};
  Tags tags = initial_tags(k, l, out.complex);
  auto run = [&](const Move& m, const std::vector<Tag>& fresh) {
    MoveResult r = apply_move(out.complex, m);
    tags = advance(tags, r.complex, r.trace.steps.front(), fresh);
    out.complex = std::move(r.complex);
    out.trace.append(r.trace);
  };
  for (std::size_t s = 0; s < moves.size(); ++s) {
    const Move& m = moves[s];
    const CellId c = m.cell;
    if (!kc.contains(c)) throw Error("step " + std::to_string(s + 1) + ": unknown cell " + to_string(c));
    MoveResult kr;
    try {
      kr = apply_move(kc, m);
    } catch (const Error& e) {
      throw Error("step " + std::to_string(s + 1) + ": " + e.what());
    }
    const MoveStep& kstep = kr.trace.steps.front();
    switch (m.kind) {
      case Move::Kind::Radial:
        throw Error("step " + std::to_string(s + 1) + ": radial subdivisions do not transport through joins");
      case Move::Kind::Elementary: {
        const int n = c.dim;
        const CellId jc = find_tag(tags, {Tag::Type::K, c, {}});
        const auto& katt = kc.attachment(c).map.assign[n - 1];
        const auto& jatt = out.complex.attachment(jc).map.assign[n - 1];
        for (std::size_t y = 0; y < katt.size(); ++y)
          if (y >= jatt.size() || tags[n - 1][jatt[y]] != Tag{Tag::Type::K, {n - 1, katt[y]}, {}})
            throw Error("transport: boundary models of the join disagree with K");
        std::vector<Tag> fresh;
        for (int i = 0; i < 3; ++i) fresh.push_back({Tag::Type::K, {i < 2 ? n : n - 1, -1 - i}, {}});
        Move jm = m;
        jm.cell = jc;
        run(jm, fresh);
        for (int e = 0; e <= l.dimension(); ++e)
          for (int b = 0; b < l.count(e); ++b) {
            const CellId d{e, b};
            const CellId pc = find_tag(tags, {Tag::Type::Pair, c, d});
            fresh.clear();
            for (int i = 0; i < 3; ++i) fresh.push_back({Tag::Type::Pair, {i < 2 ? n : n - 1, -1 - i}, d});
            run(Move::elementary({pc, pair_split_plus(out.complex, tags, pc, n)}), fresh);
          }
        break;
      }
      case Move::Kind::Erase: {
        const int n = c.dim + 1;
        for (int e = l.dimension(); e >= 0; --e)
          for (int b = 0; b < l.count(e); ++b) {
            const CellId d{e, b};
            run(Move::erase(find_tag(tags, {Tag::Type::Pair, c, d})), {{Tag::Type::Pair, {n, -1}, d}});
          }
        run(Move::erase(find_tag(tags, {Tag::Type::K, c, {}}), m.labels.empty() ? std::string() : m.labels[0]),
            {{Tag::Type::K, {n, -1}, {}}});
        break;
      }
    }
    settle(tags, kstep);
    kc = std::move(kr.complex);
  }
  return out;
}

}  // namespace plcw
