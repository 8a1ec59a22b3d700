#include "plcw/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "plcw/isomorphism.hpp"

namespace plcw {

MoveResult apply_script(const Complex& k, const std::vector<Move>& script) {
  MoveResult out{k, {}};
  for (std::size_t i = 0; i < script.size(); ++i) {
    try {
      MoveResult step = apply_move(out.complex, script[i]);
      out.complex = std::move(step.complex);
      out.trace.append(step.trace);
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i + 1) + " (" + to_string(script[i].kind) + "): " + e.what());
    }
  }
  return out;
}

bool verify_script(const Complex& k, const std::vector<Move>& script, const Complex& expected) {
  try {
    return are_isomorphic(apply_script(k, script).complex, expected);
  } catch (const Error&) {
    return false;
  }
}

namespace {

// Every move changes (f[n-1], f[n]) by (+1, +1) or (-1, -1); the net number
// of moves per dimension is forced by the f-vectors.
int lower_bound_moves(const FVector& from, const FVector& to) {
  constexpr int impossible = 1 << 20;
  if (from.size() != to.size()) return impossible;
  const int top = static_cast<int>(from.size()) - 1;
  std::int64_t carry = 0, total = 0;
  for (int n = 1; n <= top; ++n) {
    carry = (to[n - 1] - from[n - 1]) - carry;
    total += std::llabs(carry);
  }
  if (top >= 0 && carry != to[top] - from[top]) return impossible;
  return static_cast<int>(std::min<std::int64_t>(total, impossible));
}

std::vector<Move> candidate_moves(const Complex& k) {
  std::vector<Move> out;
  for (int d = 1; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i)
      for (auto& split : enumerate_splits(k, {d, i})) out.push_back(Move::elementary(split));
  for (int d = 0; d < k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i)
      if (check_erase(k, {d, i}).ok()) out.push_back(Move::erase({d, i}));
  return out;
}

}  // namespace

SearchOutcome search_equivalence(const Complex& k, const Complex& l, const SearchOptions& options) {
  SearchOutcome outcome;
  const std::uint64_t target_hash = invariant_hash(l);
  auto is_target = [&](const Complex& c) { return invariant_hash(c) == target_hash && are_isomorphic(c, l); };
  if (is_target(k)) {
    outcome.script = std::vector<Move>{};
    outcome.states = 1;
    return outcome;
  }
  struct Node {
    Complex complex;
    int parent;
    Move move;
    int depth;
  };
  std::vector<Node> nodes{{k, -1, {}, 0}};
  std::unordered_map<std::uint64_t, std::vector<int>> seen{{invariant_hash(k), {0}}};
  const FVector goal = l.f_vector();
  auto path = [&](int last, const Move& m) {
    std::vector<Move> script{m};
    for (int at = last; nodes[at].parent >= 0; at = nodes[at].parent) script.push_back(nodes[at].move);
    std::reverse(script.begin(), script.end());
    return script;
  };
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    if (nodes[q].depth >= options.max_moves) continue;
    const int remaining = options.max_moves - nodes[q].depth - 1;
    const Complex current = nodes[q].complex;
    for (const Move& m : candidate_moves(current)) {
      MoveResult next;
      try {
        next = apply_move(current, m);
      } catch (const Error&) {
        continue;
      }
      if (lower_bound_moves(next.complex.f_vector(), goal) > remaining) continue;
      if (is_target(next.complex)) {
        outcome.script = path(static_cast<int>(q), m);
        outcome.states = nodes.size();
        return outcome;
      }
      const std::uint64_t h = invariant_hash(next.complex);
      auto& bucket = seen[h];
      if (std::any_of(bucket.begin(), bucket.end(),
                      [&](int idx) { return are_isomorphic(nodes[idx].complex, next.complex); }))
        continue;
      if (nodes.size() >= options.max_states) {
        outcome.budget_exhausted = true;
        outcome.states = nodes.size();
        return outcome;
      }
      bucket.push_back(static_cast<int>(nodes.size()));
      nodes.push_back({std::move(next.complex), static_cast<int>(q), m, nodes[q].depth + 1});
    }
  }
  outcome.states = nodes.size();
  return outcome;
}

}  // namespace plcw
