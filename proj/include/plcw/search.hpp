#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "plcw/moves.hpp"

namespace plcw {

/// Applies moves in order. Errors name the failing step (1-based).
MoveResult apply_script(const Complex& k, const std::vector<Move>& script);

/// True when the script applies and its result is isomorphic to `expected`.
bool verify_script(const Complex& k, const std::vector<Move>& script, const Complex& expected);

struct SearchOptions {
  int max_moves = 5;
  std::size_t max_states = 200000;
};

struct SearchOutcome {
  /// A shortest script of elementary subdivisions and erasures turning K into
  /// a complex isomorphic to L, if one was found within the budget. Absence
  /// never means that K and L are inequivalent.
  std::optional<std::vector<Move>> script;
  std::size_t states = 0;
  bool budget_exhausted = false;
};

SearchOutcome search_equivalence(const Complex& k, const Complex& l, const SearchOptions& options = {});

/// Replays elementary subdivisions and erasures of K on join(K, L): each move
/// on a cell C is followed (subdivision) or preceded (erasure) by the matching
/// move on every join cell C*D. Result complex is isomorphic to join(K', L).
MoveResult transport_through_join(const Complex& k, const std::vector<Move>& moves, const Complex& l);

}  // namespace plcw
