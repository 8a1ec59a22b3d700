#pragma once

#include "plcw/complex.hpp"

namespace plcw {

CellMap identity_map(const Complex& k);

/// outer o inner.
CellMap compose(const CellMap& outer, const CellMap& inner);

/// Inverse of a bijective map. Throws Error if the assignment is not a bijection
/// onto `target_counts` (per-dimension sizes of the target).
CellMap inverse(const CellMap& iso);

bool is_bijective(const CellMap& map, const Complex& target);

/// Drops every dimension above `dim`.
CellMap truncate(const CellMap& map, int dim);

/// The closed ball of a cell: its boundary model plus one top cell attached
/// by the identity.
Complex ball(const SphereData& sphere);

/// ball(pullback(k, c)) -> k, sending the top cell to c.
CellMap ball_map(const Complex& k, CellId c);

/// Extends an isomorphism of boundary models to the balls over them.
CellMap extend_to_ball(const CellMap& boundary_iso, const Complex& model);

/// Sub-complex spanned by the closure of `roots` in k. Returns the complex
/// and, per dimension, the original index of each kept cell.
struct Subcomplex {
  Complex complex;
  std::vector<std::vector<int>> origin;  // new index -> old index
  std::vector<std::vector<int>> to_sub;  // old index -> new index or -1

  CellMap inclusion(const Complex& k) const;
};

Subcomplex closure(const Complex& k, const std::vector<CellId>& roots);

}  // namespace plcw
