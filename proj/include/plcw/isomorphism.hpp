#pragma once

#include <cstdint>
#include <optional>

#include "plcw/complex.hpp"

namespace plcw {

/// Backtracking search for an isomorphism a -> b (labels are ignored).
/// Cells are matched in a connectivity-driven order with per-cell signature
/// refinement; identifications are searched model by model. Deterministic.
std::optional<CellMap> find_isomorphism(const Complex& a, const Complex& b);

inline bool are_isomorphic(const Complex& a, const Complex& b) { return find_isomorphism(a, b).has_value(); }

/// Turns a bare cell assignment source -> target into a regular cellular map by
/// searching for compatible identifications. nullopt if none exist.
std::optional<CellMap> complete_regular_map(const Complex& source, const Complex& target,
                                            const std::vector<std::vector<int>>& assign);

/// All isomorphisms of boundary models model(x) -> model(y) compatible with a
/// map `outer` (defined at least below dim x) from the ambient complex of x to
/// that of y.
std::vector<CellMap> compatible_model_isos(const Complex& a, CellId x, const Complex& b, CellId y,
                                           const CellMap& outer);

/// Isomorphism invariant, equal for isomorphic complexes.
std::uint64_t invariant_hash(const Complex& k);

}  // namespace plcw
