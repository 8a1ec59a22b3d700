#pragma once

#include <string>
#include <vector>

#include "plcw/complex.hpp"
#include "plcw/validate.hpp"

namespace plcw {

/// Partition of the top cells of the boundary model of an n-cell into two
/// hemispheres. Top cells not listed in `plus` form P-.
struct EquatorSplit {
  CellId cell;
  std::vector<int> plus;
};

struct Move {
  enum class Kind { Radial, Elementary, Erase };

  Kind kind = Kind::Radial;
  /// Radial: the subdivided cell. Elementary: the split cell. Erase: C0.
  CellId cell;
  /// Elementary only: top cells of the boundary model in P+.
  std::vector<int> plus;
  /// Optional labels. Radial: {apex}. Elementary: {C+, C-, C0}. Erase: {merged cell}.
  std::vector<std::string> labels;

  static Move radial(CellId c, std::string apex = {});
  static Move elementary(const EquatorSplit& split, std::string plus_label = {}, std::string minus_label = {},
                         std::string zero_label = {});
  static Move erase(CellId c0, std::string merged_label = {});
};

std::string to_string(Move::Kind kind);

/// What a move did to cell ids.
struct MoveStep {
  Move move;
  /// forward[d][i]: index of old cell (d, i) after the move, -1 if removed.
  std::vector<std::vector<int>> forward;
  /// New cells of the result. Radial: apex first. Elementary: C+, C-, C0.
  /// Erase: the merged cell.
  std::vector<CellId> created;
};

struct MoveTrace {
  std::vector<MoveStep> steps;

  std::vector<Move> moves() const;
  bool only(Move::Kind kind) const;
  void append(const MoveTrace& other);
};

struct MoveResult {
  Complex complex;
  MoveTrace trace;
};

ValidationReport check_split(const Complex& k, const EquatorSplit& split);

MoveResult radial_subdivide(const Complex& k, CellId c, const std::string& apex_label = {});
MoveResult elementary_subdivide(const Complex& k, const EquatorSplit& split, const std::string& plus_label = {},
                                const std::string& minus_label = {}, const std::string& zero_label = {});
MoveResult erase(const Complex& k, CellId c0, const std::string& merged_label = {});

/// Erase preconditions without performing the move; empty report if erasable.
ValidationReport check_erase(const Complex& k, CellId c0);

MoveResult apply_move(const Complex& k, const Move& m);

/// All elementary splits of cell c whose equator and halves validate. P+ always
/// contains top cell 0, so each unordered partition appears once.
std::vector<EquatorSplit> enumerate_splits(const Complex& k, CellId c, std::size_t limit = 4096);

/// Two passes of radial subdivision of all cells of positive dimension, in
/// increasing dimension.
MoveResult triangulate(const Complex& k);

/// Every k-cell has k+1 distinct vertices, a boundary model isomorphic to the
/// boundary of a k-simplex and an injective attaching map; distinct cells have
/// distinct vertex sets.
bool is_simplicial(const Complex& k);

/// Builds a simplicial complex from vertex sets (each listed set and all its
/// faces become cells). Vertices are 0..n-1.
Complex from_simplices(int vertex_count, const std::vector<std::vector<int>>& simplices,
                       const std::vector<std::string>& vertex_labels = {});

/// Vertex sets of all cells, by dimension then index. Requires is_simplicial.
std::vector<std::vector<std::vector<int>>> vertex_sets(const Complex& k);

/// Starring the simplex c of a simplicial complex.
Complex stellar_subdivide(const Complex& t, CellId c);

}  // namespace plcw
