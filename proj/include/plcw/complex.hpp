#pragma once

// Combinatorial model of PLCW complexes.
//
// A complex is a graded table of cells. Every cell of positive dimension n
// carries an Attachment: a decomposition of the (n-1)-sphere (the boundary
// model) together with its stored fundamental cycle, and a regular cellular
// map from that model into the ambient complex. Regular maps carry, besides
// the cell assignment, an identification of each source cell's boundary model
// with the boundary model of its image, recursively. That recursive data is
// what pins down orientations and the way faces of a cell are glued together.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace plcw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CellId {
  int dim = 0;
  int index = 0;

  auto operator<=>(const CellId&) const = default;
};

std::string to_string(CellId id);

/// Cell-level data of a regular cellular map between two complexes.
///
/// assign[d][i] is the index of the d-cell hit by source cell (d, i).
/// ident[d][i] (d >= 1) identifies the boundary model of the source cell with
/// the boundary model of its image; ident[0] is always empty.
struct CellMap {
  std::vector<std::vector<int>> assign;
  std::vector<std::vector<CellMap>> ident;

  int dimension() const { return static_cast<int>(assign.size()) - 1; }
  int operator()(int dim, int index) const { return assign[dim][index]; }
  CellId operator()(CellId id) const { return {id.dim, assign[id.dim][id.index]}; }
  const CellMap& identification(CellId id) const { return ident[id.dim][id.index]; }

  bool operator==(const CellMap&) const = default;
};

struct Attachment;

struct Cell {
  std::string label;
  std::shared_ptr<const Attachment> attachment;  // null for vertices
};

using FVector = std::vector<std::int64_t>;

class Complex {
 public:
  Complex() = default;

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  int count(int dim) const;
  std::size_t size() const;
  bool empty() const { return cells_.empty(); }
  bool contains(CellId id) const;

  const Cell& cell(CellId id) const;
  const Attachment& attachment(CellId id) const;
  const std::string& label(CellId id) const { return cell(id).label; }
  std::optional<CellId> find(std::string_view label) const;
  /// The label when present, otherwise "d:i".
  std::string name(CellId id) const;

  /// All cells, ordered by dimension and then insertion order.
  std::vector<CellId> cells() const;

  FVector f_vector() const;
  std::int64_t euler_characteristic() const;

  CellId add_vertex(std::string label = {});
  /// Attaches a new cell after checking the attachment against this complex.
  CellId add_cell(Attachment att, std::string label = {});

  /// Appends without validation. Used by constructions and moves whose output
  /// is correct by construction (and covered by validate() in tests).
  CellId append(int dim, std::shared_ptr<const Attachment> att, std::string label = {});
  void set_label(CellId id, std::string label);

  bool operator==(const Complex& other) const;

 private:
  std::vector<std::vector<Cell>> cells_;
  std::unordered_map<std::string, CellId> labels_;
};

/// A PLCW decomposition of a sphere with its stored fundamental cycle:
/// cycle[i] is the coefficient (+1 or -1) of the i-th top-dimensional cell.
struct SphereData {
  Complex model;
  std::vector<int> cycle;

  bool operator==(const SphereData&) const = default;
};

struct Attachment {
  SphereData sphere;
  CellMap map;  // sphere.model -> ambient complex

  bool operator==(const Attachment&) const = default;
};

/// A regular cellular map with its endpoints.
struct RegularMap {
  Complex source;
  Complex target;
  CellMap map;
};

/// Sphere model of a cell of positive dimension (the stored pullback).
const SphereData& pullback(const Complex& k, CellId c);

/// Subcomplex of all cells of dimension <= k, attachments intact.
Complex skeleton(const Complex& k, int dim);

/// Cells in the closure of c other than c itself.
std::vector<CellId> faces(const Complex& k, CellId c);
/// Cells having c as a face.
std::vector<CellId> cofaces(const Complex& k, CellId c);

}  // namespace plcw
