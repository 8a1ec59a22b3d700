#pragma once

// Orientations, incidence numbers, boundary multisets and integral homology.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plcw/complex.hpp"

namespace plcw {

using Integer = boost::multiprecision::cpp_int;

struct OrientedCell {
  CellId cell;
  int sign = 1;

  auto operator<=>(const OrientedCell&) const = default;
};

/// Multiset of oriented (n-1)-cells; one entry per top cell of the boundary model.
using BoundaryMultiset = std::vector<OrientedCell>;

/// +1 if `iso` carries the fundamental cycle of `from` to that of `to`, -1 if
/// it carries it to the negative.
int iso_sign(const SphereData& from, const SphereData& to, const CellMap& iso);

/// Solves d(x) = 0 over top cells of a closed model with x in {+1,-1}, anchored
/// at x[0] = +1. Returns nullopt when no such cycle exists.
std::optional<std::vector<int>> fundamental_cycle(const Complex& model);

int incidence_number(const Complex& k, OrientedCell c, OrientedCell d);

BoundaryMultiset boundary_multiset(const Complex& k, OrientedCell c);

/// Column j holds the boundary of the j-th n-cell as {row (n-1)-cell index -> coefficient}.
std::vector<std::map<int, int>> boundary_columns(const Complex& k, int n);

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Integer& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix&) const = default;
  bool is_zero() const;

  std::vector<CellId> row_labels;
  std::vector<CellId> col_labels;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

/// Rows: (n-1)-cells, columns: n-cells. Empty for n <= 0 or n > dim K.
IntegerMatrix chain_boundary_matrix(const Complex& k, int n);

struct SmithForm {
  std::vector<Integer> diagonal;  // d1 | d2 | ... , all positive
  IntegerMatrix left;             // unimodular U
  IntegerMatrix right;            // unimodular V, with U * M * V = diag
};

SmithForm smith_normal_form(const IntegerMatrix& m);

/// Nonzero Smith invariants of a sparse matrix given by columns.
std::vector<Integer> smith_invariants(int rows, const std::vector<std::map<int, int>>& columns);

struct HomologyGroup {
  int betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool operator==(const HomologyGroup&) const = default;
};

std::string to_string(const HomologyGroup& h);

/// H_0 .. H_dim over the integers.
std::vector<HomologyGroup> homology(const Complex& k);

/// True iff d_{n-1} d_n = 0 for every n.
bool boundary_squared_zero(const Complex& k);

/// Coherent orientation of the top cells of a pseudo-manifold: interior
/// codimension-one cells cancel. nullopt if none exists.
std::optional<std::vector<int>> orient_top_cells(const Complex& k);

struct BoundaryPairing {
  std::vector<CellId> interior;  // appear as F and -F
  std::vector<CellId> boundary;  // appear once
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// Classifies the (n-1)-cells of an oriented n-dimensional manifold
/// decomposition from the union of boundary multisets of its n-cells.
/// `orientation` gives the sign of each n-cell; when absent a coherent
/// orientation is computed.
BoundaryPairing boundary_pairing(const Complex& k, std::optional<std::vector<int>> orientation = std::nullopt);

}  // namespace plcw
