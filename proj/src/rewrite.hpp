#pragma once

// Whole-complex rewrites shared by the moves. A substitution replaces some
// n-cells by copies of the interior of a ball decomposition R of an n-cell;
// a merge glues pairs of n-cells along a separating (n-1)-cell. Both recurse
// into the boundary models of every higher cell that meets the rewritten
// cells, so the same code runs at every level of the attachment data.

#include <memory>
#include <string>
#include <vector>

#include "plcw/complex.hpp"

namespace plcw::detail {

/// Ball decomposition R of an n-cell C. The first boundary.model.count(d)
/// cells of R in each dimension d form the boundary of C (same attachments);
/// the remaining cells are interior.
struct Replacement {
  Complex ball;
  SphereData boundary;  // model and stored cycle of C
  /// Per interior n-cell: its sign in the relative fundamental chain whose
  /// boundary is the stored cycle of C.
  std::vector<int> sigma;
  std::vector<std::vector<CellMap>> interior_identity;

  int dim() const { return ball.dimension(); }
  int boundary_count(int d) const { return d <= boundary.model.dimension() ? boundary.model.count(d) : 0; }
  int interior_count(int d) const { return ball.count(d) - boundary_count(d); }
};

/// Computes sigma and caches identity maps. Throws if R is not a ball
/// decomposition whose boundary chain is the stored cycle.
void prepare(Replacement& r);

struct Site {
  int cell = 0;  // an n-cell of the complex being rewritten
  CellMap psi;   // its boundary model -> boundary model of C
};

struct Substitution {
  int n = 0;
  Complex result;
  std::vector<int> cycle;
  std::vector<std::vector<int>> forward;
  std::vector<int> site_number;              // per old n-cell, -1 if kept
  std::vector<std::vector<int>> copy_base;   // [site][d] first copy index
  std::vector<std::vector<std::shared_ptr<Substitution>>> sub;  // [d][i], d > n

  int copy(int site, int d, int interior) const { return copy_base[site][d] + interior; }
};

Substitution substitute(const Complex& a, int n, const std::vector<Site>& sites, const Replacement& r,
                        const std::vector<int>& cycle);

struct Triple {
  int zero = 0, plus = 0, minus = 0;  // x0 of dim n-1, x+ and x- of dim n
};

struct Glue {
  Complex model;
  std::vector<int> cycle;
  int t_plus = 0, t_minus = 0;
  std::vector<std::vector<int>> from_plus;   // cell of model(x+) -> glued index, -1 for t+
  std::vector<std::vector<int>> from_minus;  // cell of model(x-) -> glued index, -1 for t-
  std::vector<std::vector<int>> minus_origin;  // glued cell -> cell of model(x-), -1 if from +
  std::vector<std::vector<int>> plus_origin;   // glued cell -> cell of model(x+), -1 if from -
};

struct Merge {
  int n = 0;
  Complex result;
  std::vector<int> cycle;
  std::vector<std::vector<int>> forward;
  std::vector<int> triple_of_plus;   // per old n-cell
  std::vector<int> triple_of_minus;  // per old n-cell
  std::vector<Triple> triples;
  std::vector<Glue> glue;
  int merged_base = 0;
  std::vector<std::vector<std::shared_ptr<Merge>>> sub;
};

/// The unique top cell of model(x) over `zero`; throws unless there is
/// exactly one.
int unique_top_over(const Complex& a, int x, int n, int zero);

Glue glue_models(const Complex& a, const Triple& t, int n);

Merge merge(const Complex& a, int n, const std::vector<Triple>& triples, const std::vector<int>& cycle);

}  // namespace plcw::detail
