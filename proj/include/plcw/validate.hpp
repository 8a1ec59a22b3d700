#pragma once

#include <string>
#include <vector>

#include "plcw/complex.hpp"

namespace plcw {

struct ValidationIssue {
  std::string path;  // e.g. "2:0 > model 1:3"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  /// Largest boundary-model dimension for which sphere recognition is exact.
  int exact_sphere_dimension = 2;
  /// True when some boundary model of dimension > exact_sphere_dimension was
  /// accepted on Euler characteristic and homology alone.
  bool partial = false;

  bool ok() const { return issues.empty(); }
  std::string summary() const;
  void add(std::string path, std::string message) { issues.push_back({std::move(path), std::move(message)}); }
  void merge(const ValidationReport& other);
};

/// Re-checks every invariant of every cell, recursively through boundary models.
ValidationReport validate(const Complex& k);

/// Checks that `att` could be the attachment of a new cell of `k`.
ValidationReport check_attachment(const Complex& k, const Attachment& att);

/// Checks that a model is a valid decomposition of a sphere and that the
/// stored cycle is a fundamental cycle.
ValidationReport check_sphere(const SphereData& sphere);

/// Partial ball recognition: connected, pure, chi = 1, every codimension-one
/// cell used once or twice and the once-used ones closing up to a sphere.
/// Exact for dimension <= 2.
ValidationReport check_ball(const Complex& model);

/// Dimension preservation plus recursive compatibility of identifications.
/// With `bijective`, the map must also be an isomorphism.
ValidationReport check_map(const Complex& source, const Complex& target, const CellMap& map, bool bijective = false);

bool is_regular_cellular(const RegularMap& f);

}  // namespace plcw
