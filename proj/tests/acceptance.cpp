// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include "corpus.hpp"
#include "oracle.hpp"
#include "plcw/algebra.hpp"
#include "plcw/isomorphism.hpp"
#include "plcw/search.hpp"
#include "plcw/validate.hpp"

using namespace plcw;
using namespace plcw::test;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::string fstr(const FVector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

std::vector<HomologyGroup> betti_groups(std::vector<int> b) {
  std::vector<HomologyGroup> out;
  for (int x : b) out.push_back({x, {}});
  return out;
}

// Every move of every kind on every eligible cell, at most `per_cell` splits each.
void for_each_move(const Complex& k, std::size_t per_cell, const std::function<void(const Move&, const MoveResult&)>& f) {
  for (int d = 1; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i) {
      const Move r = Move::radial({d, i});
      f(r, apply_move(k, r));
      for (const auto& s : enumerate_splits(k, {d, i}, per_cell)) {
        const Move m = Move::elementary(s);
        f(m, apply_move(k, m));
      }
    }
  for (int d = 0; d < k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i)
      if (check_erase(k, {d, i}).ok()) {
        const Move m = Move::erase({d, i});
        f(m, apply_move(k, m));
      }
}

Outcome example_corpus() {
  Outcome o;
  const Complex cyl = cylinder_s1xIxI();
  o.require(validate(cyl).ok(), "cylinder validates");
  o.require(cyl.f_vector() == FVector{4, 8, 5, 1}, "cylinder f = (4,8,5,1), got " + fstr(cyl.f_vector()));
  o.require(alternating_sum(cyl.f_vector()) == 0 && cyl.euler_characteristic() == 0, "cylinder chi = 0");
  for (const Complex& k : {annulus_with_radius(), disk_with_radius(), two_globe(), rectangle(), ngon_disk(5)})
    o.require(validate(k).ok(), "example complex validates");
  o.require(two_globe().f_vector() == FVector{2, 2, 2}, "two-globe f = (2,2,2)");

  const Complex rect = rectangle(), ann = annulus_with_radius();
  auto at = [&](const Complex& k, const char* l) { return k.find(l)->index; };
  std::vector<std::vector<int>> assign(3);
  for (const char* v : {"a1", "a2", "b1", "b2"}) assign[0].push_back(-1);
  assign[0][at(rect, "a1")] = assign[0][at(rect, "a2")] = at(ann, "v");
  assign[0][at(rect, "b1")] = assign[0][at(rect, "b2")] = at(ann, "w");
  assign[1].assign(4, -1);
  assign[1][at(rect, "bottom")] = at(ann, "b");
  assign[1][at(rect, "right")] = at(ann, "a");
  assign[1][at(rect, "top")] = at(ann, "c");
  assign[1][at(rect, "left")] = at(ann, "a");
  assign[2] = {at(ann, "F")};
  const auto map = complete_regular_map(rect, ann, assign);
  o.require(map && is_regular_cellular({rect, ann, *map}), "rectangle maps regularly onto the annulus");

  const Complex pent = ngon_disk(5);
  const Complex radial = radial_subdivide(pent, {2, 0}).complex;
  o.require(validate(radial).ok(), "pentagon radial subdivision validates");
  const Complex ann_radial = radial_subdivide(ann, {2, 0}).complex;
  o.require(validate(ann_radial).ok() && ann_radial.euler_characteristic() == 0, "annulus radial subdivision");
  const Complex tet = simplex(3);
  const Complex tet_edge = radial_subdivide(tet, {1, 0}).complex;
  o.require(validate(tet_edge).ok(), "tetrahedron edge subdivision validates");
  const auto chords = enumerate_splits(pent, {2, 0});
  for (const auto& s : chords) o.require(validate(elementary_subdivide(pent, s).complex).ok(), "pentagon chord split");
  o.detail << "cylinder f = " << fstr(cyl.f_vector()) << ", chi = " << cyl.euler_characteristic() << "; "
           << 10 + chords.size() << " example complexes valid";
  return o;
}

Outcome boundary_multiset_example() {
  Outcome o;
  const Complex k = disk_with_radius();
  const CellId c = *k.find("F"), a = *k.find("a"), b = *k.find("b");
  BoundaryMultiset m = boundary_multiset(k, {c, 1});
  std::sort(m.begin(), m.end());
  BoundaryMultiset expected{{a, 1}, {a, -1}, {b, 1}};
  BoundaryMultiset flipped{{a, -1}, {a, 1}, {b, -1}};
  std::sort(expected.begin(), expected.end());
  std::sort(flipped.begin(), flipped.end());
  o.require(m == expected || m == flipped, "boundary multiset is {a, -a, b}");
  const int ea = incidence_number(k, {c, 1}, {a, 1}), eb = incidence_number(k, {c, 1}, {b, 1});
  o.require(ea == 0, "eps(C, a) = 0");
  o.require(std::abs(eb) == 1, "|eps(C, b)| = 1");
  o.detail << "multiset size " << m.size() << ", eps(C,a) = " << ea << ", eps(C,b) = " << eb;
  return o;
}

Outcome boundary_squared() {
  Outcome o;
  int checks = 0;
  for (const auto& e : corpus()) {
    o.require(boundary_squared_zero(e.complex), e.name);
    ++checks;
    for_each_move(e.complex, 6, [&](const Move& m, const MoveResult& r) {
      o.require(boundary_squared_zero(r.complex), e.name + " after " + to_string(m.kind));
      ++checks;
    });
  }
  o.require(checks >= 200, "at least 200 checks");
  o.detail << checks << " checks";
  return o;
}

Outcome move_invariance() {
  Outcome o;
  int checks = 0;
  for (const auto& e : corpus()) {
    const auto h = homology(e.complex);
    const auto chi = e.complex.euler_characteristic();
    for_each_move(e.complex, 4, [&](const Move& m, const MoveResult& r) {
      o.require(homology(r.complex) == h && r.complex.euler_characteristic() == chi,
                e.name + " " + to_string(m.kind));
      ++checks;
    });
    const Complex t = triangulate(e.complex).complex;
    o.require(homology(t) == h && t.euler_characteristic() == chi, e.name + " triangulate");
    o.require(betti_groups(simplicial_betti(t)) == h, e.name + " simplicial oracle");
    ++checks;
  }
  const Complex torus = torus_square_word();
  const auto expected = betti_groups({1, 2, 1});
  o.require(homology(torus) == expected, "torus homology (Z, Z^2, Z)");
  o.require(homology(triangulate(torus).complex) == expected, "triangulated torus homology");
  o.detail << checks << " moves, torus " << to_string(homology(torus)[1]) << " in degree 1";
  return o;
}

Outcome split_erase_roundtrip() {
  Outcome o;
  int checks = 0;
  std::vector<Complex> disks;
  for (int k = 1; k <= 6; ++k) disks.push_back(ngon_disk(k));
  disks.push_back(disk_with_radius());
  for (const Complex& k : disks)
    for (int d = 1; d <= k.dimension(); ++d)
      for (int i = 0; i < k.count(d); ++i)
        for (const auto& s : enumerate_splits(k, {d, i})) {
          const MoveResult split = elementary_subdivide(k, s);
          const CellId c0 = split.trace.steps.front().created[2];
          o.require(are_isomorphic(erase(split.complex, c0).complex, k), "split then erase");
          ++checks;
        }
  o.detail << checks << " splits";
  return o;
}

Outcome radial_counts_and_joins() {
  Outcome o;
  const Complex pent = ngon_disk(5);
  const FVector after = radial_subdivide(pent, {2, 0}).complex.f_vector();
  o.require(after == FVector{6, 10, 5}, "pentagon (6,10,5), got " + fstr(after));
  o.require(after == radial_counts(pent.f_vector(), 2, {5, 5}), "radial count formula");
  int pairs = 0;
  std::vector<Entry> small;
  for (auto& e : corpus())
    if (e.complex.dimension() <= 2) small.push_back(e);
  for (const auto& a : small) {
    o.require(cone(a.complex).f_vector() == join_counts(a.complex.f_vector(), {1}), "cone " + a.name);
    for (const auto& b : small) {
      const Complex j = join(a.complex, b.complex);
      o.require(j.f_vector() == join_counts(a.complex.f_vector(), b.complex.f_vector()), "join " + a.name + " " + b.name);
      o.require(product(a.complex, b.complex).f_vector() == product_counts(a.complex.f_vector(), b.complex.f_vector()),
                "product " + a.name + " " + b.name);
      ++pairs;
    }
  }
  o.detail << "pentagon -> " << fstr(after) << "; " << pairs << " join/product pairs";
  return o;
}

Outcome elementary_witness() {
  Outcome o;
  const Complex disk = ngon_disk(1), target = disk_with_radius();
  const SearchOutcome s = search_equivalence(disk, target, {6, 200000});
  o.require(s.script.has_value(), "script found");
  if (s.script) {
    o.require(s.script->size() <= 5, "length <= 5");
    o.require(verify_script(disk, *s.script, target), "script replays to the disk with radius");
    o.detail << "script of " << s.script->size() << " moves, " << s.states << " states";
  }
  return o;
}

Outcome join_transport() {
  Outcome o;
  const Complex pent = ngon_disk(5), p = point("q");
  int checks = 0;
  for (const auto& s : enumerate_splits(pent, {2, 0})) {
    const Move m = Move::elementary(s);
    const Complex k2 = apply_move(pent, m).complex;
    const MoveResult t = transport_through_join(pent, {m}, p);
    o.require(validate(t.complex).ok(), "transported complex validates");
    o.require(are_isomorphic(t.complex, join(k2, p)), "transport matches join(K', point)");
    ++checks;
  }
  o.detail << checks << " chord splits";
  return o;
}

Outcome manifold_pairing() {
  Outcome o;
  struct Case {
    std::string name;
    Complex k;
    std::size_t interior, boundary;
  };
  for (auto& c : std::vector<Case>{{"cylinder", cylinder_s1xIxI(), 1, 4},
                                    {"torus", torus_square_word(), 2, 0},
                                    {"3-ball", ball_bihemisphere(3), 0, 2}}) {
    const int n = c.k.dimension();
    std::vector<int> occurrences(c.k.count(n - 1), 0);
    for (int i = 0; i < c.k.count(n); ++i)
      for (int f : c.k.attachment({n, i}).map.assign[n - 1]) ++occurrences[f];
    const auto orientation = orient_top_cells(c.k);
    o.require(orientation.has_value(), c.name + " orientable");
    std::vector<int> signed_sum(c.k.count(n - 1), 0);
    if (orientation)
      for (int i = 0; i < c.k.count(n); ++i)
        for (const auto& oc : boundary_multiset(c.k, {{n, i}, (*orientation)[i]})) signed_sum[oc.cell.index] += oc.sign;
    const BoundaryPairing p = boundary_pairing(c.k);
    o.require(p.ok(), c.name + " pairing");
    o.require(p.interior.size() == c.interior && p.boundary.size() == c.boundary, c.name + " counts");
    for (CellId f : p.interior) o.require(occurrences[f.index] == 2 && signed_sum[f.index] == 0, c.name + " interior");
    for (CellId f : p.boundary)
      o.require(occurrences[f.index] == 1 && std::abs(signed_sum[f.index]) == 1, c.name + " boundary");
    o.detail << c.name << " " << p.interior.size() << "+" << p.boundary.size() << " ";
  }
  return o;
}

Outcome triangulation() {
  Outcome o;
  int checks = 0;
  for (const auto& e : corpus()) {
    const MoveResult t = triangulate(e.complex);
    o.require(is_simplicial(t.complex), e.name + " simplicial");
    o.require(t.trace.only(Move::Kind::Radial), e.name + " radial only");
    ++checks;
  }
  o.detail << checks << " complexes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example corpus", example_corpus},
      {"boundary multiset", boundary_multiset_example},
      {"boundary squared zero", boundary_squared},
      {"move invariance", move_invariance},
      {"split/erase round trip", split_erase_roundtrip},
      {"radial, cone and join counts", radial_counts_and_joins},
      {"elementary equivalence witness", elementary_witness},
      {"join transport", join_transport},
      {"manifold pairing", manifold_pairing},
      {"triangulation", triangulation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail.str()
              << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
