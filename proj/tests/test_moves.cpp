#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "plcw/algebra.hpp"
#include "plcw/isomorphism.hpp"
#include "plcw/validate.hpp"

using namespace plcw;

TEST_CASE("radial subdivision counts") {
  for (const auto& e : test::corpus()) {
    const Complex& k = e.complex;
    for (int d = 1; d <= k.dimension(); ++d)
      for (int i = 0; i < k.count(d); ++i) {
        CAPTURE(e.name);
        CAPTURE(d);
        const MoveResult r = radial_subdivide(k, {d, i});
        CHECK(r.complex.f_vector() == test::radial_counts(k.f_vector(), d, pullback(k, {d, i}).model.f_vector()));
        CHECK(validate(r.complex).ok());
        REQUIRE(r.trace.steps.size() == 1);
        CHECK(r.trace.steps[0].created.front().dim == 0);
      }
  }
}

TEST_CASE("radial subdivision names the apex") {
  const Complex p = ngon_disk(5);
  const Complex r = radial_subdivide(p, *p.find("F")).complex;
  CHECK(r.find("oF"));
  CHECK(radial_subdivide(p, *p.find("F"), "center").complex.find("center"));
  CHECK_THROWS_AS(radial_subdivide(p, {0, 0}), Error);
}

TEST_CASE("pentagon chord split") {
  const Complex p = ngon_disk(5);
  const auto splits = enumerate_splits(p, {2, 0});
  CHECK(splits.size() == 10);
  for (const auto& s : splits) {
    const MoveResult r = elementary_subdivide(p, s, "P", "Q", "d");
    CHECK(r.complex.f_vector() == FVector{5, 6, 2});
    CHECK(validate(r.complex).ok());
    const CellId d = *r.complex.find("d");
    CHECK(d.dim == 1);
    const CellId c0 = r.trace.steps[0].created[2];
    CHECK(c0 == d);
    const Complex back = erase(r.complex, d).complex;
    CHECK(are_isomorphic(back, p));
    CHECK(back.f_vector() == FVector{5, 5, 1});
  }
}

TEST_CASE("edge split adds a vertex") {
  const Complex t = simplex(2);
  const MoveResult r = elementary_subdivide(t, {{1, 0}, {0}});
  CHECK(r.complex.f_vector() == FVector{4, 4, 1});
  CHECK(validate(r.complex).ok());
  CHECK(pullback(r.complex, {2, 0}).model.f_vector() == FVector{4, 4});
}

TEST_CASE("splits of three-cells") {
  const Complex b = ball_bihemisphere(3);
  const auto splits = enumerate_splits(b, {3, 0});
  REQUIRE_FALSE(splits.empty());
  for (const auto& s : splits) {
    const MoveResult r = elementary_subdivide(b, s);
    CHECK(r.complex.f_vector() == FVector{2, 2, 3, 2});
    CHECK(validate(r.complex).ok());
    CHECK(are_isomorphic(erase(r.complex, r.trace.steps[0].created[2]).complex, b));
  }
}

TEST_CASE("invalid splits are rejected") {
  const Complex p = ngon_disk(5);
  CHECK_FALSE(check_split(p, {{2, 0}, {}}).ok());
  CHECK_FALSE(check_split(p, {{2, 0}, {0, 1, 2, 3, 4}}).ok());
  // Two non-adjacent edges do not form a half-ball.
  CHECK_FALSE(check_split(p, {{2, 0}, {0, 2}}).ok());
  CHECK_THROWS_AS(elementary_subdivide(p, {{2, 0}, {0, 2}}), Error);
  CHECK(check_split(p, {{2, 0}, {0, 1}}).ok());
}

TEST_CASE("erase preconditions") {
  const Complex k = disk_with_radius();
  // The radius meets the face twice.
  CHECK_FALSE(check_erase(k, *k.find("a")).ok());
  CHECK_THROWS_AS(erase(k, *k.find("a")), Error);
  // A boundary edge has a single coface.
  CHECK_FALSE(check_erase(ngon_disk(3), {1, 0}).ok());
  // Top cells cannot be erased.
  CHECK_FALSE(check_erase(k, {2, 0}).ok());
}

TEST_CASE("erasing an edge of the two-globe folds a disk onto a sphere") {
  const Complex g = two_globe();
  REQUIRE(check_erase(g, *g.find("a")).ok());
  const Complex r = erase(g, *g.find("a")).complex;
  CHECK(r.f_vector() == FVector{2, 1, 1});
  CHECK(validate(r).ok());
  CHECK(homology(r) == homology(g));
}

TEST_CASE("erasing a vertex merges edges") {
  const Complex c = circle(3);
  const MoveResult r = erase(c, {0, 0}, "joined");
  CHECK(r.complex.f_vector() == FVector{2, 2});
  CHECK(r.complex.find("joined"));
  CHECK(validate(r.complex).ok());
}

TEST_CASE("moves preserve homology") {
  for (const auto& e : test::corpus()) {
    CAPTURE(e.name);
    const auto h = homology(e.complex);
    const Complex& k = e.complex;
    for (int d = 1; d <= k.dimension(); ++d)
      for (int i = 0; i < k.count(d); ++i)
        for (const auto& s : enumerate_splits(k, {d, i}, 3)) CHECK(homology(elementary_subdivide(k, s).complex) == h);
  }
}

TEST_CASE("triangulation") {
  for (const auto& e : test::corpus()) {
    CAPTURE(e.name);
    const MoveResult t = triangulate(e.complex);
    CHECK(is_simplicial(t.complex));
    CHECK(t.trace.only(Move::Kind::Radial));
    CHECK(validate(t.complex).ok());
  }
  CHECK(is_simplicial(ngon_disk(3)));
  CHECK_FALSE(is_simplicial(ngon_disk(4)));
  CHECK(is_simplicial(simplex(3)));
  CHECK_FALSE(is_simplicial(disk_with_radius()));
}

TEST_CASE("simplicial complexes from vertex sets") {
  const Complex s = from_simplices(4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(s.f_vector() == FVector{4, 5, 2});
  CHECK(is_simplicial(s));
  CHECK(validate(s).ok());
  CHECK(are_isomorphic(from_simplices(4, {{0, 1, 2, 3}}), simplex(3)));
  CHECK_THROWS_AS(from_simplices(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(from_simplices(2, {{0, 5}}), Error);
}

TEST_CASE("stellar subdivision") {
  const Complex t = simplex(2);
  CHECK(stellar_subdivide(t, {1, 0}).f_vector() == FVector{4, 5, 2});
  CHECK(are_isomorphic(stellar_subdivide(t, {2, 0}), radial_subdivide(t, {2, 0}).complex));
  CHECK(are_isomorphic(stellar_subdivide(t, {0, 0}), t));
  const Complex tet = simplex(3);
  const Complex s = stellar_subdivide(tet, {1, 0});
  CHECK(s.f_vector() == FVector{5, 9, 7, 2});
  CHECK(is_simplicial(s));
  CHECK_THROWS_AS(stellar_subdivide(ngon_disk(4), {2, 0}), Error);
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(ngon_disk(4), ngon_disk(4)));
  CHECK_FALSE(are_isomorphic(ngon_disk(4), ngon_disk(5)));
  CHECK_FALSE(are_isomorphic(standard("one_cell_disk"), disk_with_radius()));
  CHECK(are_isomorphic(two_globe(), sphere_bihemisphere(2)));
  const auto iso = find_isomorphism(cylinder_s1xIxI(), cylinder_s1xIxI());
  REQUIRE(iso);
  CHECK(check_map(cylinder_s1xIxI(), cylinder_s1xIxI(), *iso, true).ok());
  CHECK(invariant_hash(ngon_disk(4)) == invariant_hash(radial_subdivide(ngon_disk(3), {1, 0}).complex));
  CHECK(are_isomorphic(ngon_disk(4), radial_subdivide(ngon_disk(3), {1, 0}).complex));
}
