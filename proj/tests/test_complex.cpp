#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "plcw/maps.hpp"
#include "plcw/validate.hpp"

using namespace plcw;

namespace {

// Copy of k with the attachment of c replaced.
Complex with_attachment(const Complex& k, CellId c, const Attachment& att) {
  Complex out;
  for (CellId id : k.cells())
    out.append(id.dim, id == c ? std::make_shared<const Attachment>(att) : k.cell(id).attachment, k.label(id));
  return out;
}

}  // namespace

TEST_CASE("cell ids and labels") {
  const Complex k = disk_with_radius();
  CHECK(k.dimension() == 2);
  CHECK(k.f_vector() == FVector{2, 2, 1});
  CHECK(k.size() == 5);
  REQUIRE(k.find("a"));
  CHECK(k.find("a")->dim == 1);
  CHECK_FALSE(k.find("zzz"));
  CHECK(to_string(CellId{2, 0}) == "2:0");
  CHECK(k.name(*k.find("F")) == "F");
  CHECK_THROWS_AS(k.cell({3, 0}), Error);
  Complex unlabeled;
  const CellId v = unlabeled.add_vertex();
  CHECK(unlabeled.name(v) == "0:0");
}

TEST_CASE("duplicate labels are rejected") {
  Complex k;
  k.add_vertex("v");
  CHECK_THROWS_AS(k.add_vertex("v"), Error);
}

TEST_CASE("skeleton, faces and cofaces of the pentagon") {
  const Complex p = ngon_disk(5);
  CHECK(skeleton(p, 1).f_vector() == FVector{5, 5});
  CHECK(faces(p, {2, 0}).size() == 10);
  CHECK(cofaces(p, {0, 0}).size() == 3);
  const Complex cyl = cylinder_s1xIxI();
  CHECK(skeleton(cyl, 1).f_vector() == FVector{4, 8});
}

TEST_CASE("boundary models are the stored pullbacks") {
  const Complex p = ngon_disk(5);
  CHECK(pullback(p, {2, 0}).model.f_vector() == FVector{5, 5});
  const Complex ann = annulus_with_radius();
  const Attachment& att = ann.attachment(*ann.find("F"));
  CHECK(att.sphere.model.f_vector() == FVector{4, 4});
  const auto& edges = att.map.assign[1];
  CHECK(std::count(edges.begin(), edges.end(), ann.find("a")->index) == 2);
}

TEST_CASE("every corpus complex validates") {
  for (const auto& e : test::corpus()) {
    CAPTURE(e.name);
    const ValidationReport r = validate(e.complex);
    CHECK(r.ok());
    CHECK(test::alternating_sum(e.complex.f_vector()) == e.complex.euler_characteristic());
  }
}

TEST_CASE("broken mutants are rejected") {
  const Complex k = ngon_disk(3);
  const CellId face{2, 0};
  Attachment att = k.attachment(face);

  SUBCASE("cycle that is not a cycle") {
    att.sphere.cycle[1] = -att.sphere.cycle[1];
    CHECK_FALSE(validate(with_attachment(k, face, att)).ok());
  }
  SUBCASE("dangling cell id") {
    att.map.assign[1][0] = 7;
    CHECK_FALSE(validate(with_attachment(k, face, att)).ok());
  }
  SUBCASE("boundary model that is not a sphere") {
    Attachment seg = k.attachment(face);
    seg.sphere.model = segment();
    CHECK_FALSE(validate(with_attachment(k, face, seg)).ok());
  }
  SUBCASE("non-composable attaching map") {
    // Route the first edge of the boundary circle onto an edge whose ends do not match.
    const Complex sq = ngon_disk(4);
    Attachment a4 = sq.attachment(face);
    std::swap(a4.map.assign[1][0], a4.map.assign[1][1]);
    CHECK_FALSE(validate(with_attachment(sq, face, a4)).ok());
  }
  SUBCASE("add_cell checks before attaching") {
    Complex partial = skeleton(k, 1);
    att.map.assign[0][0] = 5;
    CHECK_THROWS_AS(partial.add_cell(att), Error);
  }
}

TEST_CASE("identity, composition and inverse of maps") {
  const Complex k = ngon_disk(4);
  const CellMap id = identity_map(k);
  CHECK(compose(id, id) == id);
  CHECK(inverse(id) == id);
  CHECK(is_bijective(id, k));
  CHECK(check_map(k, k, id, true).ok());
  const Subcomplex sub = closure(k, {{1, 0}});
  CHECK(sub.complex.f_vector() == FVector{2, 1});
  CHECK(check_map(sub.complex, k, sub.inclusion(k)).ok());
  CHECK(ball(pullback(k, {2, 0})).f_vector() == FVector{4, 4, 1});
  CHECK(check_map(ball(pullback(k, {2, 0})), k, ball_map(k, {2, 0})).ok());
}
