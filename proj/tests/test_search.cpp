#include <doctest.h>

#include "corpus.hpp"
#include "plcw/isomorphism.hpp"
#include "plcw/search.hpp"
#include "plcw/validate.hpp"

using namespace plcw;

TEST_CASE("scripts apply in order and report the failing step") {
  const Complex p = ngon_disk(5);
  const std::vector<Move> script{Move::elementary({{2, 0}, {0, 1}}, "A", "B", "d"), Move::erase({1, 5})};
  const MoveResult r = apply_script(p, script);
  CHECK(r.trace.steps.size() == 2);
  CHECK(are_isomorphic(r.complex, p));
  CHECK(verify_script(p, script, p));
  CHECK_FALSE(verify_script(p, {script[0]}, p));
  try {
    apply_script(p, {script[0], Move::erase({1, 0})});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("step 2", 0) == 0);
  }
  CHECK_FALSE(verify_script(p, {Move::erase({1, 0})}, p));
}

TEST_CASE("search finds the disk-with-radius script") {
  const Complex disk = standard("one_cell_disk"), target = disk_with_radius();
  const SearchOutcome s = search_equivalence(disk, target, {6, 200000});
  REQUIRE(s.script);
  CHECK(s.script->size() <= 5);
  CHECK(verify_script(disk, *s.script, target));
  for (const Move& m : *s.script) CHECK(m.kind != Move::Kind::Radial);
}

TEST_CASE("search limits") {
  const Complex disk = standard("one_cell_disk"), target = disk_with_radius();
  // Four moves cannot add one vertex and one edge through a detour of erasures.
  SearchOutcome s = search_equivalence(disk, target, {4, 200000});
  CHECK_FALSE(s.script);
  CHECK_FALSE(s.budget_exhausted);
  s = search_equivalence(disk, disk, {3, 10});
  REQUIRE(s.script);
  CHECK(s.script->empty());
  // Different dimensions are never reached.
  CHECK_FALSE(search_equivalence(circle(2), disk, {3, 1000}).script);
  s = search_equivalence(ngon_disk(3), ngon_disk(6), {3, 2});
  CHECK_FALSE(s.script);
  CHECK(s.budget_exhausted);
}

TEST_CASE("a single split is found in one move") {
  const Complex p = ngon_disk(4);
  const Complex target = elementary_subdivide(p, {{2, 0}, {0, 1}}).complex;
  const SearchOutcome s = search_equivalence(p, target, {2, 10000});
  REQUIRE(s.script);
  CHECK(s.script->size() == 1);
}

TEST_CASE("transport through joins") {
  const Complex pent = ngon_disk(5);
  for (const Complex& l : {point("q"), segment(), circle(2)})
    for (const auto& split : enumerate_splits(pent, {2, 0})) {
      const Move m = Move::elementary(split);
      const Complex k2 = apply_move(pent, m).complex;
      const MoveResult t = transport_through_join(pent, {m}, l);
      CHECK(validate(t.complex).ok());
      CHECK(are_isomorphic(t.complex, join(k2, l)));
      CHECK(t.trace.only(Move::Kind::Elementary));
      const CellId c0 = apply_move(pent, m).trace.steps[0].created[2];
      const MoveResult back = transport_through_join(k2, {Move::erase(c0)}, l);
      CHECK(are_isomorphic(back.complex, join(pent, l)));
      CHECK(back.trace.only(Move::Kind::Erase));
    }
}

TEST_CASE("transport of a whole script") {
  const Complex disk = standard("one_cell_disk");
  const auto s = search_equivalence(disk, disk_with_radius(), {6, 200000});
  REQUIRE(s.script);
  for (const Complex& l : {point(), segment()}) {
    const MoveResult t = transport_through_join(disk, *s.script, l);
    CHECK(are_isomorphic(t.complex, join(disk_with_radius(), l)));
  }
}

TEST_CASE("splits inside higher cells transport") {
  for (const Complex& k : {simplex(2), ball_bihemisphere(3)})
    for (int d = 1; d <= k.dimension(); ++d)
      for (int i = 0; i < k.count(d); ++i)
        for (const auto& split : enumerate_splits(k, {d, i}, 2)) {
          const MoveResult t = transport_through_join(k, {Move::elementary(split)}, point());
          CHECK(are_isomorphic(t.complex, join(elementary_subdivide(k, split).complex, point())));
        }
}

TEST_CASE("radial moves do not transport") {
  CHECK_THROWS_AS(transport_through_join(ngon_disk(3), {Move::radial({2, 0})}, point()), Error);
}
