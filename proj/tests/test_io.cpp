#include <doctest.h>

#include "corpus.hpp"
#include "plcw/algebra.hpp"
#include "plcw/io.hpp"
#include "plcw/isomorphism.hpp"
#include "plcw/search.hpp"
#include "plcw/validate.hpp"

using namespace plcw;

namespace {

std::string data(const std::string& name) { return read_file(std::string(PLCW_DATA_DIR) + "/" + name); }

int parse_error_line(const std::string& text) {
  try {
    parse_complex(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("print and parse round trip") {
  for (const auto& e : test::corpus()) {
    CAPTURE(e.name);
    const std::string text = print_complex(e.complex);
    const Complex back = parse_complex(text);
    CHECK(back == e.complex);
    CHECK(print_complex(back) == text);
    CHECK(validate(back).ok());
  }
}

TEST_CASE("the cylinder document is stable") {
  const std::string text = data("cylinder.plcw");
  const Complex k = parse_complex(text);
  CHECK(print_complex(k) == text);
  CHECK(k.f_vector() == FVector{4, 8, 5, 1});
  CHECK(k == cylinder_s1xIxI());
}

TEST_CASE("shorthand documents") {
  const Complex torus = parse_complex("plcw-shorthand 1\nvertex p\nedge a p p\nedge b p p\nface T : a b -a -b\n");
  CHECK(validate(torus).ok());
  CHECK(are_isomorphic(torus, torus_square_word()));
  CHECK(homology(torus)[1].betti == 2);
  const Complex klein = parse_complex("plcw-shorthand 1\nvertex p\nedge a p p\nedge b p p\nface K : a b a^-1 b\n");
  CHECK(klein.f_vector() == torus.f_vector());
  CHECK_FALSE(are_isomorphic(klein, torus));
  CHECK(are_isomorphic(parse_complex(data("disk_radius.plcw")), disk_with_radius()));
  CHECK(are_isomorphic(parse_complex(data("annulus_radius.plcw")), annulus_with_radius()));
  CHECK(are_isomorphic(parse_complex(data("two_globe.plcw")), two_globe()));
  CHECK(are_isomorphic(parse_complex(data("pentagon.plcw")), ngon_disk(5)));
  CHECK(are_isomorphic(parse_complex(data("disk1.plcw")), standard("one_cell_disk")));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_complex(data("bad_word.plcw"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() == 12);
    CHECK(e.message().find("not composable") != std::string::npos);
  }
  CHECK(parse_error_line("plcw 2\n") == 1);
  CHECK(parse_error_line("nonsense 1\n") == 1);
  CHECK(parse_error_line("plcw 1\ncell 0:0\ncell 0:2\n") == 3);
  CHECK(parse_error_line("plcw 1\ncell 0:0 \"v\n") == 2);
  CHECK(parse_error_line("plcw 1\ncell 0:0\ncell 1:0 {\n  model {\n    cell 0:0\n  }\n  cycle 1\n") == 8);
  CHECK(parse_error_line("plcw-shorthand 1\nvertex v\nedge a v w\n") == 3);
  CHECK(parse_error_line("plcw-shorthand 1\nvertex v\nedge a v v\nface F : b\n") == 4);
  CHECK(parse_error_line("plcw-shorthand 1\nvertex v v\n") == 2);
}

TEST_CASE("semantic errors are left to validation") {
  // A loop whose boundary model has two vertices of the same sign.
  const std::string text =
      "plcw 1\ncell 0:0\ncell 1:0 {\n  model {\n    cell 0:0\n    cell 0:1\n  }\n  cycle 1 1\n"
      "  map {\n    assign 0 [ 0 0 ]\n  }\n}\n";
  const Complex k = parse_complex(text);
  CHECK_FALSE(validate(k).ok());
}

TEST_CASE("move scripts") {
  const auto records = parse_script(data("disk_radius.moves"));
  REQUIRE(records.size() == 5);
  CHECK(records[0].kind == Move::Kind::Elementary);
  CHECK(records[0].plus == std::vector<std::string>{"@0"});
  CHECK(records[0].labels == std::vector<std::string>{"b1", "b2", "u"});
  CHECK(records[4].kind == Move::Kind::Erase);
  const Complex disk = parse_complex(data("disk1.plcw"));
  const MoveResult r = run_script(disk, records);
  CHECK(are_isomorphic(r.complex, disk_with_radius()));
  CHECK(r.trace.steps.size() == 5);

  const Complex pent = parse_complex(data("pentagon.plcw"));
  const Complex chord = run_script(pent, parse_script(data("pentagon_chord.moves"))).complex;
  CHECK(chord.f_vector() == FVector{5, 6, 2});
  REQUIRE(chord.find("d"));
  CHECK(pullback(chord, *chord.find("P1")).model.count(1) == 3);

  CHECK_THROWS_AS(parse_script("plcw-moves 1\nsplit F\n"), ParseError);
  CHECK_THROWS_AS(parse_script("plcw-moves 1\nelementary F labels x\n"), ParseError);
  try {
    run_script(pent, parse_script("plcw-moves 1\nradial P\nerase nowhere\n"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("line 3", 0) == 0);
  }
}

TEST_CASE("printed scripts replay") {
  const Complex disk = parse_complex(data("disk1.plcw")), target = disk_with_radius();
  const auto s = search_equivalence(disk, target, {6, 200000});
  REQUIRE(s.script);
  const std::string text = print_script(disk, *s.script);
  CHECK(are_isomorphic(run_script(disk, parse_script(text)).complex, target));
  const std::vector<Move> labeled{Move::radial({2, 0}, "centre point")};
  CHECK(run_script(disk, parse_script(print_script(disk, labeled))).complex.find("centre point"));
}

TEST_CASE("info report matches the algebra") {
  const Complex k = cylinder_s1xIxI();
  const std::string info = format_info(k);
  std::istringstream in(info);
  std::string line;
  std::getline(in, line);
  CHECK(line == "f = (4, 8, 5, 1)");
  std::getline(in, line);
  CHECK(line == "chi = 0");
  const auto h = homology(k);
  for (std::size_t d = 0; d < h.size(); ++d) {
    std::getline(in, line);
    CHECK(line == "H" + std::to_string(d) + " = " + to_string(h[d]));
  }
  std::getline(in, line);
  std::string expected = "boundary " + k.name({3, 0}) + " = {";
  for (const auto& o : boundary_multiset(k, {{3, 0}, 1}))
    expected += (expected.back() == '{' ? "" : ", ") + std::string(o.sign > 0 ? "+" : "-") + k.name(o.cell);
  CHECK(line == expected + "}");
  CHECK_FALSE(std::getline(in, line));
  CHECK(format_info(disk_with_radius()).find("boundary F = {+b, +a, -a}") != std::string::npos);
}

TEST_CASE("face poset export") {
  const std::string dot = export_poset_dot(ngon_disk(3));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 9);
  // Repeated faces give one edge.
  const std::string loop = export_poset_dot(standard("one_cell_disk"));
  CHECK(std::count(loop.begin(), loop.end(), '>') == 2);
}
