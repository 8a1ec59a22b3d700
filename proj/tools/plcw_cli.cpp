#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "plcw/constructions.hpp"
#include "plcw/io.hpp"
#include "plcw/isomorphism.hpp"
#include "plcw/moves.hpp"
#include "plcw/search.hpp"
#include "plcw/validate.hpp"

using namespace plcw;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

// Invalid input documents exit with kFailure; unreadable ones with kUsage.
struct Invalid : Error {
  using Error::Error;
};
struct Unreadable : Error {
  using Error::Error;
};

bool verbose = false;

void note(const std::string& s) {
  if (verbose) std::cerr << s << '\n';
}

template <class F>
auto read_with(const std::string& path, F parse) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw Unreadable(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  } catch (const Error& e) {
    throw Unreadable(e.what());
  }
}

Complex parse_file(const std::string& path) {
  return read_with(path, [](const std::string& text) { return parse_complex(text); });
}

std::vector<ScriptRecord> script_file(const std::string& path) {
  return read_with(path, [](const std::string& text) { return parse_script(text); });
}

Complex load(const std::string& path) {
  Complex k = parse_file(path);
  const ValidationReport report = validate(k);
  if (!report.ok()) throw Invalid(path + ": invalid complex\n" + report.summary());
  if (report.partial) note(path + ": sphere checks above dimension 2 used homology only");
  return k;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plcw: build, check and rewrite PLCW complexes"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", verbose, "Diagnostics on stderr");

  std::string file, file2, script, expected, out, name;
  int max_moves = 5;
  std::size_t max_states = 200000;

  auto* validate_cmd = app.add_subcommand("validate", "Check every invariant of a complex");
  validate_cmd->add_option("FILE", file)->required();

  auto* info = app.add_subcommand("info", "f-vector, Euler characteristic, homology, boundary multisets");
  info->add_option("FILE", file)->required();

  auto* apply = app.add_subcommand("apply", "Apply a move script");
  apply->add_option("FILE", file)->required();
  apply->add_option("SCRIPT", script)->required();
  apply->add_option("-o,--output", out, "Write the result here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check that a script turns FILE into EXPECTED up to isomorphism");
  verify->add_option("FILE", file)->required();
  verify->add_option("SCRIPT", script)->required();
  verify->add_option("EXPECTED", expected)->required();

  auto* tri = app.add_subcommand("triangulate", "Two rounds of radial subdivision");
  tri->add_option("FILE", file)->required();
  tri->add_option("-o,--output", out);

  auto* prod = app.add_subcommand("product", "Cartesian product A x B");
  prod->add_option("A", file)->required();
  prod->add_option("B", file2)->required();
  prod->add_option("-o,--output", out);

  auto* join_cmd = app.add_subcommand("join", "Join A * B");
  join_cmd->add_option("A", file)->required();
  join_cmd->add_option("B", file2)->required();
  join_cmd->add_option("-o,--output", out);

  auto* cone_cmd = app.add_subcommand("cone", "Cone over A");
  cone_cmd->add_option("A", file)->required();
  cone_cmd->add_option("-o,--output", out);

  auto* equiv = app.add_subcommand("equiv", "Search for elementary subdivisions and erasures from A to B");
  equiv->add_option("A", file)->required();
  equiv->add_option("B", file2)->required();
  equiv->add_option("--max-moves", max_moves, "Longest script considered")->capture_default_str();
  equiv->add_option("--max-states", max_states, "Search budget")->capture_default_str();

  auto* standard_cmd = app.add_subcommand("standard", "Print a library complex");
  standard_cmd->add_option("NAME", name, "e.g. cylinder_s1xIxI, simplex:3, ngon_disk:5")->required();
  standard_cmd->add_option("-o,--output", out);

  auto* poset = app.add_subcommand("export-poset", "Face poset as Graphviz DOT");
  poset->add_option("FILE", file)->required();
  poset->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*validate_cmd) {
      const Complex k = parse_file(file);
      const ValidationReport report = validate(k);
      if (!report.ok()) {
        std::cerr << file << ": invalid\n" << report.summary() << '\n';
        return kFailure;
      }
      std::cout << "valid" << (report.partial ? " (spheres above dimension 2 checked by homology only)" : "") << '\n';
    } else if (*info) {
      std::cout << format_info(load(file));
    } else if (*apply) {
      const Complex k = load(file);
      MoveResult r = run_script(k, script_file(script));
      note("applied " + std::to_string(r.trace.steps.size()) + " moves");
      emit(print_complex(r.complex), out);
    } else if (*verify) {
      const Complex k = load(file), e = load(expected);
      const Complex got = run_script(k, script_file(script)).complex;
      if (!are_isomorphic(got, e)) {
        std::cerr << "result is not isomorphic to " << expected << '\n';
        return kFailure;
      }
      std::cout << "ok\n";
    } else if (*tri) {
      MoveResult r = triangulate(load(file));
      note(std::to_string(r.trace.steps.size()) + " radial subdivisions");
      emit(print_complex(r.complex), out);
    } else if (*prod) {
      emit(print_complex(product(load(file), load(file2))), out);
    } else if (*join_cmd) {
      emit(print_complex(join(load(file), load(file2))), out);
    } else if (*cone_cmd) {
      emit(print_complex(cone(load(file))), out);
    } else if (*equiv) {
      const Complex a = load(file), b = load(file2);
      const auto start = std::chrono::steady_clock::now();
      const SearchOutcome found = search_equivalence(a, b, {max_moves, max_states});
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      note(std::to_string(found.states) + " states, " + std::to_string(ms) + " ms");
      if (!found.script) {
        std::cerr << "no script of at most " << max_moves << " moves found"
                  << (found.budget_exhausted ? " (state budget exhausted)" : "")
                  << "; this does not show that the complexes are inequivalent\n";
        return kFailure;
      }
      std::cout << print_script(a, *found.script);
    } else if (*standard_cmd) {
      Complex k;
      try {
        k = standard(name);
      } catch (const Error& e) {
        throw Unreadable(e.what());
      }
      emit(print_complex(k), out);
    } else if (*poset) {
      emit(export_poset_dot(load(file)), out);
    }
  } catch (const Unreadable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Invalid& e) {
    std::cerr << e.what() << '\n';
    return kFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return 0;
}
