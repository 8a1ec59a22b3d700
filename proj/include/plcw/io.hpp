#pragma once

// Text formats. See docs/formats.md for the grammar.
//
//   plcw 1             full document, recursive boundary models
//   plcw-shorthand 1   vertices, oriented edges, faces as edge words
//   plcw-moves 1       move scripts

#include <string>
#include <string_view>
#include <vector>

#include "plcw/moves.hpp"

namespace plcw {

/// Syntax error with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position prefix.
  const std::string& message() const { return message_; }

 private:
  int line_, column_;
  std::string message_;
};

/// Canonical full document. Cells appear by dimension, then index.
std::string print_complex(const Complex& k);

/// Parses either document kind. The result is not validated.
Complex parse_complex(std::string_view text);

struct ScriptRecord {
  Move::Kind kind = Move::Kind::Radial;
  /// Label or "d:i", resolved against the complex the move applies to.
  std::string cell;
  /// Elementary only: "@i" selects top cell i of the boundary model, a label
  /// or "d:i" selects every top cell over that ambient cell.
  std::vector<std::string> plus;
  std::vector<std::string> labels;
  int line = 0;
};

std::vector<ScriptRecord> parse_script(std::string_view text);
/// Writes moves as they apply to k in order, naming cells by label when the
/// label is unique.
std::string print_script(const Complex& k, const std::vector<Move>& moves);

CellId resolve_cell(const Complex& k, const std::string& ref);
Move resolve_move(const Complex& k, const ScriptRecord& record);
/// Resolves and applies records one at a time. Errors name the script line.
MoveResult run_script(const Complex& k, const std::vector<ScriptRecord>& records);

/// Report printed by `plcw info`: f-vector, Euler characteristic, integral
/// homology and the boundary multiset of every top cell.
std::string format_info(const Complex& k);

/// Hasse diagram of the face poset in Graphviz DOT.
std::string export_poset_dot(const Complex& k);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace plcw
