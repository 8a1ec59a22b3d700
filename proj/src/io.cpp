#include "plcw/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "plcw/algebra.hpp"
#include "plcw/constructions.hpp"

namespace plcw {

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column), message_(message) {}

namespace {

struct Token {
  enum class Kind { Word, String, Open, Close, OpenList, CloseList, End } kind;
  std::string text;
  int line, column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    Token t{Token::Kind::Word, {}, line, column};
    if (c == '{' || c == '}' || c == '[' || c == ']') {
      t.kind = c == '{' ? Token::Kind::Open
               : c == '}' ? Token::Kind::Close
               : c == '[' ? Token::Kind::OpenList
                          : Token::Kind::CloseList;
      t.text = c;
      advance();
    } else if (c == '"') {
      t.kind = Token::Kind::String;
      advance();
      while (true) {
        if (i >= text.size() || text[i] == '\n') throw ParseError(t.line, t.column, "unterminated string");
        if (text[i] == '"') break;
        if (text[i] == '\\') {
          advance();
          if (i >= text.size()) throw ParseError(t.line, t.column, "unterminated string");
        }
        t.text += text[i];
        advance();
      }
      advance();
    } else {
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             std::string_view("{}[]\"#").find(text[i]) == std::string_view::npos) {
        t.text += text[i];
        advance();
      }
    }
    out.push_back(std::move(t));
  }
  out.push_back({Token::Kind::End, {}, line, column});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End:
      return "end of input";
    case Token::Kind::String:
      return "string \"" + t.text + "\"";
    default:
      return "'" + t.text + "'";
  }
}

std::optional<int> to_int(const std::string& s) {
  int v = 0;
  const char* b = s.data();
  const char* e = b + s.size();
  if (b != e && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || p != e || b == e) return std::nullopt;
  return v;
}

std::optional<CellId> to_cell_id(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return std::nullopt;
  auto d = to_int(s.substr(0, colon)), i = to_int(s.substr(colon + 1));
  if (!d || !i || *d < 0 || *i < 0) return std::nullopt;
  return CellId{*d, *i};
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void print_map(std::ostream& os, const CellMap& m, const std::string& indent) {
  os << "{\n";
  for (std::size_t d = 0; d < m.assign.size(); ++d) {
    os << indent << "  assign " << d << " [";
    for (int v : m.assign[d]) os << ' ' << v;
    os << " ]\n";
  }
  for (std::size_t d = 1; d < m.ident.size(); ++d)
    for (std::size_t i = 0; i < m.ident[d].size(); ++i) {
      os << indent << "  ident " << d << ':' << i << ' ';
      print_map(os, m.ident[d][i], indent + "  ");
    }
  os << indent << "}\n";
}

void print_cells(std::ostream& os, const Complex& k, const std::string& indent) {
  for (CellId c : k.cells()) {
    os << indent << "cell " << to_string(c);
    if (!k.label(c).empty()) os << ' ' << quote(k.label(c));
    if (c.dim == 0) {
      os << '\n';
      continue;
    }
    const Attachment& att = k.attachment(c);
    os << " {\n" << indent << "  model {\n";
    print_cells(os, att.sphere.model, indent + "    ");
    os << indent << "  }\n" << indent << "  cycle";
    for (int v : att.sphere.cycle) os << ' ' << v;
    os << '\n' << indent << "  map ";
    print_map(os, att.map, indent + "  ");
    os << indent << "}\n";
  }
}

}  // namespace

std::string print_complex(const Complex& k) {
  std::ostringstream os;
  os << "plcw 1\n";
  print_cells(os, k, "");
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message);
  }
  const Token& expect(Token::Kind kind, const char* what) {
    const Token& t = next();
    if (t.kind != kind) fail(t, std::string("expected ") + what + ", found " + describe(t));
    return t;
  }
  void keyword(const char* word) {
    const Token& t = next();
    if (t.kind != Token::Kind::Word || t.text != word)
      fail(t, std::string("expected '") + word + "', found " + describe(t));
  }
  bool at_word(const char* word) const { return peek().kind == Token::Kind::Word && peek().text == word; }
  int integer() {
    const Token& t = expect(Token::Kind::Word, "an integer");
    auto v = to_int(t.text);
    if (!v) fail(t, "expected an integer, found " + describe(t));
    return *v;
  }
  CellId cell_id() {
    const Token& t = expect(Token::Kind::Word, "a cell id d:i");
    auto v = to_cell_id(t.text);
    if (!v) fail(t, "expected a cell id d:i, found " + describe(t));
    return *v;
  }

  // Lines of a line-oriented document, header excluded.
  std::vector<std::vector<Token>> lines() {
    std::vector<std::vector<Token>> out;
    while (peek().kind != Token::Kind::End) {
      const int line = peek().line;
      std::vector<Token> row;
      while (peek().kind != Token::Kind::End && peek().line == line) row.push_back(next());
      out.push_back(std::move(row));
    }
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

CellMap parse_map(Parser& p) {
  p.expect(Token::Kind::Open, "'{'");
  CellMap m;
  while (p.at_word("assign")) {
    const Token& at = p.next();
    const int d = p.integer();
    if (d != static_cast<int>(m.assign.size())) p.fail(at, "assign rows must be listed by dimension from 0");
    p.expect(Token::Kind::OpenList, "'['");
    std::vector<int> row;
    while (p.peek().kind != Token::Kind::CloseList) row.push_back(p.integer());
    p.next();
    m.assign.push_back(std::move(row));
  }
  m.ident.resize(m.assign.size());
  while (p.at_word("ident")) {
    const Token& at = p.next();
    const CellId c = p.cell_id();
    if (c.dim < 1 || c.dim >= static_cast<int>(m.ident.size()) ||
        c.index != static_cast<int>(m.ident[c.dim].size()) ||
        std::any_of(m.ident.begin() + c.dim + 1, m.ident.end(), [](const auto& row) { return !row.empty(); }))
      p.fail(at, "identifications must be listed in cell order, dimension 1 and up");
    m.ident[c.dim].push_back(parse_map(p));
  }
  p.expect(Token::Kind::Close, "'}'");
  return m;
}

Complex parse_cells(Parser& p, bool nested) {
  Complex k;
  while (p.at_word("cell")) {
    const Token& at = p.next();
    const CellId c = p.cell_id();
    if (c.dim < k.dimension() || c.dim > k.dimension() + 1 || c.index != (c.dim > k.dimension() ? 0 : k.count(c.dim)))
      p.fail(at, "cells must be listed by dimension, then index; expected " +
                     to_string({c.dim, c.dim > k.dimension() ? 0 : k.count(c.dim)}) + " or the next dimension");
    std::string label;
    if (p.peek().kind == Token::Kind::String) label = p.next().text;
    if (!label.empty() && k.find(label)) p.fail(at, "duplicate label \"" + label + "\"");
    if (c.dim == 0) {
      if (p.peek().kind == Token::Kind::Open) p.fail(p.peek(), "vertices take no attachment block");
      k.append(0, nullptr, label);
      continue;
    }
    p.expect(Token::Kind::Open, "'{'");
    Attachment att;
    p.keyword("model");
    p.expect(Token::Kind::Open, "'{'");
    att.sphere.model = parse_cells(p, true);
    p.keyword("cycle");
    while (p.peek().kind == Token::Kind::Word && to_int(p.peek().text)) att.sphere.cycle.push_back(p.integer());
    p.keyword("map");
    att.map = parse_map(p);
    p.expect(Token::Kind::Close, "'}'");
    if (att.sphere.model.dimension() != c.dim - 1)
      p.fail(at, "boundary model of a " + std::to_string(c.dim) + "-cell must have dimension " +
                     std::to_string(c.dim - 1));
    if (static_cast<int>(att.sphere.cycle.size()) != att.sphere.model.count(c.dim - 1))
      p.fail(at, "cycle needs one coefficient per top cell of the model");
    if (att.map.dimension() != c.dim - 1) p.fail(at, "map needs one assign row per model dimension");
    for (int d = 0; d < c.dim; ++d)
      for (int v : att.map.assign[d])
        if (v < 0 || v >= k.count(d) || static_cast<int>(att.map.assign[d].size()) != att.sphere.model.count(d))
          p.fail(at, "assign row " + std::to_string(d) + " does not match the model and the cells above");
    k.append(c.dim, std::make_shared<const Attachment>(std::move(att)), label);
  }
  if (nested)
    p.expect(Token::Kind::Close, "'}'");
  else if (p.peek().kind != Token::Kind::End)
    p.fail(p.peek(), "expected 'cell' or end of input, found " + describe(p.peek()));
  return k;
}

Complex parse_shorthand(Parser& p) {
  PolygonPresentation pres;
  std::map<std::string, int> edges;
  std::set<std::string> vertices, names;
  auto fresh = [&](const Token& t) {
    if (t.kind == Token::Kind::Open || t.kind == Token::Kind::Close || t.text.empty() || t.text == ":")
      p.fail(t, "expected a name, found " + describe(t));
    if (!names.insert(t.text).second) p.fail(t, "duplicate name \"" + t.text + "\"");
    return t.text;
  };
  for (auto& row : p.lines()) {
    const Token& head = row.front();
    if (head.text == "vertex" || head.text == "vertices") {
      if (row.size() < 2) p.fail(head, "vertex needs at least one name");
      for (std::size_t i = 1; i < row.size(); ++i) {
        pres.vertices.push_back(fresh(row[i]));
        vertices.insert(row[i].text);
      }
    } else if (head.text == "edge") {
      if (row.size() != 4) p.fail(head, "expected: edge NAME TAIL HEAD");
      for (int i : {2, 3})
        if (!vertices.count(row[i].text)) p.fail(row[i], "unknown vertex \"" + row[i].text + "\"");
      edges[row[1].text] = static_cast<int>(pres.edges.size());
      pres.edges.push_back({fresh(row[1]), row[2].text, row[3].text});
    } else if (head.text == "face") {
      if (row.size() < 4 || row[2].text != ":") p.fail(head, "expected: face NAME : WORD");
      PolygonPresentation::Face f{fresh(row[1]), {}};
      std::vector<std::pair<std::string, std::string>> ends;
      for (std::size_t i = 3; i < row.size(); ++i) {
        std::string sym = row[i].text;
        int sign = 1;
        if (sym.size() > 1 && sym[0] == '-') {
          sym = sym.substr(1);
          sign = -1;
        } else if (sym.size() > 3 && sym.ends_with("^-1")) {
          sym.resize(sym.size() - 3);
          sign = -1;
        }
        auto e = edges.find(sym);
        if (e == edges.end()) p.fail(row[i], "unknown edge \"" + sym + "\"");
        const auto& edge = pres.edges[e->second];
        ends.push_back(sign > 0 ? std::pair{edge.tail, edge.head} : std::pair{edge.head, edge.tail});
        f.word.push_back({sym, sign});
      }
      for (std::size_t i = 0; i < ends.size(); ++i) {
        const std::size_t j = (i + 1) % ends.size();
        if (ends[i].second != ends[j].first)
          p.fail(row[3 + j], "word is not composable: " + row[3 + i].text + " ends at " + ends[i].second + " but " +
                                 row[3 + j].text + " starts at " + ends[j].first);
      }
      pres.faces.push_back(std::move(f));
    } else {
      p.fail(head, "expected vertex, edge or face, found " + describe(head));
    }
  }
  return from_polygon_presentation(pres);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  Parser p(text);
  const Token head = p.expect(Token::Kind::Word, "a document header");
  const Token version = p.next();
  if (head.text != "plcw" && head.text != "plcw-shorthand")
    p.fail(head, "expected header 'plcw 1' or 'plcw-shorthand 1', found " + describe(head));
  if (version.text != "1") p.fail(version, "unsupported format version " + describe(version));
  if (head.text == "plcw") return parse_cells(p, false);
  return parse_shorthand(p);
}

std::vector<ScriptRecord> parse_script(std::string_view text) {
  Parser p(text);
  const Token head = p.next();
  const Token version = p.next();
  if (head.text != "plcw-moves") p.fail(head, "expected header 'plcw-moves 1', found " + describe(head));
  if (version.text != "1") p.fail(version, "unsupported format version " + describe(version));
  std::vector<ScriptRecord> out;
  for (auto& row : p.lines()) {
    ScriptRecord r;
    r.line = row.front().line;
    const std::string& kind = row.front().text;
    if (kind == "radial")
      r.kind = Move::Kind::Radial;
    else if (kind == "elementary")
      r.kind = Move::Kind::Elementary;
    else if (kind == "erase")
      r.kind = Move::Kind::Erase;
    else
      p.fail(row.front(), "expected radial, elementary or erase, found " + describe(row.front()));
    if (row.size() < 2) p.fail(row.front(), "missing target cell");
    for (const Token& t : row)
      if (t.kind != Token::Kind::Word && t.kind != Token::Kind::String) p.fail(t, "unexpected " + describe(t));
    r.cell = row[1].text;
    std::size_t i = 2;
    if (r.kind == Move::Kind::Elementary) {
      if (i >= row.size() || row[i].text != "plus") p.fail(i < row.size() ? row[i] : row.back(), "expected 'plus'");
      for (++i; i < row.size() && !(row[i].kind == Token::Kind::Word && row[i].text == "labels"); ++i)
        r.plus.push_back(row[i].text);
      if (r.plus.empty()) p.fail(row[1], "the plus half needs at least one cell");
      if (i < row.size()) ++i;
      const std::size_t max_labels = 3;
      for (; i < row.size(); ++i) {
        if (r.labels.size() == max_labels) p.fail(row[i], "at most three labels: C+ C- C0");
        r.labels.push_back(row[i].text);
      }
    } else {
      for (; i < row.size(); ++i) {
        if (!r.labels.empty()) p.fail(row[i], "at most one label");
        r.labels.push_back(row[i].text);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

CellId resolve_cell(const Complex& k, const std::string& ref) {
  if (auto c = k.find(ref)) return *c;
  if (auto c = to_cell_id(ref); c && k.contains(*c)) return *c;
  throw Error("unknown cell \"" + ref + "\"");
}

Move resolve_move(const Complex& k, const ScriptRecord& r) {
  const CellId c = resolve_cell(k, r.cell);
  auto label = [&](std::size_t i) { return i < r.labels.size() ? r.labels[i] : std::string(); };
  switch (r.kind) {
    case Move::Kind::Radial:
      return Move::radial(c, label(0));
    case Move::Kind::Erase:
      return Move::erase(c, label(0));
    case Move::Kind::Elementary:
      break;
  }
  if (c.dim == 0) throw Error("cannot split the vertex " + k.name(c));
  const Attachment& att = k.attachment(c);
  const int tops = att.sphere.model.count(c.dim - 1);
  std::set<int> plus;
  for (const std::string& ref : r.plus) {
    if (ref.size() > 1 && ref[0] == '@') {
      auto i = to_int(ref.substr(1));
      if (!i || *i < 0 || *i >= tops)
        throw Error("boundary model of " + k.name(c) + " has no top cell " + ref);
      plus.insert(*i);
      continue;
    }
    const CellId target = resolve_cell(k, ref);
    bool hit = false;
    if (target.dim == c.dim - 1)
      for (int i = 0; i < tops; ++i)
        if (att.map.assign[c.dim - 1][i] == target.index) plus.insert(i), hit = true;
    if (!hit) throw Error(k.name(target) + " is not a top cell in the boundary of " + k.name(c));
  }
  return Move::elementary({c, {plus.begin(), plus.end()}}, label(0), label(1), label(2));
}

MoveResult run_script(const Complex& k, const std::vector<ScriptRecord>& records) {
  MoveResult out{k, {}};
  for (const ScriptRecord& r : records) {
    try {
      MoveResult step = apply_move(out.complex, resolve_move(out.complex, r));
      out.complex = std::move(step.complex);
      out.trace.append(step.trace);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw Error("line " + std::to_string(r.line) + ": " + e.what());
    }
  }
  return out;
}

namespace {

std::string script_name(const Complex& k, CellId c) {
  const std::string& l = k.label(c);
  const bool plain = !l.empty() && !to_cell_id(l) && l[0] != '@' && l != "plus" && l != "labels" &&
                     l.find_first_of(" \t\n\"#{}[]") == std::string::npos;
  return plain ? l : to_string(c);
}

}  // namespace

std::string print_script(const Complex& k, const std::vector<Move>& moves) {
  std::ostringstream os;
  os << "plcw-moves 1\n";
  Complex cur = k;
  for (const Move& m : moves) {
    os << to_string(m.kind) << ' ' << script_name(cur, m.cell);
    if (m.kind == Move::Kind::Elementary) {
      os << " plus";
      for (int i : m.plus) os << " @" << i;
    }
    const bool any = std::any_of(m.labels.begin(), m.labels.end(), [](const auto& s) { return !s.empty(); });
    if (any && m.kind == Move::Kind::Elementary) os << " labels";
    if (any)
      for (const auto& l : m.labels) os << ' ' << (l.empty() ? "\"\"" : quote(l));
    os << '\n';
    cur = apply_move(cur, m).complex;
  }
  return os.str();
}

std::string format_info(const Complex& k) {
  std::ostringstream os;
  const FVector f = k.f_vector();
  os << "f = (";
  for (std::size_t d = 0; d < f.size(); ++d) os << (d ? ", " : "") << f[d];
  os << ")\nchi = " << k.euler_characteristic() << '\n';
  const auto h = homology(k);
  for (std::size_t d = 0; d < h.size(); ++d) os << 'H' << d << " = " << to_string(h[d]) << '\n';
  const int top = k.dimension();
  if (top >= 1)
    for (int i = 0; i < k.count(top); ++i) {
      os << "boundary " << k.name({top, i}) << " = {";
      bool first = true;
      for (const OrientedCell& o : boundary_multiset(k, {{top, i}, 1})) {
        os << (first ? "" : ", ") << (o.sign > 0 ? '+' : '-') << k.name(o.cell);
        first = false;
      }
      os << "}\n";
    }
  return os.str();
}

std::string export_poset_dot(const Complex& k) {
  std::ostringstream os;
  os << "digraph face_poset {\n  rankdir=BT;\n";
  auto node = [](CellId c) { return "c" + std::to_string(c.dim) + "_" + std::to_string(c.index); };
  for (CellId c : k.cells())
    os << "  " << node(c) << " [label=" << quote(k.name(c)) << ", dim=" << c.dim << "];\n";
  for (CellId c : k.cells()) {
    if (c.dim == 0) continue;
    const auto& row = k.attachment(c).map.assign[c.dim - 1];
    for (int f : std::set<int>(row.begin(), row.end()))
      os << "  " << node({c.dim - 1, f}) << " -> " << node(c) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path);
}

}  // namespace plcw
