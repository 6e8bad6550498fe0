#include "dmaxsat/circuit_io.hpp"

#include <charconv>
#include <cstdint>
#include <optional>
#include <vector>

namespace dmaxsat {
namespace {

struct Token {
  enum class Kind { Open, Close, Atom, End } kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    if (pos_ >= text_.size()) return {Token::Kind::End, {}, line_, column_};
    const std::size_t line = line_;
    const std::size_t column = column_;
    const char c = text_[pos_];
    if (c == '(' || c == ')') {
      advance();
      return {c == '(' ? Token::Kind::Open : Token::Kind::Close, text_.substr(pos_ - 1, 1), line,
              column};
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) advance();
    return {Token::Kind::Atom, text_.substr(start, pos_ - start), line, column};
  }

 private:
  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::optional<std::uint32_t> parse_u32(std::string_view s) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

class CircuitParser {
 public:
  explicit CircuitParser(std::string_view text) : lexer_(text) { bump(); }

  Formula parse() {
    expect(Token::Kind::Open, "expected '(scope N)' header");
    if (tok_.kind != Token::Kind::Atom || tok_.text != "scope") fail("expected 'scope'");
    bump();
    if (tok_.kind != Token::Kind::Atom) fail("expected scope width");
    auto width = parse_u32(tok_.text);
    if (!width) fail("scope width must be a nonnegative integer");
    scope_ = *width;
    bump();
    expect(Token::Kind::Close, "expected ')' after scope width");
    Formula f = expr();
    if (tok_.kind != Token::Kind::End) fail("trailing input after expression");
    return f.with_scope(scope_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, tok_.line, tok_.column);
  }

  void bump() { tok_ = lexer_.next(); }

  void expect(Token::Kind kind, const char* what) {
    if (tok_.kind != kind) fail(what);
    bump();
  }

  Formula atom() {
    const std::string_view t = tok_.text;
    if (t == "true" || t == "false") {
      bump();
      return Formula::constant(t == "true");
    }
    if (t.size() >= 2 && t[0] == 'x') {
      auto index = parse_u32(t.substr(1));
      if (!index || *index == 0) fail("bad variable '" + std::string(t) + "'");
      if (*index > scope_) {
        throw ScopeError("line " + std::to_string(tok_.line) + ", column " +
                         std::to_string(tok_.column) + ": variable x" + std::to_string(*index) +
                         " exceeds declared scope " + std::to_string(scope_));
      }
      bump();
      return Formula::var(*index);
    }
    fail("unknown atom '" + std::string(t) + "'");
  }

  Formula expr() {
    if (tok_.kind == Token::Kind::Atom) return atom();
    if (tok_.kind != Token::Kind::Open) fail("expected expression");
    bump();
    if (tok_.kind != Token::Kind::Atom) fail("expected operator");
    const std::string_view op = tok_.text;
    if (op != "not" && op != "and" && op != "or") fail("unknown operator '" + std::string(op) + "'");
    bump();
    std::vector<Formula> args;
    while (tok_.kind != Token::Kind::Close) {
      if (tok_.kind == Token::Kind::End) fail("unterminated expression");
      args.push_back(expr());
    }
    if (op == "not") {
      if (args.size() != 1) fail("'not' takes exactly one operand");
      bump();
      return !args.front();
    }
    if (args.size() < 2) fail("'" + std::string(op) + "' needs at least two operands");
    bump();
    return op == "and" ? conjunction(args) : disjunction(args);
  }

  Lexer lexer_;
  Token tok_{};
  std::uint32_t scope_ = 0;
};

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::True:
      out += "true";
      return;
    case NodeKind::False:
      out += "false";
      return;
    case NodeKind::Var:
      out += 'x';
      out += std::to_string(n.var);
      return;
    case NodeKind::Not:
      out += "(not ";
      print_node(*n.left, out);
      out += ')';
      return;
    case NodeKind::And:
    case NodeKind::Or:
      out += n.kind == NodeKind::And ? "(and " : "(or ";
      print_node(*n.left, out);
      out += ' ';
      print_node(*n.right, out);
      out += ')';
      return;
  }
}

}  // namespace

Formula parse_circuit(std::string_view text) { return CircuitParser(text).parse(); }

std::string print_circuit(const Formula& f) {
  std::string out = "(scope " + std::to_string(f.scope()) + ")\n";
  print_node(f.root(), out);
  out += '\n';
  return out;
}

Formula parse_dimacs(std::string_view text) {
  std::optional<std::uint32_t> vars;
  std::uint32_t declared_clauses = 0;
  std::vector<Formula> clauses;
  std::vector<Formula> literals;
  bool in_clause = false;
  std::size_t line_no = 0;
  std::size_t last_line = 1;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t col = 0;
    auto next_word = [&]() -> std::pair<std::string_view, std::size_t> {
      while (col < line.size() && (line[col] == ' ' || line[col] == '\t')) ++col;
      const std::size_t start = col;
      while (col < line.size() && line[col] != ' ' && line[col] != '\t') ++col;
      return {line.substr(start, col - start), start + 1};
    };

    auto [first, first_col] = next_word();
    if (first.empty() || first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      if (vars) throw ParseError("duplicate header", line_no, first_col);
      auto [fmt, fmt_col] = next_word();
      auto [v, v_col] = next_word();
      auto [m, m_col] = next_word();
      auto [extra, extra_col] = next_word();
      if (fmt != "cnf") throw ParseError("expected 'p cnf <vars> <clauses>'", line_no, fmt_col);
      auto nv = parse_u32(v);
      auto nm = parse_u32(m);
      if (!nv) throw ParseError("malformed variable count", line_no, v_col);
      if (!nm) throw ParseError("malformed clause count", line_no, m_col);
      if (!extra.empty()) throw ParseError("trailing header tokens", line_no, extra_col);
      vars = *nv;
      declared_clauses = *nm;
      continue;
    }
    if (!vars) throw ParseError("clause before 'p cnf' header", line_no, first_col);

    col = 0;
    for (;;) {
      auto [word, word_col] = next_word();
      if (word.empty()) break;
      std::int64_t lit = 0;
      auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), lit);
      if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError("bad literal '" + std::string(word) + "'", line_no, word_col);
      }
      if (lit == 0) {
        if (clauses.size() == declared_clauses) {
          throw ParseError("more clauses than the header declares", line_no, word_col);
        }
        clauses.push_back(literals.empty() ? Formula::constant(false) : disjunction(literals));
        literals.clear();
        in_clause = false;
        continue;
      }
      const std::int64_t index = lit < 0 ? -lit : lit;
      if (index > static_cast<std::int64_t>(*vars)) {
        throw ParseError("literal " + std::to_string(lit) + " exceeds " + std::to_string(*vars) +
                             " variables",
                         line_no, word_col);
      }
      Formula v = Formula::var(static_cast<std::uint32_t>(index));
      literals.push_back(lit < 0 ? !v : v);
      in_clause = true;
    }
    last_line = line_no;
  }

  if (!vars) throw ParseError("missing 'p cnf' header", line_no, 1);
  if (in_clause) throw ParseError("unterminated clause (missing 0)", last_line, 1);
  if (clauses.size() != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(clauses.size()),
                     line_no, 1);
  }
  if (clauses.empty()) return Formula::constant(true, *vars);
  return conjunction(clauses).with_scope(*vars);
}

InputFormat sniff_format(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    return c == '(' ? InputFormat::Circuit : InputFormat::Dimacs;
  }
  return InputFormat::Dimacs;
}

Formula parse_formula(std::string_view text, InputFormat format) {
  return format == InputFormat::Circuit ? parse_circuit(text) : parse_dimacs(text);
}

}  // namespace dmaxsat
