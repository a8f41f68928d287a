#include "aldlf/parser.hpp"

#include <cctype>

#include "aldlf/path_expression.hpp"

namespace aldlf {

ParseError::ParseError(std::string message, int line, int column)
    : std::runtime_error(std::move(message) + " at line " +
                         std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line), column_(column) {}

const AutomatonPtr* AutomatonDefs::find(const std::string& name) const {
  for (const auto& [n, a] : entries)
    if (n == name) return &a;
  return nullptr;
}

void AutomatonDefs::add(std::string name, AutomatonPtr a) {
  entries.emplace_back(std::move(name), std::move(a));
}

namespace {

struct Token {
  enum class Kind { End, Ident, String, Punct };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { tokenize(); }

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  std::size_t mark() const { return pos_; }
  void rewind(std::size_t m) { pos_ = m; }

  [[noreturn]] void error(const std::string& msg) const {
    const Token& t = peek();
    throw ParseError(msg, t.line, t.col);
  }

private:
  void tokenize() {
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    };
    while (i < text_.size()) {
      char c = text_[i];
      if (c == '#') {  // comment to end of line
        while (i < text_.size() && text_[i] != '\n') advance(text_[i++]);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(c);
        ++i;
        continue;
      }
      Token t;
      t.line = line;
      t.col = col;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Token::Kind::Ident;
        while (i < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[i])) ||
                text_[i] == '_')) {
          t.text += text_[i];
          advance(text_[i++]);
        }
      } else if (c == '"') {
        t.kind = Token::Kind::String;
        advance(text_[i++]);
        bool closed = false;
        while (i < text_.size()) {
          char d = text_[i];
          advance(d);
          ++i;
          if (d == '\\' && i < text_.size()) {
            t.text += text_[i];
            advance(text_[i++]);
          } else if (d == '"') {
            closed = true;
            break;
          } else {
            t.text += d;
          }
        }
        if (!closed) throw ParseError("unterminated string", t.line, t.col);
      } else {
        t.kind = Token::Kind::Punct;
        t.text = std::string(1, c);
        advance(c);
        ++i;
      }
      tokens_.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.col = col;
    tokens_.push_back(std::move(end));
  }

  const std::string& text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool is_punct(const Token& t, const char* s) {
  return t.kind == Token::Kind::Punct && t.text == s;
}
bool is_ident(const Token& t, const char* s) {
  return t.kind == Token::Kind::Ident && t.text == s;
}

class FormulaParser {
public:
  FormulaParser(Lexer& lex, const AutomatonDefs& defs)
      : lex_(lex), defs_(defs) {}

  FormulaPtr parse_full() {
    FormulaPtr f = parse_or();
    if (lex_.peek().kind != Token::Kind::End)
      lex_.error("unexpected trailing input");
    return f;
  }

  PropPtr parse_prop_full() {
    PropPtr p = prop_or();
    if (lex_.peek().kind != Token::Kind::End)
      lex_.error("unexpected trailing input");
    return p;
  }

private:
  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (is_punct(lex_.peek(), "|")) {
      lex_.next();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (is_punct(lex_.peek(), "&")) {
      lex_.next();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    const Token& t = lex_.peek();
    if (is_punct(t, "!")) {
      lex_.next();
      return Formula::negation(parse_unary());
    }
    if (is_punct(t, "<")) {
      lex_.next();
      AutomatonPtr a = parse_path();
      expect_punct(">");
      return Formula::diamond(a, parse_unary());
    }
    if (is_punct(t, "[")) {
      lex_.next();
      AutomatonPtr a = parse_path();
      expect_punct("]");
      return Formula::box(a, parse_unary());
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    const Token& t = lex_.peek();
    if (is_ident(t, "true")) {
      lex_.next();
      return Formula::truth(true);
    }
    if (is_ident(t, "false")) {
      lex_.next();
      return Formula::truth(false);
    }
    if (t.kind == Token::Kind::Ident) {
      return Formula::atom(lex_.next().text);
    }
    if (is_punct(t, "(")) {
      lex_.next();
      FormulaPtr f = parse_or();
      expect_punct(")");
      return f;
    }
    lex_.error("expected a formula");
  }

  AutomatonPtr parse_path() {
    const Token& t = lex_.peek();
    if (is_punct(t, "@")) {
      Token at = lex_.next();
      const Token& name = lex_.peek();
      if (name.kind != Token::Kind::Ident)
        lex_.error("expected an automaton name after '@'");
      const AutomatonPtr* a = defs_.find(name.text);
      if (!a)
        throw ParseError("unresolved automaton name '@" + name.text + "'",
                         at.line, at.col);
      lex_.next();
      return *a;
    }
    return regex_to_automaton(rex_union());
  }

  PathExprPtr rex_union() {
    PathExprPtr e = rex_concat();
    while (is_punct(lex_.peek(), "+")) {
      lex_.next();
      e = PathExpression::alt(e, rex_concat());
    }
    return e;
  }

  PathExprPtr rex_concat() {
    PathExprPtr e = rex_star();
    while (is_punct(lex_.peek(), ";")) {
      lex_.next();
      e = PathExpression::concat(e, rex_star());
    }
    return e;
  }

  PathExprPtr rex_star() {
    PathExprPtr e = rex_base();
    while (is_punct(lex_.peek(), "*")) {
      lex_.next();
      e = PathExpression::star(e);
    }
    return e;
  }

  PathExprPtr rex_base() {
    const Token& t = lex_.peek();
    if (is_ident(t, "eps")) {
      lex_.next();
      return PathExpression::epsilon();
    }
    if (is_ident(t, "back") && is_punct(lex_.peek(1), "(")) {
      lex_.next();
      lex_.next();
      PropPtr guard = prop_or();
      expect_punct(")");
      return PathExpression::past(guard);
    }
    if (is_punct(t, "{")) {
      lex_.next();
      FormulaPtr f = parse_or();
      expect_punct("}");
      expect_punct("?");
      return PathExpression::test(f);
    }
    if (is_punct(t, "(") && paren_group_is_rex()) {
      lex_.next();
      PathExprPtr e = rex_union();
      expect_punct(")");
      return e;
    }
    // Anything else is a propositional guard, parens included.
    return PathExpression::future(prop_or());
  }

  // Looks ahead from an opening parenthesis to its match; only expression
  // operators that cannot occur inside a propositional formula make the
  // group a sub-expression rather than a guard.
  bool paren_group_is_rex() {
    int depth = 0;
    for (std::size_t ahead = 0;; ++ahead) {
      const Token& t = lex_.peek(ahead);
      if (t.kind == Token::Kind::End) return false;
      if (is_punct(t, "(")) ++depth;
      if (is_punct(t, ")") && --depth == 0) return false;
      if (depth > 0 &&
          (is_punct(t, ";") || is_punct(t, "+") || is_punct(t, "*") ||
           is_punct(t, "{") || is_punct(t, "?") || is_ident(t, "eps") ||
           is_ident(t, "back")))
        return true;
    }
  }

  PropPtr prop_or() {
    PropPtr p = prop_and();
    while (is_punct(lex_.peek(), "|")) {
      lex_.next();
      p = Prop::disj(p, prop_and());
    }
    return p;
  }

  PropPtr prop_and() {
    PropPtr p = prop_unary();
    while (is_punct(lex_.peek(), "&")) {
      lex_.next();
      p = Prop::conj(p, prop_unary());
    }
    return p;
  }

  PropPtr prop_unary() {
    const Token& t = lex_.peek();
    if (is_punct(t, "!")) {
      lex_.next();
      return Prop::negation(prop_unary());
    }
    if (is_ident(t, "true")) {
      lex_.next();
      return Prop::truth(true);
    }
    if (is_ident(t, "false")) {
      lex_.next();
      return Prop::truth(false);
    }
    if (t.kind == Token::Kind::Ident) return Prop::atom(lex_.next().text);
    if (is_punct(t, "(")) {
      lex_.next();
      PropPtr p = prop_or();
      expect_punct(")");
      return p;
    }
    lex_.error("expected a propositional formula");
  }

  void expect_punct(const char* s) {
    if (!is_punct(lex_.peek(), s))
      lex_.error(std::string("expected '") + s + "'");
    lex_.next();
  }

  Lexer& lex_;
  const AutomatonDefs& defs_;
};

class LtlfParser {
public:
  explicit LtlfParser(Lexer& lex) : lex_(lex) {}

  LtlfPtr parse_full() {
    LtlfPtr f = parse_or();
    if (lex_.peek().kind != Token::Kind::End)
      lex_.error("unexpected trailing input");
    return f;
  }

private:
  LtlfPtr parse_or() {
    LtlfPtr f = parse_and();
    while (is_punct(lex_.peek(), "|")) {
      lex_.next();
      f = Ltlf::disj(f, parse_and());
    }
    return f;
  }

  LtlfPtr parse_and() {
    LtlfPtr f = parse_until();
    while (is_punct(lex_.peek(), "&")) {
      lex_.next();
      f = Ltlf::conj(f, parse_until());
    }
    return f;
  }

  LtlfPtr parse_until() {
    LtlfPtr f = parse_unary();
    if (is_ident(lex_.peek(), "U")) {
      lex_.next();
      return Ltlf::until(f, parse_until());  // right associative
    }
    return f;
  }

  LtlfPtr parse_unary() {
    const Token& t = lex_.peek();
    if (is_punct(t, "!")) {
      lex_.next();
      return Ltlf::negation(parse_unary());
    }
    if (is_ident(t, "X")) {
      lex_.next();
      return Ltlf::next(parse_unary());
    }
    if (is_ident(t, "true") || is_ident(t, "false"))
      lex_.error("constants are not part of the LTL_f fragment");
    if (t.kind == Token::Kind::Ident && t.text != "U")
      return Ltlf::atom(lex_.next().text);
    if (is_punct(t, "(")) {
      lex_.next();
      LtlfPtr f = parse_or();
      expect_punct(")");
      return f;
    }
    lex_.error("expected an LTL_f formula");
  }

  void expect_punct(const char* s) {
    if (!is_punct(lex_.peek(), s))
      lex_.error(std::string("expected '") + s + "'");
    lex_.next();
  }

  Lexer& lex_;
};

bool field_ahead(Lexer& lex) {
  const Token& t = lex.peek();
  return (is_ident(t, "states") || is_ident(t, "start") ||
          is_ident(t, "accepting") || is_ident(t, "transitions")) &&
         is_punct(lex.peek(1), ":");
}

}  // namespace

FormulaPtr parse_formula(const std::string& text, const AutomatonDefs& defs) {
  Lexer lex(text);
  FormulaParser parser(lex, defs);
  return parser.parse_full();
}

LtlfPtr parse_ltlf(const std::string& text) {
  Lexer lex(text);
  LtlfParser parser(lex);
  return parser.parse_full();
}

AutomatonDefs parse_defs(const std::string& text) {
  Lexer lex(text);
  AutomatonDefs defs;

  auto expect_ident = [&](const char* what) {
    if (lex.peek().kind != Token::Kind::Ident)
      lex.error(std::string("expected ") + what);
    return lex.next().text;
  };
  auto expect_punct = [&](const char* s) {
    if (!is_punct(lex.peek(), s))
      lex.error(std::string("expected '") + s + "'");
    lex.next();
  };
  auto subparse_prop = [&](const std::string& src) {
    Lexer sub(src);
    FormulaParser p(sub, defs);
    return p.parse_prop_full();
  };
  auto subparse_formula = [&](const std::string& src) {
    Lexer sub(src);
    FormulaParser p(sub, defs);
    return p.parse_full();
  };

  while (lex.peek().kind != Token::Kind::End) {
    if (!is_ident(lex.peek(), "automaton"))
      lex.error("expected 'automaton'");
    lex.next();
    std::string name = expect_ident("an automaton name");
    expect_punct("{");

    std::vector<std::string> states;
    std::string start_name;
    bool have_start = false;
    std::vector<std::string> accepting_names;
    struct RawTransition {
      std::string from, kind, formula, to;
      int line, col;
    };
    std::vector<RawTransition> raw;

    while (!is_punct(lex.peek(), "}")) {
      if (lex.peek().kind == Token::Kind::End)
        lex.error("unterminated automaton block");
      if (!field_ahead(lex)) lex.error("expected a field");
      std::string field = lex.next().text;
      expect_punct(":");
      if (field == "states") {
        while (lex.peek().kind == Token::Kind::Ident && !field_ahead(lex))
          states.push_back(lex.next().text);
      } else if (field == "start") {
        start_name = expect_ident("a start state");
        have_start = true;
      } else if (field == "accepting") {
        while (lex.peek().kind == Token::Kind::Ident && !field_ahead(lex))
          accepting_names.push_back(lex.next().text);
      } else {  // transitions
        while (!is_punct(lex.peek(), "}") && !field_ahead(lex)) {
          RawTransition rt;
          rt.line = lex.peek().line;
          rt.col = lex.peek().col;
          rt.from = expect_ident("a source state");
          rt.kind = expect_ident("a transition kind");
          if (rt.kind != "future" && rt.kind != "past" && rt.kind != "test")
            throw ParseError("transition kind must be future, past or test",
                             rt.line, rt.col);
          if (lex.peek().kind == Token::Kind::String)
            rt.formula = lex.next().text;
          else
            rt.formula = expect_ident("a formula");
          rt.to = expect_ident("a target state");
          raw.push_back(std::move(rt));
        }
      }
    }
    expect_punct("}");

    if (states.empty())
      throw ParseError("automaton '" + name + "' declares no states",
                       lex.peek().line, lex.peek().col);
    if (!have_start)
      throw ParseError("automaton '" + name + "' has no start state",
                       lex.peek().line, lex.peek().col);

    auto state_index = [&](const std::string& s, int line,
                           int col) -> int {
      for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == s) return static_cast<int>(i);
      throw ParseError("unknown state '" + s + "'", line, col);
    };

    std::vector<Transition> transitions;
    for (const auto& rt : raw) {
      TransitionLabel label =
          rt.kind == "test"
              ? TransitionLabel::test(subparse_formula(rt.formula))
              : (rt.kind == "future"
                     ? TransitionLabel::future(subparse_prop(rt.formula))
                     : TransitionLabel::past(subparse_prop(rt.formula)));
      transitions.push_back(Transition{state_index(rt.from, rt.line, rt.col),
                                       std::move(label),
                                       state_index(rt.to, rt.line, rt.col)});
    }
    std::vector<int> accepting;
    for (const auto& s : accepting_names)
      accepting.push_back(state_index(s, lex.peek().line, lex.peek().col));

    defs.add(name,
             PathAutomaton::make(states, std::move(transitions),
                                 state_index(start_name, lex.peek().line,
                                             lex.peek().col),
                                 std::move(accepting)));
  }
  return defs;
}

}  // namespace aldlf
