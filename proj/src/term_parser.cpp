#include "nelson/term_parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace nelson {
namespace {

struct Token {
  enum class Kind { tilde, meet, join, arrow, equals, lparen, rparen, zero, one, ident, end };

  Kind kind;
  std::string text;
  int line;
  int column;
};

const char* token_name(Token::Kind k) {
  switch (k) {
    case Token::Kind::tilde: return "'~'";
    case Token::Kind::meet: return "'/\\'";
    case Token::Kind::join: return "'\\/'";
    case Token::Kind::arrow: return "'->'";
    case Token::Kind::equals: return "'='";
    case Token::Kind::lparen: return "'('";
    case Token::Kind::rparen: return "')'";
    case Token::Kind::zero: return "'0'";
    case Token::Kind::one: return "'1'";
    case Token::Kind::ident: return "a variable";
    case Token::Kind::end: return "end of input";
  }
  return "?";
}

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind kind, std::string lexeme, int width) {
    out.push_back(Token{kind, std::move(lexeme), line, column});
    column += width;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++column;
      ++i;
      continue;
    }
    if (c == '~') { push(Token::Kind::tilde, "~", 1); ++i; continue; }
    if (c == '(') { push(Token::Kind::lparen, "(", 1); ++i; continue; }
    if (c == ')') { push(Token::Kind::rparen, ")", 1); ++i; continue; }
    if (c == '=') { push(Token::Kind::equals, "=", 1); ++i; continue; }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '\\') {
      push(Token::Kind::meet, "/\\", 2);
      i += 2;
      continue;
    }
    if (c == '\\' && i + 1 < text.size() && text[i + 1] == '/') {
      push(Token::Kind::join, "\\/", 2);
      i += 2;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Token::Kind::arrow, "->", 2);
      i += 2;
      continue;
    }
    // Unicode aliases, all three bytes long: ∼ ∧ ∨ →
    if (text.compare(i, 3, "\xE2\x88\xBC") == 0) { push(Token::Kind::tilde, "~", 1); i += 3; continue; }
    if (text.compare(i, 3, "\xE2\x88\xA7") == 0) { push(Token::Kind::meet, "/\\", 1); i += 3; continue; }
    if (text.compare(i, 3, "\xE2\x88\xA8") == 0) { push(Token::Kind::join, "\\/", 1); i += 3; continue; }
    if (text.compare(i, 3, "\xE2\x86\x92") == 0) { push(Token::Kind::arrow, "->", 1); i += 3; continue; }
    if (c == '0' || c == '1') {
      if (i + 1 < text.size() && is_ident_char(text[i + 1]))
        throw parse_error(line, column, cat("a name must not start with a digit"));
      push(c == '0' ? Token::Kind::zero : Token::Kind::one, std::string(1, c), 1);
      ++i;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_char(text[j])) ++j;
      std::string name = text.substr(i, j - i);
      push(Token::Kind::ident, std::move(name), static_cast<int>(j - i));
      i = j;
      continue;
    }
    if (static_cast<unsigned char>(c) < 0x80)
      throw parse_error(line, column, cat("unexpected character '", c, "'"));
    throw parse_error(line, column, "unexpected character");
  }
  out.push_back(Token{Token::Kind::end, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  TermPtr parse_whole_term() {
    TermPtr t = parse_imp();
    expect(Token::Kind::end, "end of input");
    return t;
  }

  std::pair<TermPtr, TermPtr> parse_whole_equation() {
    TermPtr lhs = parse_imp();
    if (peek().kind != Token::Kind::equals)
      fail("'=' between the two sides of the equation");
    ++pos_;
    TermPtr rhs = parse_imp();
    if (peek().kind == Token::Kind::equals)
      throw parse_error(peek().line, peek().column,
                        "an equation has exactly one '='");
    expect(Token::Kind::end, "end of input");
    return {std::move(lhs), std::move(rhs)};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& expectation) const {
    const Token& t = peek();
    throw parse_error(t.line, t.column,
                      cat("expected ", expectation, ", got ",
                          t.kind == Token::Kind::end
                              ? std::string("end of input")
                              : t.kind == Token::Kind::ident
                                    ? cat("'", t.text, "'")
                                    : token_name(t.kind)));
  }

  void expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) fail(what);
    ++pos_;
  }

  TermPtr parse_imp() {
    TermPtr lhs = parse_join();
    if (peek().kind == Token::Kind::arrow) {
      ++pos_;
      return make_imp(std::move(lhs), parse_imp());  // right associative
    }
    return lhs;
  }

  TermPtr parse_join() {
    TermPtr t = parse_meet();
    while (peek().kind == Token::Kind::join) {
      ++pos_;
      t = make_join(std::move(t), parse_meet());
    }
    return t;
  }

  TermPtr parse_meet() {
    TermPtr t = parse_neg();
    while (peek().kind == Token::Kind::meet) {
      ++pos_;
      t = make_meet(std::move(t), parse_neg());
    }
    return t;
  }

  TermPtr parse_neg() {
    if (peek().kind == Token::Kind::tilde) {
      ++pos_;
      return make_neg(parse_neg());
    }
    return parse_atom();
  }

  TermPtr parse_atom() {
    switch (peek().kind) {
      case Token::Kind::zero:
        ++pos_;
        return make_bottom();
      case Token::Kind::one:
        ++pos_;
        return make_top();
      case Token::Kind::ident: {
        // Provisional index by first appearance; re-indexed by sorted name
        // once the whole input has been read.
        const int provisional = static_cast<int>(
            seen_.emplace(peek().text, seen_.size()).first->second);
        TermPtr t = make_variable(provisional, peek().text);
        ++pos_;
        return t;
      }
      case Token::Kind::lparen: {
        ++pos_;
        TermPtr t = parse_imp();
        expect(Token::Kind::rparen, "')'");
        return t;
      }
      default:
        fail("'~', '(', '0', '1' or a variable");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> seen_;
};

void collect_names(const Term& t, std::vector<std::string>& names) {
  switch (t.kind) {
    case Term::Kind::variable:
      names.push_back(t.var_name);
      return;
    case Term::Kind::top:
    case Term::Kind::bottom:
      return;
    case Term::Kind::neg:
      collect_names(*t.left, names);
      return;
    default:
      collect_names(*t.left, names);
      collect_names(*t.right, names);
      return;
  }
}

TermPtr reindex(const TermPtr& t, const std::map<std::string, int>& index) {
  switch (t->kind) {
    case Term::Kind::variable:
      return make_variable(index.at(t->var_name), t->var_name);
    case Term::Kind::top:
    case Term::Kind::bottom:
      return t;
    case Term::Kind::neg:
      return make_neg(reindex(t->left, index));
    case Term::Kind::meet:
      return make_meet(reindex(t->left, index), reindex(t->right, index));
    case Term::Kind::join:
      return make_join(reindex(t->left, index), reindex(t->right, index));
    case Term::Kind::imp:
      return make_imp(reindex(t->left, index), reindex(t->right, index));
  }
  throw std::logic_error("unknown term kind");
}

std::vector<std::string> sorted_unique(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::map<std::string, int> index_of(const std::vector<std::string>& names) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    index.emplace(names[i], static_cast<int>(i));
  return index;
}

}  // namespace

ParsedTerm parse_term(const std::string& text) {
  Parser parser(tokenize(text));
  TermPtr raw = parser.parse_whole_term();
  std::vector<std::string> names;
  collect_names(*raw, names);
  ParsedTerm out;
  out.variables = sorted_unique(std::move(names));
  out.term = reindex(raw, index_of(out.variables));
  return out;
}

ParsedEquation parse_equation(const std::string& text) {
  Parser parser(tokenize(text));
  auto [raw_lhs, raw_rhs] = parser.parse_whole_equation();
  std::vector<std::string> names;
  collect_names(*raw_lhs, names);
  collect_names(*raw_rhs, names);
  ParsedEquation out;
  out.variables = sorted_unique(std::move(names));
  auto index = index_of(out.variables);
  out.lhs = reindex(raw_lhs, index);
  out.rhs = reindex(raw_rhs, index);
  return out;
}

}  // namespace nelson
