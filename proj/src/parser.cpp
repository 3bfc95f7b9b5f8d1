#include "parser.hpp"

#include <optional>

#include "nmr/errors.hpp"

namespace nmr::detail {

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::ident: return "atom";
    case Tok::kw_true: return "'true'";
    case Tok::kw_false: return "'false'";
    case Tok::kw_k: return "'K'";
    case Tok::kw_m: return "'M'";
    case Tok::tilde: return "'~'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::dbl_arrow: return "'<->'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::colon: return "':'";
    case Tok::comma: return "','";
    case Tok::slash: return "'/'";
    case Tok::end: return "end of line";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no, std::size_t column_offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_start = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto ident_char = [&](char c) { return ident_start(c) || (c >= '0' && c <= '9'); };
  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = column_offset + i + 1;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      std::string word(line.substr(i, j - i));
      Tok kind = Tok::ident;
      if (word == "true") kind = Tok::kw_true;
      else if (word == "false") kind = Tok::kw_false;
      else if (word == "K") kind = Tok::kw_k;
      else if (word == "M") kind = Tok::kw_m;
      out.push_back({kind, std::move(word), line_no, col});
      i = j;
      continue;
    }
    if (line.substr(i, 3) == "<->") {
      out.push_back({Tok::dbl_arrow, "<->", line_no, col});
      i += 3;
      continue;
    }
    if (line.substr(i, 2) == "->") {
      out.push_back({Tok::arrow, "->", line_no, col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '~': kind = Tok::tilde; break;
      case '&': kind = Tok::amp; break;
      case '|': kind = Tok::bar; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ':': kind = Tok::colon; break;
      case ',': kind = Tok::comma; break;
      case '/': kind = Tok::slash; break;
      default:
        throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), line_no, col});
    ++i;
  }
  out.push_back({Tok::end, "", line_no, column_offset + line.size() + 1});
  return out;
}

void FormulaParser::fail(const Token& at, const std::string& message) const {
  throw ParseError(at.line, at.column, message);
}

void FormulaParser::expect(Tok t) {
  if (!at(t)) fail(peek(), "expected " + std::string(describe(t)) + ", found " + std::string(describe(peek().kind)));
  advance();
}

Formula FormulaParser::parse_formula() { return parse_iff(); }

Formula FormulaParser::parse_iff() {
  Formula lhs = parse_implies();
  if (at(Tok::dbl_arrow)) {
    advance();
    Formula rhs = parse_implies();
    if (at(Tok::dbl_arrow)) fail(peek(), "'<->' is not associative; add parentheses");
    return Formula::equivalence(std::move(lhs), std::move(rhs));
  }
  return lhs;
}

Formula FormulaParser::parse_implies() {
  Formula lhs = parse_or();
  if (at(Tok::arrow)) {
    advance();
    return Formula::implication(std::move(lhs), parse_implies());
  }
  return lhs;
}

Formula FormulaParser::parse_or() {
  Formula lhs = parse_and();
  while (at(Tok::bar)) {
    advance();
    lhs = Formula::disjunction(std::move(lhs), parse_and());
  }
  return lhs;
}

Formula FormulaParser::parse_and() {
  Formula lhs = parse_unary();
  while (at(Tok::amp)) {
    advance();
    lhs = Formula::conjunction(std::move(lhs), parse_unary());
  }
  return lhs;
}

Formula FormulaParser::parse_unary() {
  switch (peek().kind) {
    case Tok::tilde:
      advance();
      return Formula::negation(parse_unary());
    case Tok::kw_k:
    case Tok::kw_m: {
      const Token& tok = advance();
      if (forbid_modal) fail(tok, "modal operator " + tok.text + " is not allowed here");
      Formula operand = parse_unary();
      return tok.kind == Tok::kw_k ? Formula::knows(std::move(operand)) : Formula::possible(std::move(operand));
    }
    default:
      return parse_primary();
  }
}

Formula FormulaParser::parse_primary() {
  const Token& tok = peek();
  switch (tok.kind) {
    case Tok::ident:
      advance();
      return Formula::atom(tok.text);
    case Tok::kw_true:
      advance();
      return Formula::truth();
    case Tok::kw_false:
      advance();
      return Formula::falsity();
    case Tok::lparen: {
      advance();
      Formula inner = parse_iff();
      expect(Tok::rparen);
      return inner;
    }
    default:
      fail(tok, "expected a formula, found " + std::string(describe(tok.kind)));
  }
}

std::vector<SourceLine> content_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::optional<std::vector<std::string>> parse_vocab_header(const SourceLine& line) {
  const std::size_t first = line.text.find_first_not_of(" \t");
  if (line.text.substr(first, 6) != "vocab:") return std::nullopt;
  const std::size_t offset = first + 6;
  auto tokens = tokenize(line.text.substr(offset), line.number, offset);
  std::vector<std::string> names;
  for (const auto& tok : tokens) {
    if (tok.kind == Tok::end) break;
    if (tok.kind != Tok::ident) throw ParseError(tok.line, tok.column, "expected an atom name in vocab header");
    for (const auto& seen : names) {
      if (seen == tok.text) throw ParseError(tok.line, tok.column, "duplicate atom '" + tok.text + "' in vocab header");
    }
    names.push_back(tok.text);
  }
  return names;
}

}  // namespace nmr::detail
