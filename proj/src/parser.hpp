#pragma once

// Tokenizer and recursive-descent formula parser shared by the .ael and .dt
// readers. Internal to the library.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmr/syntax.hpp"

namespace nmr::detail {

enum class Tok {
  ident,
  kw_true,
  kw_false,
  kw_k,
  kw_m,
  tilde,
  amp,
  bar,
  arrow,
  dbl_arrow,
  lparen,
  rparen,
  colon,
  comma,
  slash,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string_view describe(Tok t);

// Tokenizes one line (comment already stripped). Columns are 1-based.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no, std::size_t column_offset = 0);

// Precedence, high to low: ~ K M; &; |; -> (right); <-> (non-associative).
class FormulaParser {
 public:
  explicit FormulaParser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Formula parse_formula();
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at(Tok t) const { return peek().kind == t; }
  void expect(Tok t);
  [[noreturn]] void fail(const Token& at, const std::string& message) const;

  // Parse error on any `K` / `M` token.
  bool forbid_modal = false;

 private:
  Formula parse_iff();
  Formula parse_implies();
  Formula parse_or();
  Formula parse_and();
  Formula parse_unary();
  Formula parse_primary();

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

struct SourceLine {
  std::size_t number;
  std::string_view text;  // comment stripped, not trimmed
};

// Non-blank lines with `#` comments removed.
std::vector<SourceLine> content_lines(std::string_view text);

// If the line is a `vocab:` header, returns the names; otherwise nullopt.
std::optional<std::vector<std::string>> parse_vocab_header(const SourceLine& line);

}  // namespace nmr::detail
