#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glr {

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

struct Token {
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// A non-blank input line split on whitespace. Lines starting with '#' are
/// comments and never produced.
struct TokenLine {
  std::size_t line = 0;
  std::vector<Token> tokens;
};

std::vector<TokenLine> tokenize_lines(std::string_view text);

[[noreturn]] void fail_at(const Token& tok, const std::string& what);

/// Strict decimal integer; rejects signs other than a leading '-', and trailing junk.
long parse_long(const Token& tok);
int parse_int(const Token& tok);

/// Joins integers with single spaces.
std::string join_ints(const std::vector<int>& values);

} // namespace glr
