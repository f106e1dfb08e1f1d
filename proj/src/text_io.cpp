#include "glr/text_io.hpp"

#include <charconv>
#include <limits>

namespace glr {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

std::vector<TokenLine> tokenize_lines(std::string_view text) {
  std::vector<TokenLine> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;

    TokenLine tl;
    tl.line = line_no;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
        ++i;
      if (i >= line.size())
        break;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
        ++i;
      tl.tokens.push_back(Token{line.substr(start, i - start), line_no, start + 1});
    }
    if (!tl.tokens.empty() && tl.tokens.front().text.front() != '#')
      out.push_back(std::move(tl));

    if (end == text.size())
      break;
    pos = end + 1;
  }
  return out;
}

void fail_at(const Token& tok, const std::string& what) {
  throw ParseError(tok.line, tok.column, what);
}

long parse_long(const Token& tok) {
  long value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail_at(tok, "expected an integer, got '" + std::string(tok.text) + "'");
  return value;
}

int parse_int(const Token& tok) {
  long v = parse_long(tok);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    fail_at(tok, "integer out of range");
  return static_cast<int>(v);
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

} // namespace glr
