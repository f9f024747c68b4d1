#include "input.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace coinkit::cli {
namespace {

std::string located(std::string_view source, std::size_t line, std::size_t column,
                    std::string_view message) {
  std::ostringstream os;
  os << source << ':' << line << ':' << column << ": " << message;
  return os.str();
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Splits on whitespace and records 1-based positions.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
      continue;
    }
    const std::size_t start = i;
    const std::size_t start_column = column;
    while (i < text.size() && !is_space(text[i])) {
      ++i;
      ++column;
    }
    out.push_back({text.substr(start, i - start), line, start_column});
  }
  return out;
}

std::int64_t parse_positive(const Token& tok, std::string_view source, std::string_view what) {
  std::int64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const bool digits_only =
      !tok.text.empty() && tok.text.find_first_not_of("0123456789") == std::string_view::npos;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (!digits_only || ec == std::errc::invalid_argument || ptr != last) {
    throw InputError(source, tok.line, tok.column,
                     std::string("expected a positive integer ") + std::string(what) + ", got '" +
                         std::string(tok.text) + "'");
  }
  if (ec == std::errc::result_out_of_range) {
    throw InputError(source, tok.line, tok.column,
                     std::string(what) + " '" + std::string(tok.text) + "' is too large");
  }
  if (value <= 0) {
    throw InputError(source, tok.line, tok.column, std::string(what) + " must be positive");
  }
  return value;
}

}  // namespace

InputError::InputError(std::string_view source, std::size_t line, std::size_t column,
                       std::string_view message)
    : ValidationError(located(source, line, column, message)) {}

InputError::InputError(std::string_view source, std::string_view message)
    : ValidationError(std::string(source) + ": " + std::string(message)) {}

std::vector<Value> parse_coin_values(std::string_view text, std::string_view source) {
  std::vector<Value> values;
  for (const Token& tok : tokenize(text)) values.push_back(parse_positive(tok, source, "coin value"));
  if (values.empty()) throw InputError(source, "no coin values");
  return values;
}

std::vector<Item> parse_items(std::string_view text, std::string_view source) {
  std::vector<Item> items;
  std::vector<Token> line_tokens;
  const auto tokens = tokenize(text);
  for (std::size_t k = 0; k < tokens.size();) {
    const std::size_t line = tokens[k].line;
    line_tokens.clear();
    while (k < tokens.size() && tokens[k].line == line) line_tokens.push_back(tokens[k++]);
    if (line_tokens.size() != 2) {
      const Token& at = line_tokens.size() > 2 ? line_tokens[2] : line_tokens.back();
      const std::size_t column = line_tokens.size() > 2 ? at.column : at.column + at.text.size();
      throw InputError(source, line, column,
                       "expected 'weight profit', found " + std::to_string(line_tokens.size()) +
                           " field(s)");
    }
    items.push_back({parse_positive(line_tokens[0], source, "weight"),
                     parse_positive(line_tokens[1], source, "profit")});
  }
  if (items.empty()) throw InputError(source, "no items");
  return items;
}

std::vector<std::string> parse_dictionary(std::string_view bytes, std::string_view source) {
  std::vector<std::string> words;
  std::size_t line = 1;
  std::size_t start = 0;
  while (start < bytes.size()) {
    const std::size_t end = bytes.find('\n', start);
    const std::size_t stop = end == std::string_view::npos ? bytes.size() : end;
    if (stop == start) throw InputError(source, line, 1, "empty dictionary word");
    words.emplace_back(bytes.substr(start, stop - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
    ++line;
  }
  if (words.empty()) throw InputError(source, "dictionary is empty");
  return words;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace coinkit::cli
