#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coinkit/corekit.hpp"

namespace coinkit::cli {

/// Malformed input file or flag value; what() carries "source:line:col: ...".
class InputError : public ValidationError {
 public:
  InputError(std::string_view source, std::size_t line, std::size_t column, std::string_view message);
  InputError(std::string_view source, std::string_view message);
};

/// Whitespace-separated positive decimal integers.
std::vector<Value> parse_coin_values(std::string_view text, std::string_view source);

/// One "weight profit" pair per nonblank line.
std::vector<Item> parse_items(std::string_view text, std::string_view source);

/// One word per line, bytes verbatim; a final newline is optional.
std::vector<std::string> parse_dictionary(std::string_view bytes, std::string_view source);

/// Whole file as raw bytes.
std::string read_file(const std::string& path);

}  // namespace coinkit::cli
