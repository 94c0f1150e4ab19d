#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "yolkkit/median.hpp"

namespace yolkkit {

/// Parse failure with the 1-based input line it occurred on.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::parse_error, what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Points file: UTF-8 text, one point per line as comma-separated decimals,
/// '#' lines and blank lines ignored. The dimension is inferred from the
/// first data line and enforced afterwards.
Electorate parse_points_text(std::string_view text);
Electorate read_points_file(const std::string& path);

std::string format_points(const Electorate& e, const std::string& comment = "");
void write_points_file(const std::string& path, const Electorate& e,
                       const std::string& comment = "");

/// FNV-1a digest over the canonical text form of the parsed points, so
/// comments and whitespace do not affect it.
uint64_t instance_digest(const Electorate& e);

}  // namespace yolkkit
