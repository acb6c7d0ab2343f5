#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bimagic/construct.hpp"
#include "bimagic/errors.hpp"
#include "bimagic/grid.hpp"
#include "bimagic/verify.hpp"
#include "json.hpp"

namespace bimagic {

// Text grid file:
//
//   order=8 alphabet=01 width=6 blocks=2x4 seed=1
//   000000 011011 ...
//
// Header keys may appear in any order; order, alphabet and width are
// required. Lines whose first non-blank character is '#' and blank lines
// are skipped.
struct GridDocument {
  Grid grid;
  std::optional<BlockShape> blocks;
  std::optional<std::uint64_t> seed;
  std::string provenance;  // comma-separated transform history

  friend bool operator==(const GridDocument&, const GridDocument&) = default;
};

// 1-based line and column of the offending text.
class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

GridDocument parse_grid_document(std::string_view text);
std::string serialize_grid_document(const GridDocument& doc);

// Keys are emitted in a fixed order so identical reports serialize
// identically.
nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

nlohmann::ordered_json crosscheck_to_json(const TargetsCrosscheck& check);
std::string crosscheck_to_text(const TargetsCrosscheck& check);

nlohmann::ordered_json oracle_to_json(const OracleResult& result, int order,
                                      const Alphabet& alphabet, int width,
                                      OracleProperty property);

}  // namespace bimagic
