#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bimagic/digitspace.hpp"
#include "bimagic/grid.hpp"

namespace bimagic {

enum class TransformKind { kRotate180, kMirror };

std::string_view to_string(TransformKind kind);
TransformKind parse_transform_kind(std::string_view text);

// Partial digit -> digit map describing how a printed digit looks after a
// half turn (rotation) or a left-right reflection (mirror).
class DigitMap {
 public:
  static DigitMap rotation();  // 0 1 2 5 8 fixed, 6 <-> 9
  static DigitMap mirror();    // 0 1 8 fixed, 2 <-> 5
  static DigitMap for_transform(TransformKind kind);

  TransformKind kind() const { return kind_; }
  bool maps(int digit) const { return image_[digit].has_value(); }
  std::optional<int> image(int digit) const { return image_[digit]; }

  // Image of every alphabet digit, or nullopt if some digit is unmappable.
  std::optional<Alphabet> image(const Alphabet& alphabet) const;

 private:
  DigitMap(TransformKind kind, std::array<std::optional<int>, 10> image)
      : kind_(kind), image_(image) {}

  TransformKind kind_;
  std::array<std::optional<int>, 10> image_;
};

// Reverses digit order and maps each digit. Throws UnmappableDigitError.
Entry transform_entry(const Entry& entry, const DigitMap& map);

struct TransformedGrid {
  Grid grid;
  TransformKind provenance;
};

// result(r, c) = rotate(source(N-1-r, N-1-c)).
TransformedGrid rotate180(const Grid& grid);
// result(r, c) = mirror(source(r, N-1-c)).
TransformedGrid mirror(const Grid& grid);
TransformedGrid apply_transform(const Grid& grid, TransformKind kind);

// Where a cell lands under the transform's geometric part.
Cell transform_cell(Cell cell, int order, TransformKind kind);

}  // namespace bimagic
