#include "bimagic/transform.hpp"

#include "bimagic/errors.hpp"

namespace bimagic {

std::string_view to_string(TransformKind kind) {
  return kind == TransformKind::kRotate180 ? "rotate180" : "mirror";
}

TransformKind parse_transform_kind(std::string_view text) {
  if (text == "rotate180") return TransformKind::kRotate180;
  if (text == "mirror") return TransformKind::kMirror;
  throw InputError("unknown transform '" + std::string(text) +
                   "', expected rotate180 or mirror");
}

DigitMap DigitMap::rotation() {
  std::array<std::optional<int>, 10> m{};
  m[0] = 0;
  m[1] = 1;
  m[2] = 2;
  m[5] = 5;
  m[6] = 9;
  m[8] = 8;
  m[9] = 6;
  return DigitMap(TransformKind::kRotate180, m);
}

DigitMap DigitMap::mirror() {
  std::array<std::optional<int>, 10> m{};
  m[0] = 0;
  m[1] = 1;
  m[8] = 8;
  m[2] = 5;
  m[5] = 2;
  return DigitMap(TransformKind::kMirror, m);
}

DigitMap DigitMap::for_transform(TransformKind kind) {
  return kind == TransformKind::kRotate180 ? rotation() : mirror();
}

std::optional<Alphabet> DigitMap::image(const Alphabet& alphabet) const {
  std::vector<int> out;
  for (int d : alphabet.digits()) {
    if (!image_[d]) return std::nullopt;
    out.push_back(*image_[d]);
  }
  return Alphabet(std::move(out));
}

Entry transform_entry(const Entry& entry, const DigitMap& map) {
  const int w = entry.width();
  std::string text(static_cast<std::size_t>(w), '0');
  for (int k = 0; k < w; ++k) {
    const int d = entry.digit(k);
    auto img = map.image(d);
    if (!img) throw UnmappableDigitError(d, k, "");
    text[w - 1 - k] = static_cast<char>('0' + *img);
  }
  return Entry::parse(text);
}

Cell transform_cell(Cell cell, int order, TransformKind kind) {
  if (kind == TransformKind::kRotate180)
    return {order - 1 - cell.row, order - 1 - cell.col};
  return {cell.row, order - 1 - cell.col};
}

TransformedGrid apply_transform(const Grid& grid, TransformKind kind) {
  const DigitMap map = DigitMap::for_transform(kind);
  const int n = grid.order();
  std::vector<Entry> cells(grid.cells().size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const Cell to = transform_cell({r, c}, n, kind);
      try {
        cells[static_cast<std::size_t>(to.row) * n + to.col] =
            transform_entry(grid.at(r, c), map);
      } catch (const UnmappableDigitError& e) {
        throw UnmappableDigitError(
            e.digit(), e.position(),
            "cell (" + std::to_string(r) + "," + std::to_string(c) + "): ");
      }
    }
  }
  auto alphabet = map.image(grid.alphabet());
  if (!alphabet)
    throw InputError("alphabet " + grid.alphabet().to_string() +
                     " has a digit with no " + std::string(to_string(kind)) +
                     " image");
  return {Grid::make(n, std::move(*alphabet), grid.width(), std::move(cells)),
          kind};
}

TransformedGrid rotate180(const Grid& grid) {
  return apply_transform(grid, TransformKind::kRotate180);
}

TransformedGrid mirror(const Grid& grid) {
  return apply_transform(grid, TransformKind::kMirror);
}

}  // namespace bimagic
