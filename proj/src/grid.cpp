#include "bimagic/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "bimagic/errors.hpp"

namespace bimagic {

Grid Grid::make(int order, Alphabet alphabet, int width,
                std::vector<std::vector<Entry>> rows) {
  if (order < 1) throw ShapeError("order must be positive");
  if (static_cast<int>(rows.size()) != order)
    throw ShapeError("expected " + std::to_string(order) + " rows, got " +
                     std::to_string(rows.size()));
  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(order) * order);
  for (int r = 0; r < order; ++r) {
    if (static_cast<int>(rows[r].size()) != order)
      throw ShapeError("row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " cells, expected " +
                       std::to_string(order));
    for (auto& e : rows[r]) cells.push_back(std::move(e));
  }
  return make(order, std::move(alphabet), width, std::move(cells));
}

Grid Grid::make(int order, Alphabet alphabet, int width,
                std::vector<Entry> cells) {
  if (order < 1) throw ShapeError("order must be positive");
  if (width < 1 || width > kMaxWidth)
    throw InputError("width must be in 1.." + std::to_string(kMaxWidth));
  if (cells.size() != static_cast<std::size_t>(order) * order)
    throw ShapeError("expected " + std::to_string(order * order) +
                     " cells, got " + std::to_string(cells.size()));
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) {
      const Entry& e = cells[static_cast<std::size_t>(r) * order + c];
      if (e.width() != width)
        throw GridError(r, c,
                        "entry '" + e.text() + "' has width " +
                            std::to_string(e.width()) + ", expected " +
                            std::to_string(width));
      for (int k = 0; k < width; ++k) {
        if (!alphabet.contains(e.digit(k)))
          throw GridError(r, c,
                          "digit " + std::to_string(e.digit(k)) +
                              " of entry '" + e.text() +
                              "' is outside alphabet " + alphabet.to_string());
      }
    }
  }
  return Grid(order, std::move(alphabet), width, std::move(cells));
}

Grid make_grid(int order, const Alphabet& alphabet, int width,
               std::vector<std::vector<Entry>> rows) {
  return Grid::make(order, alphabet, width, std::move(rows));
}

bool is_valid_block_shape(int order, BlockShape shape) {
  return shape.rows >= 1 && shape.cols >= 1 &&
         shape.rows * shape.cols == order && order % shape.rows == 0 &&
         order % shape.cols == 0;
}

BlockShape parse_block_shape(std::string_view text) {
  auto x = text.find_first_of("xX");
  BlockShape shape;
  if (x == std::string_view::npos)
    throw InputError("block shape must look like RxC, got '" +
                     std::string(text) + "'");
  auto rows = text.substr(0, x);
  auto cols = text.substr(x + 1);
  auto r1 = std::from_chars(rows.data(), rows.data() + rows.size(), shape.rows);
  auto r2 = std::from_chars(cols.data(), cols.data() + cols.size(), shape.cols);
  if (rows.empty() || cols.empty() || r1.ec != std::errc() ||
      r1.ptr != rows.data() + rows.size() || r2.ec != std::errc() ||
      r2.ptr != cols.data() + cols.size())
    throw InputError("block shape must look like RxC, got '" +
                     std::string(text) + "'");
  return shape;
}

std::string to_string(BlockShape shape) {
  return std::to_string(shape.rows) + "x" + std::to_string(shape.cols);
}

BlockShape default_block_shape(int order) {
  switch (order) {
    case 8:
      return {2, 4};
    case 16:
      return {4, 4};
    case 9:
      return {3, 3};
    default:
      break;
  }
  int best = 1;
  for (int r = 1; r * r <= order; ++r) {
    if (order % r == 0 && is_valid_block_shape(order, {r, order / r}))
      best = r;
  }
  return {best, order / best};
}

std::string_view to_string(LineKind kind) {
  switch (kind) {
    case LineKind::kRows:
      return "row";
    case LineKind::kColumns:
      return "column";
    case LineKind::kMainDiagonal:
      return "main-diagonal";
    case LineKind::kAntiDiagonal:
      return "anti-diagonal";
    case LineKind::kBlocks:
      return "block";
  }
  return "?";
}

bool is_principal(LineKind kind) { return kind != LineKind::kBlocks; }

std::vector<LineSet> line_sets(int order, BlockShape block_shape) {
  if (order < 1) throw ShapeError("order must be positive");
  if (!is_valid_block_shape(order, block_shape))
    throw ShapeError("block shape " + to_string(block_shape) +
                     " does not tile order " + std::to_string(order));
  const int n = order;
  LineSet rows{LineKind::kRows, {}};
  LineSet cols{LineKind::kColumns, {}};
  LineSet main{LineKind::kMainDiagonal, {{}}};
  LineSet anti{LineKind::kAntiDiagonal, {{}}};
  LineSet blocks{LineKind::kBlocks, {}};
  for (int i = 0; i < n; ++i) {
    std::vector<Cell> row, col;
    for (int j = 0; j < n; ++j) {
      row.push_back({i, j});
      col.push_back({j, i});
    }
    rows.groups.push_back(std::move(row));
    cols.groups.push_back(std::move(col));
    main.groups[0].push_back({i, i});
    anti.groups[0].push_back({i, n - 1 - i});
  }
  for (int br = 0; br < n; br += block_shape.rows) {
    for (int bc = 0; bc < n; bc += block_shape.cols) {
      std::vector<Cell> group;
      for (int r = br; r < br + block_shape.rows; ++r)
        for (int c = bc; c < bc + block_shape.cols; ++c) group.push_back({r, c});
      blocks.groups.push_back(std::move(group));
    }
  }
  return {std::move(rows), std::move(cols), std::move(main), std::move(anti),
          std::move(blocks)};
}

CompletenessResult completeness_check(const Grid& grid) {
  std::vector<Entry> present = grid.cells();
  std::sort(present.begin(), present.end());
  const auto size = complete_set_size(grid.alphabet(), grid.width());
  const auto cell_count = static_cast<std::int64_t>(present.size());
  // A digit set that cannot fill the square is reported incomplete; its
  // missing list is only spelled out while it stays small.
  const bool enumerable = size && *size <= (std::int64_t{1} << 16);
  const std::vector<Entry> expected =
      enumerable ? enumerate_entries(grid.alphabet(), grid.width())
                 : std::vector<Entry>{};

  CompletenessResult result;
  for (std::size_t i = 1; i < present.size(); ++i) {
    if (present[i] == present[i - 1] &&
        (result.duplicates.empty() || result.duplicates.back() != present[i]))
      result.duplicates.push_back(present[i]);
  }
  auto last = std::unique(present.begin(), present.end());
  present.erase(last, present.end());
  std::set_difference(expected.begin(), expected.end(), present.begin(),
                      present.end(), std::back_inserter(result.missing));
  result.complete = size && *size == cell_count && result.missing.empty() &&
                    result.duplicates.empty();
  return result;
}

}  // namespace bimagic
