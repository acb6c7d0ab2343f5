#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bimagic/digitspace.hpp"

namespace bimagic {

struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// N x N square of equal-width entries over an alphabet. Immutable once
// built; every constructor path validates.
class Grid {
 public:
  // cells is row-major; throws GridError naming the first bad cell and
  // ShapeError for a ragged or mis-sized input.
  static Grid make(int order, Alphabet alphabet, int width,
                   std::vector<std::vector<Entry>> rows);
  static Grid make(int order, Alphabet alphabet, int width,
                   std::vector<Entry> cells);

  int order() const { return order_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int width() const { return width_; }
  const Entry& at(int row, int col) const { return cells_[index(row, col)]; }
  const Entry& at(Cell cell) const { return at(cell.row, cell.col); }
  const std::vector<Entry>& cells() const { return cells_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  Grid(int order, Alphabet alphabet, int width, std::vector<Entry> cells)
      : order_(order),
        alphabet_(std::move(alphabet)),
        width_(width),
        cells_(std::move(cells)) {}

  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * order_ + col;
  }

  int order_;
  Alphabet alphabet_;
  int width_;
  std::vector<Entry> cells_;
};

Grid make_grid(int order, const Alphabet& alphabet, int width,
               std::vector<std::vector<Entry>> rows);

// Block tiling: block_rows x block_cols cells per block, N cells total.
struct BlockShape {
  int rows = 0;
  int cols = 0;

  friend bool operator==(const BlockShape&, const BlockShape&) = default;
};

bool is_valid_block_shape(int order, BlockShape shape);
// "2x4" -> {2, 4}.
BlockShape parse_block_shape(std::string_view text);
std::string to_string(BlockShape shape);
// 8 -> 2x4, 16 -> 4x4, 9 -> 3x3; otherwise the most square valid tiling.
BlockShape default_block_shape(int order);

enum class LineKind { kRows, kColumns, kMainDiagonal, kAntiDiagonal, kBlocks };

std::string_view to_string(LineKind kind);
bool is_principal(LineKind kind);

struct LineSet {
  LineKind kind;
  std::vector<std::vector<Cell>> groups;
};

// Rows, columns, main diagonal, anti-diagonal, then blocks (row-major block
// order, row-major cells within a block). Throws ShapeError for an invalid
// block shape.
std::vector<LineSet> line_sets(int order, BlockShape block_shape);

struct CompletenessResult {
  bool complete = false;
  std::vector<Entry> missing;
  std::vector<Entry> duplicates;
};

// Compares the cell multiset against enumerate_entries(alphabet, width).
CompletenessResult completeness_check(const Grid& grid);

}  // namespace bimagic
