#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bimagic/digitspace.hpp"
#include "bimagic/grid.hpp"

namespace bimagic {

// Orders the construction supports: N = p^m with p prime (2 or 3). Cells
// are indexed by the 2m-vector of base-p row digits followed by base-p
// column digits, most significant first.
struct CellSpace {
  int prime = 2;
  int half_dim = 0;  // m

  int dim() const { return 2 * half_dim; }
  int order() const;

  friend bool operator==(const CellSpace&, const CellSpace&) = default;
};

// Throws InputError unless order is a power of 2 or 3 (at least p^1).
CellSpace cell_space_for(int order);

// Cell (r, c) -> coordinates in GF(p)^(2m).
std::vector<int> cell_vector(const CellSpace& space, int row, int col);

// digit = (coeffs . x + constant) mod p.
struct LinearForm {
  std::vector<int> coeffs;
  int constant = 0;

  int evaluate(const std::vector<int>& x, int prime) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// One form per digit position, most significant digit first. Row r of the
// grid sits at row coordinates row_index[r] (a base-p code) and likewise for
// columns; empty index vectors mean the identity labelling.
struct DigitFunctionalSystem {
  CellSpace space;
  std::vector<LinearForm> forms;
  std::vector<int> row_index;
  std::vector<int> col_index;

  bool identity_indexing() const;

  friend bool operator==(const DigitFunctionalSystem&,
                         const DigitFunctionalSystem&) = default;
};

// Coordinates of grid cell (r, c) under the system's index labelling.
std::vector<int> cell_vector(const DigitFunctionalSystem& system, int row,
                             int col);

// The subspace each line family's groups are cosets of.
struct Direction {
  LineKind kind;
  std::vector<std::vector<int>> basis;  // m vectors in GF(p)^(2m)
};

// rows, columns, main diagonal, anti-diagonal and blocks. The block shape
// must be p^a x p^b. Throws ShapeError otherwise.
std::vector<Direction> direction_catalog(const CellSpace& space,
                                         BlockShape block_shape);

// Form restricted to a direction: its values on the direction's basis.
std::vector<int> restrict_to(const LinearForm& form, const Direction& dir,
                             int prime);

struct DirectionConditions {
  LineKind kind;
  // Diagonals are cosets only under the identity labelling; otherwise the
  // algebraic conditions say nothing about them.
  bool applicable = true;
  bool balanced = false;      // every form nonzero on the direction
  bool pair_uniform = false;  // every pair of forms independent on it
};

struct SystemConditions {
  bool invertible = false;
  bool balanced = false;      // over every applicable direction
  bool pair_uniform = false;  // over every applicable direction
  std::vector<DirectionConditions> directions;
};

SystemConditions evaluate_conditions(const DigitFunctionalSystem& system,
                                     BlockShape block_shape);

// True when the labelling keeps every block a coset of the block direction:
// each group of block_rows consecutive rows maps onto one coset of the
// low-order row digits, and likewise for columns.
bool preserves_block_tiling(const DigitFunctionalSystem& system,
                            BlockShape block_shape);

struct SearchOptions {
  std::int64_t node_budget = 10'000'000;  // per restart
  int restarts = 8;
  // Relabelings tried per system when the diagonals need the fallback
  // stage.
  std::int64_t labelling_samples = 200'000;
  std::optional<BlockShape> block_shape;  // default_block_shape(order)
};

struct SearchStats {
  std::int64_t nodes = 0;
  int restarts_used = 0;
  bool relabelled = false;  // the diagonal fallback produced the result
  std::int64_t labellings_tried = 0;
};

// Stage one: depth-first search for forms meeting invertibility, balance and
// pair independence on every line direction, candidates in a seeded shuffle
// order. When that space is provably empty (order 8), stage two drops the
// diagonal directions and searches block-preserving row/column labellings
// that make both diagonals digit-balanced with the forced S2. (order, seed)
// fixes the result. Throws SearchFailure when both stages come up empty.
DigitFunctionalSystem search_functionals(int order, std::uint64_t seed,
                                         const SearchOptions& options = {},
                                         SearchStats* stats = nullptr);

// Cell (r, c) holds the digits of every form evaluated at its vector.
Grid assemble_grid(const DigitFunctionalSystem& system, int order);

enum class OracleProperty { kCompleteness, kMagic, kBimagic };

std::string_view to_string(OracleProperty property);
OracleProperty parse_oracle_property(std::string_view text);

struct OracleOptions {
  std::int64_t node_budget = 200'000'000;
  std::size_t max_solutions = 1000;  // stored; all are counted
};

struct OracleResult {
  std::vector<Grid> solutions;
  std::int64_t solution_count = 0;
  std::int64_t nodes = 0;
  bool exhaustive = false;  // search space fully explored within budget
  SumTargets targets;
};

// Plain backtracking over cell assignments from the complete entry set with
// line-sum pruning. Orders up to 4 only.
OracleResult oracle_search(int order, const Alphabet& alphabet, int width,
                           OracleProperty property,
                           const OracleOptions& options = {});

// Digit set used by the construction for an order (binary for powers of
// two, ternary for powers of three).
Alphabet construction_alphabet(int order);
int construction_width(int order);

struct TargetsCrosscheck {
  int order = 0;
  Alphabet alphabet{std::vector<int>{0}};
  int width = 0;
  SumTargets enumerated;
  SumTargets positional;
  std::vector<PublishedComparison> published;
};

// Both computation routes must agree; a mismatch throws
// InvariantViolation.
TargetsCrosscheck closed_form_targets_crosscheck(int order);

}  // namespace bimagic
