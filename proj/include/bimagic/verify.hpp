#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bimagic/digitspace.hpp"
#include "bimagic/grid.hpp"
#include "bimagic/transform.hpp"

namespace bimagic {

struct Violation {
  LineKind kind;
  int index = 0;       // group index within its kind
  std::string detail;  // e.g. "position 2 digit 1"; empty for sum checks
  std::string expected;
  std::string observed;
};

struct CheckOptions {
  // Violations kept per property; the full count is always reported.
  std::size_t max_violations = 16;
};

// Common sum of one line kind, when all its groups agree.
struct KindSum {
  LineKind kind;
  std::optional<Wide> common;
};

// Equal-sum check over entry values (degree 1) or their squares (degree 2).
struct SumCheck {
  int degree = 1;
  bool holds = false;
  std::optional<Wide> constant;  // set iff holds
  std::vector<KindSum> per_kind;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
};

// Per-line structural property (digit balance, pair uniformity).
struct StructureCheck {
  bool applicable = true;  // false when N is not divisible as required
  bool holds = false;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
};

// Rows, columns and both diagonals share one value sum. Block groups in
// `lines` are ignored.
SumCheck check_magic(const Grid& grid, const std::vector<LineSet>& lines,
                     const CheckOptions& options = {});
SumCheck check_bimagic(const Grid& grid, const std::vector<LineSet>& lines,
                       const CheckOptions& options = {});
// Only the block groups of `lines`.
SumCheck check_block_magic(const Grid& grid, const std::vector<LineSet>& lines,
                           const CheckOptions& options = {});
SumCheck check_block_bimagic(const Grid& grid,
                             const std::vector<LineSet>& lines,
                             const CheckOptions& options = {});

// Every group, every digit position: each alphabet digit N/|A| times.
StructureCheck check_digit_balance(const Grid& grid,
                                   const std::vector<LineSet>& lines,
                                   const CheckOptions& options = {});
// Every group, every pair of positions: each digit pair N/|A|^2 times.
StructureCheck check_pair_uniformity(const Grid& grid,
                                     const std::vector<LineSet>& lines,
                                     const CheckOptions& options = {});

// Verdict on the image of the grid under one transform. The image is
// checked against its own constants.
struct ImageVerdict {
  TransformKind kind = TransformKind::kRotate180;
  bool applicable = false;
  std::string reason;  // why not applicable
  std::optional<Alphabet> alphabet;
  SumCheck magic;
  SumCheck bimagic;
  SumCheck block_magic;
  SumCheck block_bimagic;
  bool universal = false;           // applicable and image magic
  bool universal_bimagic = false;   // ... and image bimagic
  bool same_constants = false;      // image S1/S2 equal the source's
};

struct UniversalityResult {
  ImageVerdict rotation;
  ImageVerdict mirror;
};

ImageVerdict check_image(const Grid& grid, BlockShape block_shape,
                         TransformKind kind, const CheckOptions& options = {});
UniversalityResult check_universal(const Grid& grid, BlockShape block_shape,
                                   const CheckOptions& options = {});

struct VerificationReport {
  int order = 0;
  Alphabet alphabet{std::vector<int>{0}};
  int width = 0;
  BlockShape block_shape;
  CompletenessResult completeness;
  SumCheck magic;
  SumCheck bimagic;
  SumCheck block_magic;
  SumCheck block_bimagic;
  StructureCheck digit_balance;
  StructureCheck pair_uniformity;
  UniversalityResult universality;
  std::vector<PublishedComparison> published;

  // Completeness, magic, bimagic, block bimagic and both universality
  // verdicts.
  bool passes() const;
};

VerificationReport full_report(const Grid& grid, BlockShape block_shape,
                               const CheckOptions& options = {});

}  // namespace bimagic
