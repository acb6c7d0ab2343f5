#include "bimagic/verify.hpp"

#include <algorithm>
#include <map>

#include "bimagic/errors.hpp"

namespace bimagic {

namespace {

void record(std::vector<Violation>& out, std::size_t& count,
            const CheckOptions& options, Violation v) {
  ++count;
  if (out.size() < options.max_violations) out.push_back(std::move(v));
}

Wide cell_power(const Entry& e, int degree) {
  const Wide v = e.value();
  return degree == 1 ? v : v * v;
}

SumCheck check_sums(const Grid& grid, const std::vector<LineSet>& lines,
                    int degree, bool blocks, const CheckOptions& options) {
  SumCheck result;
  result.degree = degree;

  struct GroupSum {
    LineKind kind;
    int index;
    Wide sum;
  };
  std::vector<GroupSum> sums;
  for (const LineSet& set : lines) {
    if (is_principal(set.kind) == blocks) continue;
    std::optional<Wide> common;
    bool agree = true;
    for (std::size_t g = 0; g < set.groups.size(); ++g) {
      Wide sum = 0;
      for (Cell cell : set.groups[g]) sum += cell_power(grid.at(cell), degree);
      sums.push_back({set.kind, static_cast<int>(g), sum});
      if (!common)
        common = sum;
      else if (*common != sum)
        agree = false;
    }
    result.per_kind.push_back({set.kind, agree ? common : std::nullopt});
  }
  if (sums.empty()) {
    result.holds = true;
    return result;
  }

  // A magic square's lines must all equal total / N; fall back to the first
  // group's sum when that division is inexact.
  Wide total = 0;
  for (const Entry& e : grid.cells()) total += cell_power(e, degree);
  const Wide expected =
      total % grid.order() == 0 ? total / grid.order() : sums.front().sum;

  result.holds = std::all_of(sums.begin(), sums.end(), [&](const GroupSum& s) {
    return s.sum == sums.front().sum;
  });
  if (result.holds) result.constant = sums.front().sum;
  for (const GroupSum& s : sums) {
    if (s.sum != expected)
      record(result.violations, result.violation_count, options,
             {s.kind, s.index, "", to_string(expected), to_string(s.sum)});
  }
  return result;
}

}  // namespace

SumCheck check_magic(const Grid& grid, const std::vector<LineSet>& lines,
                     const CheckOptions& options) {
  return check_sums(grid, lines, 1, false, options);
}

SumCheck check_bimagic(const Grid& grid, const std::vector<LineSet>& lines,
                       const CheckOptions& options) {
  return check_sums(grid, lines, 2, false, options);
}

SumCheck check_block_magic(const Grid& grid, const std::vector<LineSet>& lines,
                           const CheckOptions& options) {
  return check_sums(grid, lines, 1, true, options);
}

SumCheck check_block_bimagic(const Grid& grid,
                             const std::vector<LineSet>& lines,
                             const CheckOptions& options) {
  return check_sums(grid, lines, 2, true, options);
}

StructureCheck check_digit_balance(const Grid& grid,
                                   const std::vector<LineSet>& lines,
                                   const CheckOptions& options) {
  StructureCheck result;
  const int a = grid.alphabet().size();
  const int w = grid.width();
  for (const LineSet& set : lines) {
    for (std::size_t g = 0; g < set.groups.size(); ++g) {
      const auto& group = set.groups[g];
      const int n = static_cast<int>(group.size());
      if (n % a != 0) {
        result.applicable = false;
        record(result.violations, result.violation_count, options,
               {set.kind, static_cast<int>(g), "unsatisfiable",
                "line length divisible by " + std::to_string(a),
                std::to_string(n)});
        continue;
      }
      for (int k = 0; k < w; ++k) {
        std::array<int, 10> count{};
        for (Cell cell : group) ++count[grid.at(cell).digit(k)];
        for (int d : grid.alphabet().digits()) {
          if (count[d] != n / a)
            record(result.violations, result.violation_count, options,
                   {set.kind, static_cast<int>(g),
                    "position " + std::to_string(k) + " digit " +
                        std::to_string(d),
                    std::to_string(n / a), std::to_string(count[d])});
        }
      }
    }
  }
  result.holds = result.applicable && result.violation_count == 0;
  return result;
}

StructureCheck check_pair_uniformity(const Grid& grid,
                                     const std::vector<LineSet>& lines,
                                     const CheckOptions& options) {
  StructureCheck result;
  const int a = grid.alphabet().size();
  const int w = grid.width();
  for (const LineSet& set : lines) {
    for (std::size_t g = 0; g < set.groups.size(); ++g) {
      const auto& group = set.groups[g];
      const int n = static_cast<int>(group.size());
      if (n % (a * a) != 0) {
        result.applicable = false;
        record(result.violations, result.violation_count, options,
               {set.kind, static_cast<int>(g), "unsatisfiable",
                "line length divisible by " + std::to_string(a * a),
                std::to_string(n)});
        continue;
      }
      for (int i = 0; i < w; ++i) {
        for (int j = i + 1; j < w; ++j) {
          std::array<std::array<int, 10>, 10> count{};
          for (Cell cell : group) {
            const Entry& e = grid.at(cell);
            ++count[e.digit(i)][e.digit(j)];
          }
          for (int x : grid.alphabet().digits()) {
            for (int y : grid.alphabet().digits()) {
              if (count[x][y] != n / (a * a))
                record(result.violations, result.violation_count, options,
                       {set.kind, static_cast<int>(g),
                        "positions " + std::to_string(i) + "," +
                            std::to_string(j) + " digits " +
                            std::to_string(x) + std::to_string(y),
                        std::to_string(n / (a * a)),
                        std::to_string(count[x][y])});
            }
          }
        }
      }
    }
  }
  result.holds = result.applicable && result.violation_count == 0;
  return result;
}

ImageVerdict check_image(const Grid& grid, BlockShape block_shape,
                         TransformKind kind, const CheckOptions& options) {
  ImageVerdict verdict;
  verdict.kind = kind;
  std::optional<TransformedGrid> image;
  try {
    image = apply_transform(grid, kind);
  } catch (const Error& e) {
    verdict.reason = e.what();
    return verdict;
  }
  verdict.applicable = true;
  verdict.alphabet = image->grid.alphabet();
  const auto lines = line_sets(image->grid.order(), block_shape);
  verdict.magic = check_magic(image->grid, lines, options);
  verdict.bimagic = check_bimagic(image->grid, lines, options);
  verdict.block_magic = check_block_magic(image->grid, lines, options);
  verdict.block_bimagic = check_block_bimagic(image->grid, lines, options);
  verdict.universal = verdict.magic.holds;
  verdict.universal_bimagic = verdict.magic.holds && verdict.bimagic.holds;

  const auto source_lines = line_sets(grid.order(), block_shape);
  const SumCheck s1 = check_magic(grid, source_lines, options);
  const SumCheck s2 = check_bimagic(grid, source_lines, options);
  verdict.same_constants = s1.constant && s2.constant &&
                           s1.constant == verdict.magic.constant &&
                           s2.constant == verdict.bimagic.constant;
  return verdict;
}

UniversalityResult check_universal(const Grid& grid, BlockShape block_shape,
                                   const CheckOptions& options) {
  return {check_image(grid, block_shape, TransformKind::kRotate180, options),
          check_image(grid, block_shape, TransformKind::kMirror, options)};
}

bool VerificationReport::passes() const {
  return completeness.complete && magic.holds && bimagic.holds &&
         block_bimagic.holds && universality.rotation.universal &&
         universality.mirror.universal;
}

VerificationReport full_report(const Grid& grid, BlockShape block_shape,
                               const CheckOptions& options) {
  const auto lines = line_sets(grid.order(), block_shape);
  VerificationReport report;
  report.order = grid.order();
  report.alphabet = grid.alphabet();
  report.width = grid.width();
  report.block_shape = block_shape;
  report.completeness = completeness_check(grid);
  report.magic = check_magic(grid, lines, options);
  report.bimagic = check_bimagic(grid, lines, options);
  report.block_magic = check_block_magic(grid, lines, options);
  report.block_bimagic = check_block_bimagic(grid, lines, options);
  report.digit_balance = check_digit_balance(grid, lines, options);
  report.pair_uniformity = check_pair_uniformity(grid, lines, options);
  report.universality = check_universal(grid, block_shape, options);
  report.published =
      compare_with_published(grid.alphabet(), grid.width(), grid.order(),
                             report.magic.constant, report.bimagic.constant);
  return report;
}

}  // namespace bimagic
