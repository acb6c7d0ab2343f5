#include "bimagic/construct.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "bimagic/errors.hpp"

namespace bimagic {

namespace {

int ipow(int base, int exponent) {
  int out = 1;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

int mod(int value, int prime) { return ((value % prime) + prime) % prime; }

// Base-p code of a coordinate vector, first component most significant.
int encode(const std::vector<int>& v, int prime) {
  int code = 0;
  for (int x : v) code = code * prime + x;
  return code;
}

std::vector<int> decode(int code, int prime, int dim) {
  std::vector<int> v(static_cast<std::size_t>(dim));
  for (int k = dim - 1; k >= 0; --k) {
    v[k] = code % prime;
    code /= prime;
  }
  return v;
}

bool is_zero(const std::vector<int>& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

// u and v span a 2-dimensional space over GF(p).
bool independent(const std::vector<int>& u, const std::vector<int>& v,
                 int prime) {
  if (is_zero(u) || is_zero(v)) return false;
  for (int k = 1; k < prime; ++k) {
    bool multiple = true;
    for (std::size_t i = 0; i < u.size() && multiple; ++i)
      multiple = mod(k * u[i], prime) == v[i];
    if (multiple) return false;
  }
  return true;
}

int rank(std::vector<std::vector<int>> rows, int prime) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    // Inverse of a nonzero element: x^(p-2).
    int inv = 1;
    for (int k = 0; k < prime - 2; ++k) inv = mod(inv * rows[r][c], prime);
    for (auto& x : rows[r]) x = mod(x * inv, prime);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = mod(rows[i][j] - f * rows[r][j], prime);
    }
    ++r;
  }
  return r;
}

// Fisher-Yates driven directly by the engine so the permutation does not
// depend on the standard library's distribution implementation.
void seeded_shuffle(std::vector<int>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

class FunctionalSearch {
 public:
  FunctionalSearch(const CellSpace& space, std::vector<Direction> catalog)
      : space_(space),
        size_(ipow(space.prime, space.dim())),
        catalog_(std::move(catalog)) {
    for (int code = 1; code < size_; ++code) {
      LinearForm form{decode(code, space_.prime, space_.dim()), 0};
      std::vector<std::vector<int>> restricted;
      bool balanced = true;
      for (const Direction& dir : catalog_) {
        restricted.push_back(restrict_to(form, dir, space_.prime));
        balanced = balanced && !is_zero(restricted.back());
      }
      if (!balanced) continue;
      codes_.push_back(code);
      restrictions_.push_back(std::move(restricted));
    }
    const std::size_t n = codes_.size();
    compatible_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool ok = i != j;
        for (std::size_t d = 0; d < catalog_.size() && ok; ++d)
          ok = independent(restrictions_[i][d], restrictions_[j][d],
                           space_.prime);
        compatible_[i * n + j] = ok;
      }
    }
  }

  enum class Outcome { kFound, kExhausted, kBudget };
  using Accept = std::function<bool(const std::vector<LinearForm>&)>;

  // candidate_order holds indices into the candidate list. Every complete
  // system is offered to `accept`; the search continues past rejections.
  Outcome run(const std::vector<int>& candidate_order, std::int64_t budget,
              std::int64_t& nodes, const Accept& accept,
              std::vector<LinearForm>& found) {
    order_ = &candidate_order;
    accept_ = &accept;
    budget_ = budget;
    nodes_ = 0;
    chosen_.clear();
    span_.assign(static_cast<std::size_t>(size_), 0);
    span_[0] = 1;
    members_ = {0};
    const Outcome out = descend(0);
    nodes += nodes_;
    if (out == Outcome::kFound) found = forms();
    return out;
  }

  std::size_t candidate_count() const { return codes_.size(); }

 private:
  std::vector<LinearForm> forms() const {
    std::vector<LinearForm> out;
    for (int c : chosen_)
      out.push_back({decode(codes_[c], space_.prime, space_.dim()), 0});
    return out;
  }

  Outcome descend(std::size_t start) {
    const std::size_t width = static_cast<std::size_t>(space_.dim());
    if (chosen_.size() == width)
      return (*accept_)(forms()) ? Outcome::kFound : Outcome::kExhausted;
    const auto& order = *order_;
    const std::size_t n = codes_.size();
    for (std::size_t i = start; i + (width - chosen_.size()) <= order.size();
         ++i) {
      if (++nodes_ > budget_) return Outcome::kBudget;
      const int cand = order[i];
      if (span_[codes_[cand]]) continue;
      bool ok = true;
      for (int prev : chosen_) {
        if (!compatible_[static_cast<std::size_t>(prev) * n + cand]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;

      const std::size_t mark = members_.size();
      extend_span(codes_[cand]);
      chosen_.push_back(cand);
      const Outcome out = descend(i + 1);
      if (out != Outcome::kExhausted) return out;
      chosen_.pop_back();
      for (std::size_t k = mark; k < members_.size(); ++k)
        span_[members_[k]] = 0;
      members_.resize(mark);
    }
    return Outcome::kExhausted;
  }

  void extend_span(int code) {
    const int p = space_.prime;
    const auto v = decode(code, p, space_.dim());
    const std::size_t base = members_.size();
    for (std::size_t s = 0; s < base; ++s) {
      const auto u = decode(members_[s], p, space_.dim());
      for (int k = 1; k < p; ++k) {
        std::vector<int> w(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) w[i] = mod(u[i] + k * v[i], p);
        const int c = encode(w, p);
        span_[c] = 1;
        members_.push_back(c);
      }
    }
  }

  CellSpace space_;
  int size_;
  std::vector<Direction> catalog_;
  std::vector<int> codes_;
  std::vector<std::vector<std::vector<int>>> restrictions_;
  std::vector<char> compatible_;

  const std::vector<int>* order_ = nullptr;
  const Accept* accept_ = nullptr;
  std::int64_t budget_ = 0;
  std::int64_t nodes_ = 0;
  std::vector<int> chosen_;
  std::vector<char> span_;
  std::vector<int> members_;
};

std::vector<int> identity_labels(int order) {
  std::vector<int> out(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) out[i] = i;
  return out;
}

// Random block-preserving labelling of one axis: a permutation of the
// groups of `group` consecutive indices, then of the indices inside each.
std::vector<int> random_labels(int order, int group, std::mt19937_64& rng) {
  std::vector<int> high = identity_labels(order / group);
  seeded_shuffle(high, rng);
  std::vector<int> out(static_cast<std::size_t>(order));
  std::vector<int> low = identity_labels(group);
  for (int g = 0; g < order / group; ++g) {
    seeded_shuffle(low, rng);
    for (int j = 0; j < group; ++j) out[g * group + j] = high[g] * group + low[j];
  }
  return out;
}

// Searches labellings under which both diagonals are digit-balanced and
// reach the forced S2.
class DiagonalFixer {
 public:
  DiagonalFixer(const CellSpace& space, BlockShape shape,
                const std::vector<LinearForm>& forms)
      : space_(space), shape_(shape), n_(space.order()) {
    const Alphabet alphabet = construction_alphabet(n_);
    targets_ = sum_targets(alphabet, static_cast<int>(forms.size()), n_);
    width_ = static_cast<int>(forms.size());
    digits_.resize(static_cast<std::size_t>(n_) * n_ * width_);
    values_.resize(static_cast<std::size_t>(n_) * n_);
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) {
        const auto x = cell_vector(space_, r, c);
        Wide v = 0;
        for (int k = 0; k < width_; ++k) {
          const int d = forms[k].evaluate(x, space_.prime);
          digits_[(static_cast<std::size_t>(r) * n_ + c) * width_ + k] = d;
          v = v * 10 + d;
        }
        values_[static_cast<std::size_t>(r) * n_ + c] = v;
      }
    }
  }

  bool diagonals_ok(const std::vector<int>& rows,
                    const std::vector<int>& cols) const {
    return line_ok(rows, cols, false) && line_ok(rows, cols, true);
  }

  std::optional<std::pair<std::vector<int>, std::vector<int>>> search(
      std::mt19937_64& rng, std::int64_t samples, std::int64_t& tried) const {
    for (std::int64_t s = 0; s < samples; ++s) {
      ++tried;
      auto rows = random_labels(n_, shape_.rows, rng);
      auto cols = random_labels(n_, shape_.cols, rng);
      if (diagonals_ok(rows, cols)) return std::pair{rows, cols};
    }
    return std::nullopt;
  }

 private:
  bool line_ok(const std::vector<int>& rows, const std::vector<int>& cols,
               bool anti) const {
    Wide s1 = 0;
    Wide s2 = 0;
    std::vector<int> count(static_cast<std::size_t>(width_) * space_.prime, 0);
    for (int i = 0; i < n_; ++i) {
      const std::size_t cell =
          static_cast<std::size_t>(rows[i]) * n_ + cols[anti ? n_ - 1 - i : i];
      const Wide v = values_[cell];
      s1 += v;
      s2 += v * v;
      for (int k = 0; k < width_; ++k)
        ++count[static_cast<std::size_t>(k) * space_.prime +
                digits_[cell * width_ + k]];
    }
    if (s1 != targets_.s1 || s2 != targets_.s2) return false;
    for (int c : count)
      if (c != n_ / space_.prime) return false;
    return true;
  }

  CellSpace space_;
  BlockShape shape_;
  int n_;
  int width_ = 0;
  SumTargets targets_;
  std::vector<int> digits_;
  std::vector<Wide> values_;
};

}  // namespace

int CellSpace::order() const { return ipow(prime, half_dim); }

CellSpace cell_space_for(int order) {
  for (int p : {2, 3}) {
    int m = 0;
    int n = 1;
    while (n < order) {
      n *= p;
      ++m;
    }
    if (n == order && m >= 1) return {p, m};
  }
  throw InputError("order " + std::to_string(order) +
                   " is not a power of 2 or 3");
}

std::vector<int> cell_vector(const CellSpace& space, int row, int col) {
  auto r = decode(row, space.prime, space.half_dim);
  auto c = decode(col, space.prime, space.half_dim);
  r.insert(r.end(), c.begin(), c.end());
  return r;
}

int LinearForm::evaluate(const std::vector<int>& x, int prime) const {
  int acc = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * x[i];
  return mod(acc, prime);
}

std::vector<Direction> direction_catalog(const CellSpace& space,
                                         BlockShape block_shape) {
  const int m = space.half_dim;
  const int p = space.prime;
  const auto unit = [&](int i) {
    std::vector<int> v(static_cast<std::size_t>(2 * m), 0);
    v[i] = 1;
    return v;
  };

  int a = 0;
  int b = 0;
  while (ipow(p, a) < block_shape.rows) ++a;
  while (ipow(p, b) < block_shape.cols) ++b;
  if (ipow(p, a) != block_shape.rows || ipow(p, b) != block_shape.cols ||
      a + b != m)
    throw ShapeError("block shape " + to_string(block_shape) +
                     " is not a power-of-" + std::to_string(p) +
                     " tiling of order " + std::to_string(space.order()));

  Direction rows{LineKind::kRows, {}};
  Direction cols{LineKind::kColumns, {}};
  Direction main{LineKind::kMainDiagonal, {}};
  Direction anti{LineKind::kAntiDiagonal, {}};
  Direction blocks{LineKind::kBlocks, {}};
  for (int i = 0; i < m; ++i) {
    rows.basis.push_back(unit(m + i));
    cols.basis.push_back(unit(i));
    auto diag = unit(i);
    diag[m + i] = 1;
    main.basis.push_back(diag);
    // Column N-1-i has base-p digits (p-1) - digit, so the anti-diagonal is
    // a coset of {(t, -t)}.
    auto skew = unit(i);
    skew[m + i] = p - 1;
    anti.basis.push_back(skew);
  }
  // Inside a block only the low-order row and column digits vary.
  for (int i = m - a; i < m; ++i) blocks.basis.push_back(unit(i));
  for (int i = 2 * m - b; i < 2 * m; ++i) blocks.basis.push_back(unit(i));
  return {rows, cols, main, anti, blocks};
}

std::vector<int> restrict_to(const LinearForm& form, const Direction& dir,
                             int prime) {
  std::vector<int> out;
  out.reserve(dir.basis.size());
  for (const auto& v : dir.basis) {
    int acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += form.coeffs[i] * v[i];
    out.push_back(mod(acc, prime));
  }
  return out;
}

bool DigitFunctionalSystem::identity_indexing() const {
  const auto is_identity = [](const std::vector<int>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] != static_cast<int>(i)) return false;
    return true;
  };
  return is_identity(row_index) && is_identity(col_index);
}

std::vector<int> cell_vector(const DigitFunctionalSystem& system, int row,
                             int col) {
  const int r = system.row_index.empty() ? row : system.row_index[row];
  const int c = system.col_index.empty() ? col : system.col_index[col];
  return cell_vector(system.space, r, c);
}

SystemConditions evaluate_conditions(const DigitFunctionalSystem& system,
                                     BlockShape block_shape) {
  const int p = system.space.prime;
  SystemConditions out;
  std::vector<std::vector<int>> rows;
  for (const auto& f : system.forms) rows.push_back(f.coeffs);
  out.invertible = static_cast<int>(rows.size()) == system.space.dim() &&
                   rank(rows, p) == system.space.dim();

  const bool identity = system.identity_indexing();
  const bool tiled = preserves_block_tiling(system, block_shape);
  out.balanced = true;
  out.pair_uniform = true;
  for (const Direction& dir : direction_catalog(system.space, block_shape)) {
    DirectionConditions cond{dir.kind, true, true, true};
    if (dir.kind == LineKind::kMainDiagonal ||
        dir.kind == LineKind::kAntiDiagonal)
      cond.applicable = identity;
    if (dir.kind == LineKind::kBlocks) cond.applicable = tiled;
    std::vector<std::vector<int>> restricted;
    for (const auto& f : system.forms)
      restricted.push_back(restrict_to(f, dir, p));
    for (std::size_t i = 0; i < restricted.size(); ++i) {
      if (is_zero(restricted[i])) cond.balanced = false;
      for (std::size_t j = i + 1; j < restricted.size(); ++j)
        if (!independent(restricted[i], restricted[j], p))
          cond.pair_uniform = false;
    }
    if (cond.applicable) {
      out.balanced = out.balanced && cond.balanced;
      out.pair_uniform = out.pair_uniform && cond.pair_uniform;
    }
    out.directions.push_back(cond);
  }
  return out;
}

bool preserves_block_tiling(const DigitFunctionalSystem& system,
                            BlockShape block_shape) {
  const auto axis_ok = [](const std::vector<int>& labels, int order,
                          int group) {
    if (labels.empty()) return true;
    for (int g = 0; g < order; g += group) {
      const int high = labels[g] / group;
      for (int j = g; j < g + group; ++j)
        if (labels[j] / group != high) return false;
    }
    return true;
  };
  const int n = system.space.order();
  return is_valid_block_shape(n, block_shape) &&
         axis_ok(system.row_index, n, block_shape.rows) &&
         axis_ok(system.col_index, n, block_shape.cols);
}

DigitFunctionalSystem search_functionals(int order, std::uint64_t seed,
                                         const SearchOptions& options,
                                         SearchStats* stats) {
  const CellSpace space = cell_space_for(order);
  const BlockShape shape =
      options.block_shape.value_or(default_block_shape(order));
  if (!is_valid_block_shape(order, shape))
    throw ShapeError("block shape " + to_string(shape) +
                     " does not tile order " + std::to_string(order));
  std::vector<Direction> catalog = direction_catalog(space, shape);
  std::vector<Direction> off_diagonal;
  for (const auto& d : catalog)
    if (d.kind != LineKind::kMainDiagonal && d.kind != LineKind::kAntiDiagonal)
      off_diagonal.push_back(d);

  SearchStats local;
  const auto finish = [&](std::vector<LinearForm> forms, std::vector<int> rows,
                          std::vector<int> cols) {
    if (stats) *stats = local;
    return DigitFunctionalSystem{space, std::move(forms), std::move(rows),
                                 std::move(cols)};
  };
  const auto shuffled = [&](std::size_t count, int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::vector<int> candidates(count);
    for (std::size_t i = 0; i < count; ++i) candidates[i] = static_cast<int>(i);
    seeded_shuffle(candidates, rng);
    return candidates;
  };
  const auto accept_any = [](const std::vector<LinearForm>&) { return true; };

  bool infeasible = false;
  {
    FunctionalSearch search(space, catalog);
    for (int restart = 0; restart < options.restarts; ++restart) {
      std::vector<LinearForm> forms;
      local.restarts_used = restart + 1;
      const auto outcome = search.run(shuffled(search.candidate_count(), restart),
                                      options.node_budget, local.nodes,
                                      accept_any, forms);
      if (outcome == FunctionalSearch::Outcome::kFound)
        return finish(std::move(forms), identity_labels(order),
                      identity_labels(order));
      if (outcome == FunctionalSearch::Outcome::kExhausted) {
        infeasible = true;
        break;
      }
    }
  }

  // Fallback: rows, columns and blocks algebraically, diagonals by
  // relabelling.
  FunctionalSearch search(space, off_diagonal);
  for (int restart = 0; restart < options.restarts; ++restart) {
    std::vector<int> rows;
    std::vector<int> cols;
    std::uint32_t system_index = 0;
    const auto accept = [&](const std::vector<LinearForm>& forms) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(restart), ++system_index};
      std::mt19937_64 rng(seq);
      DiagonalFixer fixer(space, shape, forms);
      auto labels = fixer.search(rng, options.labelling_samples,
                                 local.labellings_tried);
      if (!labels) return false;
      rows = std::move(labels->first);
      cols = std::move(labels->second);
      return true;
    };
    std::vector<LinearForm> forms;
    local.restarts_used = restart + 1;
    const auto outcome =
        search.run(shuffled(search.candidate_count(), restart),
                   options.node_budget, local.nodes, accept, forms);
    if (outcome == FunctionalSearch::Outcome::kFound) {
      local.relabelled = true;
      return finish(std::move(forms), std::move(rows), std::move(cols));
    }
    if (outcome == FunctionalSearch::Outcome::kExhausted) break;
  }

  if (stats) *stats = local;
  throw SearchFailure(
      "order " + std::to_string(order) + ", blocks " + to_string(shape) +
      ": no digit functional system found (" +
      (infeasible ? std::string("linear systems proven infeasible; ")
                  : std::string()) +
      "budget " + std::to_string(options.node_budget) + " nodes x " +
      std::to_string(options.restarts) + " restarts, " +
      std::to_string(local.nodes) + " nodes used)");
}

Grid assemble_grid(const DigitFunctionalSystem& system, int order) {
  const CellSpace& space = system.space;
  if (space.order() != order)
    throw ShapeError("system is for order " + std::to_string(space.order()) +
                     ", not " + std::to_string(order));
  for (const auto* labels : {&system.row_index, &system.col_index}) {
    if (labels->empty()) continue;
    std::vector<int> sorted = *labels;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_labels(order))
      throw InputError("index labelling is not a permutation of 0.." +
                       std::to_string(order - 1));
  }
  std::vector<int> digits(static_cast<std::size_t>(space.prime));
  for (int d = 0; d < space.prime; ++d) digits[d] = d;

  std::vector<Entry> cells;
  cells.reserve(static_cast<std::size_t>(order) * order);
  std::string text(system.forms.size(), '0');
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) {
      const auto x = cell_vector(system, r, c);
      for (std::size_t k = 0; k < system.forms.size(); ++k)
        text[k] =
            static_cast<char>('0' + system.forms[k].evaluate(x, space.prime));
      cells.push_back(Entry::parse(text));
    }
  }
  return Grid::make(order, Alphabet(std::move(digits)),
                    static_cast<int>(system.forms.size()), std::move(cells));
}

std::string_view to_string(OracleProperty property) {
  switch (property) {
    case OracleProperty::kCompleteness:
      return "completeness";
    case OracleProperty::kMagic:
      return "magic";
    case OracleProperty::kBimagic:
      return "bimagic";
  }
  return "?";
}

OracleProperty parse_oracle_property(std::string_view text) {
  if (text == "completeness") return OracleProperty::kCompleteness;
  if (text == "magic") return OracleProperty::kMagic;
  if (text == "bimagic") return OracleProperty::kBimagic;
  throw InputError("unknown property '" + std::string(text) +
                   "', expected completeness, magic or bimagic");
}

namespace {

class OracleSearch {
 public:
  OracleSearch(int order, std::vector<Entry> entries, SumTargets targets,
               OracleProperty property, const OracleOptions& options,
               OracleResult& result, const Alphabet& alphabet, int width)
      : n_(order),
        entries_(std::move(entries)),
        targets_(targets),
        property_(property),
        options_(options),
        result_(result),
        alphabet_(alphabet),
        width_(width) {
    for (const Entry& e : entries_) values_.push_back(e.value());
    used_.assign(entries_.size(), 0);
    placed_.assign(entries_.size(), 0);
    // Lines: rows 0..n-1, columns n..2n-1, main 2n, anti 2n+1.
    const int lines = 2 * n_ + 2;
    sum_.assign(lines, 0);
    sum_sq_.assign(lines, 0);
    filled_.assign(lines, 0);
  }

  bool run() { return descend(0); }

 private:
  // Returns false when the node budget runs out.
  bool descend(int cell) {
    if (cell == n_ * n_) {
      ++result_.solution_count;
      if (result_.solutions.size() < options_.max_solutions) {
        std::vector<Entry> cells;
        for (int idx : placed_) cells.push_back(entries_[idx]);
        result_.solutions.push_back(
            Grid::make(n_, alphabet_, width_, std::move(cells)));
      }
      return true;
    }
    const int r = cell / n_;
    const int c = cell % n_;
    int lines[4];
    int count = 0;
    lines[count++] = r;
    lines[count++] = n_ + c;
    if (r == c) lines[count++] = 2 * n_;
    if (r + c == n_ - 1) lines[count++] = 2 * n_ + 1;

    for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
      if (used_[idx]) continue;
      if (++result_.nodes > options_.node_budget) return false;
      const std::int64_t v = values_[idx];
      bool ok = true;
      for (int k = 0; k < count; ++k) {
        const int line = lines[k];
        sum_[line] += v;
        sum_sq_[line] += v * v;
        ++filled_[line];
        if (property_ != OracleProperty::kCompleteness) {
          if (sum_[line] > targets_.s1 ||
              (filled_[line] == n_ && sum_[line] != targets_.s1))
            ok = false;
          if (property_ == OracleProperty::kBimagic &&
              (sum_sq_[line] > targets_.s2 ||
               (filled_[line] == n_ && sum_sq_[line] != targets_.s2)))
            ok = false;
        }
      }
      if (ok) {
        used_[idx] = 1;
        placed_[cell] = static_cast<int>(idx);
        const bool within_budget = descend(cell + 1);
        used_[idx] = 0;
        if (!within_budget) return false;
      }
      for (int k = 0; k < count; ++k) {
        const int line = lines[k];
        sum_[line] -= v;
        sum_sq_[line] -= v * v;
        --filled_[line];
      }
    }
    return true;
  }

  int n_;
  std::vector<Entry> entries_;
  std::vector<std::int64_t> values_;
  SumTargets targets_;
  OracleProperty property_;
  const OracleOptions& options_;
  OracleResult& result_;
  const Alphabet& alphabet_;
  int width_;
  std::vector<char> used_;
  std::vector<int> placed_;
  std::vector<Wide> sum_;
  std::vector<Wide> sum_sq_;
  std::vector<int> filled_;
};

}  // namespace

OracleResult oracle_search(int order, const Alphabet& alphabet, int width,
                           OracleProperty property,
                           const OracleOptions& options) {
  if (order < 1 || order > 4)
    throw InputError("oracle search supports orders 1..4, got " +
                     std::to_string(order));
  OracleResult result;
  result.targets = sum_targets(alphabet, width, order);
  OracleSearch search(order, enumerate_entries(alphabet, width),
                      result.targets, property, options, result, alphabet,
                      width);
  result.exhaustive = search.run();
  return result;
}

Alphabet construction_alphabet(int order) {
  const CellSpace space = cell_space_for(order);
  std::vector<int> digits;
  for (int d = 0; d < space.prime; ++d) digits.push_back(d);
  return Alphabet(std::move(digits));
}

int construction_width(int order) { return cell_space_for(order).dim(); }

TargetsCrosscheck closed_form_targets_crosscheck(int order) {
  TargetsCrosscheck out;
  out.order = order;
  out.alphabet = construction_alphabet(order);
  out.width = construction_width(order);
  out.enumerated = sum_targets(out.alphabet, out.width, order);
  out.positional = sum_targets_by_position(out.alphabet, out.width, order);
  if (!(out.enumerated == out.positional))
    throw InvariantViolation(
        "order " + std::to_string(order) +
        ": enumerated and positional sum constants disagree (S1 " +
        to_string(out.enumerated.s1) + " vs " + to_string(out.positional.s1) +
        ", S2 " + to_string(out.enumerated.s2) + " vs " +
        to_string(out.positional.s2) + ")");
  out.published = compare_with_published(out.alphabet, out.width, order,
                                         out.enumerated.s1, out.enumerated.s2);
  return out;
}

}  // namespace bimagic
