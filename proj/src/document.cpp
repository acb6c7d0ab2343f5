#include "bimagic/document.hpp"

#include <charconv>
#include <sstream>

namespace bimagic {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool is_skipped(std::string_view line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

template <typename T>
T parse_number(const Token& token, std::string_view value, int line,
               const char* key) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
    throw ParseError(line, token.column,
                     std::string("invalid value for ") + key + ": '" +
                         std::string(value) + "'");
  return out;
}

}  // namespace

GridDocument parse_grid_document(std::string_view text) {
  struct Line {
    int number;
    std::string_view text;
  };
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    if (!is_skipped(line)) lines.push_back({number, line});
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(number + 1, 1, "missing header line");

  // Header.
  const Line& header = lines.front();
  std::optional<int> order;
  std::optional<Alphabet> alphabet;
  std::optional<int> width;
  std::optional<BlockShape> blocks;
  std::optional<std::uint64_t> seed;
  std::string provenance;
  for (const Token& token : split_tokens(header.text)) {
    const auto eq = token.text.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(header.number, token.column,
                       "expected key=value, got '" + std::string(token.text) +
                           "'");
    const auto key = token.text.substr(0, eq);
    const auto value = token.text.substr(eq + 1);
    try {
      if (key == "order") {
        order = parse_number<int>(token, value, header.number, "order");
        if (*order < 1)
          throw ParseError(header.number, token.column,
                           "order must be positive");
      } else if (key == "alphabet") {
        alphabet = Alphabet::parse(value);
      } else if (key == "width") {
        width = parse_number<int>(token, value, header.number, "width");
        if (*width < 1 || *width > kMaxWidth)
          throw ParseError(header.number, token.column,
                           "width must be in 1.." + std::to_string(kMaxWidth));
      } else if (key == "blocks") {
        blocks = parse_block_shape(value);
      } else if (key == "seed") {
        seed = parse_number<std::uint64_t>(token, value, header.number, "seed");
      } else if (key == "provenance") {
        provenance = std::string(value);
      } else {
        throw ParseError(header.number, token.column,
                         "unknown header key '" + std::string(key) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(header.number, token.column, e.what());
    }
  }
  if (!order) throw ParseError(header.number, 1, "header lacks order=");
  if (!alphabet) throw ParseError(header.number, 1, "header lacks alphabet=");
  if (!width) throw ParseError(header.number, 1, "header lacks width=");
  if (blocks && !is_valid_block_shape(*order, *blocks))
    throw ParseError(header.number, 1,
                     "block shape " + to_string(*blocks) +
                         " does not tile order " + std::to_string(*order));

  // Rows.
  const int n = *order;
  if (static_cast<int>(lines.size()) - 1 < n)
    throw ParseError(number + 1, 1,
                     "truncated: expected " + std::to_string(n) +
                         " rows, got " + std::to_string(lines.size() - 1));
  if (static_cast<int>(lines.size()) - 1 > n)
    throw ParseError(lines[n + 1].number, 1,
                     "unexpected content after " + std::to_string(n) +
                         " rows");

  std::vector<Entry> cells;
  std::vector<std::pair<int, int>> where;  // line, column per cell
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    const Line& line = lines[r + 1];
    const auto tokens = split_tokens(line.text);
    if (static_cast<int>(tokens.size()) != n)
      throw ParseError(line.number,
                       tokens.size() > static_cast<std::size_t>(n)
                           ? tokens[n].column
                           : static_cast<int>(line.text.size()) + 1,
                       "expected " + std::to_string(n) + " entries, got " +
                           std::to_string(tokens.size()));
    for (const Token& token : tokens) {
      try {
        cells.push_back(Entry::parse(token.text));
      } catch (const Error& e) {
        throw ParseError(line.number, token.column, e.what());
      }
      where.emplace_back(line.number, token.column);
    }
  }
  try {
    return {Grid::make(n, *alphabet, *width, std::move(cells)), blocks, seed,
            provenance};
  } catch (const GridError& e) {
    const auto [l, c] = where[static_cast<std::size_t>(e.row()) * n + e.col()];
    throw ParseError(l, c, e.what());
  }
}

std::string serialize_grid_document(const GridDocument& doc) {
  const Grid& g = doc.grid;
  std::string out = "order=" + std::to_string(g.order()) +
                    " alphabet=" + g.alphabet().to_string() +
                    " width=" + std::to_string(g.width());
  if (doc.blocks) out += " blocks=" + to_string(*doc.blocks);
  if (doc.seed) out += " seed=" + std::to_string(*doc.seed);
  if (!doc.provenance.empty()) out += " provenance=" + doc.provenance;
  out += '\n';
  for (int r = 0; r < g.order(); ++r) {
    for (int c = 0; c < g.order(); ++c) {
      if (c) out += ' ';
      out += g.at(r, c).text();
    }
    out += '\n';
  }
  return out;
}

namespace {

using nlohmann::ordered_json;

std::string line_label(const Violation& v) {
  std::string out(to_string(v.kind));
  if (v.kind != LineKind::kMainDiagonal && v.kind != LineKind::kAntiDiagonal)
    out += " " + std::to_string(v.index);
  return out;
}

ordered_json violations_json(const std::vector<Violation>& list) {
  ordered_json out = ordered_json::array();
  for (const auto& v : list) {
    ordered_json item;
    item["line"] = line_label(v);
    if (!v.detail.empty()) item["detail"] = v.detail;
    item["expected"] = v.expected;
    item["observed"] = v.observed;
    out.push_back(std::move(item));
  }
  return out;
}

ordered_json optional_wide(const std::optional<Wide>& value) {
  return value ? ordered_json(to_string(*value)) : ordered_json(nullptr);
}

ordered_json sum_json(const SumCheck& check) {
  ordered_json out;
  out["holds"] = check.holds;
  out["constant"] = optional_wide(check.constant);
  ordered_json kinds = ordered_json::object();
  for (const auto& k : check.per_kind)
    kinds[std::string(to_string(k.kind))] = optional_wide(k.common);
  out["per_kind"] = std::move(kinds);
  out["violation_count"] = check.violation_count;
  out["violations"] = violations_json(check.violations);
  return out;
}

ordered_json structure_json(const StructureCheck& check) {
  ordered_json out;
  out["applicable"] = check.applicable;
  out["holds"] = check.holds;
  out["violation_count"] = check.violation_count;
  out["violations"] = violations_json(check.violations);
  return out;
}

ordered_json image_json(const ImageVerdict& v) {
  ordered_json out;
  out["applicable"] = v.applicable;
  if (!v.applicable) {
    out["reason"] = v.reason;
    return out;
  }
  out["alphabet"] = v.alphabet->to_string();
  out["universal"] = v.universal;
  out["universal_bimagic"] = v.universal_bimagic;
  out["same_constants"] = v.same_constants;
  out["magic"] = sum_json(v.magic);
  out["bimagic"] = sum_json(v.bimagic);
  out["block_magic"] = sum_json(v.block_magic);
  out["block_bimagic"] = sum_json(v.block_bimagic);
  return out;
}

ordered_json published_json(const std::vector<PublishedComparison>& list) {
  ordered_json out = ordered_json::array();
  for (const auto& p : list) {
    ordered_json item;
    item["constant"] = p.constant;
    item["printed"] = p.printed;
    item["computed"] = p.computed;
    item["status"] = p.matches ? "match" : "erratum";
    out.push_back(std::move(item));
  }
  return out;
}

std::string entry_list(const std::vector<Entry>& list) {
  std::string out;
  for (const auto& e : list) {
    if (!out.empty()) out += ' ';
    out += e.text();
  }
  return out;
}

void sum_text(std::ostream& os, const char* name, const char* symbol,
              const SumCheck& check) {
  os << name << ": ";
  if (check.holds) {
    os << "ok";
    if (check.constant) os << ' ' << symbol << '=' << to_string(*check.constant);
    os << '\n';
  } else {
    os << "FAIL (" << check.violation_count << " violations)\n";
  }
  for (const auto& v : check.violations)
    os << "  " << line_label(v) << ": expected " << v.expected << ", observed "
       << v.observed << '\n';
  if (check.violations.size() < check.violation_count)
    os << "  ... " << check.violation_count - check.violations.size()
       << " more\n";
}

void structure_text(std::ostream& os, const char* name,
                    const StructureCheck& check) {
  os << name << ": ";
  if (check.holds)
    os << "ok\n";
  else
    os << (check.applicable ? "FAIL" : "unsatisfiable") << " ("
       << check.violation_count << " violations)\n";
  for (const auto& v : check.violations)
    os << "  " << line_label(v) << " " << v.detail << ": expected "
       << v.expected << ", observed " << v.observed << '\n';
  if (check.violations.size() < check.violation_count)
    os << "  ... " << check.violation_count - check.violations.size()
       << " more\n";
}

void image_text(std::ostream& os, const ImageVerdict& v) {
  os << to_string(v.kind) << ": ";
  if (!v.applicable) {
    os << "not applicable (" << v.reason << ")\n";
    return;
  }
  os << (v.universal ? "universal" : "NOT universal") << " alphabet="
     << v.alphabet->to_string() << " magic=" << (v.magic.holds ? "yes" : "no")
     << " bimagic=" << (v.bimagic.holds ? "yes" : "no")
     << " block-magic=" << (v.block_magic.holds ? "yes" : "no")
     << " block-bimagic=" << (v.block_bimagic.holds ? "yes" : "no");
  if (v.magic.constant) os << " S1=" << to_string(*v.magic.constant);
  if (v.bimagic.constant) os << " S2=" << to_string(*v.bimagic.constant);
  os << (v.same_constants ? " (same constants)" : " (own constants)") << '\n';
  if (!v.magic.holds) {
    for (const auto& viol : v.magic.violations)
      os << "  " << line_label(viol) << ": expected " << viol.expected
         << ", observed " << viol.observed << '\n';
  }
}

void published_text(std::ostream& os,
                    const std::vector<PublishedComparison>& list) {
  for (const auto& p : list)
    os << "published " << p.constant << "=" << p.printed << ": "
       << (p.matches ? "match" : "erratum (computed " + p.computed + ")")
       << '\n';
}

}  // namespace

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json out;
  out["order"] = report.order;
  out["alphabet"] = report.alphabet.to_string();
  out["width"] = report.width;
  out["blocks"] = to_string(report.block_shape);
  out["passes"] = report.passes();
  ordered_json completeness;
  completeness["holds"] = report.completeness.complete;
  completeness["missing"] = ordered_json::array();
  for (const auto& e : report.completeness.missing)
    completeness["missing"].push_back(e.text());
  completeness["duplicates"] = ordered_json::array();
  for (const auto& e : report.completeness.duplicates)
    completeness["duplicates"].push_back(e.text());
  out["completeness"] = std::move(completeness);
  out["magic"] = sum_json(report.magic);
  out["bimagic"] = sum_json(report.bimagic);
  out["block_magic"] = sum_json(report.block_magic);
  out["block_bimagic"] = sum_json(report.block_bimagic);
  out["digit_balance"] = structure_json(report.digit_balance);
  out["pair_uniformity"] = structure_json(report.pair_uniformity);
  ordered_json universality;
  universality["rotate180"] = image_json(report.universality.rotation);
  universality["mirror"] = image_json(report.universality.mirror);
  out["universality"] = std::move(universality);
  out["published"] = published_json(report.published);
  return out;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "order=" << report.order << " alphabet=" << report.alphabet.to_string()
     << " width=" << report.width
     << " blocks=" << to_string(report.block_shape) << '\n';
  os << "completeness: ";
  if (report.completeness.complete) {
    os << "ok\n";
  } else {
    os << "FAIL\n";
    if (!report.completeness.missing.empty())
      os << "  missing: " << entry_list(report.completeness.missing) << '\n';
    if (!report.completeness.duplicates.empty())
      os << "  duplicates: " << entry_list(report.completeness.duplicates)
         << '\n';
  }
  sum_text(os, "magic", "S1", report.magic);
  sum_text(os, "bimagic", "S2", report.bimagic);
  sum_text(os, "block-magic", "S1", report.block_magic);
  sum_text(os, "block-bimagic", "S2", report.block_bimagic);
  structure_text(os, "digit-balance", report.digit_balance);
  structure_text(os, "pair-uniformity", report.pair_uniformity);
  image_text(os, report.universality.rotation);
  image_text(os, report.universality.mirror);
  published_text(os, report.published);
  os << "verdict: " << (report.passes() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

ordered_json crosscheck_to_json(const TargetsCrosscheck& check) {
  ordered_json out;
  out["order"] = check.order;
  out["alphabet"] = check.alphabet.to_string();
  out["width"] = check.width;
  out["S1"] = to_string(check.enumerated.s1);
  out["S2"] = to_string(check.enumerated.s2);
  out["methods_agree"] = check.enumerated == check.positional;
  out["published"] = published_json(check.published);
  return out;
}

std::string crosscheck_to_text(const TargetsCrosscheck& check) {
  std::ostringstream os;
  os << "order=" << check.order << " alphabet=" << check.alphabet.to_string()
     << " width=" << check.width << '\n';
  os << "S1=" << to_string(check.enumerated.s1) << '\n';
  os << "S2=" << to_string(check.enumerated.s2) << '\n';
  os << "enumeration and positional formula: "
     << (check.enumerated == check.positional ? "agree" : "DISAGREE") << '\n';
  published_text(os, check.published);
  return os.str();
}

ordered_json oracle_to_json(const OracleResult& result, int order,
                            const Alphabet& alphabet, int width,
                            OracleProperty property) {
  ordered_json out;
  out["order"] = order;
  out["alphabet"] = alphabet.to_string();
  out["width"] = width;
  out["property"] = std::string(to_string(property));
  out["S1"] = to_string(result.targets.s1);
  out["S2"] = to_string(result.targets.s2);
  out["exhaustive"] = result.exhaustive;
  out["nodes"] = result.nodes;
  out["solution_count"] = result.solution_count;
  std::string verdict;
  if (!result.exhaustive)
    verdict = result.solution_count > 0 ? "found (non-exhaustive)"
                                        : "unknown (budget exhausted)";
  else
    verdict = result.solution_count > 0 ? "feasible" : "infeasible";
  out["verdict"] = verdict;
  ordered_json solutions = ordered_json::array();
  for (const Grid& g : result.solutions) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < g.order(); ++r) {
      std::string row;
      for (int c = 0; c < g.order(); ++c) {
        if (c) row += ' ';
        row += g.at(r, c).text();
      }
      rows.push_back(row);
    }
    solutions.push_back(std::move(rows));
  }
  out["solutions"] = std::move(solutions);
  return out;
}

}  // namespace bimagic
