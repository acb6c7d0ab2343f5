#include "bimagic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bimagic/construct.hpp"
#include "bimagic/document.hpp"
#include "bimagic/transform.hpp"
#include "bimagic/verify.hpp"

namespace bimagic {

namespace {

// Raised for argument problems found after CLI11 parsing.
struct UsageError : Error {
  using Error::Error;
};

bool is_generated_order(int order) {
  return order == 8 || order == 9 || order == 16;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

struct GenerateArgs {
  int order = 0;
  std::uint64_t seed = 0;
  std::string blocks;
  std::string output;
  std::int64_t budget = 10'000'000;
  int restarts = 8;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  if (!is_generated_order(a.order))
    throw UsageError("unsupported order " + std::to_string(a.order) +
                     "; expected 8, 9 or 16");
  const BlockShape shape =
      a.blocks.empty() ? default_block_shape(a.order) : parse_block_shape(a.blocks);
  if (!is_valid_block_shape(a.order, shape))
    throw UsageError("block shape " + to_string(shape) +
                     " does not tile order " + std::to_string(a.order));
  SearchOptions options;
  options.block_shape = shape;
  options.node_budget = a.budget;
  options.restarts = a.restarts;
  DigitFunctionalSystem system;
  try {
    system = search_functionals(a.order, a.seed, options);
  } catch (const SearchFailure& e) {
    err << "generate: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  GridDocument doc{assemble_grid(system, a.order), shape, a.seed, ""};
  write_output(a.output, serialize_grid_document(doc), out);
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::string blocks;
  bool verbose = false;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out) {
  const GridDocument doc = parse_grid_document(read_input(a.input, in));
  const int n = doc.grid.order();
  BlockShape shape = doc.blocks.value_or(default_block_shape(n));
  if (!a.blocks.empty()) shape = parse_block_shape(a.blocks);
  if (!is_valid_block_shape(n, shape))
    throw UsageError("block shape " + to_string(shape) +
                     " does not tile order " + std::to_string(n));
  CheckOptions options;
  if (a.verbose) options.max_violations = static_cast<std::size_t>(-1);
  const VerificationReport report = full_report(doc.grid, shape, options);
  if (a.json)
    out << report_to_json(report).dump(2) << '\n';
  else
    out << report_to_text(report);
  return report.passes() ? kExitOk : kExitPropertyFailure;
}

struct TransformArgs {
  std::string input;
  std::string op;
  std::string output;
};

int cmd_transform(const TransformArgs& a, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  const TransformKind kind = parse_transform_kind(a.op);
  const GridDocument doc = parse_grid_document(read_input(a.input, in));
  std::optional<TransformedGrid> image;
  try {
    image = apply_transform(doc.grid, kind);
  } catch (const Error& e) {
    err << "transform: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  std::string provenance = doc.provenance;
  if (!provenance.empty()) provenance += ',';
  provenance += to_string(kind);
  GridDocument result{std::move(image->grid), doc.blocks, doc.seed,
                      provenance};
  write_output(a.output, serialize_grid_document(result), out);
  return kExitOk;
}

struct SumsArgs {
  int order = 0;
  bool json = false;
};

int cmd_sums(const SumsArgs& a, std::ostream& out) {
  if (!is_generated_order(a.order))
    throw UsageError("unsupported order " + std::to_string(a.order) +
                     "; expected 8, 9 or 16");
  const TargetsCrosscheck check = closed_form_targets_crosscheck(a.order);
  if (a.json)
    out << crosscheck_to_json(check).dump(2) << '\n';
  else
    out << crosscheck_to_text(check);
  return kExitOk;
}

struct OracleArgs {
  int order = 0;
  std::string alphabet;
  int width = 0;
  std::string property;
  std::int64_t budget = OracleOptions{}.node_budget;
  std::size_t max_solutions = OracleOptions{}.max_solutions;
  bool json = false;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const Alphabet alphabet = Alphabet::parse(a.alphabet);
  const OracleProperty property = parse_oracle_property(a.property);
  OracleOptions options;
  options.node_budget = a.budget;
  options.max_solutions = a.max_solutions;
  const OracleResult result =
      oracle_search(a.order, alphabet, a.width, property, options);
  const auto doc = oracle_to_json(result, a.order, alphabet, a.width, property);
  if (a.json) {
    out << doc.dump(2) << '\n';
  } else {
    out << "order=" << a.order << " alphabet=" << alphabet.to_string()
        << " width=" << a.width << " property=" << to_string(property) << '\n'
        << "S1=" << to_string(result.targets.s1)
        << " S2=" << to_string(result.targets.s2) << '\n'
        << "verdict: " << doc["verdict"].get<std::string>() << '\n'
        << "solutions: " << result.solution_count << '\n'
        << "nodes: " << result.nodes << '\n';
    for (std::size_t i = 0; i < result.solutions.size(); ++i) {
      out << "# solution " << i << '\n';
      const Grid& g = result.solutions[i];
      for (int r = 0; r < g.order(); ++r) {
        for (int c = 0; c < g.order(); ++c)
          out << (c ? " " : "") << g.at(r, c).text();
        out << '\n';
      }
    }
  }
  return result.exhaustive ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify universal bimagic squares", "bimagic"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Construct a square");
  generate->add_option("--order", gen.order, "8, 9 or 16")->required();
  generate->add_option("--seed", gen.seed, "Search seed")->required();
  generate->add_option("--blocks", gen.blocks, "Block shape RxC");
  generate->add_option("-o,--output", gen.output, "Output path (default stdout)");
  generate->add_option("--budget", gen.budget, "Search nodes per restart");
  generate->add_option("--restarts", gen.restarts, "Search restarts");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check every property");
  verify->add_option("input", ver.input, "Grid file or - for stdin")->required();
  verify->add_option("--blocks", ver.blocks, "Block shape RxC");
  verify->add_flag("-v,--verbose", ver.verbose, "List every violation");
  verify->add_flag("--json", ver.json, "Machine-readable report");

  TransformArgs tr;
  auto* transform = app.add_subcommand("transform", "Rotate or mirror a square");
  transform->add_option("input", tr.input, "Grid file or - for stdin")->required();
  transform->add_option("--op", tr.op, "rotate180 or mirror")->required();
  transform->add_option("-o,--output", tr.output, "Output path (default stdout)");

  SumsArgs su;
  auto* sums = app.add_subcommand("sums", "Forced line constants");
  sums->add_option("--order", su.order, "8, 9 or 16")->required();
  sums->add_flag("--json", su.json, "Machine-readable output");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Brute-force search, orders <= 4");
  oracle->add_option("--order", orc.order)->required();
  oracle->add_option("--alphabet", orc.alphabet, "Digits, e.g. 012")->required();
  oracle->add_option("--width", orc.width)->required();
  oracle->add_option("--property", orc.property, "completeness, magic or bimagic")
      ->required();
  oracle->add_option("--budget", orc.budget, "Node budget");
  oracle->add_option("--max-solutions", orc.max_solutions, "Solutions to print");
  oracle->add_flag("--json", orc.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bimagic: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out, err);
    if (*verify) return cmd_verify(ver, in, out);
    if (*transform) return cmd_transform(tr, in, out, err);
    if (*sums) return cmd_sums(su, out);
    if (*oracle) return cmd_oracle(orc, out);
  } catch (const UsageError& e) {
    err << "bimagic: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "bimagic: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ShapeError& e) {
    err << "bimagic: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "bimagic: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
  return kExitUsage;
}

}  // namespace bimagic
