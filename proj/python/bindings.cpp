#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bimagic/cli.hpp"
#include "bimagic/construct.hpp"
#include "bimagic/document.hpp"
#include "bimagic/errors.hpp"
#include "bimagic/transform.hpp"
#include "bimagic/verify.hpp"

namespace py = pybind11;
using namespace bimagic;

namespace {

py::object to_int(Wide v) {
  return py::module_::import("builtins").attr("int")(to_string(v));
}

BlockShape shape_for(const GridDocument& doc,
                     const std::optional<std::string>& blocks) {
  if (blocks) return parse_block_shape(*blocks);
  return doc.blocks.value_or(default_block_shape(doc.grid.order()));
}

py::dict document_dict(const GridDocument& doc) {
  py::list rows;
  for (int r = 0; r < doc.grid.order(); ++r) {
    py::list row;
    for (int c = 0; c < doc.grid.order(); ++c)
      row.append(doc.grid.at(r, c).text());
    rows.append(row);
  }
  py::dict out;
  out["order"] = doc.grid.order();
  out["alphabet"] = doc.grid.alphabet().to_string();
  out["width"] = doc.grid.width();
  out["blocks"] = doc.blocks ? py::object(py::str(to_string(*doc.blocks)))
                             : py::object(py::none());
  out["seed"] = doc.seed ? py::object(py::int_(*doc.seed)) : py::object(py::none());
  out["provenance"] = doc.provenance;
  out["rows"] = rows;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bimagic square construction and verification";

  static py::exception<Error> error(m, "Error");
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  static py::exception<SearchFailure> search_failure(m, "SearchFailure",
                                                     error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SearchFailure& e) {
      py::set_error(search_failure, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "sum_targets",
      [](const std::string& alphabet, int width, int order) {
        const SumTargets t = sum_targets(Alphabet::parse(alphabet), width, order);
        return py::make_tuple(to_int(t.s1), to_int(t.s2));
      },
      py::arg("alphabet"), py::arg("width"), py::arg("order"),
      "(S1, S2) forced by the complete digit set.");

  m.def(
      "sums_json",
      [](int order) {
        return crosscheck_to_json(closed_form_targets_crosscheck(order)).dump();
      },
      py::arg("order"));

  m.def(
      "generate",
      [](int order, std::uint64_t seed, std::optional<std::string> blocks) {
        SearchOptions options;
        const BlockShape shape =
            blocks ? parse_block_shape(*blocks) : default_block_shape(order);
        options.block_shape = shape;
        const auto system = search_functionals(order, seed, options);
        return serialize_grid_document(
            {assemble_grid(system, order), shape, seed, ""});
      },
      py::arg("order"), py::arg("seed"), py::arg("blocks") = py::none(),
      "Grid document text for (order, seed).");

  m.def(
      "verify_json",
      [](const std::string& text, std::optional<std::string> blocks) {
        const GridDocument doc = parse_grid_document(text);
        return report_to_json(full_report(doc.grid, shape_for(doc, blocks)))
            .dump();
      },
      py::arg("text"), py::arg("blocks") = py::none());

  m.def(
      "transform",
      [](const std::string& text, const std::string& op) {
        GridDocument doc = parse_grid_document(text);
        const TransformKind kind = parse_transform_kind(op);
        doc.grid = apply_transform(doc.grid, kind).grid;
        if (!doc.provenance.empty()) doc.provenance += ',';
        doc.provenance += std::string(to_string(kind));
        return serialize_grid_document(doc);
      },
      py::arg("text"), py::arg("op"));

  m.def(
      "parse",
      [](const std::string& text) { return document_dict(parse_grid_document(text)); },
      py::arg("text"));

  m.def(
      "serialize",
      [](const std::vector<std::vector<std::string>>& rows,
         const std::string& alphabet, int width, std::optional<std::string> blocks,
         std::optional<std::uint64_t> seed, const std::string& provenance) {
        std::vector<std::vector<Entry>> cells;
        for (const auto& row : rows) {
          cells.emplace_back();
          for (const auto& s : row) cells.back().push_back(Entry::parse(s));
        }
        GridDocument doc{make_grid(static_cast<int>(rows.size()),
                                   Alphabet::parse(alphabet), width,
                                   std::move(cells)),
                         std::nullopt, seed, provenance};
        if (blocks) doc.blocks = parse_block_shape(*blocks);
        return serialize_grid_document(doc);
      },
      py::arg("rows"), py::arg("alphabet"), py::arg("width"),
      py::arg("blocks") = py::none(), py::arg("seed") = py::none(),
      py::arg("provenance") = "");

  m.def(
      "oracle_json",
      [](int order, const std::string& alphabet, int width,
         const std::string& property, std::int64_t budget) {
        const Alphabet a = Alphabet::parse(alphabet);
        const OracleProperty prop = parse_oracle_property(property);
        OracleOptions options;
        options.node_budget = budget;
        const OracleResult result = oracle_search(order, a, width, prop, options);
        return oracle_to_json(result, order, a, width, prop).dump();
      },
      py::arg("order"), py::arg("alphabet"), py::arg("width"),
      py::arg("property"), py::arg("budget") = 200'000'000);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("input") = "",
      "(exit code, stdout, stderr) of the command-line tool.");
}
