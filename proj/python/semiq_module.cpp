#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semiq/constructions.hpp"
#include "semiq/pipeline.hpp"

namespace py = pybind11;

namespace {

// Reports are built as JSON internally; hand them to Python as plain dicts.
py::object to_py(const semiq::Json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

semiq::Json from_py(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) {
    return semiq::Json::parse(obj.cast<std::string>());
  }
  py::module_ json = py::module_::import("json");
  return semiq::Json::parse(json.attr("dumps")(obj).cast<std::string>());
}

py::object run(const std::string& subcommand, const py::object& input,
               std::size_t max_elements, std::size_t max_entry_bits,
               const std::string& verbosity) {
  semiq::AnalysisRequest request;
  request.subcommand = subcommand;
  request.input = from_py(input).dump();
  request.max_elements = max_elements;
  request.max_entry_bits = static_cast<std::uint32_t>(max_entry_bits);
  request.verbosity = semiq::parse_verbosity(verbosity);
  semiq::RunResult result = semiq::run_request(request);
  if (result.exit_code != 0) {
    throw std::runtime_error(result.report.dump());
  }
  return to_py(result.report);
}

}  // namespace

PYBIND11_MODULE(semiq, m) {
  m.doc() = "Exact structure analysis of finite rational matrix semigroups";

  m.def(
      "closure",
      [](const py::object& gens, std::size_t max_elements, std::size_t max_entry_bits,
         const std::string& verbosity) {
        return run("closure", gens, max_elements, max_entry_bits, verbosity);
      },
      py::arg("generators"), py::arg("max_elements") = 1000000,
      py::arg("max_entry_bits") = 4096, py::arg("verbosity") = "summary",
      "Enumerate the semigroup generated by a {'dim', 'generators'} dict.");

  m.def(
      "analyze",
      [](const py::object& gens, std::size_t max_elements, std::size_t max_entry_bits,
         const std::string& verbosity) {
        return run("analyze", gens, max_elements, max_entry_bits, verbosity);
      },
      py::arg("generators"), py::arg("max_elements") = 1000000,
      py::arg("max_entry_bits") = 4096, py::arg("verbosity") = "summary",
      "Closure plus irreducibility, minimal ideal, idempotent, group, aperiodicity.");

  m.def(
      "psi",
      [](const py::object& gens, std::size_t max_elements, std::size_t max_entry_bits,
         const std::string& verbosity) {
        return run("psi", gens, max_elements, max_entry_bits, verbosity);
      },
      py::arg("generators"), py::arg("max_elements") = 1000000,
      py::arg("max_entry_bits") = 4096, py::arg("verbosity") = "summary",
      "Grid frame, injectivity and theta certificates.");

  m.def(
      "check_bounds",
      [](const py::object& gens, std::size_t max_elements, std::size_t max_entry_bits,
         const std::string& verbosity) {
        return run("check-bounds", gens, max_elements, max_entry_bits, verbosity);
      },
      py::arg("generators"), py::arg("max_elements") = 1000000,
      py::arg("max_entry_bits") = 4096, py::arg("verbosity") = "summary",
      "Full pipeline with every bound certificate.");

  m.def(
      "mortality",
      [](const py::object& gens, std::size_t max_elements, std::size_t max_entry_bits) {
        return run("mortality", gens, max_elements, max_entry_bits, "summary");
      },
      py::arg("generators"), py::arg("max_elements") = 1000000,
      py::arg("max_entry_bits") = 4096,
      "Mortality threshold, minimum-rank diameter and the decomposition trace.");

  m.def(
      "construct",
      [](const std::string& family, std::size_t n, bool signed_entries) {
        semiq::AnalysisRequest request;
        request.subcommand = "construct";
        request.family = family;
        request.n = n;
        request.signed_entries = signed_entries;
        semiq::RunResult result = semiq::run_request(request);
        if (result.exit_code != 0) throw std::runtime_error(result.report.dump());
        return to_py(result.report);
      },
      py::arg("family"), py::arg("n") = 0, py::arg("signed_entries") = true,
      "Built-in generator families: example1, lower, sm, signed-perm.");

  m.def(
      "rees",
      [](const py::object& spec) {
        semiq::ReesSemigroup s = semiq::rees_from_json(from_py(spec));
        return to_py(semiq::rees_report(s));
      },
      py::arg("spec"),
      "Build and check a Rees 0-matrix semigroup from {'group', 'sandwich'}.");
}
