#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "multispinal/action.hpp"
#include "multispinal/analysis.hpp"
#include "multispinal/errors.hpp"
#include "multispinal/fixtures.hpp"
#include "multispinal/io.hpp"
#include "multispinal/psi.hpp"

namespace py = pybind11;

namespace {

using namespace multispinal;

py::object json_to_py(const Json& j) {
  if (j.is_null()) return py::none();
  if (j.is_boolean()) return py::bool_(j.get<bool>());
  if (j.is_number_unsigned()) return py::int_(j.get<unsigned long long>());
  if (j.is_number_integer()) return py::int_(j.get<long long>());
  if (j.is_number_float()) return py::float_(j.get<double>());
  if (j.is_string()) return py::str(j.get<std::string>());
  if (j.is_array()) {
    py::list out;
    for (const auto& item : j) out.append(json_to_py(item));
    return out;
  }
  py::dict out;
  for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
  return out;
}

py::dict run_analyze(const MultispinalInstance& instance, int truncation_depth,
                     bool witness_search) {
  AnalyzeOptions options;
  options.truncation_depth = truncation_depth;
  options.witness_search = witness_search;
  return py::cast<py::dict>(json_to_py(report_to_json(analyze(instance, options))));
}

py::object big_to_py(const BigInt& z) {
  return py::module_::import("builtins").attr("int")(to_string(z));
}

}  // namespace

PYBIND11_MODULE(multispinal, m) {
  m.doc() = "simplicity analysis of multispinal self-similar instances";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Defect& d) {
      PyErr_SetString(PyExc_RuntimeError, d.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("fixture_names", &fixture_names, "bundled instance names");
  m.def(
      "fixture_json", [](const std::string& name) { return fixture_json(name); }, py::arg("name"),
      "bundled instance document");
  m.def(
      "analyze_text",
      [](const std::string& text, int truncation_depth, bool witness_search) {
        return run_analyze(instance_from_json(text), truncation_depth, witness_search);
      },
      py::arg("text"), py::arg("truncation_depth") = 12, py::arg("witness_search") = true,
      "analyze an instance document; returns the report as a dict");
  m.def(
      "analyze_file",
      [](const std::string& path, int truncation_depth, bool witness_search) {
        return run_analyze(load_instance(path), truncation_depth, witness_search);
      },
      py::arg("path"), py::arg("truncation_depth") = 12, py::arg("witness_search") = true,
      "analyze an instance file; returns the report as a dict");
  m.def(
      "check_text",
      [](const std::string& text) {
        MultispinalInstance instance = instance_from_json(text);
        py::dict out;
        out["valid"] = true;
        out["a_order"] = instance.A()->order();
        out["b_order"] = instance.B()->order();
        out["alphabet_size"] = instance.alphabet_size();
        return out;
      },
      py::arg("text"), "validate an instance document");
  m.def(
      "canonical_json",
      [](const std::string& text) { return instance_to_json(instance_from_json(text)); },
      py::arg("text"), "canonical form of an instance document");
  m.def(
      "psi_values",
      [](const std::string& text) {
        MultispinalInstance instance = instance_from_json(text);
        PsiTable table = solve_psi(instance);
        py::dict out;
        for (int i = 0; i < instance.A()->order(); ++i)
          out[py::str(instance.A()->label(i))] =
              py::str(to_string(table.values[static_cast<size_t>(i)]));
        return out;
      },
      py::arg("text"), "fixed-point measures by A-element label, as exact fraction strings");
  m.def(
      "fixed_count",
      [](const std::string& text, const std::string& label, int depth) {
        MultispinalInstance instance = instance_from_json(text);
        const int idx = instance.A()->index_of(label);
        if (idx < 0) throw Error("UnknownAgent", "no A element labeled \"" + label + "\"");
        return big_to_py(fixed_count(instance, instance.a_agent(idx), depth));
      },
      py::arg("text"), py::arg("label"), py::arg("depth"),
      "number of depth-n words fixed by an A element, exact");
  m.attr("__version__") = "1.0.0";
}
