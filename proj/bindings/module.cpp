// Python bindings: a single JSON-in/JSON-out dispatch mirroring the CLI, so
// the Python surface stays automatically in sync with the verb set.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jetlin/api.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact jet-level linearization toolkit (core dispatch)";
  m.attr("__version__") = jetlin::kToolVersion;

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const jetlin::Error& e) {
      if (jetlin::is_usage_error(e.code())) {
        PyErr_SetString(PyExc_ValueError, e.what());
      } else {
        PyErr_SetString(PyExc_RuntimeError, e.what());
      }
    } catch (const jetlin::Json::parse_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "run_json",
      [](const std::string& verb, const std::string& args) {
        jetlin::Json parsed =
            args.empty() ? jetlin::Json::object() : jetlin::Json::parse(args);
        return jetlin::run_verb(verb, parsed).dump();
      },
      py::arg("verb"), py::arg("args") = "{}",
      "Run a verb on a JSON argument object (text in, report text out).");

  m.def(
      "verbs", [] { return jetlin::verb_names(); },
      "The supported verb names, in display order.");
}
