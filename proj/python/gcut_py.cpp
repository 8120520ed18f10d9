#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gcut/cli.hpp"
#include "gcut/degree.hpp"
#include "gcut/errors.hpp"
#include "gcut/hrep.hpp"
#include "gcut/io.hpp"

namespace py = pybind11;

namespace {

gcut::VertexMatrix vertex_matrix(const gcut::SimplicialComplex& c, const std::string& polytope) {
  if (polytope == "marg") return gcut::marg_vertices(c);
  if (polytope == "corr") return gcut::corr_vertices(c);
  if (polytope == "gcut") return gcut::gcut_vertices(c);
  if (polytope == "cut") return gcut::cut_vertices(c);
  throw gcut::Error(gcut::ErrorKind::InvalidInput, "unknown polytope '" + polytope + "'");
}

std::string vertices_json(const std::string& complex, const std::string& polytope) {
  auto v = vertex_matrix(gcut::load_complex(complex), polytope);
  gcut::Json j;
  j["rows"] = v.row_keys;
  j["cols"] = v.col_keys;
  gcut::Json m = gcut::Json::array();
  for (std::size_t r = 0; r < v.entries.rows(); ++r) {
    gcut::Json row = gcut::Json::array();
    for (std::size_t c = 0; c < v.entries.cols(); ++c) row.push_back(gcut::rational_to_json(v.entries(r, c)));
    m.push_back(row);
  }
  j["matrix"] = m;
  return j.dump();
}

std::string hrep_json(const std::string& complex, const std::string& method) {
  auto c = gcut::load_complex(complex);
  gcut::HrepOptions opts;
  if (method == "oracle") {
    opts.method = gcut::HrepMethod::Oracle;
  } else if (method != "auto") {
    throw gcut::Error(gcut::ErrorKind::InvalidInput, "unknown method '" + method + "'");
  }
  return gcut::hrep_to_json(gcut::hrep(c, opts), &c).dump();
}

std::string degree_json(const std::string& complex, bool check_volume) {
  gcut::DegreeOptions opts;
  opts.check_volume = check_volume;
  return gcut::degree_to_json(gcut::degree(gcut::load_complex(complex), opts)).dump();
}

std::string volume(const std::string& complex) {
  return gcut::gcut_volume(gcut::load_complex(complex)).get_str();
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = gcut::run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact generalized cut polytope tools.";

  static py::exception<gcut::Error> error(m, "GcutError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gcut::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("vertices_json", &vertices_json, py::arg("complex"), py::arg("polytope") = "gcut");
  m.def("hrep_json", &hrep_json, py::arg("complex"), py::arg("method") = "auto");
  m.def("degree_json", &degree_json, py::arg("complex"), py::arg("check_volume") = true);
  m.def("volume", &volume, py::arg("complex"), "Normalized volume of GCut as a decimal string.");
  m.def("run", &run, py::arg("args"), "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
