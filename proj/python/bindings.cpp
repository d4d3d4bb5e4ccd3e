#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liecheck/chevalley.hpp"
#include "liecheck/forms.hpp"
#include "liecheck/longroots.hpp"
#include "liecheck/scenarios.hpp"

namespace py = pybind11;
using namespace liecheck;

namespace {

GVec to_gvec(const Algebra& a, const std::vector<std::int64_t>& coeffs) {
  if (coeffs.size() != a.dim())
    throw DimensionMismatch("expected " + std::to_string(a.dim()) + " coefficients, got " + std::to_string(coeffs.size()));
  return a.from_integers(coeffs);
}

std::vector<Residue> from_gvec(const GVec& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

std::string run_json(const std::string& name, std::optional<std::string> type, std::optional<int> rank,
                     std::optional<std::uint32_t> p, std::uint64_t seed, std::optional<std::size_t> samples,
                     std::optional<std::uint64_t> budget, const std::string& cochar) {
  ScenarioParams sp;
  sp.name = name;
  if (type) sp.kind = parse_root_kind(*type);
  sp.rank = rank;
  sp.p = p;
  sp.seed = seed;
  sp.samples = samples;
  sp.budget = budget;
  sp.cochar = cochar;
  py::gil_scoped_release release;
  return run_scenario(sp).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chevalley-basis Lie algebras over F_p and the scenario runner";
  m.attr("__version__") = kToolVersion;
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  // translators are tried newest first, so the base class goes in first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init([](const std::string& type, int rank) { return build_root_system(parse_root_kind(type), rank); }),
           py::arg("type"), py::arg("rank"))
      .def_property_readonly("name", &RootSystem::name)
      .def_property_readonly("rank", &RootSystem::rank)
      .def("__len__", &RootSystem::size)
      .def_property_readonly("num_positive", &RootSystem::num_positive)
      .def_property_readonly("highest_root", &RootSystem::highest_root)
      .def_property_readonly("simple_roots", &RootSystem::simple_roots)
      .def_property_readonly("cartan_matrix", &RootSystem::cartan_matrix)
      .def("coords", [](const RootSystem& rs, std::size_t i) { return rs.root(i).coords; })
      .def("height", [](const RootSystem& rs, std::size_t i) { return rs.root(i).height; })
      .def("is_long", [](const RootSystem& rs, std::size_t i) { return rs.root(i).length == LengthClass::long_root; })
      .def("index_of", &RootSystem::index_of)
      .def("__repr__", [](const RootSystem& rs) { return "<RootSystem " + rs.name() + ">"; });

  py::class_<Algebra>(m, "Algebra")
      .def(py::init([](const std::string& type, int rank, Residue p) {
             return std::make_unique<Algebra>(build_root_system(parse_root_kind(type), rank), p);
           }),
           py::arg("type"), py::arg("rank"), py::arg("p"))
      .def_property_readonly("dim", &Algebra::dim)
      .def_property_readonly("p", &Algebra::p)
      .def_property_readonly("name", &Algebra::name)
      .def_property_readonly("root_system", &Algebra::root_system, py::return_value_policy::reference_internal)
      .def("basis_label", &Algebra::basis_label)
      .def("root_basis", &Algebra::root_basis)
      .def("structure_constant", [](const Algebra& a, std::size_t x, std::size_t y) { return a.sc()(x, y); })
      .def("bracket", [](const Algebra& a, const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
        return from_gvec(a.bracket(to_gvec(a, x), to_gvec(a, y)));
      })
      .def("adexp", [](const Algebra& a, std::size_t root, Residue t, const std::vector<std::int64_t>& x) {
        return from_gvec(a.adexp(root, t % a.p(), to_gvec(a, x)));
      })
      .def("p_power", [](const Algebra& a, const std::vector<std::int64_t>& x) { return from_gvec(a.p_power(to_gvec(a, x))); })
      .def("form", [](const Algebra& a, const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
        return InvForm(a)(to_gvec(a, x), to_gvec(a, y));
      })
      .def("cone", [](const Algebra& a, std::uint64_t budget) {
        const auto cone = enumerate_cone(a, budget);
        std::vector<std::vector<Residue>> out;
        for (const auto& x : cone.points()) out.push_back(from_gvec(x));
        return out;
      }, py::arg("budget") = kDefaultConeBudget)
      .def("__repr__", [](const Algebra& a) { return "<Algebra " + a.name() + ">"; });

  m.def("registry", &scenario_registry);
  m.def("_run_json", &run_json, py::arg("name"), py::arg("type") = py::none(), py::arg("rank") = py::none(),
        py::arg("p") = py::none(), py::arg("seed") = kDefaultSeed, py::arg("samples") = py::none(),
        py::arg("budget") = py::none(), py::arg("cochar") = "highest-root");
}
