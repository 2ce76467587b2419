#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "ncfact/closedform.hpp"
#include "ncfact/commands.hpp"
#include "ncfact/errors.hpp"
#include "ncfact/facto.hpp"
#include "ncfact/nc_poset.hpp"

namespace py = pybind11;
using namespace ncfact;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& q) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(boost::multiprecision::numerator(q)), to_py(boost::multiprecision::denominator(q)));
}

// Owns the group and builds NC on first use.
class PyGroup {
 public:
  PyGroup(const std::string& name, std::uint64_t max_order, bool allow_e7) {
    EnumerationBudget budget;
    budget.max_order = max_order;
    budget.allow_e7 = allow_e7;
    group_ = build_group(parse_group(name), budget);
  }

  const Group& group() const { return *group_; }

  const NcPoset& nc() {
    if (!nc_) nc_.emplace(build_nc(group_));
    return *nc_;
  }

 private:
  std::shared_ptr<const Group> group_;
  std::optional<NcPoset> nc_;
};

CommandOptions options(int p_max, std::optional<std::string> cache) {
  CommandOptions o;
  o.p_max = p_max;
  o.cache_path = std::move(cache);
  o.use_cache = o.cache_path.has_value();
  return o;
}

py::dict row_dict(const LLRow& row) {
  py::dict d;
  d["class"] = row.cls.id.short_hex();
  d["r"] = row.r;
  d["u"] = to_py(row.u);
  d["count"] = to_py(row.count_submax);
  d["size"] = row.cls.size_in_nc;
  d["order"] = row.element_order;
  d["reducible"] = row.parabolic_reducible;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ncfact, m) {
  m.doc() = "Noncrossing factorizations in well-generated reflection groups";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UnsupportedGroup>(m, "UnsupportedGroup", error);
  py::register_exception<RankTooSmall>(m, "RankTooSmall", error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
  py::register_exception<NonIntegerResult>(m, "NonIntegerResult", error);
  py::register_exception<NotLengthTwo>(m, "NotLengthTwo", error);
  py::register_exception<NotInNC>(m, "NotInNC", error);
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", error);
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<NoTableRow>(m, "NoTableRow", error);

  py::class_<PyGroup>(m, "Group")
      .def(py::init<const std::string&, std::uint64_t, bool>(), py::arg("name"),
           py::arg("max_order") = EnumerationBudget{}.max_order, py::arg("allow_e7") = false)
      .def_property_readonly("name", [](const PyGroup& g) { return g.group().name(); })
      .def_property_readonly("rank", [](const PyGroup& g) { return g.group().rank(); })
      .def_property_readonly("order", [](const PyGroup& g) { return to_py(g.group().order()); })
      .def_property_readonly("degrees", [](const PyGroup& g) { return g.group().degrees(); })
      .def_property_readonly("coxeter_number", [](const PyGroup& g) { return g.group().coxeter_number(); })
      .def_property_readonly("reflection_count",
                             [](const PyGroup& g) { return g.group().reflections().size(); })
      .def("ll_number", [](const PyGroup& g) { return to_py(ll_number(g.group())); })
      .def("fuss_catalan", [](const PyGroup& g, int p) { return to_py(fuss_catalan(g.group(), p)); },
           py::arg("p") = 1)
      .def("nc_size", [](PyGroup& g) { return g.nc().size(); })
      .def("nc_rank_sizes",
           [](PyGroup& g) {
             std::vector<std::size_t> sizes;
             for (int k = 0; k <= g.group().rank(); ++k) sizes.push_back(g.nc().at_rank(k).size());
             return sizes;
           })
      .def("count_multichains", [](PyGroup& g, int p) { return to_py(count_multichains(g.nc(), p)); },
           py::arg("p"))
      .def("count_reduced",
           [](PyGroup& g) {
             return to_py(count_fact_by_composition(g.nc(), std::vector<int>(g.group().rank(), 1)));
           })
      .def("count_fact_k", [](PyGroup& g, int k) { return to_py(count_fact_k(g.nc(), k)); }, py::arg("k"))
      .def("count_composition",
           [](PyGroup& g, const std::vector<int>& c) { return to_py(count_fact_by_composition(g.nc(), c)); },
           py::arg("composition"))
      .def("submaximal",
           [](PyGroup& g) {
             py::list out;
             for (const auto& row : submaximal_by_class(g.nc())) out.append(row_dict(row));
             return out;
           })
      .def("hurwitz_orbit_size",
           [](PyGroup& g, std::size_t cap) {
             const auto reds = enumerate_reduced_decompositions(g.nc());
             return hurwitz_orbit(g.group(), reds.front(), cap);
           },
           py::arg("cap") = 1'000'000)
      .def("__repr__", [](const PyGroup& g) { return "Group('" + g.group().name() + "')"; });

  m.def("info_json", [](const std::string& group) { return to_json(cmd_info(group)); }, py::arg("group"));
  m.def("verify_json",
        [](const std::string& group, int p_max, std::optional<std::string> cache) {
          return to_json(cmd_verify(group, options(p_max, std::move(cache))));
        },
        py::arg("group"), py::arg("p_max") = 5, py::arg("cache") = py::none());
  m.def("count_json",
        [](const std::string& group, const std::string& kind, const std::string& argument) {
          return to_json(cmd_count(group, parse_count_kind(kind), argument, CommandOptions{}));
        },
        py::arg("group"), py::arg("kind"), py::arg("argument") = "");
  m.def("table_json",
        [](const std::string& target) { return to_json(cmd_table(target, CommandOptions{})); },
        py::arg("target"));
  m.def("export_table", &export_table_json);
  m.def("position_prefactor",
        [](const std::string& group) { return to_py(position_prefactor(invariant_data(parse_group(group)))); },
        py::arg("group"));
  m.def("deg_discriminant",
        [](const std::string& group) { return to_py(deg_discriminant(invariant_data(parse_group(group)))); },
        py::arg("group"));
  m.def("deg_jacobian",
        [](const std::string& group) { return to_py(deg_jacobian(invariant_data(parse_group(group)))); },
        py::arg("group"));
  m.attr("__version__") = library_version();
}
