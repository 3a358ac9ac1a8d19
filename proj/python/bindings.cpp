#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <map>
#include <memory>
#include <sstream>

#include "setorbits/catalog.hpp"
#include "setorbits/counting.hpp"
#include "setorbits/report.hpp"
#include "setorbits/wreath.hpp"

namespace py = pybind11;
using namespace setorbits;

namespace {

py::int_ to_py(const BigCount& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

BigCount from_py(const py::int_& v) { return BigCount(py::str(v).cast<std::string>()); }

// Catalog plus memoized cycle indices; the census is the expensive part.
class Groups {
 public:
  explicit Groups(const std::filesystem::path& path) : catalog_(load_catalog(path)) {}

  const CycleIndex& index(const std::string& name, unsigned workers) {
    auto it = indices_.find(name);
    if (it == indices_.end()) {
      py::gil_scoped_release release;
      it = indices_.emplace(name, cycle_index(catalog_.at(name).bsgs, workers)).first;
    }
    return it->second;
  }

  const Catalog& catalog() const { return catalog_; }

 private:
  Catalog catalog_;
  std::map<std::string, CycleIndex> indices_;
};

py::dict index_dict(const CycleIndex& ci) {
  py::dict out;
  for (const auto& [type, count] : ci.terms) out[py::tuple(py::cast(type.parts))] = to_py(count);
  return out;
}

}  // namespace

PYBIND11_MODULE(_setorbits, m) {
  m.doc() = "Set-orbit counts of permutation groups";

  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_ArithmeticError);

  py::class_<Groups>(m, "Groups")
      .def(py::init<const std::filesystem::path&>(), py::arg("catalog"))
      .def("names",
           [](const Groups& g) {
             std::vector<std::string> names;
             for (const auto& r : g.catalog().records()) names.push_back(r.name);
             return names;
           })
      .def("degree", [](const Groups& g, const std::string& name) { return g.catalog().at(name).degree; })
      .def("order", [](const Groups& g, const std::string& name) { return to_py(g.catalog().at(name).bsgs.order()); })
      .def(
          "cycle_index",
          [](Groups& g, const std::string& name, unsigned workers) { return index_dict(g.index(name, workers)); },
          py::arg("name"), py::arg("workers") = 1)
      .def(
          "set_orbits",
          [](Groups& g, const std::string& name, unsigned workers) {
            return to_py(set_orbit_count(g.index(name, workers)).value);
          },
          py::arg("name"), py::arg("workers") = 1)
      .def(
          "multiset_orbits",
          [](Groups& g, const std::string& name, std::vector<int> parts, unsigned workers) {
            return to_py(multiset_orbit_count(g.index(name, workers), PartitionRecord::from_parts(std::move(parts))));
          },
          py::arg("name"), py::arg("parts"), py::arg("workers") = 1)
      .def(
          "wreath_set_orbits",
          [](Groups& g, const py::int_& base_s, const std::string& top, unsigned workers) {
            return to_py(wreath_set_orbits(from_py(base_s), g.index(top, workers)));
          },
          py::arg("base_s"), py::arg("top"), py::arg("workers") = 1)
      .def(
          "brute_force_set_orbits",
          [](const Groups& g, const std::string& name) {
            BigCount v;
            {
              py::gil_scoped_release release;
              v = brute_force_set_orbits(g.catalog().at(name).bsgs);
            }
            return to_py(v);
          },
          py::arg("name"));

  m.def("partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : partitions_of(n)) out.push_back(p.parts);
    return out;
  });

  m.def(
      "limit_enclosure",
      [](const py::int_& s0, int n0, int k, int digits) {
        const auto e = limit_enclosure(from_py(s0), n0, k);
        return py::make_tuple(e.lo_string(digits), e.hi_string(digits));
      },
      py::arg("s0"), py::arg("n0") = 288, py::arg("k") = 2, py::arg("digits") = 19);

  m.def(
      "sequence",
      [](const py::int_& base_s, int base_degree, const py::int_& s0, int top_degree, int k_max, int digits) {
        py::list out;
        for (const auto& t : sequence_terms(from_py(base_s), base_degree, from_py(s0), top_degree, k_max)) {
          out.append(py::make_tuple(t.k, to_py(t.s), to_py(t.degree), t.a.lo_string(digits), t.a.hi_string(digits)));
        }
        return out;
      },
      py::arg("base_s"), py::arg("base_degree"), py::arg("s0"), py::arg("top_degree"), py::arg("k_max"),
      py::arg("digits") = 19);

  m.def(
      "verify_paper",
      [](const std::filesystem::path& data_dir, unsigned workers, bool strict) {
        RunConfig config;
        config.command = Command::VerifyPaper;
        config.catalog = data_dir / "catalog.txt";
        config.table3 = data_dir / "table3.txt";
        config.fixtures = data_dir / "m12_multiset_orbits.txt";
        config.workers = workers;
        config.strict = strict;
        config.progress = false;
        std::ostringstream report, status;
        int code;
        {
          py::gil_scoped_release release;
          code = run(config, report, status);
        }
        return py::make_tuple(code, report.str());
      },
      py::arg("data_dir"), py::arg("workers") = 1, py::arg("strict") = false);
}
