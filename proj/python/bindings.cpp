#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "oriclique/canonical.hpp"
#include "oriclique/circulant.hpp"
#include "oriclique/colouring.hpp"
#include "oriclique/enumeration.hpp"
#include "oriclique/extension.hpp"
#include "oriclique/graph.hpp"
#include "oriclique/io.hpp"
#include "oriclique/verify.hpp"

namespace py = pybind11;
using namespace oriclique;

namespace {

using PyArcs = std::vector<std::pair<int, int>>;
using Parts = std::vector<std::vector<int>>;

OrientedGraph make_graph(int n, const PyArcs& arcs) {
  std::vector<Arc> a;
  a.reserve(arcs.size());
  for (const auto& [u, v] : arcs) a.push_back({u, v});
  return OrientedGraph::build(n, a);
}

PyArcs arc_list(const OrientedGraph& g) {
  PyArcs r;
  for (const Arc a : g.arcs()) r.emplace_back(a.tail, a.head);
  return r;
}

ExtendingPartition part_from(const Parts& parts) {
  if (parts.size() != 3) fail(errc::bad_partition, "expected three parts");
  return {parts[0], parts[1], parts[2]};
}

Parts part_to(const ExtendingPartition& p) { return {p.x1, p.x2, p.x3}; }

py::dict report_dict(const ScanReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["generated"] = r.generated;
  d["cliques"] = r.cliques;
  d["dcoc"] = r.dcoc;
  d["witnesses"] = r.witnesses;
  d["elapsed_seconds"] = r.elapsed_seconds;
  d["parameters"] = r.parameters;
  d["resumed"] = r.resumed;
  d["completed"] = r.completed;
  return d;
}

ScanMode mode_from(const std::string& name) {
  if (name == "pruned") return ScanMode::pruned;
  if (name == "exhaustive") return ScanMode::exhaustive;
  fail(errc::bad_argument, "mode must be 'pruned' or 'exhaustive'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "deeply critical oriented cliques: exact colouring, extensions, scans";
  py::register_exception<Error>(m, "Error");

  py::class_<OrientedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("arcs"))
      .def_property_readonly("order", &OrientedGraph::order)
      .def_property_readonly("arc_count", &OrientedGraph::arc_count)
      .def("arcs", &arc_list)
      .def("has_arc", &OrientedGraph::has_arc)
      .def("adjacent", &OrientedGraph::adjacent)
      .def("sees", [](const OrientedGraph& g, int u, int v) { return sees(g, u, v); })
      .def("remove_arc",
           [](const OrientedGraph& g, int u, int v) { return remove_arc(g, {u, v}); })
      .def("__eq__",
           [](const OrientedGraph& a, const OrientedGraph& b) { return a == b; })
      .def("__repr__", [](const OrientedGraph& g) {
        return "Graph(\"" + format_compact(g) + "\")";
      });

  m.def("parse_graph", [](const std::string& s) { return parse_graph(s); },
        "parse OGRAPH ('n m' + arc lines) or compact 'n:u>v,...' text");
  m.def("format_ograph", &format_ograph);
  m.def("format_compact", &format_compact);
  m.def("canonical_hex", [](const OrientedGraph& g) { return canonical_code(g).hex(); });
  m.def("isomorphic", [](const OrientedGraph& a, const OrientedGraph& b) {
    return canonical_code(a) == canonical_code(b);
  });

  m.def("chi_o", [](const OrientedGraph& g) {
    return oriented_chromatic_number(g).chromatic_number;
  });
  m.def("colouring", [](const OrientedGraph& g) {
    const ChiResult r = oriented_chromatic_number(g);
    return std::make_pair(r.chromatic_number, r.certificate.classes);
  });
  m.def("find_colouring",
        [](const OrientedGraph& g, int k) -> std::optional<Parts> {
          const auto cert = find_colouring(g, k);
          if (!cert) return std::nullopt;
          return cert->classes;
        });
  m.def("is_absolute_clique", &is_absolute_clique);
  m.def("is_deeply_critical", &is_deeply_critical);
  m.def("criticality_report", [](const OrientedGraph& g) {
    const CriticalityReport r = criticality_report(g);
    py::list arcs;
    for (const ArcCriticality& a : r.per_arc)
      arcs.append(py::make_tuple(py::make_tuple(a.arc.tail, a.arc.head),
                                 a.chi_without, a.drop));
    py::dict d;
    d["chi"] = r.chi;
    d["deeply_critical"] = r.deeply_critical;
    d["arcs"] = arcs;
    return d;
  });

  m.def("find_extending_partition",
        [](const OrientedGraph& g) -> std::optional<Parts> {
          const auto p = find_extending_partition(g);
          if (!p) return std::nullopt;
          return part_to(*p);
        });
  m.def("check_extending_partition", [](const OrientedGraph& g, const Parts& parts) {
    const PartitionDiagnosis d = check_extending_partition(g, part_from(parts));
    py::dict r;
    r["forward_only"] = d.forward_only;
    r["private_in"] = d.private_in;
    r["private_out"] = d.private_out;
    r["ok"] = d.ok();
    return r;
  });
  m.def("six_extension", [](const OrientedGraph& g, const Parts& parts) {
    const SixExtension e = six_extension(g, part_from(parts));
    return std::make_pair(e.graph, part_to(e.partition));
  });
  m.def("four_extension", [](const OrientedGraph& g, const Parts& parts) {
    return four_extension(g, part_from(parts));
  });
  m.def("two_extension", [](const OrientedGraph& g, const Parts& parts) {
    return two_extension(g, part_from(parts));
  });
  m.def("generate_odd_dcoc", &generate_odd_dcoc, py::arg("n"));

  m.def("build_circulant", [](int n, const std::vector<int>& set) {
    return build_circulant({n, set});
  });
  m.def("circulant_dcoc_check", [](int n, const std::vector<int>& set) {
    return arithmetic_dcoc_check({n, set});
  });
  m.def("circulant_conditions", [](int n, const std::vector<int>& set) {
    const ArithmeticDiagnosis d = arithmetic_conditions({n, set});
    py::dict r;
    r["cover"] = d.cover;
    r["unique"] = d.unique;
    r["witness_k"] = d.witness_k;
    r["ok"] = d.ok();
    return r;
  });
  m.def("multiplier_canonical", [](int n, const std::vector<int>& set) {
    return multiplier_canonical({n, set});
  });
  m.def(
      "scan_circulants",
      [](int n, const std::string& mode, int jobs) {
        CirculantScanOptions opts;
        opts.mode = mode_from(mode);
        opts.jobs = jobs;
        const CirculantScanResult r = scan_circulants(n, opts);
        py::list classes;
        for (const CirculantClass& c : r.classes)
          classes.append(py::make_tuple(c.set, c.class_size));
        py::dict d;
        d["n"] = r.n;
        d["found"] = r.found;
        d["classes"] = classes;
        d["leaves"] = r.leaves;
        d["nodes"] = r.nodes;
        d["completed"] = r.completed;
        return d;
      },
      py::arg("n"), py::arg("mode") = "pruned", py::arg("jobs") = 1);

  m.def(
      "census_dcoc",
      [](int n, int jobs) {
        CensusOptions opts;
        opts.jobs = jobs;
        return report_dict(census_dcoc(n, opts));
      },
      py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "random_probe",
      [](int n, std::uint64_t trials, std::uint64_t seed) {
        return report_dict(random_probe(n, trials, seed));
      },
      py::arg("n"), py::arg("trials"), py::arg("seed"));

  m.def(
      "verify",
      [](const std::string& level, int jobs) {
        VerifyOptions opts;
        if (level == "full")
          opts.level = VerifyLevel::full;
        else if (level != "quick")
          fail(errc::bad_argument, "level must be 'quick' or 'full'");
        opts.jobs = jobs;
        const VerifyReport rep = run_verification_suite(opts);
        py::list rows;
        for (const CriterionResult& c : rep.criteria) {
          py::dict row;
          row["id"] = c.id;
          row["name"] = c.name;
          row["passed"] = c.passed;
          row["detail"] = c.detail;
          row["seconds"] = c.seconds;
          rows.append(row);
        }
        py::dict d;
        d["level"] = level;
        d["criteria"] = rows;
        d["all_passed"] = rep.all_passed();
        return d;
      },
      py::arg("level") = "quick", py::arg("jobs") = 1);
}
