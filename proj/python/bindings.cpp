#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "dyncomm/densopt.hpp"
#include "dyncomm/dynlouvain.hpp"
#include "dyncomm/errors.hpp"
#include "dyncomm/gen.hpp"
#include "dyncomm/louvain.hpp"
#include "dyncomm/metrics.hpp"
#include "dyncomm/runner.hpp"
#include "dyncomm/stream_io.hpp"

namespace py = pybind11;
using namespace dyncomm;

namespace {

DynGraph graph_from_edges(
    const std::vector<std::tuple<VertexId, VertexId, Weight>>& edges) {
  DynGraph g;
  for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
  return g;
}

EdgeEvent event_from_tuple(const std::string& op, VertexId u, VertexId v,
                           Weight w, Timestamp t) {
  if (op == "+") return EdgeEvent::add(u, v, w, t);
  if (op == "-") return EdgeEvent::remove(u, v, t);
  throw InvalidArgumentError("op must be '+' or '-'");
}

}  // namespace

PYBIND11_MODULE(_dyncomm, m) {
  m.doc() = "Streaming community detection on evolving networks";

  auto base = py::register_exception<Error>(m, "DyncommError");
  py::register_exception<MissingEdgeError>(m, "MissingEdgeError", base.ptr());
  py::register_exception<UnknownVertexError>(m, "UnknownVertexError", base.ptr());
  py::register_exception<WeightDomainError>(m, "WeightDomainError", base.ptr());
  py::register_exception<UndefinedModularityError>(m, "UndefinedModularityError",
                                                   base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::class_<DynGraph>(m, "Graph")
      .def(py::init<>())
      .def(py::init(&graph_from_edges), py::arg("edges"))
      .def("add_edge", &DynGraph::add_edge, py::arg("u"), py::arg("v"),
           py::arg("w") = 1.0)
      .def("remove_edge", &DynGraph::remove_edge)
      .def("has_edge", &DynGraph::has_edge)
      .def("weight", &DynGraph::weight)
      .def("weighted_degree", &DynGraph::weighted_degree)
      .def("vertices", &DynGraph::vertices)
      .def("connected_components",
           [](const DynGraph& g, const std::vector<VertexId>& vs) {
             return g.connected_components(vs);
           })
      .def_property_readonly("vertex_count", &DynGraph::vertex_count)
      .def_property_readonly("edge_count", &DynGraph::edge_count)
      .def_property_readonly("total_weight_2m", &DynGraph::total_weight_2m);

  m.def("modularity",
        [](const DynGraph& g, const Mapping& mapping) { return modularity(g, mapping); },
        py::arg("graph"), py::arg("mapping"));
  m.def("louvain",
        [](const DynGraph& g) { return louvain_full(g).partition.mapping(); },
        py::arg("graph"), "Static multi-level Louvain; returns a canonical mapping.");

  py::class_<StepReport>(m, "StepReport")
      .def_readonly("modularity", &StepReport::modularity)
      .def_readonly("changed_vertices", &StepReport::changed_vertices)
      .def_property_readonly("elapsed_seconds", [](const StepReport& r) {
        return std::chrono::duration<double>(r.elapsed).count();
      });

  py::class_<DynamicLouvain>(m, "DynamicLouvain")
      .def(py::init<>())
      .def_static("from_graph", &DynamicLouvain::init, py::arg("graph"))
      .def_static("from_partition", &DynamicLouvain::from_partition,
                  py::arg("graph"), py::arg("mapping"))
      .def("add_edge",
           [](DynamicLouvain& s, VertexId u, VertexId v, Weight w) {
             return s.step(EdgeEvent::add(u, v, w));
           },
           py::arg("u"), py::arg("v"), py::arg("w") = 1.0)
      .def("remove_edge",
           [](DynamicLouvain& s, VertexId u, VertexId v) {
             return s.step(EdgeEvent::remove(u, v));
           })
      .def("optimize", &DynamicLouvain::optimize)
      .def("mapping", &DynamicLouvain::community_mapping)
      .def("quality", &DynamicLouvain::quality)
      .def_property_readonly("graph", &DynamicLouvain::ll_graph,
                             py::return_value_policy::copy);

  m.def("adc", [](const DynGraph& g, const Mapping& mapping) {
    return adc(g, Partition::from_mapping(g, mapping));
  });
  m.def("optimize_density", [](const DynGraph& g, const Mapping& mapping) {
    const DensityResult r = optimize_density(g, Partition::from_mapping(g, mapping));
    return py::make_tuple(r.partition.mapping(), r.report.adc_before, r.report.adc_after);
  });

  m.def("stability", &stability, py::arg("prev"), py::arg("next"));
  m.def("partition_similarity", &partition_similarity);

  py::class_<GenConfig>(m, "GenConfig")
      .def(py::init<>())
      .def_readwrite("n_vertices", &GenConfig::n_vertices)
      .def_readwrite("degree_exponent", &GenConfig::degree_exponent)
      .def_readwrite("size_exponent", &GenConfig::size_exponent)
      .def_readwrite("p_in", &GenConfig::p_in)
      .def_readwrite("p_out", &GenConfig::p_out)
      .def_readwrite("decay_ttl", &GenConfig::decay_ttl)
      .def_readwrite("event_probability", &GenConfig::event_probability)
      .def_readwrite("iterations", &GenConfig::iterations)
      .def_readwrite("seed", &GenConfig::seed);

  m.def("generate", [](const GenConfig& cfg) {
    const GroundTruthTimeline tl = generate(cfg);
    py::list events;
    for (const EdgeEvent& e : tl.events)
      events.append(py::make_tuple(e.action == EdgeAction::kAdd ? "+" : "-", e.u,
                                   e.v, e.w, e.t));
    py::list stable;
    for (const StablePoint& sp : tl.stable_points)
      stable.append(py::make_tuple(sp.iteration, sp.partition));
    return py::make_tuple(events, stable);
  });

  m.def("parse_stream", [](const std::filesystem::path& path) {
    py::list events;
    for (const EdgeEvent& e : parse_stream(path))
      events.append(py::make_tuple(e.action == EdgeAction::kAdd ? "+" : "-", e.u,
                                   e.v, e.w, e.t));
    return events;
  });

  m.def(
      "run_stream",
      [](const std::vector<std::tuple<std::string, VertexId, VertexId, Weight, Timestamp>>& rows,
         const std::string& algorithm) {
        auto algo = make_algorithm(parse_algorithm(algorithm));
        for (const auto& [op, u, v, w, t] : rows) algo->apply(event_from_tuple(op, u, v, w, t));
        return algo->mapping();
      },
      py::arg("events"), py::arg("algorithm") = "dynlouvain",
      "Feeds (op, u, v, w, t) tuples to an algorithm and returns its final mapping.");
}
