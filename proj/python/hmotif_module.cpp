// Python bindings for the motif counting pipeline: load or build a
// hypergraph, project it, count or estimate motif instances, randomize, and
// compute significance profiles.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hmotif/exact.hpp"
#include "hmotif/hypergraph.hpp"
#include "hmotif/memoized.hpp"
#include "hmotif/motif_table.hpp"
#include "hmotif/parallel.hpp"
#include "hmotif/profile.hpp"
#include "hmotif/projection.hpp"
#include "hmotif/randomize.hpp"
#include "hmotif/sampling.hpp"

namespace py = pybind11;
using namespace hmotif;

namespace {

std::vector<std::uint64_t> counts_list(const CountVector& m) {
    return {m.counts.begin(), m.counts.end()};
}

std::array<double, 26> to_array26(const std::vector<double>& v) {
    if (v.size() != 26) throw py::value_error("expected a 26-element vector");
    std::array<double, 26> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return a;
}

void check_edge_id(std::size_t count, EdgeId i) {
    if (i >= count) throw py::index_error("hyperedge id out of range");
}

void check_node_id(std::size_t count, NodeId v) {
    if (v >= count) throw py::index_error("node id out of range");
}

} // namespace

PYBIND11_MODULE(hmotif, m) {
    m.doc() = "hypergraph motif counting, sampling estimators and profiles";

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_static(
            "load",
            [](const std::string& path, const std::string& format) {
                return load_hypergraph(path, format == "csv" ? InputFormat::csv
                                                             : InputFormat::whitespace);
            },
            py::arg("path"), py::arg("format") = "whitespace")
        .def_static(
            "from_edges",
            [](const std::vector<std::vector<std::string>>& edges) {
                return Hypergraph::from_tokens(edges);
            },
            py::arg("edges"))
        .def_property_readonly("num_nodes", &Hypergraph::num_nodes)
        .def_property_readonly("num_edges", &Hypergraph::num_edges)
        .def(
            "edge",
            [](const Hypergraph& g, EdgeId i) {
                check_edge_id(g.num_edges(), i);
                return g.edge(i);
            },
            py::arg("i"))
        .def(
            "token",
            [](const Hypergraph& g, NodeId v) {
                check_node_id(g.num_nodes(), v);
                return g.token(v);
            },
            py::arg("node"))
        .def(
            "incident_edges",
            [](const Hypergraph& g, NodeId v) {
                check_node_id(g.num_nodes(), v);
                return g.incident_edges(v);
            },
            py::arg("node"))
        .def_property_readonly("duplicate_edges_dropped", &Hypergraph::duplicate_edges_dropped)
        .def("save", [](const Hypergraph& g, const std::string& path) {
            save_hypergraph(g, path);
        });

    m.def("degree_stats", [](const Hypergraph& g) {
        DegreeStats s = degree_stats(g);
        py::dict out;
        out["num_nodes"] = s.num_nodes;
        out["num_edges"] = s.num_edges;
        out["max_edge_size"] = s.max_edge_size;
        out["degree_distribution"] = s.degree_distribution;
        out["edge_size_distribution"] = s.edge_size_distribution;
        return out;
    });

    py::class_<ProjectedGraph>(m, "ProjectedGraph")
        .def_property_readonly("wedge_count", &ProjectedGraph::wedge_count)
        .def(
            "neighbors",
            [](const ProjectedGraph& p, EdgeId i) {
                check_edge_id(p.num_edges(), i);
                std::vector<std::pair<EdgeId, std::uint32_t>> out;
                for (const auto& n : p.neighbors(i)) out.emplace_back(n.id, n.overlap);
                return out;
            },
            py::arg("i"))
        .def(
            "overlap",
            [](const ProjectedGraph& p, EdgeId a, EdgeId b) {
                check_edge_id(p.num_edges(), a);
                check_edge_id(p.num_edges(), b);
                return p.overlap(a, b);
            },
            py::arg("a"), py::arg("b"))
        .def("wedges", &ProjectedGraph::wedges);

    m.def("project", &project, py::arg("hypergraph"), py::arg("workers") = 1,
      py::call_guard<py::gil_scoped_release>());

    m.def("motif_table", [] {
        const MotifTable& table = MotifTable::instance();
        py::list rows;
        for (int id = 1; id <= 26; ++id) {
            py::dict row;
            row["motif"] = id;
            row["open"] = MotifTable::is_open(id);
            row["canonical_pattern"] = table.canonical_pattern(id);
            row["orbit"] = table.orbit(id);
            rows.append(row);
        }
        return rows;
    });
    m.def("is_open", &MotifTable::is_open, py::arg("motif_id"));
    m.def("classify_triple", &classify_triple, py::arg("hypergraph"), py::arg("projection"),
          py::arg("i"), py::arg("j"), py::arg("k"));

    m.def(
        "count_exact",
        [](const Hypergraph& g, const ProjectedGraph& p, unsigned workers) {
            return counts_list(count_exact(g, p, workers));
        },
        py::arg("hypergraph"), py::arg("projection"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "enumerate_instances",
        [](const Hypergraph& g, const ProjectedGraph& p) {
            std::vector<std::tuple<EdgeId, EdgeId, EdgeId, int>> out;
            enumerate_instances(g, p, [&](EdgeId i, EdgeId j, EdgeId k, int t) {
                out.emplace_back(i, j, k, t);
                return true;
            });
            return out;
        },
        py::arg("hypergraph"), py::arg("projection"),
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "per_hyperedge_features",
        [](const Hypergraph& g, const ProjectedGraph& p, unsigned workers) {
            auto rows = per_hyperedge_features(g, p, workers);
            std::vector<std::vector<std::uint64_t>> out;
            out.reserve(rows.size());
            for (const auto& row : rows) out.emplace_back(row.begin(), row.end());
            return out;
        },
        py::arg("hypergraph"), py::arg("projection"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());

    m.def(
        "count_approx_edge",
        [](const Hypergraph& g, const ProjectedGraph& p, std::uint64_t samples,
           std::uint64_t seed, unsigned workers) {
            EstimateVector e = count_approx_edge(
                g, p, {.sample_count = samples, .seed = seed, .workers = workers});
            return std::vector<double>(e.estimates.begin(), e.estimates.end());
        },
        py::arg("hypergraph"), py::arg("projection"), py::arg("samples"), py::arg("seed") = 0,
        py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());

    m.def(
        "count_approx_wedge",
        [](const Hypergraph& g, const ProjectedGraph& p, std::uint64_t samples,
           std::uint64_t seed, unsigned workers) {
            EstimateVector e = count_approx_wedge(
                g, p, {.sample_count = samples, .seed = seed, .workers = workers});
            return std::vector<double>(e.estimates.begin(), e.estimates.end());
        },
        py::arg("hypergraph"), py::arg("projection"), py::arg("samples"), py::arg("seed") = 0,
        py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());

    m.def(
        "relative_error",
        [](const std::vector<std::uint64_t>& exact, const std::vector<double>& estimate) {
            if (exact.size() != 26 || estimate.size() != 26)
                throw py::value_error("expected 26-element vectors");
            CountVector m26;
            std::copy(exact.begin(), exact.end(), m26.counts.begin());
            std::array<double, 26> est{};
            std::copy(estimate.begin(), estimate.end(), est.begin());
            return relative_error(m26, est);
        },
        py::arg("exact"), py::arg("estimate"));

    m.def("randomize", &randomize_hypergraph, py::arg("hypergraph"), py::arg("seed"),
      py::call_guard<py::gil_scoped_release>());

    m.def(
        "null_counts",
        [](const Hypergraph& g, unsigned trials, std::uint64_t seed, unsigned workers) {
            auto counter = [workers](const Hypergraph& h) {
                ProjectedGraph p = project(h, workers);
                return count_exact(h, p, workers).as_doubles();
            };
            NullCounts nc = null_counts(g, {.trials = trials, .seed = seed}, counter);
            py::dict out;
            out["mean"] = std::vector<double>(nc.mean.begin(), nc.mean.end());
            out["trial_seeds"] = nc.trial_seeds;
            return out;
        },
        py::arg("hypergraph"), py::arg("trials") = 5, py::arg("seed") = 0,
        py::arg("workers") = 1);

    m.def(
        "significance",
        [](const std::vector<double>& real, const std::vector<double>& null, double epsilon) {
            SignificanceVector sig = significance(to_array26(real), to_array26(null), epsilon);
            return std::vector<double>(sig.delta.begin(), sig.delta.end());
        },
        py::arg("real"), py::arg("null"), py::arg("epsilon") = 1.0);

    m.def(
        "characteristic_profile",
        [](const std::vector<double>& delta) {
            SignificanceVector sig;
            sig.delta = to_array26(delta);
            auto cp = characteristic_profile(sig);
            return std::vector<double>(cp.begin(), cp.end());
        },
        py::arg("delta"));

    m.def(
        "relative_count",
        [](const std::vector<double>& real, const std::vector<double>& null) {
            auto rc = relative_count(to_array26(real), to_array26(null));
            return std::vector<double>(rc.begin(), rc.end());
        },
        py::arg("real"), py::arg("null"));

    m.def(
        "rank_difference",
        [](const std::vector<double>& real, const std::vector<double>& null) {
            auto rd = rank_difference(to_array26(real), to_array26(null));
            return std::vector<int>(rd.begin(), rd.end());
        },
        py::arg("real"), py::arg("null"));

    m.def(
        "cp_similarity_matrix",
        [](const std::vector<std::vector<double>>& profiles) {
            std::vector<std::array<double, 26>> arr;
            arr.reserve(profiles.size());
            for (const auto& prof : profiles) arr.push_back(to_array26(prof));
            return cp_similarity_matrix(arr);
        },
        py::arg("profiles"));

    m.attr("NUM_MOTIFS") = 26;
}
