#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maghom/complexes.hpp"
#include "maghom/series.hpp"
#include "maghom/verify.hpp"

namespace py = pybind11;
using namespace maghom;

namespace {

py::object to_py_int(const Int& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list series_to_list(const TruncatedSeries& s) {
    py::list out;
    for (int i = 0; i <= s.truncation(); ++i) out.append(to_py_int(s[i]));
    return out;
}

py::tuple group_to_tuple(const HomologyGroup& h) {
    py::list torsion;
    for (const Int& d : h.torsion) torsion.append(to_py_int(d));
    return py::make_tuple(h.free_rank, torsion);
}

CoeffMode parse_mode(const std::string& mode) {
    if (mode == "Z") return CoeffMode::Z;
    if (mode == "Q") return CoeffMode::Q;
    if (mode == "Fp") return CoeffMode::Fp;
    throw std::invalid_argument("mode must be one of Z, Q, Fp");
}

} // namespace

PYBIND11_MODULE(_maghom, m) {
    m.doc() = "magnitude power series and bigraded integral magnitude homology of finite graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) { return Graph(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("dist",
             [](const Graph& g, int u, int v) -> py::object {
                 Dist d = g.dist(u, v);
                 return is_finite(d) ? py::cast(static_cast<int>(d)) : py::none();
             })
        .def("connected", &Graph::connected)
        .def("girth",
             [](const Graph& g) -> py::object {
                 Dist d = g.girth();
                 return is_finite(d) ? py::cast(static_cast<int>(d)) : py::none();
             })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_vertices()) + ", edges=" +
                   std::to_string(g.num_edges()) + ")";
        });

    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("wheel_graph", &wheel_graph, py::arg("rim"));
    m.def("tree_graph", &tree_graph, py::arg("n"), py::arg("edges"));
    m.def("polyomino_graph", &polyomino_graph, py::arg("cells"));
    m.def("cartesian_product", &cartesian_product, py::arg("g1"), py::arg("g2"));

    m.def(
        "is_convex",
        [](const Graph& g, const std::vector<int>& vertices) { return is_convex(g, SubgraphRef(g, vertices)); },
        py::arg("graph"), py::arg("vertices"));
    m.def(
        "projection",
        [](const Graph& g, const std::vector<int>& vertices) -> py::object {
            auto pi = projection(g, SubgraphRef(g, vertices));
            return pi ? py::cast(*pi) : py::none();
        },
        py::arg("graph"), py::arg("vertices"),
        "Projection map onto a convex subgraph (entries -1 outside its components), or None");
    m.def(
        "geodesic_stats",
        [](const Graph& g) {
            GeodesicStats st = geodesic_stats(g);
            py::dict out;
            py::list rows;
            for (int u = 0; u < g.num_vertices(); ++u) {
                py::list row;
                for (int v = 0; v < g.num_vertices(); ++v) row.append(st.count(g.num_vertices(), u, v));
                rows.append(row);
            }
            out["counts"] = rows;
            out["max"] = st.max_count;
            return out;
        },
        py::arg("graph"));

    m.def(
        "magnitude_series", [](const Graph& g, int lmax) { return series_to_list(magnitude_series(g, lmax)); },
        py::arg("graph"), py::arg("lmax"), "Coefficients of #G(q) via similarity-matrix inversion");
    m.def(
        "magnitude_alternating",
        [](const Graph& g, int lmax) { return series_to_list(magnitude_alternating(g, lmax)); },
        py::arg("graph"), py::arg("lmax"), "Coefficients of #G(q) via alternating k-path counts");
    m.def(
        "chain_counts",
        [](const Graph& g, int kmax, int lmax) {
            py::list out;
            for (auto& row : chain_ranks(g, kmax, lmax)) {
                py::list r;
                for (const Int& v : row) r.append(to_py_int(v));
                out.append(r);
            }
            return out;
        },
        py::arg("graph"), py::arg("kmax"), py::arg("lmax"), "Generator counts of MC_{k,l}, indexed [k][l]");

    m.def(
        "homology",
        [](const Graph& g, int k, int l, const std::string& mode, std::uint64_t p) {
            return group_to_tuple(homology_at(g, k, l, parse_mode(mode), p));
        },
        py::arg("graph"), py::arg("k"), py::arg("l"), py::arg("mode") = "Z", py::arg("p") = 0,
        "MH_{k,l} as (free rank, invariant factors)");
    m.def(
        "homology_table",
        [](const Graph& g, int kmax, int lmax, const std::string& mode, std::uint64_t p, int jobs,
           double cell_timeout) {
            TableOptions opt;
            opt.jobs = jobs;
            opt.limits.cell_seconds = cell_timeout;
            BigradedTable t = homology_table(g, kmax, lmax, parse_mode(mode), p, opt);
            py::list cells;
            for (const CellEntry& c : t.cells) {
                py::dict cell;
                cell["k"] = c.k;
                cell["l"] = c.l;
                if (c.skipped) {
                    cell["skipped"] = true;
                } else {
                    cell["rank"] = c.group.free_rank;
                    py::list torsion;
                    for (const Int& d : c.group.torsion) torsion.append(to_py_int(d));
                    cell["torsion"] = torsion;
                }
                cells.append(cell);
            }
            return cells;
        },
        py::arg("graph"), py::arg("kmax"), py::arg("lmax"), py::arg("mode") = "Z", py::arg("p") = 0,
        py::arg("jobs") = 1, py::arg("cell_timeout") = 900.0);
    m.def(
        "torsion_detect",
        [](const Graph& g, int k, int l, std::uint64_t p) {
            TorsionProbe probe = torsion_detect(g, k, l, p);
            return py::make_tuple(probe.dim_q, probe.dim_p);
        },
        py::arg("graph"), py::arg("k"), py::arg("l"), py::arg("p"),
        "Dimensions of MH_{k,l} over Q and over Fp");

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def_property_readonly("pure", &SimplicialComplex::is_pure)
        .def("facets", [](const SimplicialComplex& k) { return k.facets(); })
        .def("num_faces", &SimplicialComplex::num_faces, py::arg("dim"))
        .def("__repr__", [](const SimplicialComplex& k) {
            return "SimplicialComplex(dim=" + std::to_string(k.dimension()) + ", facets=" +
                   std::to_string(k.facets().size()) + ")";
        });

    m.def(
        "complex_from_facets",
        [](std::vector<std::vector<int>> facets) { return SimplicialComplex::from_facets(std::move(facets)); },
        py::arg("facets"));
    m.def("single_simplex", &single_simplex, py::arg("m"));
    m.def("simplex_boundary", &simplex_boundary, py::arg("m"));
    m.def("rp2_complex", &rp2_minimal, "The built-in minimal 6-vertex triangulation of RP^2");
    m.def("ky_graph", &ky_graph, py::arg("complex"),
          "Underlying graph of the Hasse diagram of the augmented face poset");
    m.def("pachner_subdivide", &pachner_subdivide, py::arg("complex"), py::arg("facet"));
    m.def(
        "complex_homology",
        [](const SimplicialComplex& k) {
            py::list out;
            for (const HomologyGroup& h : complex_homology(k)) out.append(group_to_tuple(h));
            return out;
        },
        py::arg("complex"), "Reduced simplicial homology over Z, degrees 0..dim");
}
