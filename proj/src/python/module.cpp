#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "sierptri/io.hpp"
#include "sierptri/metrics.hpp"
#include "sierptri/sierpinski.hpp"
#include "sierptri/triangle.hpp"
#include "sierptri/verify.hpp"

namespace py = pybind11;
namespace sp = sierptri;
namespace sg = sierptri::sierpinski;

namespace {

sp::TernaryWord word(const std::string& s) { return sp::TernaryWord::parse(s); }

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<std::string> to_strs(const std::vector<sp::TernaryWord>& ws) {
    std::vector<std::string> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(w.str());
    return out;
}

std::vector<std::string> to_strs(const std::vector<sp::TriangleVertex>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(v.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sierpinski graphs, Sierpinski triangle graphs, and their distance metrics";

    m.attr("MAX_ORDER") = sp::kMaxOrder;
    m.attr("ENUM_CAP") = sp::kEnumCap;
    m.attr("TRI_CAP") = sp::kTriCap;

    // Sierpinski graph S^n; vertices are ternary word strings.
    m.def("s_vertices", [](int n) { return to_strs(sg::vertices(n)); }, py::arg("n"));
    m.def("s_is_extreme", [](const std::string& s) { return sg::is_extreme(word(s)); });
    m.def("s_partner", [](const std::string& s) -> std::optional<std::string> {
        auto p = sg::nonclique_partner(word(s));
        if (!p) return std::nullopt;
        return p->str();
    });
    m.def("s_neighbors", [](const std::string& s) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [t, kind] : sg::neighbors(word(s)))
            out.emplace_back(t.str(), std::string(1, sp::edge_kind_char(kind)));
        return out;
    });
    m.def(
        "s_distance",
        [](const std::string& s, const std::string& t, const std::string& method) {
            sp::TernaryWord ws = word(s), wt = word(t);
            if (method == "closed") return sg::distance_closed(ws, wt);
            return static_cast<long long>(sg::distance_bfs(ws.size(), ws, wt));
        },
        py::arg("s"), py::arg("t"), py::arg("method") = "bfs");
    m.def("s_extreme_distance",
          [](const std::string& s, int i) { return sg::extreme_distance(word(s), i); });
    m.def("s_sum_extreme_distances", [](const std::string& s) {
        sp::TernaryWord w = word(s);
        return sg::sum_extreme_distances(w.size(), w);
    });
    m.def("s_total_distance", [](const std::string& s) {
        sp::TernaryWord w = word(s);
        return sg::total_distance(w.size(), w);
    });
    m.def("s_d_prime", [](const std::string& s) {
        sp::TernaryWord w = word(s);
        return sg::d_prime(w.size(), w);
    });
    m.def("s_median", [](int n) { return to_strs(sg::median(n)); }, py::arg("n"));

    // Contraction map between S^{n+1} and the triangle graph of order n.
    m.def(
        "lift",
        [](int n, const std::string& v) {
            auto [a, b] = sp::lift(n, sp::TriangleVertex::parse(v, n));
            return std::make_pair(a.str(), b.str());
        },
        py::arg("n"), py::arg("vertex"));
    m.def("project", [](const std::string& s) { return sp::project(word(s)).str(); });

    m.def(
        "st_distance_formula",
        [](int n, const std::string& s, const std::string& t) {
            return sp::distance_formula(n, sp::TriangleVertex::parse(s, n),
                                        sp::TriangleVertex::parse(t, n));
        },
        py::arg("n"), py::arg("s"), py::arg("t"));
    m.def("delta_pair", [](int n, const std::string& s, const std::string& t) {
        return sp::delta_pair(n, sp::TriangleVertex::parse(s, n),
                              sp::TriangleVertex::parse(t, n));
    });
    m.def("delta_total", [](int n, const std::string& s) {
        return sp::delta_total(n, sp::TriangleVertex::parse(s, n));
    });

    py::class_<sp::TriangleGraph>(m, "TriangleGraph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &sp::TriangleGraph::order_n)
        .def_property_readonly("vertex_count", &sp::TriangleGraph::vertex_count)
        .def_property_readonly("edge_count", &sp::TriangleGraph::edge_count)
        .def("vertices",
             [](const sp::TriangleGraph& g) {
                 std::vector<std::string> out;
                 for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
                     out.push_back(g.vertex_at(v).str());
                 return out;
             })
        .def("neighbors",
             [](const sp::TriangleGraph& g, const std::string& v) {
                 std::vector<std::string> out;
                 for (std::uint32_t u :
                      g.adjacency()[g.index_of(sp::TriangleVertex::parse(v, g.order_n()))])
                     out.push_back(g.vertex_at(u).str());
                 return out;
             })
        .def("distance",
             [](const sp::TriangleGraph& g, const std::string& s, const std::string& t) {
                 return g.distance(sp::TriangleVertex::parse(s, g.order_n()),
                                   sp::TriangleVertex::parse(t, g.order_n()));
             })
        .def("total_distance",
             [](const sp::TriangleGraph& g, const std::string& s) {
                 return g.total_distance(sp::TriangleVertex::parse(s, g.order_n()));
             })
        .def("total_distance_nonprimitive",
             [](const sp::TriangleGraph& g, const std::string& s) {
                 return g.total_distance_nonprimitive(sp::TriangleVertex::parse(s, g.order_n()));
             })
        .def("median",
             [](const sp::TriangleGraph& g) { return to_strs(g.median()); });

    m.def(
        "metrics",
        [](const std::string& family, int n) {
            if (family == "s") {
                auto report = sp::compute_metrics(sg::adjacency(n));
                return json_to_py(sp::io::metrics_json(report, [n](std::uint32_t v) {
                    return sp::TernaryWord::from_index(v, n).str();
                }));
            }
            sp::TriangleGraph g(n, sp::kTriAllPairsCap);
            auto report = sp::compute_metrics(g.adjacency());
            return json_to_py(sp::io::metrics_json(
                report, [&g](std::uint32_t v) { return g.vertex_at(v).str(); }));
        },
        py::arg("family"), py::arg("n"));

    m.def("claim_ids", [] { return sp::verify::claim_ids(); });
    m.def(
        "verify",
        [](const std::vector<std::string>& claims, int n_lo, int n_hi, std::uint64_t seed,
           bool sampled, long long samples, bool unsafe, int max_counterexamples) {
            sp::verify::Options opt;
            opt.seed = seed;
            opt.sampled = sampled;
            opt.samples = samples;
            opt.unsafe = unsafe;
            opt.max_counterexamples = max_counterexamples;
            return json_to_py(sp::verify::to_json(sp::verify::run_suite(claims, n_lo, n_hi, opt)));
        },
        py::arg("claims"), py::arg("n_lo"), py::arg("n_hi"), py::arg("seed") = 1,
        py::arg("sampled") = false, py::arg("samples") = 100000, py::arg("unsafe") = false,
        py::arg("max_counterexamples") = 10);
}
