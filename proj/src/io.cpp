#include "sierptri/io.hpp"

#include <algorithm>
#include <cstdio>

namespace sierptri::io {

namespace {

/// Undirected edges of S^n with each edge listed once, endpoints ordered.
template <typename Fn>
void for_each_s_edge(int n, int cap, Fn&& fn) {
    for (const TernaryWord& s : sierpinski::vertices(n, cap))
        for (const auto& [t, kind] : sierpinski::neighbors(s))
            if (s < t) fn(s, t, kind);
}

std::string avg_fixed(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.value());
    return buf;
}

}  // namespace

void write_edgelist(std::ostream& os, int n, int cap) {
    if (n == 0) {
        sierpinski::require_order(n, cap);
        return;
    }
    for_each_s_edge(n, cap, [&](const TernaryWord& s, const TernaryWord& t, EdgeKind kind) {
        os << s.str() << ' ' << t.str() << ' ' << edge_kind_char(kind) << '\n';
    });
}

void write_dot(std::ostream& os, int n, int cap) {
    sierpinski::require_order(n, cap);
    os << "graph S" << n << " {\n";
    if (n == 0) os << "  \"\";\n";
    for_each_s_edge(n, cap, [&](const TernaryWord& s, const TernaryWord& t, EdgeKind kind) {
        os << "  \"" << s.str() << "\" -- \"" << t.str() << '"';
        if (kind == EdgeKind::NonClique) os << " [style=dashed]";
        os << ";\n";
    });
    os << "}\n";
}

void write_edgelist(std::ostream& os, const TriangleGraph& g) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        for (std::uint32_t u : g.adjacency()[v])
            if (v < u) os << g.vertex_at(v).str() << ' ' << g.vertex_at(u).str() << '\n';
}

void write_dot(std::ostream& os, const TriangleGraph& g) {
    os << "graph ST" << g.order_n() << " {\n";
    for (std::uint32_t v = 0; v < 3; ++v)
        os << "  \"" << g.vertex_at(v).str() << "\" [shape=triangle];\n";
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        for (std::uint32_t u : g.adjacency()[v])
            if (v < u)
                os << "  \"" << g.vertex_at(v).str() << "\" -- \"" << g.vertex_at(u).str()
                   << "\";\n";
    os << "}\n";
}

void write_metrics_csv(std::ostream& os, const MetricsReport& report,
                       const std::function<std::string(std::uint32_t)>& label) {
    os << "vertex,total_distance,avg_num,avg_den,eccentricity,is_median\n";
    for (const auto& m : report.per_vertex) {
        bool is_median = std::binary_search(report.median.begin(), report.median.end(), m.id);
        os << label(m.id) << ',' << m.total_distance << ',' << m.total_distance << ','
           << report.order - 1 << ',' << m.eccentricity << ',' << (is_median ? 1 : 0) << '\n';
    }
}

nlohmann::json metrics_json(const MetricsReport& report,
                            const std::function<std::string(std::uint32_t)>& label) {
    nlohmann::json j;
    j["order"] = report.order;
    j["diameter"] = report.diameter;
    j["proximity"] = {{"num", report.proximity.num},
                      {"den", report.proximity.den},
                      {"value", avg_fixed(report.proximity)}};
    j["remoteness"] = {{"num", report.remoteness.num},
                       {"den", report.remoteness.den},
                       {"value", avg_fixed(report.remoteness)}};
    nlohmann::json med = nlohmann::json::array();
    for (std::uint32_t v : report.median) med.push_back(label(v));
    j["median"] = med;
    nlohmann::json per = nlohmann::json::array();
    for (const auto& m : report.per_vertex)
        per.push_back({{"vertex", label(m.id)},
                       {"total_distance", m.total_distance},
                       {"avg_num", m.total_distance},
                       {"avg_den", report.order - 1},
                       {"eccentricity", m.eccentricity}});
    j["per_vertex"] = per;
    return j;
}

}  // namespace sierptri::io
