#include "sierptri/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sierptri/detail/parallel.hpp"

namespace sierptri {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

std::vector<std::uint16_t> bfs(const std::vector<std::vector<std::uint32_t>>& adj,
                               std::uint32_t source) {
    std::vector<std::uint16_t> dist(adj.size(), kUnreached);
    std::vector<std::uint32_t> frontier{source}, next;
    dist[source] = 0;
    std::uint16_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::uint32_t v : frontier)
            for (std::uint32_t u : adj[v])
                if (dist[u] == kUnreached) {
                    dist[u] = level;
                    next.push_back(u);
                }
        frontier.swap(next);
    }
    return dist;
}

}  // namespace

MetricsReport compute_metrics(const std::vector<std::vector<std::uint32_t>>& adj, int threads) {
    MetricsReport report;
    report.order = static_cast<long long>(adj.size());
    report.per_vertex.resize(adj.size());
    if (adj.empty()) throw std::invalid_argument("metrics of the empty graph");
    if (adj.size() == 1) {
        report.median = {0};
        return report;
    }

    std::vector<bool> disconnected(adj.size(), false);
    detail::parallel_for(adj.size(), threads, [&](std::size_t v) {
        auto dist = bfs(adj, static_cast<std::uint32_t>(v));
        VertexMetrics m;
        m.id = static_cast<std::uint32_t>(v);
        for (std::uint16_t d : dist) {
            if (d == kUnreached) {
                disconnected[v] = true;
                return;
            }
            m.total_distance += d;
            m.eccentricity = std::max<int>(m.eccentricity, d);
        }
        report.per_vertex[v] = m;
    });
    if (std::find(disconnected.begin(), disconnected.end(), true) != disconnected.end())
        throw std::runtime_error("graph is disconnected");

    long long best = std::numeric_limits<long long>::max();
    long long worst = std::numeric_limits<long long>::min();
    for (const auto& m : report.per_vertex) {
        best = std::min(best, m.total_distance);
        worst = std::max(worst, m.total_distance);
        report.diameter = std::max(report.diameter, m.eccentricity);
    }
    for (const auto& m : report.per_vertex)
        if (m.total_distance == best) report.median.push_back(m.id);
    report.proximity = {best, report.order - 1};
    report.remoteness = {worst, report.order - 1};
    return report;
}

Lemma1Check check_lemma1(const MetricsReport& report) {
    Lemma1Check result;
    for (const auto& m : report.per_vertex) {
        long long lo = report.order - 1;
        long long hi = (report.order - 1) * m.eccentricity;
        if (!(lo <= m.total_distance && m.total_distance <= hi)) {
            result.ok = false;
            result.counterexamples.push_back(m.id);
        }
    }
    return result;
}

}  // namespace sierptri
