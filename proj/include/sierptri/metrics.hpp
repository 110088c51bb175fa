#pragma once

#include <cstdint>
#include <vector>

namespace sierptri {

/// Exact average distance; comparisons cross-multiply, no floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
};

struct VertexMetrics {
    std::uint32_t id = 0;
    long long total_distance = 0;
    int eccentricity = 0;

    Rational avg(long long order) const { return {total_distance, order - 1}; }
};

struct MetricsReport {
    long long order = 0;
    int diameter = 0;  // not used by any theorem; kept as a BFS sanity bound
    std::vector<VertexMetrics> per_vertex;
    std::vector<std::uint32_t> median;  // sorted arg-min set of total distance
    Rational proximity;
    Rational remoteness;
};

/// Exact BFS-based metrics over an adjacency-list graph. The graph must be
/// connected; throws std::runtime_error otherwise. Order-1 graphs get a
/// degenerate all-zero report.
MetricsReport compute_metrics(const std::vector<std::vector<std::uint32_t>>& adj,
                              int threads = 0);

struct Lemma1Check {
    bool ok = true;
    std::vector<std::uint32_t> counterexamples;
};

/// Checks order-1 <= d(v) <= (order-1) * ecc(v) for every vertex.
Lemma1Check check_lemma1(const MetricsReport& report);

}  // namespace sierptri
