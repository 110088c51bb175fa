#include "sierptri/metrics.hpp"

#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "sierptri/io.hpp"
#include "sierptri/sierpinski.hpp"
#include "sierptri/triangle.hpp"

using sierptri::compute_metrics;
using sierptri::MetricsReport;
using Adj = std::vector<std::vector<std::uint32_t>>;

TEST_CASE("complete graph K3: equalities everywhere") {
    Adj k3{{1, 2}, {0, 2}, {0, 1}};
    MetricsReport r = compute_metrics(k3);
    for (const auto& m : r.per_vertex) {
        CHECK(m.total_distance == 2);
        CHECK(m.eccentricity == 1);
    }
    CHECK(r.median == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(r.proximity == sierptri::Rational{1, 1});
    CHECK(r.remoteness == sierptri::Rational{1, 1});
    CHECK(r.diameter == 1);

    auto lemma1 = check_lemma1(r);
    CHECK(lemma1.ok);
}

TEST_CASE("path graph P3") {
    Adj p3{{1}, {0, 2}, {1}};
    MetricsReport r = compute_metrics(p3);
    CHECK(r.median == std::vector<std::uint32_t>{1});
    CHECK(r.per_vertex[1].total_distance == 2);
    CHECK(r.per_vertex[0].total_distance == 3);
    CHECK(r.proximity == sierptri::Rational{2, 2});
    CHECK(r.remoteness == sierptri::Rational{3, 2});
    CHECK(check_lemma1(r).ok);
    // strict at the leaves: 3 < (order-1) * ecc = 4
    CHECK(r.per_vertex[0].total_distance <
          (r.order - 1) * r.per_vertex[0].eccentricity);
}

TEST_CASE("degenerate and error cases") {
    CHECK_THROWS_AS(compute_metrics(Adj{}), std::invalid_argument);
    MetricsReport single = compute_metrics(Adj{{}});
    CHECK(single.median == std::vector<std::uint32_t>{0});
    CHECK(single.per_vertex[0].total_distance == 0);
    CHECK_THROWS_AS(compute_metrics(Adj{{}, {}}), std::runtime_error);  // disconnected
}

TEST_CASE("median of the order-1 triangle graph is the inner ring") {
    sierptri::TriangleGraph g(1);
    MetricsReport r = compute_metrics(g.adjacency());
    std::vector<std::string> median;
    for (auto v : r.median) median.push_back(g.vertex_at(v).str());
    CHECK(median == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("median of S^3 has 12 vertices") {
    MetricsReport r = compute_metrics(sierptri::sierpinski::adjacency(3));
    CHECK(r.median.size() == 12);
    CHECK(check_lemma1(r).ok);
}

TEST_CASE("parallel and serial runs agree") {
    auto adj = sierptri::sierpinski::adjacency(4);
    MetricsReport serial = compute_metrics(adj, 1);
    MetricsReport parallel = compute_metrics(adj, 4);
    CHECK(serial.median == parallel.median);
    REQUIRE(serial.per_vertex.size() == parallel.per_vertex.size());
    for (std::size_t i = 0; i < serial.per_vertex.size(); ++i) {
        CHECK(serial.per_vertex[i].total_distance == parallel.per_vertex[i].total_distance);
        CHECK(serial.per_vertex[i].eccentricity == parallel.per_vertex[i].eccentricity);
    }
}

TEST_CASE("rational comparison is exact") {
    using sierptri::Rational;
    CHECK(Rational{1, 3} < Rational{2, 5});
    CHECK(Rational{2, 6} == Rational{1, 3});
    CHECK(!(Rational{333333333, 1000000000} == Rational{1, 3}));
}

TEST_CASE("csv export shape") {
    sierptri::TriangleGraph g(2);
    MetricsReport r = compute_metrics(g.adjacency());
    std::ostringstream os;
    sierptri::io::write_metrics_csv(os, r, [&g](std::uint32_t v) { return g.vertex_at(v).str(); });
    std::string text = os.str();
    CHECK(text.rfind("vertex,total_distance,avg_num,avg_den,eccentricity,is_median\n", 0) == 0);
    std::size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == 1 + 15);  // header + one row per vertex
}
