#pragma once

#include <functional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "sierptri/metrics.hpp"
#include "sierptri/sierpinski.hpp"
#include "sierptri/triangle.hpp"

namespace sierptri::io {

/// One line per edge: "u v kind", kind C (clique) or N (non-clique).
void write_edgelist(std::ostream& os, int n, int cap = kEnumCap);

/// DOT graph with clique edges solid and non-clique edges dashed.
void write_dot(std::ostream& os, int n, int cap = kEnumCap);

/// One line per edge: "u v"; primitive vertices print as p0/p1/p2.
void write_edgelist(std::ostream& os, const TriangleGraph& g);

/// DOT graph with primitive vertices drawn as triangles.
void write_dot(std::ostream& os, const TriangleGraph& g);

/// CSV schema: vertex,total_distance,avg_num,avg_den,eccentricity,is_median.
void write_metrics_csv(std::ostream& os, const MetricsReport& report,
                       const std::function<std::string(std::uint32_t)>& label);

nlohmann::json metrics_json(const MetricsReport& report,
                            const std::function<std::string(std::uint32_t)>& label);

}  // namespace sierptri::io
