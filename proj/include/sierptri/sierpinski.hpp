#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sierptri/ternary.hpp"

namespace sierptri {

/// Default cap for operations that enumerate all 3^n vertices of S^n.
inline constexpr int kEnumCap = 12;
/// Default cap for all-pairs style operations on S^n.
inline constexpr int kAllPairsCap = 8;

enum class EdgeKind : std::uint8_t { Clique, NonClique };

inline char edge_kind_char(EdgeKind k) { return k == EdgeKind::Clique ? 'C' : 'N'; }

namespace sierpinski {

void require_order(int n, int cap);

/// All 3^n vertex labels, in lexicographic order.
std::vector<TernaryWord> vertices(int n, int cap = kEnumCap);

/// True iff all digits of s are equal (corner state i^n). Vacuously true for n = 0.
bool is_extreme(const TernaryWord& s);

/// The unique neighbor of s across a non-clique edge, or nullopt for extremes.
std::optional<TernaryWord> nonclique_partner(const TernaryWord& s);

/// Clique neighbors (ordered by digit) followed by the non-clique partner if any.
std::vector<std::pair<TernaryWord, EdgeKind>> neighbors(const TernaryWord& s);

/// Number of edges of S^n: (3^{n+1} - 3) / 2.
std::uint64_t edge_count(int n);

/// BFS distances from source index over the implicit S^n graph.
/// Vertex indices are base-3 values of the labels.
std::vector<std::uint16_t> bfs_from(int n, std::uint32_t source);

/// Shortest-path length by breadth-first search.
int distance_bfs(int n, const TernaryWord& s, const TernaryWord& t, int cap = kEnumCap);

/// Distance to the corner i^{|s|}: sum of 2^{d-1} over positions d with s_d != i.
long long extreme_distance(const TernaryWord& s, Digit i);

/// Sum of distances from s to all three corners; equals 2(2^n - 1).
long long sum_extreme_distances(int n, const TernaryWord& s);

/// O(n) closed-form distance, agreeing with distance_bfs on all inputs.
long long distance_closed(const TernaryWord& s, const TernaryWord& t);

/// Sum of distances from s to every vertex of S^n (single-source BFS).
long long total_distance(int n, const TernaryWord& s, int cap = kEnumCap);

/// Total distance minus the corner distances and, for non-extreme s, minus
/// the non-clique partner term (which is exactly 1).
long long d_prime(int n, const TernaryWord& s, int cap = kEnumCap);

/// Arg-min set of total_distance over all vertices, sorted; exhaustive BFS.
std::vector<TernaryWord> median(int n, int cap = kAllPairsCap, int threads = 0);

/// Materialized adjacency lists, vertex index = base-3 value of the label.
std::vector<std::vector<std::uint32_t>> adjacency(int n, int cap = kAllPairsCap);

}  // namespace sierpinski
}  // namespace sierptri
