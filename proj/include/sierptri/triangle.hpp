#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sierptri/sierpinski.hpp"
#include "sierptri/ternary.hpp"

namespace sierptri {

/// Default cap for building the materialized triangle graph.
inline constexpr int kTriCap = 9;
/// Default cap for all-pairs style operations on the triangle graph.
inline constexpr int kTriAllPairsCap = 6;

/// A vertex of the triangle graph: one of the three primitive corners, or a
/// contracted non-clique edge of S^{n+1} labelled by a word of length 1..n.
class TriangleVertex {
public:
    static TriangleVertex primitive(Digit i);
    static TriangleVertex contracted(TernaryWord w);

    /// Accepts "p0","p1","p2" or a nonempty word of length <= n.
    static TriangleVertex parse(std::string_view text, int n);

    bool is_primitive() const { return primitive_; }
    Digit corner() const;             // primitive only
    const TernaryWord& word() const;  // contracted only
    std::string str() const;

    friend bool operator==(const TriangleVertex& a, const TriangleVertex& b) {
        return a.primitive_ == b.primitive_ && a.corner_ == b.corner_ && a.word_ == b.word_;
    }
    friend bool operator!=(const TriangleVertex& a, const TriangleVertex& b) { return !(a == b); }

    /// Primitives first (by corner digit), then words by (length, lex).
    friend bool operator<(const TriangleVertex& a, const TriangleVertex& b) {
        if (a.primitive_ != b.primitive_) return a.primitive_;
        if (a.primitive_) return a.corner_ < b.corner_;
        return a.word_ < b.word_;
    }

private:
    TriangleVertex() = default;
    bool primitive_ = false;
    Digit corner_ = 0;
    TernaryWord word_;
};

/// The pair of S^{n+1} endpoints a triangle vertex contracts; both entries
/// equal i^{n+1} for the primitive corner i. Canonically ordered.
using LiftedPair = std::pair<TernaryWord, TernaryWord>;

/// Endpoints in S^{n+1} of the (possibly degenerate) contracted edge.
LiftedPair lift(int n, const TriangleVertex& v);

/// Inverse of lift: maps a vertex of S^{n+1} to its image in the triangle
/// graph of order |s| - 1. Non-clique partners map to the same vertex.
TriangleVertex project(const TernaryWord& s);

/// The Sierpinski triangle graph of order n, with materialized adjacency.
/// Vertex indices follow the canonical ordering of TriangleVertex.
class TriangleGraph {
public:
    explicit TriangleGraph(int n, int cap = kTriCap);

    int order_n() const { return n_; }
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;

    std::uint32_t index_of(const TriangleVertex& v) const;
    TriangleVertex vertex_at(std::uint32_t idx) const;

    const std::vector<std::vector<std::uint32_t>>& adjacency() const { return adj_; }

    std::vector<std::uint16_t> bfs_from(std::uint32_t source) const;
    int distance(const TriangleVertex& s, const TriangleVertex& t) const;

    /// Sum of distances from s to every vertex.
    long long total_distance(const TriangleVertex& s) const;
    /// Total distance excluding the three primitive corners.
    long long total_distance_nonprimitive(const TriangleVertex& s) const;

    /// Exhaustive arg-min of total distance, in canonical order.
    std::vector<TriangleVertex> median(int threads = 0) const;

private:
    int n_;
    std::vector<std::vector<std::uint32_t>> adj_;
};

/// Ceiling formula for triangle distances from the four lifted S^{n+1}
/// distances; self-pairs are 0 by convention.
long long distance_formula(int n, const TriangleVertex& s, const TriangleVertex& t);

/// Sum of the four S^{n+1} distances between the lifted endpoint pairs.
/// Both vertices must be non-primitive.
long long delta_pair(int n, const TriangleVertex& s, const TriangleVertex& t);

/// Sum of delta_pair(s, t) over all non-primitive t != s.
long long delta_total(int n, const TriangleVertex& s);

/// All non-primitive vertices of the order-n triangle graph, canonical order.
std::vector<TriangleVertex> nonprimitive_vertices(int n);

}  // namespace sierptri
