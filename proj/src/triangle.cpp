#include "sierptri/triangle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sierptri/detail/parallel.hpp"

namespace sierptri {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

/// Index of the first word of length l in the canonical ordering.
std::uint64_t length_offset(int l) { return 3 + (pow3(l) - 3) / 2; }

std::uint64_t triangle_order(int n) { return (pow3(n + 1) + 3) / 2; }

void check_vertex(int n, const TriangleVertex& v) {
    if (v.is_primitive()) return;
    int l = v.word().size();
    if (l < 1 || l > n)
        throw std::invalid_argument("vertex \"" + v.str() + "\" is not valid for order " +
                                    std::to_string(n));
}

}  // namespace

TriangleVertex TriangleVertex::primitive(Digit i) {
    if (i > 2) throw std::invalid_argument("primitive corner out of {0,1,2}");
    TriangleVertex v;
    v.primitive_ = true;
    v.corner_ = i;
    return v;
}

TriangleVertex TriangleVertex::contracted(TernaryWord w) {
    if (w.empty()) throw std::invalid_argument("contracted vertex label must be nonempty");
    TriangleVertex v;
    v.word_ = w;
    return v;
}

TriangleVertex TriangleVertex::parse(std::string_view text, int n) {
    if (text.size() == 2 && text[0] == 'p' && text[1] >= '0' && text[1] <= '2')
        return primitive(static_cast<Digit>(text[1] - '0'));
    TriangleVertex v = contracted(TernaryWord::parse(text));
    check_vertex(n, v);
    return v;
}

Digit TriangleVertex::corner() const {
    if (!primitive_) throw std::logic_error("corner() on a contracted vertex");
    return corner_;
}

const TernaryWord& TriangleVertex::word() const {
    if (primitive_) throw std::logic_error("word() on a primitive vertex");
    return word_;
}

std::string TriangleVertex::str() const {
    if (primitive_) return std::string("p") + static_cast<char>('0' + corner_);
    return word_.str();
}

LiftedPair lift(int n, const TriangleVertex& v) {
    check_vertex(n, v);
    if (v.is_primitive()) {
        TernaryWord corner =
            TernaryWord::pattern(TernaryWord(), v.corner(), v.corner(), n);  // i^{n+1}
        return {corner, corner};
    }
    const TernaryWord& w = v.word();
    int l = w.size();
    int run = n + 1 - l;  // d - 1
    Digit k = w.digit(1);
    Digit i = k == 0 ? 1 : 0;
    Digit j = k == 2 ? 1 : 2;
    TernaryWord prefix = w.prefix_above(1);
    TernaryWord a = TernaryWord::pattern(prefix, i, j, run);
    TernaryWord b = TernaryWord::pattern(prefix, j, i, run);
    return a < b ? LiftedPair{a, b} : LiftedPair{b, a};
}

TriangleVertex project(const TernaryWord& s) {
    if (s.empty()) throw std::invalid_argument("cannot project the empty word");
    if (sierpinski::is_extreme(s)) return TriangleVertex::primitive(s.digit(1));
    auto [j, r] = s.trailing_run();
    Digit i = s.digit(r + 1);
    Digit k = static_cast<Digit>(3 - i - j);
    return TriangleVertex::contracted(TernaryWord::pattern(s.prefix_above(r + 1), k, k, 0));
}

TriangleGraph::TriangleGraph(int n, int cap) : n_(n) {
    sierpinski::require_order(n, cap);
    adj_.resize(triangle_order(n));
    std::uint64_t count = pow3(n + 1);
    for (std::uint64_t v = 0; v < count; ++v) {
        TernaryWord sv = TernaryWord::from_index(v, n + 1);
        std::uint32_t pv = index_of(project(sv));
        Digit d0 = sv.digit(1);
        for (Digit a = static_cast<Digit>(d0 + 1); a < 3; ++a) {  // each clique edge once
            std::uint32_t pu = index_of(project(sv.with_digit(1, a)));
            adj_[pv].push_back(pu);
            adj_[pu].push_back(pv);
        }
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
}

std::size_t TriangleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return twice / 2;
}

std::uint32_t TriangleGraph::index_of(const TriangleVertex& v) const {
    check_vertex(n_, v);
    if (v.is_primitive()) return v.corner();
    return static_cast<std::uint32_t>(length_offset(v.word().size()) + v.word().index());
}

TriangleVertex TriangleGraph::vertex_at(std::uint32_t idx) const {
    if (idx < 3) return TriangleVertex::primitive(static_cast<Digit>(idx));
    for (int l = 1; l <= n_; ++l) {
        std::uint64_t lo = length_offset(l), hi = length_offset(l + 1);
        if (idx < hi) return TriangleVertex::contracted(TernaryWord::from_index(idx - lo, l));
    }
    throw std::out_of_range("triangle vertex index out of range");
}

std::vector<std::uint16_t> TriangleGraph::bfs_from(std::uint32_t source) const {
    std::vector<std::uint16_t> dist(adj_.size(), kUnreached);
    std::vector<std::uint32_t> frontier{source}, next;
    dist[source] = 0;
    std::uint16_t level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::uint32_t v : frontier)
            for (std::uint32_t u : adj_[v])
                if (dist[u] == kUnreached) {
                    dist[u] = level;
                    next.push_back(u);
                }
        frontier.swap(next);
    }
    return dist;
}

int TriangleGraph::distance(const TriangleVertex& s, const TriangleVertex& t) const {
    if (s == t) return 0;
    return bfs_from(index_of(s))[index_of(t)];
}

long long TriangleGraph::total_distance(const TriangleVertex& s) const {
    auto dist = bfs_from(index_of(s));
    long long sum = 0;
    for (std::uint16_t d : dist) sum += d;
    return sum;
}

long long TriangleGraph::total_distance_nonprimitive(const TriangleVertex& s) const {
    auto dist = bfs_from(index_of(s));
    long long sum = 0;
    for (std::size_t v = 3; v < dist.size(); ++v) sum += dist[v];
    return sum;
}

std::vector<TriangleVertex> TriangleGraph::median(int threads) const {
    std::vector<long long> totals(adj_.size());
    detail::parallel_for(adj_.size(), threads, [&](std::size_t v) {
        auto dist = bfs_from(static_cast<std::uint32_t>(v));
        long long sum = 0;
        for (std::uint16_t d : dist) sum += d;
        totals[v] = sum;
    });
    long long best = *std::min_element(totals.begin(), totals.end());
    std::vector<TriangleVertex> out;
    for (std::uint32_t v = 0; v < totals.size(); ++v)
        if (totals[v] == best) out.push_back(vertex_at(v));
    return out;
}

long long distance_formula(int n, const TriangleVertex& s, const TriangleVertex& t) {
    if (s == t) return 0;  // the raw formula would give ceil(2/8) = 1 on self-pairs
    auto [s1, s2] = lift(n, s);
    auto [t1, t2] = lift(n, t);
    long long sum = sierpinski::distance_closed(s1, t1) + sierpinski::distance_closed(s1, t2) +
                    sierpinski::distance_closed(s2, t1) + sierpinski::distance_closed(s2, t2);
    return (sum + 7) / 8;
}

long long delta_pair(int n, const TriangleVertex& s, const TriangleVertex& t) {
    if (s.is_primitive() || t.is_primitive())
        throw std::invalid_argument("delta is defined only for non-primitive vertices");
    auto [s1, s2] = lift(n, s);
    auto [t1, t2] = lift(n, t);
    return sierpinski::distance_closed(s1, t1) + sierpinski::distance_closed(s1, t2) +
           sierpinski::distance_closed(s2, t1) + sierpinski::distance_closed(s2, t2);
}

long long delta_total(int n, const TriangleVertex& s) {
    if (s.is_primitive())
        throw std::invalid_argument("delta is defined only for non-primitive vertices");
    check_vertex(n, s);
    long long sum = 0;
    for (const TriangleVertex& t : nonprimitive_vertices(n))
        if (t != s) sum += delta_pair(n, s, t);
    return sum;
}

std::vector<TriangleVertex> nonprimitive_vertices(int n) {
    std::vector<TriangleVertex> out;
    out.reserve((pow3(n + 1) - 3) / 2);
    for (int l = 1; l <= n; ++l)
        for (std::uint64_t v = 0; v < pow3(l); ++v)
            out.push_back(TriangleVertex::contracted(TernaryWord::from_index(v, l)));
    return out;
}

}  // namespace sierptri
