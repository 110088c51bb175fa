#include "sierptri/sierpinski.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include "sierptri/detail/parallel.hpp"

namespace sierptri::sierpinski {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

/// Neighbor indices of vertex v in the implicit S^n graph. Returns the count
/// (2 for extremes, 3 otherwise); clique neighbors first, ordered by digit.
int neighbors_idx(int n, std::uint64_t v, std::uint64_t out[3]) {
    if (n == 0) return 0;
    std::uint64_t d0 = v % 3;
    int cnt = 0;
    for (std::uint64_t a = 0; a < 3; ++a)
        if (a != d0) out[cnt++] = v - d0 + a;
    // locate the trailing run of s_1 to find the non-clique partner
    std::uint64_t rest = v / 3;
    int r = 1;
    while (r < n && rest % 3 == d0) {
        rest /= 3;
        ++r;
    }
    if (r == n) return cnt;  // extreme vertex
    std::uint64_t i = rest % 3;
    std::uint64_t p3r = pow3(r);
    std::uint64_t low = v % (p3r * 3);                     // i . d0^r
    std::uint64_t swapped = d0 * p3r + i * (p3r - 1) / 2;  // d0 . i^r
    out[cnt++] = v - low + swapped;
    return cnt;
}

void check_word_order(int n, const TernaryWord& s) {
    if (s.size() != n)
        throw std::invalid_argument("vertex label \"" + s.str() + "\" has length " +
                                    std::to_string(s.size()) + ", expected " + std::to_string(n));
}

}  // namespace

void require_order(int n, int cap) {
    if (n < 0) throw std::out_of_range("order must be nonnegative");
    if (n > cap)
        throw std::out_of_range("order " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
}

std::vector<TernaryWord> vertices(int n, int cap) {
    require_order(n, cap);
    std::uint64_t count = pow3(n);
    std::vector<TernaryWord> out;
    out.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) out.push_back(TernaryWord::from_index(v, n));
    return out;
}

bool is_extreme(const TernaryWord& s) {
    for (int p = 2; p <= s.size(); ++p)
        if (s.digit(p) != s.digit(1)) return false;
    return true;
}

std::optional<TernaryWord> nonclique_partner(const TernaryWord& s) {
    if (s.empty()) throw std::invalid_argument("partner of empty word");
    if (is_extreme(s)) return std::nullopt;
    auto [j, r] = s.trailing_run();
    Digit i = s.digit(r + 1);
    return TernaryWord::pattern(s.prefix_above(r + 1), j, i, r);
}

std::vector<std::pair<TernaryWord, EdgeKind>> neighbors(const TernaryWord& s) {
    if (s.empty()) throw std::invalid_argument("neighbors of empty word");
    std::vector<std::pair<TernaryWord, EdgeKind>> out;
    out.reserve(3);
    for (Digit a = 0; a < 3; ++a)
        if (a != s.digit(1)) out.emplace_back(s.with_digit(1, a), EdgeKind::Clique);
    if (auto p = nonclique_partner(s)) out.emplace_back(*p, EdgeKind::NonClique);
    return out;
}

std::uint64_t edge_count(int n) { return (pow3(n + 1) - 3) / 2; }

std::vector<std::uint16_t> bfs_from(int n, std::uint32_t source) {
    std::uint64_t count = pow3(n);
    std::vector<std::uint16_t> dist(count, kUnreached);
    std::vector<std::uint32_t> frontier{source}, next;
    dist[source] = 0;
    std::uint16_t level = 0;
    std::uint64_t nb[3];
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (std::uint32_t v : frontier) {
            int k = neighbors_idx(n, v, nb);
            for (int e = 0; e < k; ++e) {
                std::uint32_t u = static_cast<std::uint32_t>(nb[e]);
                if (dist[u] == kUnreached) {
                    dist[u] = level;
                    next.push_back(u);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

int distance_bfs(int n, const TernaryWord& s, const TernaryWord& t, int cap) {
    require_order(n, cap);
    check_word_order(n, s);
    check_word_order(n, t);
    if (s == t) return 0;
    auto dist = bfs_from(n, static_cast<std::uint32_t>(s.index()));
    return dist[t.index()];
}

long long extreme_distance(const TernaryWord& s, Digit i) {
    if (i > 2) throw std::invalid_argument("digit out of {0,1,2}");
    long long d = 0;
    for (int p = 1; p <= s.size(); ++p)
        if (s.digit(p) != i) d += 1LL << (p - 1);
    return d;
}

long long sum_extreme_distances(int n, const TernaryWord& s) {
    check_word_order(n, s);
    long long d = 0;
    for (Digit i = 0; i < 3; ++i) d += extreme_distance(s, i);
    return d;
}

long long distance_closed(const TernaryWord& s, const TernaryWord& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("distance between words of different length");
    int m = s.size();
    while (m >= 1 && s.digit(m) == t.digit(m)) --m;  // strip common prefix
    if (m == 0) return 0;
    Digit i = s.digit(m), j = t.digit(m), k = static_cast<Digit>(3 - i - j);
    TernaryWord ss = s.suffix(m - 1), ts = t.suffix(m - 1);
    long long direct = extreme_distance(ss, j) + 1 + extreme_distance(ts, i);
    long long detour = extreme_distance(ss, k) + extreme_distance(ts, k) + (1LL << (m - 1)) + 1;
    return std::min(direct, detour);
}

long long total_distance(int n, const TernaryWord& s, int cap) {
    require_order(n, cap);
    check_word_order(n, s);
    auto dist = bfs_from(n, static_cast<std::uint32_t>(s.index()));
    long long sum = 0;
    for (std::uint16_t d : dist) sum += d;
    return sum;
}

long long d_prime(int n, const TernaryWord& s, int cap) {
    long long total = total_distance(n, s, cap);
    long long excluded = sum_extreme_distances(n, s);
    if (n >= 1 && !is_extreme(s)) excluded += 1;  // the non-clique partner is adjacent
    return total - excluded;
}

std::vector<TernaryWord> median(int n, int cap, int threads) {
    require_order(n, cap);
    std::uint64_t count = pow3(n);
    std::vector<long long> totals(count);
    detail::parallel_for(count, threads, [&](std::size_t v) {
        auto dist = bfs_from(n, static_cast<std::uint32_t>(v));
        long long sum = 0;
        for (std::uint16_t d : dist) sum += d;
        totals[v] = sum;
    });
    long long best = *std::min_element(totals.begin(), totals.end());
    std::vector<TernaryWord> out;
    for (std::uint64_t v = 0; v < count; ++v)
        if (totals[v] == best) out.push_back(TernaryWord::from_index(v, n));
    return out;  // ascending index = lexicographic order
}

std::vector<std::vector<std::uint32_t>> adjacency(int n, int cap) {
    require_order(n, cap);
    std::uint64_t count = pow3(n);
    std::vector<std::vector<std::uint32_t>> adj(count);
    std::uint64_t nb[3];
    for (std::uint64_t v = 0; v < count; ++v) {
        int k = neighbors_idx(n, v, nb);
        for (int e = 0; e < k; ++e) adj[v].push_back(static_cast<std::uint32_t>(nb[e]));
        std::sort(adj[v].begin(), adj[v].end());
    }
    return adj;
}

}  // namespace sierptri::sierpinski
