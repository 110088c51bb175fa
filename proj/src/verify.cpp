#include "sierptri/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "sierptri/detail/rng.hpp"
#include "sierptri/sierpinski.hpp"
#include "sierptri/triangle.hpp"

namespace sierptri::verify {

namespace {

namespace sg = sierptri::sierpinski;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void record_failure(Result& r, const Options& opt, const std::string& witness) {
    r.status = Status::Fail;
    if (static_cast<int>(r.counterexamples.size()) < opt.max_counterexamples)
        r.counterexamples.push_back(witness);
}

/// The six words 0,1,2,00,11,22 as triangle vertices.
std::vector<TriangleVertex> canonical_median() {
    std::vector<TriangleVertex> m;
    for (Digit i = 0; i < 3; ++i)
        m.push_back(TriangleVertex::contracted(TernaryWord::pattern(TernaryWord(), i, i, 0)));
    for (Digit i = 0; i < 3; ++i)
        m.push_back(TriangleVertex::contracted(TernaryWord::pattern(TernaryWord(), i, i, 1)));
    std::sort(m.begin(), m.end());
    return m;
}

std::string vertex_list(const std::vector<TriangleVertex>& vs) {
    std::string s;
    for (const auto& v : vs) {
        if (!s.empty()) s += ' ';
        s += v.str();
    }
    return s;
}

/// Shared per-order scratch for the delta-based lemmas: all non-primitive
/// vertices, their lifted endpoint pairs, pairwise delta row sums, and the
/// BFS totals excluding primitives.
struct DeltaContext {
    int n;
    TriangleGraph g;
    std::vector<TriangleVertex> vprime;
    std::vector<LiftedPair> lifts;
    std::vector<std::vector<long long>> delta;  // delta[a][b], a != b; 2 on the diagonal
    std::vector<long long> delta_row;           // self-term excluded
    std::vector<long long> dhat_prime;

    explicit DeltaContext(int order) : n(order), g(order), vprime(nonprimitive_vertices(order)) {
        lifts.reserve(vprime.size());
        for (const auto& v : vprime) lifts.push_back(lift(n, v));
        std::size_t m = vprime.size();
        delta.assign(m, std::vector<long long>(m, 0));
        delta_row.assign(m, 0);
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                long long d = sg::distance_closed(lifts[a].first, lifts[b].first) +
                              sg::distance_closed(lifts[a].first, lifts[b].second) +
                              sg::distance_closed(lifts[a].second, lifts[b].first) +
                              sg::distance_closed(lifts[a].second, lifts[b].second);
                delta[a][b] = d;
                if (a != b) delta_row[a] += d;
            }
        dhat_prime.reserve(m);
        for (const auto& v : vprime) dhat_prime.push_back(g.total_distance_nonprimitive(v));
    }

    /// Indices into vprime of the computed median of the triangle graph.
    std::vector<std::size_t> median_indices(int threads) const {
        std::vector<std::size_t> out;
        for (const auto& m : g.median(threads)) {
            auto it = std::find(vprime.begin(), vprime.end(), m);
            if (it != vprime.end()) out.push_back(static_cast<std::size_t>(it - vprime.begin()));
        }
        return out;
    }
};

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "skipped";
    }
}

nlohmann::json to_json(const Result& r) {
    nlohmann::json j;
    j["claim"] = r.claim;
    j["n"] = r.n;
    j["status"] = status_name(r.status);
    j["checked"] = r.checked;
    j["counterexamples"] = r.counterexamples;
    j["ms"] = r.ms;
    if (!r.stats.empty()) j["stats"] = r.stats;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

nlohmann::json to_json(const std::vector<Result>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    return arr;
}

bool all_passed(const std::vector<Result>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const Result& r) { return r.status == Status::Fail; });
}

Result thm1_median(int n, const Options& opt) {
    sg::require_order(n, opt.unsafe ? kTriCap : kTriAllPairsCap);
    auto start = Clock::now();
    Result r{.claim = "thm1", .n = n, .status = Status::Pass};
    if (n < 2) {
        r.status = Status::Skipped;
        r.note = "theorem domain is n >= 2";
        return r;
    }
    TriangleGraph g(n);
    r.checked = static_cast<long long>(g.vertex_count());
    auto median = g.median(opt.threads);
    if (median != canonical_median())
        record_failure(r, opt, "median = {" + vertex_list(median) + "}");
    r.stats["median_size"] = static_cast<long long>(median.size());
    r.ms = elapsed_ms(start);
    return r;
}

Result thm1_lift(int n, const Options& opt) {
    sg::require_order(n, 7);
    auto start = Clock::now();
    Result r{.claim = "thm1_lift", .n = n, .status = Status::Pass};
    if (n < 2) {
        r.status = Status::Skipped;
        r.note = "theorem domain is n >= 2";
        return r;
    }
    auto median_up = sg::median(n + 1, n + 1, opt.threads);
    std::set<TernaryWord> in_median(median_up.begin(), median_up.end());
    std::vector<TriangleVertex> projected;
    for (const TernaryWord& m : median_up) {
        auto p = sg::nonclique_partner(m);
        if (p && *p < m && in_median.count(*p)) continue;  // edge already taken from *p
        if (p && in_median.count(*p)) projected.push_back(project(m));
    }
    std::sort(projected.begin(), projected.end());
    r.checked = static_cast<long long>(median_up.size());
    r.stats["median_pairs"] = static_cast<long long>(projected.size());
    TriangleGraph g(n);
    auto median_tri = g.median(opt.threads);
    if (projected != median_tri)
        record_failure(r, opt, "projected = {" + vertex_list(projected) + "} median = {" +
                                   vertex_list(median_tri) + "}");
    r.ms = elapsed_ms(start);
    return r;
}

Result thm2_primitive_sum(int n, const Options& opt) {
    sg::require_order(n, kTriCap);
    auto start = Clock::now();
    Result r{.claim = "thm2", .n = n, .status = Status::Pass};
    TriangleGraph g(n);
    std::vector<std::vector<std::uint16_t>> from_primitive;
    for (std::uint32_t i = 0; i < 3; ++i) from_primitive.push_back(g.bfs_from(i));
    long long expected = 1LL << (n + 1);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        long long sum = 0;
        for (int i = 0; i < 3; ++i) sum += from_primitive[i][v];
        ++r.checked;
        if (sum != expected)
            record_failure(r, opt, "s=" + g.vertex_at(v).str() + " sum=" + std::to_string(sum));
    }
    r.ms = elapsed_ms(start);
    return r;
}

Result thm3_extreme_sum(int n, const Options& opt) {
    sg::require_order(n, kEnumCap);
    auto start = Clock::now();
    Result r{.claim = "thm3", .n = n, .status = Status::Pass};
    long long expected = 2 * ((1LL << n) - 1);
    std::vector<std::vector<std::uint16_t>> oracle;
    if (n <= 5)  // BFS cross-check of the closed-form corner distances
        for (Digit i = 0; i < 3; ++i)
            oracle.push_back(sg::bfs_from(n, static_cast<std::uint32_t>(
                                                 TernaryWord::pattern(TernaryWord(), i, i, n - 1)
                                                     .index())));
    std::uint64_t count = pow3(n);
    for (std::uint64_t v = 0; v < count; ++v) {
        TernaryWord s = TernaryWord::from_index(v, n);
        long long sum = 0;
        for (Digit i = 0; i < 3; ++i) {
            long long d = sg::extreme_distance(s, i);
            if (!oracle.empty() && d != oracle[i][v]) {
                record_failure(r, opt, "s=" + s.str() + " corner=" + std::to_string(int(i)) +
                                           " closed=" + std::to_string(d) +
                                           " bfs=" + std::to_string(oracle[i][v]));
            }
            sum += d;
        }
        ++r.checked;
        if (sum != expected)
            record_failure(r, opt, "s=" + s.str() + " sum=" + std::to_string(sum));
    }
    r.ms = elapsed_ms(start);
    return r;
}

Result eq1_distance(int n, const Options& opt) {
    sg::require_order(n, kTriCap);
    bool sampled = opt.sampled || n > 4;
    auto start = Clock::now();
    Result r{.claim = "eq1", .n = n, .status = Status::Pass};
    TriangleGraph g(n);
    std::size_t count = g.vertex_count();
    auto check_pair = [&](std::uint32_t u, std::uint32_t v,
                          const std::vector<std::uint16_t>& dist_u) {
        TriangleVertex a = g.vertex_at(u), b = g.vertex_at(v);
        long long formula = distance_formula(n, a, b);
        ++r.checked;
        if (formula != dist_u[v])
            record_failure(r, opt, "s=" + a.str() + " t=" + b.str() +
                                       " bfs=" + std::to_string(dist_u[v]) +
                                       " formula=" + std::to_string(formula));
    };
    if (!sampled) {
        for (std::uint32_t u = 0; u < count; ++u) {
            auto dist = g.bfs_from(u);
            for (std::uint32_t v = u; v < count; ++v) check_pair(u, v, dist);
        }
    } else {
        r.seed = opt.seed;
        r.note = "sampled";
        detail::Xorshift64Star rng(opt.seed);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(opt.samples);
        for (auto& p : pairs)
            p = {static_cast<std::uint32_t>(rng.below(count)),
                 static_cast<std::uint32_t>(rng.below(count))};
        std::sort(pairs.begin(), pairs.end());
        std::vector<std::uint16_t> dist;
        std::uint32_t cached = UINT32_MAX;
        for (auto [u, v] : pairs) {
            if (u != cached) {
                dist = g.bfs_from(u);
                cached = u;
            }
            check_pair(u, v, dist);
        }
    }
    r.ms = elapsed_ms(start);
    return r;
}

Result lem2_residues(int n, const Options& opt) {
    sg::require_order(n, opt.unsafe ? 5 : 4);
    auto start = Clock::now();
    Result r{.claim = "lem2", .n = n, .status = Status::Pass};
    auto vprime = nonprimitive_vertices(n);
    std::vector<LiftedPair> lifts;
    for (const auto& v : vprime) lifts.push_back(lift(n, v));
    for (std::size_t a = 0; a < vprime.size(); ++a)
        for (std::size_t b = 0; b < vprime.size(); ++b) {
            if (a == b) continue;
            long long d = sg::distance_closed(lifts[a].first, lifts[b].first) +
                          sg::distance_closed(lifts[a].first, lifts[b].second) +
                          sg::distance_closed(lifts[a].second, lifts[b].first) +
                          sg::distance_closed(lifts[a].second, lifts[b].second);
            long long res = d % 8;
            ++r.checked;
            ++r.stats["residue_" + std::to_string(res)];
            if (res != 0 && res != 4 && res != 6)
                record_failure(r, opt, "s=" + vprime[a].str() + " t=" + vprime[b].str() +
                                           " delta=" + std::to_string(d));
        }
    r.ms = elapsed_ms(start);
    return r;
}

Result remark1_identity(int n, const Options& opt) {
    sg::require_order(n, opt.unsafe ? 5 : 4);
    auto start = Clock::now();
    Result r{.claim = "remark1", .n = n, .status = Status::Pass};
    DeltaContext ctx(n);
    for (std::size_t a = 0; a < ctx.vprime.size(); ++a) {
        long long lhs = sg::d_prime(n + 1, ctx.lifts[a].first, kEnumCap) +
                        sg::d_prime(n + 1, ctx.lifts[a].second, kEnumCap);
        ++r.checked;
        if (lhs != ctx.delta_row[a])
            record_failure(r, opt, "s=" + ctx.vprime[a].str() + " d'(s1)+d'(s2)=" +
                                       std::to_string(lhs) +
                                       " delta=" + std::to_string(ctx.delta_row[a]));
    }
    r.ms = elapsed_ms(start);
    return r;
}

Result lem3_nonmedian(int n, const Options& opt) {
    sg::require_order(n, opt.unsafe ? kTriAllPairsCap : 5);
    auto start = Clock::now();
    Result r{.claim = "lem3", .n = n, .status = Status::Pass};
    if (n < 2) {
        r.status = Status::Skipped;
        r.note = "lemma domain is n >= 2";
        return r;
    }
    DeltaContext ctx(n);
    auto medians = ctx.median_indices(opt.threads);
    long long offset = static_cast<long long>(pow3(n)) - 3;
    for (std::size_t a = 0; a < ctx.vprime.size(); ++a) {
        if (std::find(medians.begin(), medians.end(), a) != medians.end()) continue;
        ++r.checked;
        long long lhs = ctx.delta_row[a] + offset;
        long long rhs = 8 * ctx.dhat_prime[a];
        if (lhs == rhs) ++r.stats["equality_count"];
        if (lhs > rhs)
            record_failure(r, opt, "s=" + ctx.vprime[a].str() + " delta+3^n-3=" +
                                       std::to_string(lhs) + " 8d'=" + std::to_string(rhs));
    }
    r.ms = elapsed_ms(start);
    return r;
}

Result lem4_thm5_residue_counts(int n, const Options& opt) {
    sg::require_order(n, opt.unsafe ? kTriAllPairsCap : 5);
    auto start = Clock::now();
    Result r{.claim = "lem4_thm5", .n = n, .status = Status::Pass};
    if (n < 2) {
        r.status = Status::Skipped;
        r.note = "lemma domain is n >= 2";
        return r;
    }
    DeltaContext ctx(n);
    auto medians = ctx.median_indices(opt.threads);
    long long expected6 = (static_cast<long long>(pow3(n)) - 3) / 2;
    for (std::size_t m : medians) {
        long long count6 = 0;
        bool clean = true;
        for (std::size_t b = 0; b < ctx.vprime.size(); ++b) {
            if (b == m) continue;
            ++r.checked;
            long long res = ctx.delta[m][b] % 8;
            if (res == 6) {
                ++count6;
            } else if (res != 0) {
                clean = false;
                record_failure(r, opt, "m=" + ctx.vprime[m].str() + " t=" + ctx.vprime[b].str() +
                                           " residue=" + std::to_string(res));
            }
        }
        if (count6 != expected6)
            record_failure(r, opt, "m=" + ctx.vprime[m].str() + " residue6_count=" +
                                       std::to_string(count6) + " expected=" +
                                       std::to_string(expected6));
        if (clean && count6 == expected6) ++r.stats["medians_ok"];
    }
    r.ms = elapsed_ms(start);
    return r;
}

Result thm6_median_identity(int n, const Options& opt) {
    sg::require_order(n, opt.unsafe ? kTriAllPairsCap : 5);
    auto start = Clock::now();
    Result r{.claim = "thm6", .n = n, .status = Status::Pass};
    if (n < 2) {
        r.status = Status::Skipped;
        r.note = "theorem domain is n >= 2";
        return r;
    }
    DeltaContext ctx(n);
    long long offset = static_cast<long long>(pow3(n)) - 3;
    for (std::size_t m : ctx.median_indices(opt.threads)) {
        ++r.checked;
        long long lhs = 8 * ctx.dhat_prime[m];
        long long rhs = ctx.delta_row[m] + offset;
        if (lhs != rhs)
            record_failure(r, opt, "m=" + ctx.vprime[m].str() + " 8d'=" + std::to_string(lhs) +
                                       " delta+3^n-3=" + std::to_string(rhs));
    }
    r.ms = elapsed_ms(start);
    return r;
}

Result thm7_strict(int n, const Options& opt) {
    sg::require_order(n, opt.unsafe ? kTriAllPairsCap : 5);
    auto start = Clock::now();
    Result r{.claim = "thm7", .n = n, .status = Status::Pass};
    if (n < 2) {
        r.status = Status::Skipped;
        r.note = "theorem domain is n >= 2";
        return r;
    }
    DeltaContext ctx(n);
    auto medians = ctx.median_indices(opt.threads);
    long long median_max = 0, nonmedian_min = 0;
    bool have_nonmedian = false;
    for (std::size_t m : medians) median_max = std::max(median_max, ctx.dhat_prime[m]);
    for (std::size_t a = 0; a < ctx.vprime.size(); ++a) {
        if (std::find(medians.begin(), medians.end(), a) != medians.end()) continue;
        ++r.checked;
        if (!have_nonmedian || ctx.dhat_prime[a] < nonmedian_min) nonmedian_min = ctx.dhat_prime[a];
        have_nonmedian = true;
        if (ctx.dhat_prime[a] <= median_max)
            record_failure(r, opt, "s=" + ctx.vprime[a].str() + " d'=" +
                                       std::to_string(ctx.dhat_prime[a]) +
                                       " median_max=" + std::to_string(median_max));
    }
    if (have_nonmedian) r.stats["min_gap"] = nonmedian_min - median_max;
    // primitive corners must also sit strictly above the median total distance
    long long median_total_min = 0;
    {
        auto med = ctx.g.median(opt.threads);
        median_total_min = ctx.g.total_distance(med.front());
    }
    for (Digit i = 0; i < 3; ++i) {
        TriangleVertex p = TriangleVertex::primitive(i);
        ++r.checked;
        long long total = ctx.g.total_distance(p);
        if (total <= median_total_min)
            record_failure(r, opt, "primitive=" + p.str() + " total=" + std::to_string(total) +
                                       " median_total=" + std::to_string(median_total_min));
    }
    r.ms = elapsed_ms(start);
    return r;
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids = {"thm1", "thm1_lift", "thm2",      "thm3",
                                                 "eq1",  "lem2",      "remark1",   "lem3",
                                                 "lem4_thm5", "thm6", "thm7"};
    return ids;
}

std::vector<Result> run_suite(const std::vector<std::string>& claims, int n_lo, int n_hi,
                              const Options& opt) {
    struct Entry {
        int lo;
        int hi;
        int unsafe_hi;
        std::function<Result(int, const Options&)> fn;
    };
    const std::map<std::string, Entry> table = {
        {"thm1", {2, kTriAllPairsCap, kTriCap, thm1_median}},
        {"thm1_lift", {2, 7, 7, thm1_lift}},
        {"thm2", {0, kTriCap, kTriCap, thm2_primitive_sum}},
        {"thm3", {0, kEnumCap, kEnumCap, thm3_extreme_sum}},
        {"eq1", {0, kTriCap, kTriCap, eq1_distance}},
        {"lem2", {1, 4, 5, lem2_residues}},
        {"remark1", {1, 4, 5, remark1_identity}},
        {"lem3", {2, 5, kTriAllPairsCap, lem3_nonmedian}},
        {"lem4_thm5", {2, 5, kTriAllPairsCap, lem4_thm5_residue_counts}},
        {"thm6", {2, 5, kTriAllPairsCap, thm6_median_identity}},
        {"thm7", {2, 5, kTriAllPairsCap, thm7_strict}},
    };
    std::vector<Result> results;
    for (const std::string& id : claim_ids()) {
        if (std::find(claims.begin(), claims.end(), id) == claims.end()) continue;
        const Entry& e = table.at(id);
        int hi = opt.unsafe ? e.unsafe_hi : e.hi;
        for (int n = n_lo; n <= n_hi; ++n) {
            if (n < e.lo) {
                Result r{.claim = id, .n = n, .status = Status::Skipped};
                r.note = "below claim domain (n >= " + std::to_string(e.lo) + ")";
                results.push_back(r);
            } else if (n > hi) {
                Result r{.claim = id, .n = n, .status = Status::Skipped};
                r.note = "above order cap " + std::to_string(hi);
                results.push_back(r);
            } else {
                results.push_back(e.fn(n, opt));
            }
        }
    }
    return results;
}

}  // namespace sierptri::verify
