#include "sierptri/sierpinski.hpp"

#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "sierptri/detail/rng.hpp"

using sierptri::Digit;
using sierptri::EdgeKind;
using sierptri::TernaryWord;
namespace sg = sierptri::sierpinski;

namespace {
TernaryWord W(const char* s) { return TernaryWord::parse(s); }
}  // namespace

TEST_CASE("vertex enumeration") {
    CHECK(sg::vertices(0).size() == 1);
    CHECK(sg::vertices(0)[0] == TernaryWord());
    auto v1 = sg::vertices(1);
    REQUIRE(v1.size() == 3);
    CHECK(v1[0].str() == "0");
    CHECK(v1[2].str() == "2");
    auto v3 = sg::vertices(3);
    CHECK(v3.size() == 27);
    CHECK(v3.front().str() == "000");
    CHECK(v3.back().str() == "222");
    CHECK_THROWS_AS(sg::vertices(13), std::out_of_range);
}

TEST_CASE("neighbors") {
    auto nb = sg::neighbors(W("01"));
    REQUIRE(nb.size() == 3);
    CHECK(nb[0] == std::pair{W("00"), EdgeKind::Clique});
    CHECK(nb[1] == std::pair{W("02"), EdgeKind::Clique});
    CHECK(nb[2] == std::pair{W("10"), EdgeKind::NonClique});

    auto extreme = sg::neighbors(W("000"));
    REQUIRE(extreme.size() == 2);
    CHECK(extreme[0].first == W("001"));
    CHECK(extreme[1].first == W("002"));

    auto nb020 = sg::neighbors(W("020"));
    REQUIRE(nb020.size() == 3);
    CHECK(nb020[0].first == W("021"));
    CHECK(nb020[1].first == W("022"));
    CHECK(nb020[2] == std::pair{W("002"), EdgeKind::NonClique});
}

TEST_CASE("nonclique partner") {
    CHECK(*sg::nonclique_partner(W("022")) == W("200"));
    CHECK(!sg::nonclique_partner(W("111")));
    CHECK(*sg::nonclique_partner(W("0122")) == W("0211"));
}

TEST_CASE("partner is an involution with the i j^{d-1} pattern") {
    for (const TernaryWord& s : sg::vertices(4)) {
        auto p = sg::nonclique_partner(s);
        if (!p) {
            CHECK(sg::is_extreme(s));
            continue;
        }
        CHECK(*sg::nonclique_partner(*p) == s);
        auto [j, r] = s.trailing_run();
        auto [jp, rp] = p->trailing_run();
        CHECK(r == rp);
        CHECK(jp == s.digit(r + 1));
    }
}

TEST_CASE("is_extreme") {
    CHECK(sg::is_extreme(W("222")));
    CHECK(!sg::is_extreme(W("010")));
    CHECK(sg::is_extreme(TernaryWord()));
}

TEST_CASE("degree profile and edge count match the brute-force graph") {
    for (int n = 1; n <= 4; ++n) {
        oracle::Graph ref = oracle::sierpinski(n);
        CHECK(ref.edge_count() == sg::edge_count(n));
        std::size_t twice = 0;
        for (const TernaryWord& s : sg::vertices(n)) {
            auto nb = sg::neighbors(s);
            CHECK(nb.size() == (sg::is_extreme(s) ? 2 : 3));
            twice += nb.size();
            // same neighbor set as the definitionally built graph
            std::set<std::string> got, want;
            for (const auto& [t, kind] : nb) got.insert(t.str());
            for (int u : ref.adj[ref.index.at(s.str())]) want.insert(ref.labels[u]);
            CHECK(got == want);
        }
        CHECK(twice / 2 == sg::edge_count(n));
    }
}

TEST_CASE("distance_bfs examples") {
    CHECK(sg::distance_bfs(3, W("000"), W("000")) == 0);
    CHECK(sg::distance_bfs(2, W("01"), W("22")) == 3);
    CHECK(sg::distance_bfs(3, W("002"), W("200")) == 3);
    CHECK(sg::distance_bfs(3, W("000"), W("111")) == 7);
    CHECK_THROWS_AS(sg::distance_bfs(2, W("0"), W("22")), std::invalid_argument);
}

TEST_CASE("distance_closed examples") {
    CHECK(sg::distance_closed(W("012"), W("021")) == 1);
    CHECK(sg::distance_closed(W("0122"), W("0211")) == 1);  // non-clique partners
    CHECK(sg::distance_closed(W("000"), W("111")) == 7);
    CHECK_THROWS_AS(sg::distance_closed(W("01"), W("021")), std::invalid_argument);
}

TEST_CASE("distance_closed equals BFS exhaustively up to n = 4") {
    for (int n = 0; n <= 4; ++n) {
        auto vs = sg::vertices(n);
        for (std::size_t a = 0; a < vs.size(); ++a) {
            auto dist = sg::bfs_from(n, static_cast<std::uint32_t>(a));
            for (std::size_t b = 0; b < vs.size(); ++b)
                CHECK(sg::distance_closed(vs[a], vs[b]) == dist[b]);
        }
    }
}

TEST_CASE("distance_closed equals BFS on random pairs at n = 6") {
    sierptri::detail::Xorshift64Star rng(7);
    std::uint64_t count = sierptri::pow3(6);
    for (int iter = 0; iter < 500; ++iter) {
        TernaryWord s = TernaryWord::from_index(rng.below(count), 6);
        TernaryWord t = TernaryWord::from_index(rng.below(count), 6);
        CHECK(sg::distance_closed(s, t) == sg::distance_bfs(6, s, t));
    }
}

TEST_CASE("extreme distances") {
    CHECK(sg::extreme_distance(W("000"), 0) == 0);
    CHECK(sg::extreme_distance(W("000"), 1) == 7);
    CHECK(sg::extreme_distance(W("01"), 2) == 3);

    CHECK(sg::sum_extreme_distances(2, W("01")) == 6);
    CHECK(sg::sum_extreme_distances(3, W("000")) == 14);
    CHECK(sg::sum_extreme_distances(1, W("2")) == 2);
}

TEST_CASE("sum of corner distances is 2(2^n - 1) for every vertex") {
    for (int n = 0; n <= 8; ++n) {
        long long expected = 2 * ((1LL << n) - 1);
        for (std::uint64_t v = 0; v < sierptri::pow3(n); ++v)
            CHECK(sg::sum_extreme_distances(n, TernaryWord::from_index(v, n)) == expected);
    }
}

TEST_CASE("total distance and d_prime") {
    CHECK(sg::total_distance(0, TernaryWord()) == 0);
    CHECK(sg::total_distance(1, W("0")) == 2);
    CHECK(sg::total_distance(2, W("01")) == 15);  // BFS oracle value
    CHECK(sg::total_distance(2, W("01")) ==
          [] {  // independent recount from the brute-force graph
              auto dist = oracle::sierpinski(2).bfs("01");
              long long sum = 0;
              for (int d : dist) sum += d;
              return sum;
          }());

    CHECK(sg::d_prime(2, W("01")) == 15 - 6 - 1);
    CHECK(sg::d_prime(2, W("00")) == sg::total_distance(2, W("00")) - 6);
    CHECK(sg::d_prime(3, W("012")) ==
          sg::total_distance(3, W("012")) - 14 - 1);
}

TEST_CASE("medians match the published sets") {
    auto to_strs = [](const std::vector<TernaryWord>& ws) {
        std::vector<std::string> out;
        for (const auto& w : ws) out.push_back(w.str());
        return out;
    };
    CHECK(to_strs(sg::median(0)) == std::vector<std::string>{""});
    CHECK(to_strs(sg::median(1)) == std::vector<std::string>{"0", "1", "2"});
    CHECK(to_strs(sg::median(2)) ==
          std::vector<std::string>{"01", "02", "10", "12", "20", "21"});

    auto m3_list = to_strs(sg::median(3));
    std::set<std::string> m3(m3_list.begin(), m3_list.end());
    std::set<std::string> expected{"011", "012", "021", "022", "200", "201",
                                   "210", "211", "122", "120", "102", "100"};
    CHECK(m3 == expected);
}

TEST_CASE("median is deterministic across thread counts") {
    CHECK(sg::median(3, sierptri::kAllPairsCap, 1) == sg::median(3, sierptri::kAllPairsCap, 3));
}
