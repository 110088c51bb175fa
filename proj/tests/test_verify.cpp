#include "sierptri/verify.hpp"

#include "doctest.h"
#include "sierptri/ternary.hpp"

namespace vf = sierptri::verify;

TEST_CASE("skips outside a claim's domain") {
    vf::Result r = vf::thm1_median(1);
    CHECK(r.status == vf::Status::Skipped);
    CHECK(!r.note.empty());

    auto suite = vf::run_suite({"thm1"}, 1, 2, {});
    REQUIRE(suite.size() == 2);
    CHECK(suite[0].status == vf::Status::Skipped);
    CHECK(suite[1].status == vf::Status::Pass);
}

TEST_CASE("empty claim filter gives an empty report") {
    CHECK(vf::run_suite({}, 2, 4, {}).empty());
}

TEST_CASE("primitive sums pass for small orders") {
    for (int n = 0; n <= 3; ++n) {
        vf::Result r = vf::thm2_primitive_sum(n);
        CHECK(r.status == vf::Status::Pass);
        CHECK(r.checked == static_cast<long long>((sierptri::pow3(n + 1) + 3) / 2));
    }
}

TEST_CASE("extreme sums pass with BFS cross-check") {
    for (int n = 1; n <= 5; ++n) CHECK(vf::thm3_extreme_sum(n).status == vf::Status::Pass);
}

TEST_CASE("eq1 exhaustive at n = 2 covers all 105 unordered pairs plus selfs") {
    vf::Result r = vf::eq1_distance(2);
    CHECK(r.status == vf::Status::Pass);
    CHECK(r.checked == 105 + 15);
    CHECK(!r.seed.has_value());
}

TEST_CASE("eq1 sampled runs are replayable") {
    vf::Options opt;
    opt.sampled = true;
    opt.seed = 7;
    opt.samples = 2000;
    vf::Result a = vf::eq1_distance(3, opt);
    vf::Result b = vf::eq1_distance(3, opt);
    CHECK(a.status == vf::Status::Pass);
    CHECK(a.checked == b.checked);
    CHECK(a.seed == std::optional<std::uint64_t>{7});
}

TEST_CASE("residue classes with histogram evidence") {
    vf::Result r = vf::lem2_residues(2);
    CHECK(r.status == vf::Status::Pass);
    CHECK(r.checked == 12 * 11);
    long long total = 0;
    for (const auto& [key, count] : r.stats) total += count;
    CHECK(total == r.checked);

    CHECK(vf::lem2_residues(1).checked == 3 * 2);
}

TEST_CASE("remark1 identity") {
    for (int n = 1; n <= 3; ++n) CHECK(vf::remark1_identity(n).status == vf::Status::Pass);
}

TEST_CASE("median lemmas at n = 2 and 3") {
    CHECK(vf::thm1_lift(2).status == vf::Status::Pass);
    CHECK(vf::lem3_nonmedian(2).status == vf::Status::Pass);
    CHECK(vf::lem4_thm5_residue_counts(2).status == vf::Status::Pass);
    CHECK(vf::thm6_median_identity(3).status == vf::Status::Pass);
    CHECK(vf::thm7_strict(2).status == vf::Status::Pass);
}

TEST_CASE("JSON report schema") {
    auto results = vf::run_suite({"eq1", "lem2"}, 2, 2, {});
    nlohmann::json j = vf::to_json(results);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["claim"] == "eq1");  // sorted by claim, then n
    for (const auto& entry : j) {
        CHECK(entry.contains("claim"));
        CHECK(entry.contains("n"));
        CHECK(entry.contains("status"));
        CHECK(entry.contains("checked"));
        CHECK(entry.contains("counterexamples"));
        CHECK(entry.contains("ms"));
    }
    CHECK(vf::all_passed(results));
}

TEST_CASE("order caps throw without the unsafe override") {
    CHECK_THROWS_AS(vf::lem2_residues(5), std::out_of_range);
    vf::Options unsafe;
    unsafe.unsafe = true;
    CHECK_NOTHROW(vf::lem2_residues(5, unsafe));
}
