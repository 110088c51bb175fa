#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sierptri::verify {

enum class Status : std::uint8_t { Pass, Fail, Skipped };

std::string status_name(Status s);

struct Options {
    int max_counterexamples = 10;
    int threads = 0;
    std::uint64_t seed = 1;
    /// exhaustive when false; sampled checks draw `samples` pairs.
    bool sampled = false;
    long long samples = 100000;
    /// Raises the per-claim order limits; large orders can take minutes.
    bool unsafe = false;
};

struct Result {
    std::string claim;
    int n = 0;
    Status status = Status::Skipped;
    long long checked = 0;
    std::vector<std::string> counterexamples;
    std::map<std::string, long long> stats;  // evidence such as residue histograms
    double ms = 0.0;
    std::string note;
    std::optional<std::uint64_t> seed;  // present for sampled runs
};

nlohmann::json to_json(const Result& r);
nlohmann::json to_json(const std::vector<Result>& results);
bool all_passed(const std::vector<Result>& results);

/// Median of the triangle graph equals {0,1,2,00,11,22}; n >= 2.
Result thm1_median(int n, const Options& opt = {});
/// Contracting the non-clique edges inside M(S^{n+1}) yields the triangle median.
Result thm1_lift(int n, const Options& opt = {});
/// Sum of distances to the three primitive corners is 2^{n+1} for every vertex.
Result thm2_primitive_sum(int n, const Options& opt = {});
/// Sum of distances to the three corner states of S^n is 2(2^n - 1).
Result thm3_extreme_sum(int n, const Options& opt = {});
/// Ceiling formula agrees with BFS distances on the triangle graph.
Result eq1_distance(int n, const Options& opt = {});
/// delta(s,t) mod 8 lies in {0,4,6} for all non-primitive pairs.
Result lem2_residues(int n, const Options& opt = {});
/// delta(s) (self-term excluded) equals d'(s1) + d'(s2).
Result remark1_identity(int n, const Options& opt = {});
/// delta(s) + 3^n - 3 <= 8 * total-excluding-primitives for non-medians.
Result lem3_nonmedian(int n, const Options& opt = {});
/// Each median sees exactly (3^n - 3)/2 residue-6 partners, the rest residue 0.
Result lem4_thm5_residue_counts(int n, const Options& opt = {});
/// 8 * total-excluding-primitives = delta(m) + 3^n - 3 for all medians.
Result thm6_median_identity(int n, const Options& opt = {});
/// Every non-median strictly exceeds every median in total-excluding-primitives.
Result thm7_strict(int n, const Options& opt = {});

/// Claim identifiers accepted by run_suite, in canonical order.
const std::vector<std::string>& claim_ids();

/// Runs the selected claims for every n in [n_lo, n_hi]; results sorted by
/// claim then n. Orders outside a claim's domain come back Skipped.
std::vector<Result> run_suite(const std::vector<std::string>& claims, int n_lo, int n_hi,
                              const Options& opt = {});

}  // namespace sierptri::verify
