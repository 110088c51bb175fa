#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sierptri/io.hpp"
#include "sierptri/metrics.hpp"
#include "sierptri/sierpinski.hpp"
#include "sierptri/triangle.hpp"
#include "sierptri/verify.hpp"

namespace {

namespace sp = sierptri;
namespace sg = sierptri::sierpinski;

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Args {
    std::string family = "s";
    int n = 0;
    std::string format = "edgelist";
    std::string method = "bfs";
    std::string mode = "exhaustive";
    std::vector<std::string> labels;
    std::vector<std::string> claims;
    bool all_claims = false;
    bool project = false;
    std::string n_range = "2..4";
    std::uint64_t seed = 1;
    long long samples = 100000;
    int max_counterexamples = 10;
    int threads = 0;
    std::optional<int> unsafe_cap;
    std::string output;
};

int cap_or(const Args& a, int dflt) { return a.unsafe_cap.value_or(dflt); }

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

int cmd_generate(const Args& a) {
    if (a.family == "s") {
        int cap = cap_or(a, sp::kEnumCap);
        if (a.format == "dot")
            sp::io::write_dot(std::cout, a.n, cap);
        else
            sp::io::write_edgelist(std::cout, a.n, cap);
    } else {
        sp::TriangleGraph g(a.n, cap_or(a, sp::kTriCap));
        if (a.format == "dot")
            sp::io::write_dot(std::cout, g);
        else
            sp::io::write_edgelist(std::cout, g);
    }
    return 0;
}

int cmd_dist(const Args& a) {
    std::vector<std::pair<std::string, long long>> results;
    if (a.family == "s") {
        sp::TernaryWord s = sp::TernaryWord::parse(a.labels[0]);
        sp::TernaryWord t = sp::TernaryWord::parse(a.labels[1]);
        if (a.method == "formula")
            throw CLI::ValidationError("--method formula applies to --family st only");
        int cap = cap_or(a, sp::kEnumCap);
        if (a.method == "bfs" || a.method == "all")
            results.emplace_back("bfs", sg::distance_bfs(a.n, s, t, cap));
        if (a.method == "closed" || a.method == "all") {
            if (s.size() != a.n || t.size() != a.n)
                throw std::invalid_argument("vertex label length must equal n");
            results.emplace_back("closed", sg::distance_closed(s, t));
        }
    } else {
        sp::TriangleVertex s = sp::TriangleVertex::parse(a.labels[0], a.n);
        sp::TriangleVertex t = sp::TriangleVertex::parse(a.labels[1], a.n);
        if (a.method == "closed")
            throw CLI::ValidationError("--method closed applies to --family s only");
        if (a.method == "bfs" || a.method == "all") {
            sp::TriangleGraph g(a.n, cap_or(a, sp::kTriCap));
            results.emplace_back("bfs", g.distance(s, t));
        }
        if (a.method == "formula" || a.method == "all")
            results.emplace_back("formula", sp::distance_formula(a.n, s, t));
    }
    if (results.size() == 1) {
        std::cout << results[0].second << '\n';
        return 0;
    }
    bool agree = true;
    for (const auto& [name, value] : results) {
        std::cout << name << '=' << value << '\n';
        agree = agree && value == results[0].second;
    }
    if (!agree) {
        std::cerr << "error: distance methods disagree\n";
        return kExitVerifyFail;
    }
    return 0;
}

int cmd_metrics(const Args& a, bool median_only) {
    sp::MetricsReport report;
    std::function<std::string(std::uint32_t)> label;
    if (a.family == "s") {
        int cap = cap_or(a, 7);
        auto adj = sg::adjacency(a.n, cap);
        report = sp::compute_metrics(adj, a.threads);
        int n = a.n;
        label = [n](std::uint32_t v) { return sp::TernaryWord::from_index(v, n).str(); };
    } else {
        sp::TriangleGraph g(a.n, cap_or(a, sp::kTriAllPairsCap));
        report = sp::compute_metrics(g.adjacency(), a.threads);
        label = [g](std::uint32_t v) { return g.vertex_at(v).str(); };
    }
    if (median_only) {
        for (std::size_t i = 0; i < report.median.size(); ++i)
            std::cout << (i ? "," : "") << label(report.median[i]);
        std::cout << '\n';
        std::cout << "proximity " << report.proximity.num << '/' << report.proximity.den << '\n';
        std::cout << "remoteness " << report.remoteness.num << '/' << report.remoteness.den
                  << '\n';
    } else if (a.format == "json") {
        std::cout << sp::io::metrics_json(report, label).dump(2) << '\n';
    } else {
        sp::io::write_metrics_csv(std::cout, report, label);
    }
    return 0;
}

int cmd_lift(const Args& a) {
    if (a.project) {
        sp::TernaryWord s = sp::TernaryWord::parse(a.labels[0]);
        if (s.size() != a.n + 1)
            throw std::invalid_argument("--project expects a word of length n+1");
        std::cout << sp::project(s).str() << '\n';
        return 0;
    }
    sp::TriangleVertex v = sp::TriangleVertex::parse(a.labels[0], a.n);
    auto [first, second] = sp::lift(a.n, v);
    std::cout << first.str() << ' ' << second.str() << '\n';
    return 0;
}

int cmd_verify(const Args& a) {
    auto [lo, hi] = parse_range(a.n_range);
    sp::verify::Options opt;
    opt.seed = a.seed;
    opt.samples = a.samples;
    opt.sampled = a.mode == "sampled";
    opt.max_counterexamples = a.max_counterexamples;
    opt.threads = a.threads;
    opt.unsafe = a.unsafe_cap.has_value();
    std::vector<std::string> claims = a.all_claims ? sp::verify::claim_ids() : a.claims;
    auto results = sp::verify::run_suite(claims, lo, hi, opt);
    nlohmann::json j = sp::verify::to_json(results);
    if (a.output.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(a.output);
        out << j.dump(2) << '\n';
    }
    return sp::verify::all_passed(results) ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sierpinski graphs, Sierpinski triangle graphs, and their distance metrics"};
    app.require_subcommand(1);
    Args a;

    app.add_option("--threads", a.threads, "worker threads (0 = hardware)");
    app.add_option("--unsafe-cap", a.unsafe_cap,
                   "raise the order cap for this command (may be slow)");

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", a.family, "graph family: s or st")
            ->check(CLI::IsMember({"s", "st"}));
    };

    CLI::App* gen = app.add_subcommand("generate", "emit a graph as an edge list or DOT");
    add_family(gen);
    gen->add_option("--n", a.n, "order")->required();
    gen->add_option("--format", a.format, "edgelist or dot")
        ->check(CLI::IsMember({"edgelist", "dot"}));

    CLI::App* dist = app.add_subcommand("dist", "distance between two vertices");
    add_family(dist);
    dist->add_option("--n", a.n, "order")->required();
    dist->add_option("labels", a.labels, "two vertex labels")->expected(2);
    dist->add_option("--method", a.method, "bfs, closed (s), formula (st), or all")
        ->check(CLI::IsMember({"bfs", "closed", "formula", "all"}));

    CLI::App* metrics = app.add_subcommand("metrics", "per-vertex distance metrics table");
    add_family(metrics);
    metrics->add_option("--n", a.n, "order")->required();
    metrics->add_option("--format", a.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* median = app.add_subcommand("median", "median set with proximity and remoteness");
    add_family(median);
    median->add_option("--n", a.n, "order")->required();

    CLI::App* liftc = app.add_subcommand("lift", "contracted endpoints of a triangle vertex");
    liftc->add_option("--n", a.n, "triangle graph order")->required();
    liftc->add_option("labels", a.labels, "vertex label")->expected(1);
    liftc->add_flag("--project", a.project, "map a length n+1 word down instead");

    CLI::App* verify = app.add_subcommand("verify", "run the numeric claim checks");
    verify->add_option("--claim", a.claims, "claim id (repeatable); see --list");
    verify->add_flag("--all", a.all_claims, "run every claim");
    verify->add_option("--n", a.n_range, "order or range, e.g. 3 or 2..4");
    verify->add_option("--mode", a.mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--seed", a.seed, "PRNG seed for sampled mode");
    verify->add_option("--samples", a.samples, "sample count for sampled mode");
    verify->add_option("--max-counterexamples", a.max_counterexamples,
                       "counterexamples kept per result");
    verify->add_option("--output", a.output, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_generate(a);
        if (dist->parsed()) return cmd_dist(a);
        if (metrics->parsed()) return cmd_metrics(a, false);
        if (median->parsed()) return cmd_metrics(a, true);
        if (liftc->parsed()) return cmd_lift(a);
        if (verify->parsed()) return cmd_verify(a);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
