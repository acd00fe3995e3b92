#ifndef RAINBOW_SWEEP_HPP
#define RAINBOW_SWEEP_HPP

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbow/finder.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/hypergraph.hpp"
#include "rainbow/io.hpp"

namespace rainbow {

/**
 * Threshold-sweep configuration.  Seeds split as
 *   cell seed    = derive_seed(master, cell index)      (cells in grid-major,
 *                                                        then n-major order)
 *   instance     = derive_seed(cell seed, 0)
 *   trial i      = derive_seed(cell seed, i + 1)
 * so rows are reproducible independently of execution order.
 */
struct ExperimentConfig {
    std::string mode = "random";  // "random": census instances; "tight": threshold example
    std::vector<int> n_values;
    std::vector<std::pair<Rat, Rat>> grid;  // (alpha, beta) cells
    int trials = 1;
    std::uint64_t master_seed = 0;
    bool timings = false;    // include wall_ms (breaks byte-identical reruns)
    bool timestamp = false;  // include meta.timestamp in the JSON header
};

namespace sdetail {

inline long long round_count(const Rat& share, int n) {
    return floor_to_int(share * Rat(n) + Rat(1, 2));
}

inline std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

inline std::string iso_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

}  // namespace sdetail

inline json run_sweep(const ExperimentConfig& cfg) {
    if (cfg.n_values.empty() || cfg.grid.empty()) throw param_error("sweep: empty grid");
    if (cfg.trials < 1) throw param_error("sweep: trials must be >= 1");
    if (cfg.mode != "random" && cfg.mode != "tight") throw param_error("sweep: unknown mode " + cfg.mode);

    json report;
    report["meta"] = {{"schema", "rgirth-sweep-v1"},
                      {"mode", cfg.mode},
                      {"master_seed", cfg.master_seed},
                      {"trials", cfg.trials}};
    if (cfg.timestamp) report["meta"]["timestamp"] = sdetail::iso_now();
    report["cells"] = json::array();

    std::uint64_t cell_index = 0;
    for (int n : cfg.n_values) {
        for (const auto& [alpha, beta] : cfg.grid) {
            std::uint64_t cell_seed = derive_seed(cfg.master_seed, cell_index++);
            json cell{{"n", n},
                      {"alpha", to_string(alpha)},
                      {"beta", to_string(beta)},
                      {"cell_seed", cell_seed}};
            auto started = std::chrono::steady_clock::now();
            try {
                if (cfg.mode == "tight") {
                    ColoredGraph g = gen_tight_example(alpha, beta, n);
                    auto out = rainbow_girth_exact(g, n);
                    bool found = out.status == RainbowGirthOutcome::Status::found;
                    cell["status"] = "ok";
                    cell["aggregates"] = {{"trials", 1},
                                          {"successes", found ? 1 : 0},
                                          {"success_rate", found ? 1.0 : 0.0}};
                    if (found) {
                        cell["aggregates"]["min_len"] = out.length;
                        cell["aggregates"]["median_len"] = static_cast<double>(out.length);
                        cell["certificate"] = certificate_to_json(*out.certificate);
                    }
                } else {
                    long long mc = sdetail::round_count(alpha, n);
                    long long sc = sdetail::round_count(beta, n);
                    long long rest = static_cast<long long>(n) - mc - sc;
                    if (mc < 0 || sc < 0 || rest < 0)
                        throw param_error("census shares exceed 1");
                    RandomFamilyCounts counts{mc, sc, 0, rest};
                    std::uint64_t inst_seed = derive_seed(cell_seed, 0);
                    ColoredGraph g = gen_random_family(n, counts, inst_seed);
                    cell["instance"] = {{"matching2", mc}, {"star2", sc}, {"single", rest},
                                        {"seed", inst_seed}};
                    ProofSchedule sched = derive_schedule(alpha, beta);
                    double p = to_double(sched.p);
                    cell["schedule"] = {{"gamma", to_string(sched.gamma)},
                                        {"t", to_string(sched.t)},
                                        {"xi", to_string(sched.xi)},
                                        {"p", to_string(sched.p)},
                                        {"delta", to_string(sched.delta)}};
                    json trials = json::array();
                    long long successes = 0;  // the proof's success event: excess K >= 1
                    double excess_sum = 0;
                    std::vector<long long> lengths;
                    for (int i = 0; i < cfg.trials; ++i) {
                        std::uint64_t ts = derive_seed(cell_seed, static_cast<std::uint64_t>(i) + 1);
                        SampleOutcome s = sample_rainbow_subgraph(g, p, ts);
                        json tr{{"index", i},
                                {"seed", ts},
                                {"s_size", s.sampled},
                                {"non_isolated", s.non_isolated},
                                {"edges", static_cast<long long>(s.chosen.size())},
                                {"excess", s.excess_k}};
                        if (s.girth) {
                            tr["girth"] = *s.girth;
                            lengths.push_back(*s.girth);
                        }
                        if (s.excess_k >= 1 && s.girth) ++successes;
                        trials.push_back(std::move(tr));
                        excess_sum += static_cast<double>(s.excess_k);
                    }
                    cell["trials"] = std::move(trials);
                    std::sort(lengths.begin(), lengths.end());
                    json agg{{"trials", cfg.trials},
                             {"successes", successes},
                             {"success_rate", static_cast<double>(successes) / cfg.trials},
                             {"mean_excess", excess_sum / cfg.trials},
                             {"expected_excess", expected_excess(mc, sc, rest, n, p)}};
                    if (!lengths.empty()) {
                        agg["min_len"] = lengths.front();
                        size_t h = lengths.size() / 2;
                        agg["median_len"] = lengths.size() % 2
                                                ? static_cast<double>(lengths[h])
                                                : (static_cast<double>(lengths[h - 1]) +
                                                   static_cast<double>(lengths[h])) /
                                                      2.0;
                    }
                    cell["status"] = "ok";
                    cell["aggregates"] = std::move(agg);
                }
            } catch (const infeasible_error& e) {
                cell["status"] = "infeasible";
                cell["condition"] = e.condition();
                cell["message"] = e.what();
                cell["aggregates"] = {{"trials", 0}, {"successes", 0}, {"success_rate", 0.0}};
            } catch (const param_error& e) {
                cell["status"] = "parameter_error";
                cell["message"] = e.what();
                cell["aggregates"] = {{"trials", 0}, {"successes", 0}, {"success_rate", 0.0}};
            }
            if (cfg.timings) {
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
                cell["aggregates"]["wall_ms"] = ms;
            }
            report["cells"].push_back(std::move(cell));
        }
    }
    return report;
}

// CSV rendering of a sweep report; every column is recomputable from the
// per-trial records in the JSON.
inline std::string sweep_csv(const json& report) {
    std::ostringstream out;
    bool timings = false;
    for (const auto& cell : report.at("cells"))
        if (cell.contains("aggregates") && cell["aggregates"].contains("wall_ms")) timings = true;
    out << "#schema=rgirth-sweep-v1\n";
    out << "mode,n,alpha,beta,status,trials,successes,success_rate,mean_excess,expected_excess,"
           "min_len,median_len";
    if (timings) out << ",wall_ms";
    out << "\n";
    std::string mode = report.at("meta").at("mode").get<std::string>();
    for (const auto& cell : report.at("cells")) {
        const json& agg = cell.at("aggregates");
        auto col = [&](const char* key) -> std::string {
            if (!agg.contains(key)) return "";
            const json& v = agg.at(key);
            if (v.is_number_float()) return sdetail::fmt(v.get<double>());
            return v.dump();
        };
        out << mode << ',' << cell.at("n").get<long long>() << ','
            << cell.at("alpha").get<std::string>() << ',' << cell.at("beta").get<std::string>()
            << ',' << cell.at("status").get<std::string>() << ',' << col("trials") << ','
            << col("successes") << ',' << col("success_rate") << ',' << col("mean_excess") << ','
            << col("expected_excess") << ',' << col("min_len") << ',' << col("median_len");
        if (timings) out << ',' << col("wall_ms");
        out << "\n";
    }
    return out.str();
}

/**
 * Event-frequency experiment over the lower-bound pipeline: per (n, t, L)
 * cell, run `seeds` pipelines and record how often |G0| >= 3Ln, Y <= Ln and
 * removed2 <= Ln hold, plus the mean |G0| against its binomial expectation.
 */
struct EventCell {
    int n = 0;
    int t = 2;
    double L = 1.0;
};

struct EventConfig {
    std::vector<EventCell> cells;
    int k = 2;
    int ell_max = 4;
    int seeds = 20;
    std::uint64_t master_seed = 0;
    bool timestamp = false;
};

inline json event_frequency_report(const EventConfig& cfg) {
    if (cfg.cells.empty()) throw param_error("lb-events: empty grid");
    if (cfg.seeds < 1) throw param_error("lb-events: seeds must be >= 1");
    json report;
    report["meta"] = {{"schema", "rgirth-lb-events-v1"},
                      {"master_seed", cfg.master_seed},
                      {"seeds", cfg.seeds},
                      {"k", cfg.k},
                      {"ell_max", cfg.ell_max}};
    if (cfg.timestamp) report["meta"]["timestamp"] = sdetail::iso_now();
    report["cells"] = json::array();
    std::vector<DenseSequence> family{
        {cfg.k, cfg.k == 2 ? FamilyKind::graph_cycles : FamilyKind::berge_cycles}};
    std::uint64_t cell_index = 0;
    for (const EventCell& ec : cfg.cells) {
        std::uint64_t cell_seed = derive_seed(cfg.master_seed, cell_index++);
        long long fa = 0, fb = 0, fc = 0, fabc = 0;
        double g0_sum = 0, g0_sq = 0;
        json runs = json::array();
        LBParams params;
        params.n = ec.n;
        params.uniformity_t = ec.t;
        params.k = cfg.k;
        params.L = ec.L;
        for (int s = 0; s < cfg.seeds; ++s) {
            params.seed = derive_seed(cell_seed, static_cast<std::uint64_t>(s));
            LBInstance inst = build_lb_instance(params, family, cfg.ell_max);
            fa += inst.events.a;
            fb += inst.events.b;
            fc += inst.events.c;
            fabc += inst.events.all();
            double g0 = static_cast<double>(inst.g0.edges.size());
            g0_sum += g0;
            g0_sq += g0 * g0;
            runs.push_back({{"seed", params.seed},
                            {"g0", inst.g0.edges.size()},
                            {"y_pairs", inst.y_pairs},
                            {"removed1", inst.removed1},
                            {"removed2", inst.removed2},
                            {"classes", inst.class_count()},
                            {"events", {{"a", inst.events.a}, {"b", inst.events.b}, {"c", inst.events.c}}}});
        }
        double mean_g0 = g0_sum / cfg.seeds;
        double var = std::max(0.0, g0_sq / cfg.seeds - mean_g0 * mean_g0);
        double expected_g0 =
            static_cast<double>(binomial_coefficient(ec.n, ec.t)) * params.p();
        report["cells"].push_back(
            {{"n", ec.n},
             {"t", ec.t},
             {"L", ec.L},
             {"p", params.p()},
             {"seeds", cfg.seeds},
             {"freq_a", static_cast<double>(fa) / cfg.seeds},
             {"freq_b", static_cast<double>(fb) / cfg.seeds},
             {"freq_c", static_cast<double>(fc) / cfg.seeds},
             {"freq_abc", static_cast<double>(fabc) / cfg.seeds},
             {"mean_g0", mean_g0},
             {"expected_g0", expected_g0},
             {"se_g0", std::sqrt(var / cfg.seeds)},
             {"runs", std::move(runs)}});
    }
    return report;
}

inline std::string events_csv(const json& report) {
    std::ostringstream out;
    out << "#schema=rgirth-lb-events-v1\n";
    out << "n,t,L,seeds,freq_a,freq_b,freq_c,freq_abc,mean_g0,expected_g0,se_g0\n";
    for (const auto& cell : report.at("cells")) {
        out << cell.at("n").get<long long>() << ',' << cell.at("t").get<long long>() << ','
            << sdetail::fmt(cell.at("L").get<double>()) << ',' << cell.at("seeds").get<long long>()
            << ',' << sdetail::fmt(cell.at("freq_a").get<double>()) << ','
            << sdetail::fmt(cell.at("freq_b").get<double>()) << ','
            << sdetail::fmt(cell.at("freq_c").get<double>()) << ','
            << sdetail::fmt(cell.at("freq_abc").get<double>()) << ','
            << sdetail::fmt(cell.at("mean_g0").get<double>()) << ','
            << sdetail::fmt(cell.at("expected_g0").get<double>()) << ','
            << sdetail::fmt(cell.at("se_g0").get<double>()) << "\n";
    }
    return out.str();
}

}  // namespace rainbow

#endif
