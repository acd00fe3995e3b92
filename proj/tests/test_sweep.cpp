#include <catch2/catch_amalgamated.hpp>

#include "rainbow/sweep.hpp"

using namespace rainbow;

TEST_CASE("sweep reruns are byte-identical and cells are self-contained") {
    ExperimentConfig cfg;
    cfg.mode = "random";
    cfg.n_values = {256};
    cfg.grid = {{Rat(1), Rat(0)}};
    cfg.trials = 3;
    cfg.master_seed = 42;
    auto a = run_sweep(cfg);
    auto b = run_sweep(cfg);
    CHECK(a.dump() == b.dump());
    CHECK(sweep_csv(a) == sweep_csv(b));

    // aggregates recomputable from the per-trial log
    const auto& cell = a["cells"][0];
    long long successes = 0;
    double excess_sum = 0;
    for (const auto& tr : cell["trials"]) {
        if (tr.contains("girth")) ++successes;
        excess_sum += tr["excess"].get<double>();
    }
    CHECK(cell["aggregates"]["successes"].get<long long>() == successes);
    CHECK(cell["aggregates"]["mean_excess"].get<double>() ==
          Catch::Approx(excess_sum / cfg.trials));
    // no volatile fields by default
    CHECK_FALSE(cell["aggregates"].contains("wall_ms"));
    CHECK_FALSE(a["meta"].contains("timestamp"));
}

TEST_CASE("sweep shows the 2*alpha + beta = 1 cliff") {
    ExperimentConfig cfg;
    cfg.mode = "random";
    cfg.n_values = {2048};
    cfg.grid = {{Rat(1), Rat(0)}, {Rat(3, 5), Rat(0)}, {Rat(51, 100), Rat(0)}, {Rat(1, 2), Rat(0)}};
    cfg.trials = 60;
    cfg.master_seed = 7;
    auto report = run_sweep(cfg);
    const auto& cells = report["cells"];
    REQUIRE(cells.size() == 4);
    double far = cells[0]["aggregates"]["success_rate"].get<double>();
    double near = cells[2]["aggregates"]["success_rate"].get<double>();
    CHECK(cells[0]["status"] == "ok");
    CHECK(far >= 0.9);  // comfortably above the threshold
    // at the threshold the schedule itself is infeasible
    CHECK(cells[3]["status"] == "infeasible");
    CHECK(cells[3]["condition"] == "threshold");
    CHECK(cells[3]["aggregates"]["success_rate"].get<double>() == 0.0);
    // success decays toward the threshold
    CHECK(far >= near + 0.2);
    // mean excess tracks the analytic value loosely (4 sd of a single trial)
    double mean = cells[0]["aggregates"]["mean_excess"].get<double>();
    double analytic = cells[0]["aggregates"]["expected_excess"].get<double>();
    CHECK(std::abs(mean - analytic) <= 0.25 * analytic);
}

TEST_CASE("tight cells record the exact rainbow girth") {
    ExperimentConfig cfg;
    cfg.mode = "tight";
    cfg.n_values = {40};
    cfg.grid = {{Rat(1, 4), Rat(1, 2)}};
    cfg.trials = 1;
    cfg.master_seed = 1;
    auto report = run_sweep(cfg);
    const auto& cell = report["cells"][0];
    REQUIRE(cell["status"] == "ok");
    CHECK(cell["aggregates"]["min_len"].get<long long>() == 10);
    CHECK(cell["aggregates"]["min_len"].get<long long>() >= 10);  // >= min(alpha n, beta n / 2)
}

TEST_CASE("sweep CSV carries the schema header and one row per cell") {
    ExperimentConfig cfg;
    cfg.mode = "random";
    cfg.n_values = {128};
    cfg.grid = {{Rat(1), Rat(0)}, {Rat(1, 2), Rat(0)}};
    cfg.trials = 2;
    cfg.master_seed = 3;
    auto csv = sweep_csv(run_sweep(cfg));
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "#schema=rgirth-sweep-v1");
    std::getline(in, line);
    CHECK(line.find("mode,n,alpha,beta,status") == 0);
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("event frequency report trends upward at fixed (t, L)") {
    EventConfig cfg;
    cfg.cells = {{800, 3, 0.01}, {1400, 3, 0.01}, {2000, 3, 0.01}};
    cfg.k = 2;
    cfg.ell_max = 4;
    cfg.seeds = 25;
    cfg.master_seed = 99;
    auto report = event_frequency_report(cfg);
    const auto& cells = report["cells"];
    REQUIRE(cells.size() == 3);
    // mean |G0| within 4 standard errors of C(n,t) p per cell
    for (const auto& cell : cells) {
        double mean = cell["mean_g0"].get<double>();
        double expect = cell["expected_g0"].get<double>();
        double se = cell["se_g0"].get<double>();
        INFO("n " << cell["n"] << " mean " << mean << " expect " << expect << " se " << se);
        CHECK(std::abs(mean - expect) <= 4 * std::max(se, 1e-9));
    }
    // non-decreasing least-squares trend of the joint event frequency
    std::vector<double> xs, ys;
    for (const auto& cell : cells) {
        xs.push_back(cell["n"].get<double>());
        ys.push_back(cell["freq_abc"].get<double>());
    }
    double mx = (xs[0] + xs[1] + xs[2]) / 3, my = (ys[0] + ys[1] + ys[2]) / 3;
    double num = 0, den = 0;
    for (int i = 0; i < 3; ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = num / den;
    INFO("freqs " << ys[0] << " " << ys[1] << " " << ys[2]);
    CHECK(slope >= -1e-12);
    // determinism
    CHECK(event_frequency_report(cfg).dump() == report.dump());
    CHECK(events_csv(report).find("#schema=rgirth-lb-events-v1") == 0);
}
