#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "rainbow/hypergraph.hpp"

using namespace rainbow;

namespace {
TGraph make_tgraph(int n, int t, std::vector<TEdge> edges) {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    return TGraph{n, t, std::move(edges)};
}
}  // namespace

TEST_CASE("shadow_k") {
    auto one = make_tgraph(4, 3, {{1, 2, 3}});
    auto s2 = shadow_k(one, 2);
    CHECK(s2.edges == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});

    auto disjoint = make_tgraph(8, 4, {{0, 1, 2, 3}, {4, 5, 6, 7}});
    CHECK(shadow_k(disjoint, 2).edges.size() == 12);  // 2 * C(4,2)

    auto four = make_tgraph(5, 4, {{1, 2, 3, 4}});
    CHECK(shadow_k(four, 3).edges.size() == 4);

    CHECK_THROWS_AS(shadow_k(one, 4), param_error);

    // size <= |G| C(t,k) with equality iff pairwise intersections < k
    auto overlapping = make_tgraph(6, 3, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}});
    auto sh = shadow_k(overlapping, 2);
    CHECK(sh.edges.size() < 3 * 3);  // pair {1,2} is shared
    auto linear = make_tgraph(7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    CHECK(shadow_k(linear, 2).edges.size() == 9);
}

TEST_CASE("binomial_coefficient") {
    CHECK(binomial_coefficient(5, 4) == 5);
    CHECK(binomial_coefficient(200, 4) == 64684950);
    CHECK(binomial_coefficient(4, 7) == 0);
    CHECK_THROWS_AS(binomial_coefficient(10000, 8), param_error);  // overflow guard
}

TEST_CASE("sample_random_tgraph") {
    SECTION("degenerate probabilities") {
        auto empty = sample_random_tgraph(10, 3, 0.0, 1);
        CHECK(empty.edges.empty());
        auto full = sample_random_tgraph(5, 4, 1.0, 1);
        CHECK(full.edges.size() == 5);
    }
    SECTION("determinism") {
        auto a = sample_random_tgraph(30, 3, 0.05, 9);
        auto b = sample_random_tgraph(30, 3, 0.05, 9);
        CHECK(a.edges == b.edges);
    }
    SECTION("small-slot mean matches the binomial expectation") {
        const int n = 30, t = 3, seeds = 150;
        const double p = 0.01;
        double expect = static_cast<double>(binomial_coefficient(n, t)) * p;
        double sum = 0, sumsq = 0;
        for (int s = 0; s < seeds; ++s) {
            double v = static_cast<double>(sample_random_tgraph(n, t, p, derive_seed(3, s)).edges.size());
            sum += v;
            sumsq += v * v;
        }
        double mean = sum / seeds;
        double se = std::sqrt((sumsq / seeds - mean * mean) / seeds);
        INFO("mean " << mean << " expect " << expect << " se " << se);
        CHECK(std::abs(mean - expect) <= 4 * std::max(se, 1e-9));
    }
    SECTION("large-slot path: binomial count plus distinct uniform draws") {
        const int n = 100, t = 4, seeds = 60;
        const double p = 1e-5;  // C(100,4) ~ 3.9e6 slots, mean ~ 39
        double expect = static_cast<double>(binomial_coefficient(n, t)) * p;
        double sum = 0, sumsq = 0;
        for (int s = 0; s < seeds; ++s) {
            auto g = sample_random_tgraph(n, t, p, derive_seed(4, s));
            std::set<TEdge> uniq(g.edges.begin(), g.edges.end());
            CHECK(uniq.size() == g.edges.size());  // distinct t-sets
            double v = static_cast<double>(g.edges.size());
            sum += v;
            sumsq += v * v;
        }
        double mean = sum / seeds;
        double se = std::sqrt((sumsq / seeds - mean * mean) / seeds);
        INFO("mean " << mean << " expect " << expect << " se " << se);
        CHECK(std::abs(mean - expect) <= 4 * std::max(se, 1e-9));
    }
}

TEST_CASE("remove_intersecting") {
    SECTION("two overlapping 4-edges") {
        auto g = make_tgraph(8, 4, {{1, 2, 3, 4}, {3, 4, 5, 6}});
        auto out = remove_intersecting(g);
        CHECK(out.removed == 1);
        CHECK(out.intersecting_pairs == 1);
        CHECK(out.g1.edges.size() == 1);
        CHECK(out.g1.edges[0] == TEdge{1, 2, 3, 4});  // canonically later edge removed
    }
    SECTION("disjoint edges untouched") {
        auto g = make_tgraph(8, 4, {{1, 2, 3, 4}, {5, 6, 7, 0}});
        auto out = remove_intersecting(g);
        CHECK(out.removed == 0);
        CHECK(out.g1.edges.size() == 2);
    }
    SECTION("chain of three pairwise-overlapping edges") {
        auto g = make_tgraph(9, 4, {{1, 2, 3, 4}, {3, 4, 5, 6}, {5, 6, 7, 8}});
        auto out = remove_intersecting(g);
        CHECK(out.removed <= 2);
        CHECK(out.intersecting_pairs == 2);
        // result has pairwise intersections <= 1 (exhaustive audit)
        for (size_t i = 0; i < out.g1.edges.size(); ++i)
            for (size_t j = i + 1; j < out.g1.edges.size(); ++j) {
                std::vector<int> common;
                std::set_intersection(out.g1.edges[i].begin(), out.g1.edges[i].end(),
                                      out.g1.edges[j].begin(), out.g1.edges[j].end(),
                                      std::back_inserter(common));
                CHECK(common.size() <= 1);
            }
        // removing the middle edge resolves both conflicts
        CHECK(out.g1.edges.size() == 2);
    }
    SECTION("random instance ends pairwise-clean and removed1 <= Y") {
        auto g0 = sample_random_tgraph(40, 3, 0.02, 11);
        auto out = remove_intersecting(g0);
        CHECK(out.removed <= out.intersecting_pairs);
        CHECK(remove_intersecting(out.g1).removed == 0);
    }
}

TEST_CASE("dense sequences") {
    DenseSequence cycles{2, FamilyKind::graph_cycles};
    CHECK_FALSE(cycles.member(2).has_value());
    for (int ell = 3; ell <= 8; ++ell) {
        auto f = cycles.member(ell);
        REQUIRE(f.has_value());
        CHECK((int)f->edges.size() == ell);
        CHECK(f->vertex_count() == ell);  // |V| = ell (k-1) with equality
    }
    for (int k = 3; k <= 4; ++k) {
        DenseSequence berge{k, FamilyKind::berge_cycles};
        for (int ell = 2; ell <= 6; ++ell) {
            auto f = berge.member(ell);
            REQUIRE(f.has_value());
            CHECK((int)f->edges.size() == ell);
            CHECK(f->vertex_count() == (long long)ell * (k - 1));
        }
    }
}

TEST_CASE("is_distinguishable") {
    auto T = make_tgraph(8, 4, {{1, 2, 3, 4}, {4, 5, 6, 7}});
    CHECK(is_distinguishable({{1, 2}, {5, 6}}, T));
    auto T1 = make_tgraph(5, 4, {{1, 2, 3, 4}});
    CHECK_FALSE(is_distinguishable({{1, 2}, {3, 4}}, T1));  // E_1 is empty
    CHECK(is_distinguishable({{1, 2}}, T1));
}

TEST_CASE("remove_distinguishable") {
    SECTION("three-edge gadget carrying a rainbow shadow triangle") {
        auto g1 = make_tgraph(13, 3, {{0, 1, 10}, {1, 2, 11}, {0, 2, 12}});
        std::vector<DenseSequence> fam{{2, FamilyKind::graph_cycles}};
        auto out = remove_distinguishable(g1, fam, 3);
        CHECK(out.removed == 1);
        CHECK(out.g.edges.size() == 2);
        // the copy's first pair is {0,1}; its unique cover was removed
        for (const auto& e : out.g.edges) CHECK(e != TEdge{0, 1, 10});
        auto again = remove_distinguishable(out.g, fam, 3);
        CHECK(again.removed == 0);
    }
    SECTION("empty input") {
        TGraph empty{5, 3, {}};
        auto out = remove_distinguishable(empty, {{2, FamilyKind::graph_cycles}}, 4);
        CHECK(out.removed == 0);
        CHECK(out.g.edges.empty());
    }
    SECTION("ell_max below the smallest member is a no-op") {
        auto g1 = make_tgraph(13, 3, {{0, 1, 10}, {1, 2, 11}, {0, 2, 12}});
        auto out = remove_distinguishable(g1, {{2, FamilyKind::graph_cycles}}, 1);
        CHECK(out.removed == 0);
        CHECK(out.g.edges.size() == 3);
    }
    SECTION("rejects inputs with heavy intersections") {
        auto bad = make_tgraph(6, 3, {{0, 1, 2}, {0, 1, 3}});
        CHECK_THROWS_AS(remove_distinguishable(bad, {{2, FamilyKind::graph_cycles}}, 3),
                        param_error);
    }
}

TEST_CASE("distinguishable copies are exactly rainbow shadow copies after stage 1") {
    // once pairwise intersections are <= 1, every pair has a unique covering
    // t-edge, and the definition collapses to color-distinctness
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g0 = sample_random_tgraph(14, 3, 0.08, derive_seed(0xD15, seed));
        auto g1 = remove_intersecting(g0).g1;
        std::map<std::pair<int, int>, int> cover;
        for (size_t i = 0; i < g1.edges.size(); ++i)
            for (size_t a = 0; a < g1.edges[i].size(); ++a)
                for (size_t b = a + 1; b < g1.edges[i].size(); ++b)
                    cover[{g1.edges[i][a], g1.edges[i][b]}] = static_cast<int>(i);
        auto covered = [&](int u, int v) {
            return cover.count({std::min(u, v), std::max(u, v)}) > 0;
        };
        auto color = [&](int u, int v) { return cover.at({std::min(u, v), std::max(u, v)}); };
        int checked = 0;
        for (int u = 0; u < g1.n; ++u)
            for (int v = u + 1; v < g1.n; ++v)
                for (int w = v + 1; w < g1.n; ++w) {
                    if (!covered(u, v) || !covered(v, w) || !covered(u, w)) continue;
                    bool rainbow = color(u, v) != color(v, w) && color(v, w) != color(u, w) &&
                                   color(u, v) != color(u, w);
                    std::vector<std::vector<int>> copy{{u, v}, {v, w}, {u, w}};
                    CHECK(is_distinguishable(copy, g1) == rainbow);
                    ++checked;
                }
        INFO("seed " << seed << " triangles checked " << checked);
    }
}

TEST_CASE("build_lb_instance structure") {
    LBParams params;
    params.n = 60;
    params.uniformity_t = 4;
    params.k = 2;
    params.L = 0.3;
    params.c = 0.01;
    params.seed = 5;
    std::vector<DenseSequence> fam{{2, FamilyKind::graph_cycles}};
    auto inst = build_lb_instance(params, fam, 4);

    // pipeline inclusion G <= G1 <= G0
    std::set<TEdge> g0(inst.g0.edges.begin(), inst.g0.edges.end());
    std::set<TEdge> g1(inst.g1.edges.begin(), inst.g1.edges.end());
    for (const auto& e : inst.g1.edges) CHECK(g0.count(e));
    for (const auto& e : inst.g.edges) CHECK(g1.count(e));
    CHECK((long long)inst.g0.edges.size() ==
          (long long)inst.g1.edges.size() + inst.removed1);
    CHECK((long long)inst.g1.edges.size() == (long long)inst.g.edges.size() + inst.removed2);

    // each class is a K_t^(k): C(4,2) = 6 pairs per class
    for (int i = 0; i < (int)inst.g.edges.size(); ++i)
        CHECK(inst.class_members(i).edges.size() == 6);

    // classes disjoint and their union is the shadow (construction throws on overlap)
    auto colored = inst.shadow_colored();
    CHECK(colored.edge_count() == (long long)inst.shadow().edges.size());
    CHECK(colored.class_count() == (int)inst.g.edges.size());
}

TEST_CASE("events hold at instrument-friendly parameters and certify the class count") {
    // t = 3 with small L keeps E|G0| = 32 L n modest while E Y stays O(1)
    LBParams params;
    params.n = 2000;
    params.uniformity_t = 3;
    params.k = 2;
    params.L = 0.01;
    params.c = 0.01;
    params.seed = 12;
    std::vector<DenseSequence> fam{{2, FamilyKind::graph_cycles}};
    auto inst = build_lb_instance(params, fam, 4);
    INFO("g0 " << inst.g0.edges.size() << " y " << inst.y_pairs << " removed2 " << inst.removed2);
    CHECK(inst.events.a);
    CHECK(inst.events.b);
    CHECK(inst.events.c);
    double ln_target = params.L * params.n;  // 20 colors promised
    CHECK(static_cast<double>(inst.class_count()) >= ln_target);
    auto min_size = min_rainbow_family_size(inst, fam, 4);
    CHECK_FALSE(min_size.has_value());  // nothing of size <= ell_max survives
}

TEST_CASE("min_rainbow_family_size on planted fixtures") {
    SECTION("planted rainbow C4 (alteration bypassed)") {
        LBInstance inst;
        inst.params.n = 8;
        inst.params.uniformity_t = 3;
        inst.params.k = 2;
        inst.ell_max = 0;
        inst.g = make_tgraph(8, 3, {{0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {0, 3, 7}});
        std::vector<DenseSequence> fam{{2, FamilyKind::graph_cycles}};
        auto got = min_rainbow_family_size(inst, fam, 6);
        REQUIRE(got.has_value());
        CHECK(*got == 4);  // no rainbow triangle exists, the C4 is planted
    }
    SECTION("berge pair sharing two vertices") {
        LBInstance inst;
        inst.params.n = 4;
        inst.params.uniformity_t = 3;
        inst.params.k = 3;
        inst.g = make_tgraph(4, 3, {{0, 1, 2}, {1, 2, 3}});
        std::vector<DenseSequence> fam{{3, FamilyKind::berge_cycles}};
        auto got = min_rainbow_family_size(inst, fam, 4);
        REQUIRE(got.has_value());
        CHECK(*got == 2);  // B_2: two 3-sets through {1,2} with distinct extras
    }
    SECTION("no copy below cap") {
        LBInstance inst;
        inst.params.n = 9;
        inst.params.uniformity_t = 3;
        inst.params.k = 2;
        inst.g = make_tgraph(9, 3, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
        std::vector<DenseSequence> fam{{2, FamilyKind::graph_cycles}};
        CHECK_FALSE(min_rainbow_family_size(inst, fam, 8).has_value());
    }
}

TEST_CASE("end-to-end minimum exceeds ceil(c log n)") {
    LBParams params;
    params.n = 200;
    params.uniformity_t = 4;
    params.k = 2;
    params.L = 2;
    params.delta_exp = 1.0;
    params.c = 0.0138;  // c * ln(4 * 2^4 * 4! * 2) <= 1/9
    params.seed = 3;
    params.validate();
    std::vector<DenseSequence> fam{{2, FamilyKind::graph_cycles}};
    auto inst = build_lb_instance(params, fam, std::nullopt);
    CHECK(inst.ell_max == params.default_ell_max());
    auto got = min_rainbow_family_size(inst, fam, inst.ell_max);
    // nothing of size <= ell_max survives the alteration
    CHECK_FALSE(got.has_value());
}

TEST_CASE("lb parameter validation") {
    LBParams p;
    p.n = 100;
    p.uniformity_t = 4;
    p.k = 2;
    p.L = 1;
    p.c = 0.01;
    CHECK(p.p() == Catch::Approx(1536.0 / 1e6));
    p.validate();
    p.k = 5;  // k > t
    CHECK_THROWS_AS(p.validate(), param_error);
    p.k = 2;
    p.L = 1e9;  // p > 1
    CHECK_THROWS_AS(p.validate(), param_error);
    p.L = 1;
    p.c = 1.0;  // violates c log(...) <= delta/9
    CHECK_THROWS_AS(p.validate(), param_error);
}

TEST_CASE("tgraph text round-trip") {
    auto g = make_tgraph(9, 3, {{0, 1, 2}, {2, 3, 4}, {6, 7, 8}});
    std::istringstream in(tgraph_to_text(g));
    auto back = tgraph_from_text(in);
    CHECK(back.n == g.n);
    CHECK(back.t == g.t);
    CHECK(back.edges == g.edges);
    std::istringstream bad("5 3\n0 1\n");
    CHECK_THROWS_AS(tgraph_from_text(bad), io_error);
}
