#ifndef RAINBOW_FINDER_HPP
#define RAINBOW_FINDER_HPP

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

/**
 * Parameter schedule of the p-random sampling argument:
 *   gamma = 2*alpha + beta - 1,  t = gamma/40,  xi = gamma*t/100,
 *   p = 1 - t,  delta = gamma*t/10.
 * All fields are exact rationals; they are converted to floating point
 * only inside the sampler.
 */
struct ProofSchedule {
    Rat alpha, beta, gamma, t, xi, p, delta;
};

inline ProofSchedule derive_schedule(const Rat& alpha, const Rat& beta) {
    if (alpha < Rat(0) || beta < Rat(0)) throw param_error("alpha, beta must be nonnegative");
    if (std::max(alpha, beta) > Rat(1))
        throw param_error("alpha, beta above 1 are outside the sampling regime; "
                          "one representative edge per class already has linear excess "
                          "(see representative_girth)");
    ProofSchedule s;
    s.alpha = alpha;
    s.beta = beta;
    s.gamma = Rat(2) * alpha + beta - Rat(1);
    if (s.gamma <= Rat(0))
        throw infeasible_error("threshold",
                               "2*alpha + beta must exceed 1 (gamma = " + to_string(s.gamma) +
                                   "); at the boundary the tight example has linear rainbow girth");
    s.t = s.gamma / Rat(40);
    s.xi = s.gamma * s.t / Rat(100);
    s.p = Rat(1) - s.t;
    s.delta = s.gamma * s.t / Rat(10);
    return s;
}

/**
 * Analytic lower bound on E[K] for a graph with the given class census:
 * classes that are exactly a 2-matching survive into the sample with
 * probability 2p^2 - p^4, exact 2-stars with 2p^2 - p^3, single edges with
 * p^2; larger classes only survive more often.  K counts |E(H)| - |S|.
 */
inline double expected_excess(long long matching_count, long long star_count, long long rest_count,
                              long long n, double p) {
    if (matching_count < 0 || star_count < 0 || rest_count < 0 || n < 0)
        throw param_error("expected_excess: negative count");
    if (p < 0.0 || p > 1.0) throw param_error("expected_excess: p outside [0,1]");
    double p2 = p * p;
    return static_cast<double>(matching_count) * (2 * p2 - p2 * p2) +
           static_cast<double>(star_count) * (2 * p2 - p2 * p) +
           static_cast<double>(rest_count) * p2 - static_cast<double>(n) * p;
}

// Girth upper bound for an n-vertex graph with excess at least k:
//   2(n+k)/(3k) * (log2 k + log2 log2 k + 4).
inline double bs_bound(double n, double k) {
    if (n < 4) throw param_error("bs_bound: n must be >= 4");
    if (k < 2) throw param_error("bs_bound: k must be >= 2");
    double lk = std::log2(k);
    return 2.0 * (n + k) / (3.0 * k) * (lk + std::log2(lk) + 4.0);
}

/**
 * Smallest integer A >= 3 such that for all A <= k <= n <= n_max the excess
 * bound is dominated by (2 log2 k / k) n and f(k) = log2 k / k is
 * decreasing.  For fixed k the constraint is tightest at n = k, where it
 * reduces to 4(log2 n + log2 log2 n + 4) <= 6 log2 n, so scanning k alone
 * decides A.  A return value above n_max means no k in range satisfies the
 * reduced inequality yet.
 */
inline long long calibrate_A(long long n_max) {
    if (n_max < 16) throw param_error("calibrate_A: n_max must be >= 16");
    long long worst_violation = 2;
    for (long long k = 3; k <= n_max; ++k) {
        double lk = std::log2(static_cast<double>(k));
        if (4.0 * (lk + std::log2(lk) + 4.0) > 6.0 * lk) worst_violation = k;
    }
    return std::max<long long>(3, worst_violation + 1);
}

/**
 * One p-random sampling trial: S keeps each vertex independently with
 * probability p, then each color class contributes its first (or a seeded
 * uniform) edge lying inside S.  |V(H)| counts all of S, matching the
 * expectation accounting; the non-isolated count is reported separately
 * since only it matters for girth.
 */
struct SampleOutcome {
    std::uint64_t seed = 0;
    long long sampled = 0;        // |S|
    long long non_isolated = 0;   // vertices touched by a chosen edge
    std::vector<Edge> chosen;     // at most one edge per class
    std::vector<int> chosen_class;
    long long excess_k = 0;       // |E(H)| - |S|
    std::optional<long long> girth;
    std::optional<RainbowCycleCertificate> certificate;
};

inline SampleOutcome sample_rainbow_subgraph(const ColoredGraph& g, double p, std::uint64_t seed,
                                             Chooser chooser = Chooser::canonical_first,
                                             bool with_girth = true) {
    if (!(p > 0.0 && p < 1.0)) throw param_error("sample_rainbow_subgraph: need 0 < p < 1");
    SampleOutcome out;
    out.seed = seed;
    Rng rng(seed);
    int n = g.vertex_count();
    std::vector<char> in_s(n, 0);
    for (int v = 0; v < n; ++v)
        if (rng.bernoulli(p)) {
            in_s[v] = 1;
            ++out.sampled;
        }
    std::vector<Edge> eligible;
    for (const auto& c : g.classes()) {
        if (chooser == Chooser::canonical_first) {
            for (const Edge& e : c.edges)
                if (in_s[e.u] && in_s[e.v]) {
                    out.chosen.push_back(e);
                    out.chosen_class.push_back(c.id);
                    break;
                }
        } else {
            eligible.clear();
            for (const Edge& e : c.edges)
                if (in_s[e.u] && in_s[e.v]) eligible.push_back(e);
            if (!eligible.empty()) {
                out.chosen.push_back(eligible[rng.below(eligible.size())]);
                out.chosen_class.push_back(c.id);
            }
        }
    }
    out.excess_k = static_cast<long long>(out.chosen.size()) - out.sampled;
    std::unordered_set<int> touched;
    for (const Edge& e : out.chosen) {
        touched.insert(e.u);
        touched.insert(e.v);
    }
    out.non_isolated = static_cast<long long>(touched.size());
    if (with_girth) {
        auto cyc = shortest_cycle(n, adjacency_from_edges(n, out.chosen));
        if (cyc) {
            out.girth = static_cast<long long>(cyc->size());
            out.certificate = certificate_from_cycle(g, *cyc);
        }
    }
    return out;
}

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    long long s_size = 0;
    long long non_isolated = 0;
    long long edges = 0;
    long long excess = 0;
    std::optional<long long> girth;
};

struct FindResult {
    ProofSchedule schedule;
    ClassPartition partition;
    std::vector<TrialRecord> log;
    std::optional<RainbowCycleCertificate> certificate;  // shortest across trials
    int best_trial = -1;
};

/**
 * Repeated p-random sampling with the derived schedule.  Trials use seeds
 * derive_seed(master, trial); the shortest cycle over all trials is
 * returned together with the full trial log.  Never fabricates success:
 * an empty certificate plus the log is the failure report.
 */
inline FindResult find_short_rainbow_cycle(const ColoredGraph& g, const Rat& alpha, const Rat& beta,
                                           int max_trials, std::uint64_t seed,
                                           Chooser chooser = Chooser::canonical_first) {
    if (max_trials < 1) throw param_error("max_trials must be >= 1");
    FindResult res;
    res.schedule = derive_schedule(alpha, beta);
    res.partition = partition_classes(g, alpha, beta, res.schedule.xi);
    double p = to_double(res.schedule.p);
    for (int trial = 0; trial < max_trials; ++trial) {
        std::uint64_t ts = derive_seed(seed, static_cast<std::uint64_t>(trial));
        SampleOutcome s = sample_rainbow_subgraph(g, p, ts, chooser, true);
        res.log.push_back({trial, ts, s.sampled, s.non_isolated,
                           static_cast<long long>(s.chosen.size()), s.excess_k, s.girth});
        if (s.certificate) {
            if (!res.certificate || s.certificate->length() < res.certificate->length()) {
                res.certificate = std::move(s.certificate);
                res.best_trial = trial;
            }
        }
    }
    return res;
}

namespace detail {

// Lexicographically smallest vertex triple forming a triangle inside one
// class, or nullopt.
inline std::optional<std::array<int, 3>> canonical_triangle(const std::vector<Edge>& edges) {
    std::unordered_set<std::uint64_t> present;
    for (const Edge& e : edges) present.insert(edge_key(e));
    std::optional<std::array<int, 3>> best;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &a = edges[i], &b = edges[j];
            int shared = -1;
            if (a.u == b.u || a.u == b.v) shared = a.u;
            else if (a.v == b.u || a.v == b.v) shared = a.v;
            if (shared < 0) continue;
            int x = a.u == shared ? a.v : a.u;
            int y = b.u == shared ? b.v : b.u;
            if (x == y || !present.count(edge_key(make_edge(x, y)))) continue;
            std::array<int, 3> tri{shared, x, y};
            std::sort(tri.begin(), tri.end());
            if (!best || tri < *best) best = tri;
        }
    return best;
}

struct TriangleSubgraph {
    std::vector<Edge> edges;
    long long triangle_classes = 0;
};

// Two path edges (x,y),(y,z) of the canonical triangle from every class
// that contains one, one canonical edge from every other class.  The
// chord (x,z) stays available in G as the repair edge.
inline TriangleSubgraph build_triangle_excess_subgraph(const ColoredGraph& g) {
    TriangleSubgraph f;
    for (const auto& c : g.classes()) {
        auto tri = canonical_triangle(c.edges);
        if (tri) {
            ++f.triangle_classes;
            f.edges.push_back(make_edge((*tri)[0], (*tri)[1]));
            f.edges.push_back(make_edge((*tri)[1], (*tri)[2]));
        } else {
            f.edges.push_back(c.edges.front());
        }
    }
    return f;
}

// While the cycle repeats a color, the two offending edges are two edges of
// one monochromatic triangle and are consecutive at their shared vertex;
// replacing them by the third triangle edge shortens the cycle by one.
inline std::pair<std::vector<int>, std::vector<long long>> repair_to_rainbow(
    const ColoredGraph& g, std::vector<int> cycle) {
    std::vector<long long> trace{static_cast<long long>(cycle.size())};
    for (;;) {
        size_t len = cycle.size();
        std::unordered_map<int, size_t> first_pos;
        std::optional<std::pair<size_t, size_t>> dup;
        for (size_t i = 0; i < len && !dup; ++i) {
            Edge e = make_edge(cycle[i], cycle[(i + 1) % len]);
            int cls = g.class_id_of(e).value();
            auto [it, fresh] = first_pos.emplace(cls, i);
            if (!fresh) dup = {it->second, i};
        }
        if (!dup) break;
        auto [i, j] = *dup;
        size_t mid;
        if (j == i + 1) mid = j;                 // shared vertex cycle[j]
        else if (i == 0 && j == len - 1) mid = 0;  // wrap-around adjacency
        else throw std::logic_error("repair: same-colored edges not adjacent");
        cycle.erase(cycle.begin() + static_cast<long>(mid));
        trace.push_back(static_cast<long long>(cycle.size()));
    }
    return {std::move(cycle), std::move(trace)};
}

}  // namespace detail

struct RepairResult {
    RainbowCycleCertificate certificate;
    std::vector<long long> length_trace;  // initial cycle length, then after each repair
    long long iterations = 0;
    bool delegated = false;                       // branch (a): handled by sampling
    std::optional<FindResult> delegate_result;
};

/**
 * Rainbow-cycle finder for colorings where every class has size at least
 * two and at least alpha*n classes contain a 2-matching or a triangle.
 * With many 2-matchings the sampling finder applies directly; otherwise a
 * subgraph with two edges per monochromatic triangle has linear excess and
 * its shortest cycle is repaired into a rainbow one.
 */
inline RepairResult triangle_repair_find(const ColoredGraph& g, const Rat& alpha,
                                         int max_trials = 64, std::uint64_t seed = 0) {
    long long n = g.vertex_count();
    long long m = g.class_count();
    auto prof = profiles(g);
    for (size_t i = 0; i < prof.size(); ++i)
        if (prof[i].size < 2)
            throw infeasible_error("class_size", "class " + std::to_string(g.classes()[i].id) +
                                                     " has size 1 (need >= 2)");
    long long matching = 0, mt = 0;
    for (const auto& p : prof) {
        if (p.has_matching2) ++matching;
        if (p.has_matching2 || p.has_triangle) ++mt;
    }
    if (Rat(mt) < alpha * Rat(n))
        throw infeasible_error("census", "need at least alpha*n = " + to_string(alpha * Rat(n)) +
                                             " classes with a 2-matching or triangle, found " +
                                             std::to_string(mt));

    if (Rat(2) * Rat(matching) >= alpha * Rat(n)) {
        // Delegate to the sampling finder with the actual census; every
        // remaining class of size >= 2 without a 2-matching is a star.
        Rat a2 = std::min(Rat(matching, n), Rat(1));
        Rat b2 = std::min(Rat(m - matching, n), Rat(1));
        FindResult fr = find_short_rainbow_cycle(g, a2, b2, max_trials, seed);
        if (!fr.certificate)
            throw infeasible_error("trial_budget",
                                   "sampling found no cycle in " + std::to_string(max_trials) +
                                       " trials");
        RepairResult rr;
        rr.certificate = *fr.certificate;
        rr.length_trace = {static_cast<long long>(rr.certificate.length())};
        rr.delegated = true;
        rr.delegate_result = std::move(fr);
        return rr;
    }

    detail::TriangleSubgraph f = detail::build_triangle_excess_subgraph(g);
    if (Rat(2) * Rat(f.triangle_classes) < alpha * Rat(n))
        throw infeasible_error("census", "triangle classes fall short of alpha*n/2");
    auto cyc = shortest_cycle(g.vertex_count(), adjacency_from_edges(g.vertex_count(), f.edges));
    if (!cyc)
        throw infeasible_error("excess",
                               "triangle-excess subgraph is acyclic; class census cannot "
                               "supply positive excess");
    auto [fixed, trace] = detail::repair_to_rainbow(g, std::move(*cyc));
    RepairResult rr;
    rr.certificate = certificate_from_cycle(g, normalize_cycle(std::move(fixed)));
    rr.length_trace = std::move(trace);
    rr.iterations = static_cast<long long>(rr.length_trace.size()) - 1;
    return rr;
}

/**
 * Explicit-bound schedule: t = n^{-c}/10, p = 1 - t, target excess
 * (L/100) n^{1-2c}.  L0 = max(100 A, 10^3) with the calibrated A; below L0
 * the procedure still runs but the closed-form girth bound is not
 * guaranteed by the calibration.
 */
struct NonstarexSchedule {
    long long n = 0;
    double c = 0, L = 0;
    double sample_t = 0, p = 0;
    double target_excess = 0;
    long long A = 0;
    double L0 = 0;
    bool meets_l0 = false;
};

inline long long default_calibrated_A() {
    static const long long a = calibrate_A(1 << 20);
    return a;
}

inline NonstarexSchedule derive_nonstarex_schedule(long long n, double c, double L,
                                                   long long A = default_calibrated_A()) {
    if (n < 2) throw param_error("nonstarex: n must be >= 2");
    if (c < 0.0 || c > 0.5) throw param_error("nonstarex: c must lie in [0, 1/2]");
    if (L <= 0.0) throw param_error("nonstarex: L must be positive");
    NonstarexSchedule s;
    s.n = n;
    s.c = c;
    s.L = L;
    s.A = A;
    s.sample_t = 0.1 * std::pow(static_cast<double>(n), -c);
    s.p = 1.0 - s.sample_t;
    s.target_excess = (L / 100.0) * std::pow(static_cast<double>(n), 1.0 - 2.0 * c);
    s.L0 = std::max(100.0 * static_cast<double>(A), 1e3);
    s.meets_l0 = L >= s.L0;
    return s;
}

struct NonstarexResult {
    NonstarexSchedule schedule;
    std::string branch;  // "triangle" or "matching"
    std::optional<RainbowCycleCertificate> certificate;
    std::vector<TrialRecord> log;         // matching branch trials
    std::vector<long long> length_trace;  // triangle branch repair trace
    double achieved_excess = 0;
    double girth_bound = 0;  // 2 log2(x)/x * n at x = target excess
    bool bound_met = false;
    bool bound_certified = false;
};

inline NonstarexResult nonstarex_find(const ColoredGraph& g, double c, double L, int max_trials,
                                      std::uint64_t seed, bool allow_below_l0 = false,
                                      long long A = default_calibrated_A()) {
    long long n = g.vertex_count();
    NonstarexResult res;
    res.schedule = derive_nonstarex_schedule(n, c, L, A);
    if (!res.schedule.meets_l0 && !allow_below_l0)
        throw infeasible_error("L_below_L0",
                               "L = " + std::to_string(L) + " is below L0 = " +
                                   std::to_string(res.schedule.L0) +
                                   "; pass allow_below_l0 to run without the certified bound");
    res.bound_certified = res.schedule.meets_l0;

    auto prof = profiles(g);
    long long matching = 0, triangles = 0, mt = 0;
    for (size_t i = 0; i < prof.size(); ++i) {
        if (prof[i].size < 2)
            throw infeasible_error("class_size", "class " + std::to_string(g.classes()[i].id) +
                                                     " has size 1 (need >= 2)");
        if (prof[i].has_matching2) ++matching;
        if (prof[i].has_triangle) ++triangles;
        if (prof[i].has_matching2 || prof[i].has_triangle) ++mt;
    }
    double need = L * std::pow(static_cast<double>(n), 1.0 - c);
    if (static_cast<double>(mt) < need)
        throw infeasible_error("census", "need L*n^(1-c) = " + std::to_string(need) +
                                             " classes with a 2-matching or triangle, found " +
                                             std::to_string(mt));
    double x = res.schedule.target_excess;
    res.girth_bound = x > 2.0 ? 2.0 * std::log2(x) / x * static_cast<double>(n)
                                : std::numeric_limits<double>::infinity();

    if (static_cast<double>(triangles) >= need / 2.0) {
        res.branch = "triangle";
        detail::TriangleSubgraph f = detail::build_triangle_excess_subgraph(g);
        res.achieved_excess =
            static_cast<double>(static_cast<long long>(f.edges.size()) - n);
        auto cyc = shortest_cycle(g.vertex_count(), adjacency_from_edges(g.vertex_count(), f.edges));
        if (cyc) {
            auto [fixed, trace] = detail::repair_to_rainbow(g, std::move(*cyc));
            res.certificate = certificate_from_cycle(g, normalize_cycle(std::move(fixed)));
            res.length_trace = std::move(trace);
        }
    } else {
        res.branch = "matching";
        for (int trial = 0; trial < max_trials; ++trial) {
            std::uint64_t ts = derive_seed(seed, static_cast<std::uint64_t>(trial));
            SampleOutcome s = sample_rainbow_subgraph(g, res.schedule.p, ts);
            res.log.push_back({trial, ts, s.sampled, s.non_isolated,
                               static_cast<long long>(s.chosen.size()), s.excess_k, s.girth});
            if (s.excess_k > res.achieved_excess)
                res.achieved_excess = static_cast<double>(s.excess_k);
            if (s.certificate &&
                (!res.certificate || s.certificate->length() < res.certificate->length()))
                res.certificate = std::move(s.certificate);
        }
    }
    res.bound_met =
        res.certificate && static_cast<double>(res.certificate->length()) <= res.girth_bound;
    return res;
}

}  // namespace rainbow

#endif
