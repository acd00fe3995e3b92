#ifndef RAINBOW_GENERATORS_HPP
#define RAINBOW_GENERATORS_HPP

#include <string>
#include <unordered_set>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

/**
 * The star family witnessing tightness of the ceil(n/r) bound: n classes,
 * class i = { {i,i+1}, ..., {i,i+r} } with indices mod n.  Every class is a
 * star of size r centered at i, and every rainbow cycle must wind around
 * the circle, so the rainbow girth is ceil(n/r).
 */
inline ColoredGraph gen_star_cycle(int n, int r) {
    if (n < 3) throw param_error("gen_star_cycle: n must be >= 3");
    if (r < 1) throw param_error("gen_star_cycle: r must be >= 1");
    if (2 * r >= n)
        throw param_error("gen_star_cycle: need 2r < n, got n=" + std::to_string(n) +
                          " r=" + std::to_string(r));
    std::vector<ColorClass> classes;
    classes.reserve(n);
    for (int i = 0; i < n; ++i) {
        ColorClass c{i, {}};
        for (int j = 1; j <= r; ++j) c.edges.push_back(make_edge(i, (i + j) % n));
        classes.push_back(std::move(c));
    }
    return ColoredGraph::create(n, std::move(classes));
}

/**
 * The 2*alpha + beta = 1 threshold example.  Two components:
 *   X on 2*alpha*n vertices carrying alpha*n two-matchings and alpha*n
 *   single-edge classes, and Y on beta*n vertices carrying beta*n stars of
 *   size two.  Index arithmetic follows the construction's 1-based modular
 *   ranges mapped onto 0-based residues; every produced vertex pair is
 *   asserted globally distinct, and any collision (possible only for tiny
 *   components) is reported as an error rather than silently merged.
 * Rainbow girth is at least min(alpha*n, beta*n/2).
 */
inline ColoredGraph gen_tight_example(const Rat& alpha, const Rat& beta, int n) {
    if (Rat(2) * alpha + beta != Rat(1))
        throw param_error("gen_tight_example: need 2*alpha + beta = 1");
    if (alpha <= Rat(0) || beta <= Rat(0))
        throw param_error("gen_tight_example: need min(alpha, beta) > 0");
    Rat an = alpha * Rat(n), bn = beta * Rat(n);
    if (an.denominator() != 1 || bn.denominator() != 1)
        throw param_error("gen_tight_example: alpha*n and beta*n must be integers");
    long long a = an.numerator(), b = bn.numerator();
    if (a < 4 || a % 2 != 0)
        throw param_error("gen_tight_example: alpha*n must be an even integer >= 4");
    if (b < 5)
        throw param_error("gen_tight_example: beta*n below 5 collapses star pairs");

    int big_a = static_cast<int>(2 * a);  // |X|
    int big_b = static_cast<int>(b);      // |Y|
    // x_k (1-based, k taken mod 2*alpha*n) maps to vertex (k-1) mod 2*alpha*n
    auto x = [&](long long k) { return static_cast<int>(((k - 1) % big_a + big_a) % big_a); };
    // y_k likewise, offset past the X block
    auto y = [&](long long k) {
        return big_a + static_cast<int>(((k - 1) % big_b + big_b) % big_b);
    };

    std::vector<ColorClass> classes;
    classes.reserve(n);
    int next_id = 0;
    // matchings of size two: {x_{4i+1}x_{4i+2}, x_{4i+3}x_{4i+4}} and
    // {x_{4i+2}x_{4i+5}, x_{4i+4}x_{4i+7}} for i = 1..alpha*n/2
    for (long long i = 1; i <= a / 2; ++i) {
        classes.push_back({next_id++,
                           {make_edge(x(4 * i + 1), x(4 * i + 2)), make_edge(x(4 * i + 3), x(4 * i + 4))}});
        classes.push_back({next_id++,
                           {make_edge(x(4 * i + 2), x(4 * i + 5)), make_edge(x(4 * i + 4), x(4 * i + 7))}});
    }
    // stars of size two: {y_i y_{i+1}, y_i y_{i+2}} for i = 1..beta*n
    for (long long i = 1; i <= b; ++i)
        classes.push_back({next_id++, {make_edge(y(i), y(i + 1)), make_edge(y(i), y(i + 2))}});
    // singles: {x_{4i+1}x_{4i+3}} and {x_{4i+2}x_{4i+4}}
    for (long long i = 1; i <= a / 2; ++i) {
        classes.push_back({next_id++, {make_edge(x(4 * i + 1), x(4 * i + 3))}});
        classes.push_back({next_id++, {make_edge(x(4 * i + 2), x(4 * i + 4))}});
    }
    if (next_id != n)
        throw param_error("gen_tight_example: class census does not total n");
    try {
        return ColoredGraph::create(n, std::move(classes));
    } catch (const param_error& e) {
        throw param_error(std::string("gen_tight_example: construction collided: ") + e.what());
    }
}

struct RandomFamilyCounts {
    long long matching2 = 0;
    long long star2 = 0;
    long long triangle = 0;
    long long single = 0;

    long long total() const { return matching2 + star2 + triangle + single; }
};

/**
 * Seeded instance whose class census equals the requested counts exactly:
 * each class is drawn uniformly from its structural type (two disjoint
 * random edges / random 2-star / random triangle / random edge), redrawing
 * on any collision with already-placed vertex pairs.
 */
inline ColoredGraph gen_random_family(int n, const RandomFamilyCounts& counts, std::uint64_t seed) {
    if (n < 4 && counts.total() > 0) throw param_error("gen_random_family: n too small");
    long long demand = 2 * counts.matching2 + 2 * counts.star2 + 3 * counts.triangle + counts.single;
    if (demand > static_cast<long long>(n) * (n - 1) / 2)
        throw param_error("gen_random_family: edge demand exceeds simple-graph capacity");

    Rng rng(seed);
    std::unordered_set<std::uint64_t> used;
    used.reserve(static_cast<size_t>(demand) * 2);
    const long long budget_per_class = 100000;

    auto fresh = [&](const std::vector<Edge>& es) {
        for (const Edge& e : es)
            if (used.count(edge_key(e))) return false;
        // edges within one candidate class must also be mutually distinct
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j)
                if (es[i] == es[j]) return false;
        return true;
    };
    auto commit = [&](const std::vector<Edge>& es) {
        for (const Edge& e : es) used.insert(edge_key(e));
    };
    auto give_up = [&]() -> ColoredGraph {
        throw param_error("gen_random_family: collision budget exhausted; use a larger n");
    };

    std::vector<ColorClass> classes;
    classes.reserve(counts.total());
    int id = 0;

    auto draw_class = [&](auto&& sample) {
        for (long long attempt = 0; attempt < budget_per_class; ++attempt) {
            std::vector<Edge> es = sample();
            if (!fresh(es)) continue;
            commit(es);
            std::sort(es.begin(), es.end());
            classes.push_back({id++, std::move(es)});
            return;
        }
        give_up();
    };

    auto rand_vertex = [&]() { return rng.below_int(n); };
    auto rand_edge = [&]() {
        for (;;) {
            int u = rand_vertex(), v = rand_vertex();
            if (u != v) return make_edge(u, v);
        }
    };

    for (long long i = 0; i < counts.matching2; ++i)
        draw_class([&]() -> std::vector<Edge> {
            for (;;) {
                Edge e1 = rand_edge(), e2 = rand_edge();
                if (e1.u != e2.u && e1.u != e2.v && e1.v != e2.u && e1.v != e2.v)
                    return {e1, e2};
            }
        });
    for (long long i = 0; i < counts.star2; ++i)
        draw_class([&]() -> std::vector<Edge> {
            for (;;) {
                int c = rand_vertex(), a = rand_vertex(), b = rand_vertex();
                if (a != b && a != c && b != c) return {make_edge(c, a), make_edge(c, b)};
            }
        });
    for (long long i = 0; i < counts.triangle; ++i)
        draw_class([&]() -> std::vector<Edge> {
            for (;;) {
                int a = rand_vertex(), b = rand_vertex(), c = rand_vertex();
                if (a != b && a != c && b != c)
                    return {make_edge(a, b), make_edge(b, c), make_edge(a, c)};
            }
        });
    for (long long i = 0; i < counts.single; ++i)
        draw_class([&]() -> std::vector<Edge> { return {rand_edge()}; });

    return ColoredGraph::create(n, std::move(classes));
}

}  // namespace rainbow

#endif
