#ifndef RAINBOW_TESTS_NAIVE_ORACLES_HPP
#define RAINBOW_TESTS_NAIVE_ORACLES_HPP

// Test-only brute-force oracles, independent of the library's search code.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/rng.hpp"

namespace naive {

// Rainbow girth by enumerating every vertex subset and every cyclic order.
// Only usable for tiny graphs (<= ~10 vertices).
inline std::optional<long long> rainbow_girth(const rainbow::ColoredGraph& g) {
    int n = g.vertex_count();
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (int len = 3; len <= n; ++len) {
        std::vector<int> pick(len);
        std::vector<char> chosen(n, 0);
        // enumerate len-subsets via index combinations
        std::vector<int> idx(len);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            for (int i = 0; i < len; ++i) pick[i] = all[idx[i]];
            // cyclic orders: fix pick[0] first, permute the rest, halve by direction
            std::vector<int> rest(pick.begin() + 1, pick.end());
            std::sort(rest.begin(), rest.end());
            do {
                if (rest.front() > rest.back()) continue;  // fix direction
                std::vector<int> cyc{pick[0]};
                cyc.insert(cyc.end(), rest.begin(), rest.end());
                std::set<int> colors;
                bool ok = true;
                for (int i = 0; i < len && ok; ++i) {
                    auto cls = g.class_id_of(
                        rainbow::make_edge(cyc[i], cyc[(i + 1) % len]));
                    if (!cls || !colors.insert(*cls).second) ok = false;
                }
                if (ok) return len;
            } while (std::next_permutation(rest.begin(), rest.end()));
            int i = len - 1;
            while (i >= 0 && idx[i] == n - len + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < len; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// Independent re-derivation of the class profile from an adjacency matrix.
inline rainbow::ColorClassProfile classify(const std::vector<rainbow::Edge>& edges) {
    rainbow::ColorClassProfile p;
    p.size = static_cast<long long>(edges.size());
    std::set<std::pair<int, int>> set;
    for (const auto& e : edges) set.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::vector<std::pair<int, int>> es(set.begin(), set.end());
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            std::set<int> verts{es[i].first, es[i].second, es[j].first, es[j].second};
            if (verts.size() == 4) p.has_matching2 = true;
            if (verts.size() == 3) p.has_star2 = true;
        }
    for (auto [a, b] : set)
        for (auto [c, d] : set) {
            // triangle a-b-x with edges (a,b),(a/b,x) and closing edge
            if (std::make_pair(a, b) >= std::make_pair(c, d)) continue;
            std::set<int> verts{a, b, c, d};
            if (verts.size() != 3) continue;
            std::vector<int> v(verts.begin(), verts.end());
            if (set.count({v[0], v[1]}) && set.count({v[0], v[2]}) && set.count({v[1], v[2]}))
                p.has_triangle = true;
        }
    return p;
}

// Seeded random colored graph on <= max_n vertices with <= max_edges edges,
// classes assigned so every class is nonempty.
inline rainbow::ColoredGraph random_colored_graph(std::uint64_t seed, int max_n = 9,
                                                  int max_edges = 14) {
    rainbow::Rng rng(seed);
    int n = 3 + rng.below_int(max_n - 2);
    std::vector<rainbow::Edge> pool;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pool.push_back({u, v});
    // Fisher-Yates prefix
    for (size_t i = 0; i < pool.size(); ++i) {
        size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    int m = std::min<int>(static_cast<int>(pool.size()), 1 + rng.below_int(max_edges));
    int classes = 1 + rng.below_int(m);
    std::vector<std::vector<rainbow::Edge>> buckets(classes);
    for (int i = 0; i < m; ++i)
        buckets[i < classes ? i : rng.below_int(classes)].push_back(pool[i]);
    std::vector<rainbow::ColorClass> cc;
    for (int i = 0; i < classes; ++i) cc.push_back({i, buckets[i]});
    return rainbow::ColoredGraph::create(n, std::move(cc));
}

// Necklace fixture for the triangle-repair path: k triangle classes chained
// on vertices 0..2k-1 so that the representative subgraph has a unique cycle
// of length 2k-1 traversing both kept edges of classes 0..k-2.  Repairing it
// takes exactly k-1 steps and ends on the rainbow k-cycle 0-2-4-...-0.
// Optional star classes pad the instance on fresh vertices without adding
// cycles.
inline rainbow::ColoredGraph triangle_necklace(int k, int star_pad) {
    int n = 2 * k + 3 * star_pad;
    std::vector<rainbow::ColorClass> classes;
    for (int i = 0; i < k; ++i) {
        int a = 2 * i, b = 2 * i + 1, c = (2 * i + 2) % (2 * k);
        classes.push_back({i,
                           {rainbow::make_edge(a, b), rainbow::make_edge(b, c),
                            rainbow::make_edge(a, c)}});
    }
    for (int j = 0; j < star_pad; ++j) {
        int c = 2 * k + 3 * j;
        classes.push_back({k + j, {rainbow::make_edge(c, c + 1), rainbow::make_edge(c, c + 2)}});
    }
    return rainbow::ColoredGraph::create(n, std::move(classes));
}

// Connected component sizes via union-find (for generator audits).
inline std::vector<long long> component_sizes(const rainbow::ColoredGraph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : g.classes())
        for (const auto& e : c.edges) parent[find(e.u)] = find(e.v);
    std::map<int, long long> sizes;
    for (int v = 0; v < n; ++v) ++sizes[find(v)];
    std::vector<long long> out;
    for (auto& [root, s] : sizes) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace naive

#endif
