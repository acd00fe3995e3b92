#ifndef RAINBOW_EXACT_HPP
#define RAINBOW_EXACT_HPP

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_set>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

// Rotates/reflects a cycle into the canonical form: minimum vertex first,
// then toward the smaller of its two cycle neighbors.
inline std::vector<int> normalize_cycle(std::vector<int> cyc) {
    size_t len = cyc.size();
    size_t mi = 0;
    for (size_t i = 1; i < len; ++i)
        if (cyc[i] < cyc[mi]) mi = i;
    std::vector<int> fwd(len), bwd(len);
    for (size_t i = 0; i < len; ++i) {
        fwd[i] = cyc[(mi + i) % len];
        bwd[i] = cyc[(mi + len - i) % len];
    }
    return fwd <= bwd ? fwd : bwd;
}

/**
 * Exact girth with a witness cycle, by BFS from every vertex.  For each
 * root, any non-tree edge (u,w) seen while scanning gives a closed walk of
 * length d[u]+d[w]+1 through the root; the global minimum of these values
 * over all roots equals the girth, and at the minimum the walk is a simple
 * cycle.  Roots are scanned in ascending order and BFS is cut off once a
 * level can no longer beat the best length found, so the common
 * short-girth case is fast.
 */
inline std::optional<std::vector<int>> shortest_cycle(int n,
                                                      const std::vector<std::vector<int>>& adj) {
    constexpr long long kInf = std::numeric_limits<long long>::max();
    long long best = kInf;
    int best_root = -1, best_u = -1, best_w = -1;

    std::vector<long long> dist(n);
    std::vector<int> parent(n);
    std::deque<int> queue;
    for (int root = 0; root < n; ++root) {
        if (adj[root].size() < 2) continue;
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[root] = 0;
        parent[root] = -1;
        queue.push_back(root);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[u] >= best) break;  // no candidate through u can improve
            for (int w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    long long cand = dist[u] + dist[w] + 1;
                    if (cand < best) {
                        best = cand;
                        best_root = root;
                        best_u = u;
                        best_w = w;
                    }
                }
            }
        }
        if (best == 3) break;  // girth cannot go lower
    }
    if (best_root < 0) return std::nullopt;

    // Rebuild the BFS tree at the winning root and splice the two paths.
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    dist[best_root] = 0;
    parent[best_root] = -1;
    queue.push_back(best_root);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
    }
    std::vector<int> up, down;
    for (int x = best_u; x != -1; x = parent[x]) up.push_back(x);  // u .. root
    for (int x = best_w; x != -1; x = parent[x]) down.push_back(x);
    std::reverse(up.begin(), up.end());  // root .. u
    std::vector<int> cycle = std::move(up);
    cycle.insert(cycle.end(), down.begin(), down.end() - 1);  // w .. (excl. root)
    assert((long long)cycle.size() == best);
#ifndef NDEBUG
    std::unordered_set<int> uniq(cycle.begin(), cycle.end());
    assert(uniq.size() == cycle.size());
#endif
    return normalize_cycle(std::move(cycle));
}

inline std::vector<std::vector<int>> adjacency_from_edges(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

// Minimum cycle length of a simple graph; nullopt for forests.
inline std::optional<long long> girth(int n, const std::vector<Edge>& edges) {
    auto cyc = shortest_cycle(n, adjacency_from_edges(n, edges));
    if (!cyc) return std::nullopt;
    return static_cast<long long>(cyc->size());
}

struct RainbowGirthOutcome {
    enum class Status { found, none_below_cutoff, no_rainbow_cycle };
    Status status = Status::no_rainbow_cycle;
    long long length = 0;
    std::optional<RainbowCycleCertificate> certificate;
};

namespace detail {

struct RainbowSearch {
    int n;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, dense class index)
    int class_total;

    explicit RainbowSearch(const ColoredGraph& g)
        : n(g.vertex_count()), adj(g.vertex_count()), class_total(g.class_count()) {
        for (int ci = 0; ci < g.class_count(); ++ci)
            for (const Edge& e : g.classes()[ci].edges) {
                adj[e.u].push_back({e.v, ci});
                adj[e.v].push_back({e.u, ci});
            }
        for (auto& row : adj) std::sort(row.begin(), row.end());
    }

    std::vector<long long> dist_from(int s) const {
        std::vector<long long> d(n, -1);
        std::deque<int> q{s};
        d[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [w, ci] : adj[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
        }
        return d;
    }

    // Depth-first extension of simple paths with all vertices > start and all
    // class indices distinct; ascending scan order makes the first hit the
    // lexicographically smallest canonical cycle of this length.
    bool extend(int start, int prev, long long depth, long long target,
                const std::vector<long long>& dist, std::vector<char>& on_path,
                std::vector<char>& color_used, std::vector<int>& path) {
        if (depth == target - 1) {
            // close back to start; enforce direction: second vertex < last
            for (auto [w, ci] : adj[prev]) {
                if (w != start || color_used[ci]) continue;
                if (path[1] < prev) return true;
            }
            return false;
        }
        for (auto [w, ci] : adj[prev]) {
            if (w <= start || on_path[w] || color_used[ci]) continue;
            if (dist[w] > target - depth - 1) continue;  // cannot return in time
            on_path[w] = 1;
            color_used[ci] = 1;
            path.push_back(w);
            if (extend(start, w, depth + 1, target, dist, on_path, color_used, path)) return true;
            path.pop_back();
            color_used[ci] = 0;
            on_path[w] = 0;
        }
        return false;
    }

    std::optional<std::vector<int>> find_of_length(long long target) {
        std::vector<char> on_path(n, 0), color_used(class_total, 0);
        std::vector<int> path;
        for (int s = 0; s < n; ++s) {
            if ((long long)adj[s].size() < 2) continue;
            auto dist = dist_from(s);
            on_path.assign(n, 0);
            color_used.assign(class_total, 0);
            path.assign(1, s);
            on_path[s] = 1;
            for (auto [w, ci] : adj[s]) {
                if (w <= s) continue;
                if (dist[w] > target - 1) continue;
                on_path[w] = 1;
                color_used[ci] = 1;
                path.push_back(w);
                if (extend(s, w, 1, target, dist, on_path, color_used, path)) return path;
                path.pop_back();
                color_used[ci] = 0;
                on_path[w] = 0;
            }
        }
        return std::nullopt;
    }
};

}  // namespace detail

/**
 * Exact rainbow girth by iterative deepening over cycle lengths.  If a
 * length is reported, no shorter rainbow cycle exists; if nothing is found
 * up to the cutoff, no rainbow cycle of length <= cutoff exists.  A cutoff
 * of at least min(n, #classes) makes the answer fully exact (status
 * no_rainbow_cycle means rainbow girth = infinity).
 */
inline RainbowGirthOutcome rainbow_girth_exact(const ColoredGraph& g, long long cutoff) {
    if (cutoff < 3) throw param_error("rainbow girth cutoff must be >= 3");
    long long exhaustive = std::min<long long>(g.vertex_count(), g.class_count());
    long long limit = std::min(cutoff, exhaustive);
    detail::RainbowSearch search(g);
    RainbowGirthOutcome out;
    for (long long len = 3; len <= limit; ++len) {
        if (auto cyc = search.find_of_length(len)) {
            out.status = RainbowGirthOutcome::Status::found;
            out.length = len;
            out.certificate = certificate_from_cycle(g, normalize_cycle(std::move(*cyc)));
            return out;
        }
    }
    out.status = cutoff >= exhaustive ? RainbowGirthOutcome::Status::no_rainbow_cycle
                                      : RainbowGirthOutcome::Status::none_below_cutoff;
    return out;
}

enum class Chooser { canonical_first, seeded_uniform };

struct RepresentativeResult {
    std::vector<Edge> chosen;                          // one edge per class
    std::optional<long long> girth;                    // nullopt: forest
    std::optional<RainbowCycleCertificate> certificate;
};

/**
 * One representative edge per class (no vertex sampling).  Classes are
 * pairwise disjoint, so every cycle of the representative subgraph is
 * rainbow; a finite result upper-bounds the rainbow girth of g.
 */
inline RepresentativeResult representative_girth(const ColoredGraph& g, Chooser chooser,
                                                 std::uint64_t seed = 0) {
    RepresentativeResult res;
    Rng rng(seed);
    for (const auto& c : g.classes()) {
        size_t pick = 0;
        if (chooser == Chooser::seeded_uniform) pick = rng.below(c.edges.size());
        res.chosen.push_back(c.edges[pick]);
    }
    auto cyc = shortest_cycle(g.vertex_count(), adjacency_from_edges(g.vertex_count(), res.chosen));
    if (cyc) {
        res.girth = static_cast<long long>(cyc->size());
        res.certificate = certificate_from_cycle(g, *cyc);
    }
    return res;
}

}  // namespace rainbow

#endif
