#ifndef RAINBOW_HYPERGRAPH_HPP
#define RAINBOW_HYPERGRAPH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

using TEdge = std::vector<int>;  // sorted ascending, |e| = t

struct TGraph {
    int n = 0;
    int t = 0;
    std::vector<TEdge> edges;  // kept in lexicographic order; index order is canonical
};

struct KGraph {
    int k = 0;
    std::vector<std::vector<int>> edges;

    long long vertex_count() const {
        std::unordered_set<int> v;
        for (const auto& e : edges) v.insert(e.begin(), e.end());
        return static_cast<long long>(v.size());
    }
    double density() const {
        long long nv = vertex_count();
        return nv == 0 ? 0.0 : static_cast<double>(edges.size()) / static_cast<double>(nv);
    }
};

inline long long binomial_coefficient(long long n, int t) {
    if (t < 0 || n < 0) throw param_error("binomial_coefficient: negative input");
    if (t > n) return 0;
    __int128 c = 1;
    for (int i = 0; i < t; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > static_cast<__int128>(4e18))
            throw param_error("binomial_coefficient overflow: C(" + std::to_string(n) + "," +
                              std::to_string(t) + ")");
    }
    return static_cast<long long>(c);
}

// All k-subsets contained in some hyperedge, deduplicated.
inline KGraph shadow_k(const TGraph& g, int k) {
    if (k > g.t) throw param_error("shadow_k: k must be <= t");
    if (k < 1) throw param_error("shadow_k: k must be >= 1");
    std::set<std::vector<int>> out;
    std::vector<int> pick(k);
    for (const TEdge& e : g.edges) {
        // iterate k-subsets of e by index combination
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            for (int i = 0; i < k; ++i) pick[i] = e[idx[i]];
            out.insert(pick);
            int i = k - 1;
            while (i >= 0 && idx[i] == g.t - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    KGraph h;
    h.k = k;
    h.edges.assign(out.begin(), out.end());
    return h;
}

/**
 * Binomial random t-graph: every t-set of [n] kept independently with
 * probability p.  Small slot spaces are scanned directly; large ones draw
 * |G0| ~ Binomial(C(n,t), p) and then that many distinct uniform t-sets,
 * which is the same distribution.
 */
inline TGraph sample_random_tgraph(int n, int t, double p, std::uint64_t seed) {
    if (t < 1 || n < t) throw param_error("sample_random_tgraph: need 1 <= t <= n");
    if (p < 0.0 || p > 1.0) throw param_error("sample_random_tgraph: p outside [0,1]");
    TGraph g;
    g.n = n;
    g.t = t;
    Rng rng(seed);
    long long slots = binomial_coefficient(n, t);
    if (slots <= 200000) {
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        for (;;) {
            if (rng.bernoulli(p)) g.edges.emplace_back(idx.begin(), idx.end());
            int i = t - 1;
            while (i >= 0 && idx[i] == n - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
        return g;  // generated in lexicographic order already
    }
    long long count = p == 1.0 ? slots : rng.binomial(slots, p);
    if (count > slots / 2)
        throw param_error("sample_random_tgraph: p too large for the sparse sampling path");
    std::set<TEdge> chosen;
    std::vector<int> scratch(t);
    while ((long long)chosen.size() < count) {
        // t distinct uniform vertices, sorted: uniform over t-sets
        for (int i = 0; i < t;) {
            scratch[i] = rng.below_int(n);
            bool dup = false;
            for (int j = 0; j < i; ++j) dup |= scratch[j] == scratch[i];
            if (!dup) ++i;
        }
        std::sort(scratch.begin(), scratch.end());
        chosen.insert(scratch);
    }
    g.edges.assign(chosen.begin(), chosen.end());
    return g;
}

namespace hdetail {

// Unordered pairs of edge indices sharing >= 2 vertices, found by bucketing
// edges on their vertex pairs.
inline std::vector<std::uint64_t> intersecting_pairs(const TGraph& g) {
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    buckets.reserve(g.edges.size() * g.t);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const TEdge& e = g.edges[i];
        for (int a = 0; a < g.t; ++a)
            for (int b = a + 1; b < g.t; ++b)
                buckets[edge_key(Edge{e[a], e[b]})].push_back(static_cast<int>(i));
    }
    std::vector<std::uint64_t> pairs;
    for (const auto& [key, members] : buckets) {
        (void)key;
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                pairs.push_back((static_cast<std::uint64_t>(members[a]) << 32) |
                                static_cast<std::uint32_t>(members[b]));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

}  // namespace hdetail

struct IntersectRemoval {
    TGraph g1;
    long long removed = 0;             // edges deleted
    long long intersecting_pairs = 0;  // Y: unordered pairs of G0 sharing >= 2 vertices
};

/**
 * First alteration stage: while two edges share more than one vertex,
 * delete the canonically later one (larger index in the lexicographic
 * edge order), scanning conflicting pairs in lexicographic order.
 */
inline IntersectRemoval remove_intersecting(const TGraph& g0) {
    IntersectRemoval out;
    auto pairs = hdetail::intersecting_pairs(g0);
    out.intersecting_pairs = static_cast<long long>(pairs.size());
    std::vector<char> alive(g0.edges.size(), 1);
    for (std::uint64_t pk : pairs) {
        int i = static_cast<int>(pk >> 32);
        int j = static_cast<int>(pk & 0xffffffffULL);
        if (alive[i] && alive[j]) {
            alive[j] = 0;
            ++out.removed;
        }
    }
    out.g1.n = g0.n;
    out.g1.t = g0.t;
    for (size_t i = 0; i < g0.edges.size(); ++i)
        if (alive[i]) out.g1.edges.push_back(g0.edges[i]);
    return out;
}

enum class FamilyKind { graph_cycles, berge_cycles };

/**
 * A 1/(k-1)-dense sequence of k-graphs: the member of size ell has at most
 * ell(k-1) vertices.  Shipped families: graph cycles C_ell (k = 2) and
 * Berge cycles B_ell (any k), both meeting the density bound with
 * equality.  member() returns nullopt for sizes with no realizable member
 * (ell = 2 needs parallel 2-sets, which a set of distinct k-sets cannot
 * express when k = 2).
 */
struct DenseSequence {
    int k = 2;
    FamilyKind kind = FamilyKind::graph_cycles;

    std::string name() const {
        return kind == FamilyKind::graph_cycles ? "cycles" : "berge-" + std::to_string(k);
    }

    std::optional<KGraph> member(int ell) const {
        if (ell < 2) return std::nullopt;
        KGraph f;
        f.k = k;
        if (kind == FamilyKind::graph_cycles) {
            if (k != 2) throw param_error("graph-cycle family requires k = 2");
            if (ell == 2) return std::nullopt;
            for (int i = 0; i < ell; ++i) {
                std::vector<int> e{i, (i + 1) % ell};
                std::sort(e.begin(), e.end());
                f.edges.push_back(std::move(e));
            }
            return f;
        }
        if (k == 2 && ell == 2) return std::nullopt;
        int extra = ell;  // next free vertex id for the k-2 per-edge extras
        for (int i = 0; i < ell; ++i) {
            std::vector<int> e{i, (i + 1) % ell};
            for (int j = 0; j < k - 2; ++j) e.push_back(extra++);
            std::sort(e.begin(), e.end());
            f.edges.push_back(std::move(e));
        }
        return f;
    }
};

// Every requirement at once: S_i is contained in a t-edge e_i containing no
// other S_j.  Representatives drawn from such candidate sets are
// automatically distinct, so independent nonemptiness suffices.
inline bool is_distinguishable(const std::vector<std::vector<int>>& copy, const TGraph& T) {
    auto contains = [](const TEdge& e, const std::vector<int>& s) {
        return std::includes(e.begin(), e.end(), s.begin(), s.end());
    };
    for (size_t i = 0; i < copy.size(); ++i) {
        bool found = false;
        for (const TEdge& e : T.edges) {
            if (!contains(e, copy[i])) continue;
            bool clean = true;
            for (size_t j = 0; j < copy.size() && clean; ++j)
                if (j != i && contains(e, copy[j])) clean = false;
            if (clean) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace hdetail {

// 2-shadow of an alive-edge subset with the covering t-edge as color.
// After stage 1 every vertex pair has at most one cover, so a rainbow
// cycle here is exactly a distinguishable (Berge-)cycle copy.
struct ShadowCycleFinder {
    int n;
    const std::vector<TEdge>& edges;
    std::vector<char> alive;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, covering edge index)

    ShadowCycleFinder(const TGraph& g)
        : n(g.n), edges(g.edges), alive(g.edges.size(), 1), adj(g.n) {
        for (size_t i = 0; i < edges.size(); ++i) add_edge(static_cast<int>(i));
        for (auto& row : adj) std::sort(row.begin(), row.end());
    }

    void add_edge(int i) {
        const TEdge& e = edges[i];
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b) {
                adj[e[a]].push_back({e[b], i});
                adj[e[b]].push_back({e[a], i});
            }
    }

    void remove_tedge(int i) {
        alive[i] = 0;
        const TEdge& e = edges[i];
        for (int v : e) {
            auto& row = adj[v];
            row.erase(std::remove_if(row.begin(), row.end(),
                                     [i](const std::pair<int, int>& p) { return p.second == i; }),
                      row.end());
        }
    }

    // Smallest-start-first DFS for a cycle of exactly `target` vertices with
    // pairwise distinct covering edges; returns the vertex sequence.
    bool dfs(int start, int prev, int depth, int target, std::vector<char>& on_path,
             std::vector<char>& used_color, std::vector<int>& path) {
        if (depth == target - 1) {
            for (auto [w, col] : adj[prev])
                if (w == start && !used_color[col] && path[1] < prev) return true;
            return false;
        }
        for (auto [w, col] : adj[prev]) {
            if (w <= start || on_path[w] || used_color[col]) continue;
            on_path[w] = 1;
            used_color[col] = 1;
            path.push_back(w);
            if (dfs(start, w, depth + 1, target, on_path, used_color, path)) return true;
            path.pop_back();
            used_color[col] = 0;
            on_path[w] = 0;
        }
        return false;
    }

    std::optional<std::vector<int>> find_rainbow_cycle(int ell_max) {
        std::vector<char> on_path(n, 0), used_color(edges.size(), 0);
        std::vector<int> path;
        for (int target = 3; target <= ell_max; ++target) {
            for (int s = 0; s < n; ++s) {
                if ((int)adj[s].size() < 2) continue;
                std::fill(on_path.begin(), on_path.end(), 0);
                std::fill(used_color.begin(), used_color.end(), 0);
                path.assign(1, s);
                on_path[s] = 1;
                for (auto [w, col] : adj[s]) {
                    if (w <= s) continue;
                    on_path[w] = 1;
                    used_color[col] = 1;
                    path.push_back(w);
                    if (dfs(s, w, 1, target, on_path, used_color, path)) return path;
                    path.pop_back();
                    used_color[col] = 0;
                    on_path[w] = 0;
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace hdetail

struct DistinguishableRemoval {
    TGraph g;
    long long removed = 0;
};

/**
 * Second alteration stage.  Requires pairwise intersections <= 1 (audited),
 * which forces a unique covering t-edge per vertex pair; a distinguishable
 * copy of a cycle or Berge-cycle member of size <= ell_max is then exactly
 * a rainbow cycle of that length in the colored 2-shadow.  While one
 * exists, the t-edge covering the copy's first pair is removed.
 */
inline DistinguishableRemoval remove_distinguishable(const TGraph& g1,
                                                     const std::vector<DenseSequence>& families,
                                                     int ell_max) {
    for (const auto& fam : families)
        if (fam.kind != FamilyKind::graph_cycles && fam.kind != FamilyKind::berge_cycles)
            throw param_error("unsupported dense-sequence family");
    if (!hdetail::intersecting_pairs(g1).empty())
        throw param_error("remove_distinguishable: input has edges sharing >= 2 vertices");
    DistinguishableRemoval out;
    out.g.n = g1.n;
    out.g.t = g1.t;
    if (families.empty() || ell_max < 3) {
        out.g = g1;
        return out;
    }
    hdetail::ShadowCycleFinder finder(g1);
    for (;;) {
        auto cyc = finder.find_rainbow_cycle(ell_max);
        if (!cyc) break;
        // S_1 is the copy's first pair; its unique cover is that edge's color.
        Edge first = make_edge((*cyc)[0], (*cyc)[1]);
        int cover = -1;
        for (auto [w, col] : finder.adj[first.u])
            if (w == first.v) {
                cover = col;
                break;
            }
        finder.remove_tedge(cover);
        ++out.removed;
    }
    for (size_t i = 0; i < g1.edges.size(); ++i)
        if (finder.alive[i]) out.g.edges.push_back(g1.edges[i]);
    return out;
}

/**
 * Pipeline parameters.  p = 4 * 2^t * t! * L / n^(t-1); the family-count
 * exponent delta and the copy-size constant c obey
 * c * log(4 * 2^t * t! * L) <= delta / 9.  ell_max defaults to
 * ceil(c * log(n)) in the configured base (natural by default).
 */
struct LBParams {
    int n = 0;
    int uniformity_t = 2;  // uniformity of the sampled hypergraph (TGraph edge size)
    int k = 2;  // shadow uniformity
    double L = 1.0;
    double delta_exp = 1.0;  // family-count exponent: up to n^(1-delta) sequences
    double c = 0.0;
    double log_base = 2.718281828459045;
    std::uint64_t seed = 0;

    double p() const {
        double tf = 1.0;
        for (int i = 2; i <= uniformity_t; ++i) tf *= i;
        return 4.0 * std::pow(2.0, uniformity_t) * tf * L /
               std::pow(static_cast<double>(n), uniformity_t - 1);
    }

    int default_ell_max() const {
        double lg = std::log(static_cast<double>(n)) / std::log(log_base);
        return static_cast<int>(std::ceil(c * lg));
    }

    void validate() const {
        if (n < 2) throw param_error("lb: n must be >= 2");
        if (k < 2) throw param_error("lb: k must be >= 2");
        if (uniformity_t < k) throw param_error("lb: need t >= k");
        if (L < 0) throw param_error("lb: L must be >= 0");
        if (delta_exp <= 0 || delta_exp > 1) throw param_error("lb: delta must lie in (0,1]");
        if (c < 0) throw param_error("lb: c must be >= 0");
        if (log_base <= 1) throw param_error("lb: log base must exceed 1");
        double pv = p();
        if (!(pv > 0.0) || pv > 1.0)
            throw param_error("lb: p = " + std::to_string(pv) + " outside (0,1]");
        double tf = 1.0;
        for (int i = 2; i <= uniformity_t; ++i) tf *= i;
        double arg = 4.0 * std::pow(2.0, uniformity_t) * tf * L;
        double lg = std::log(arg);
        if (lg > 0 && c * lg > delta_exp / 9.0 + 1e-12)
            throw param_error("lb: constraint c*log(4*2^t*t!*L) <= delta/9 violated");
    }
};

struct LBEvents {
    bool a = false;  // |G0| >= 3Ln
    bool b = false;  // Y <= Ln
    bool c = false;  // removed2 <= Ln
    bool all() const { return a && b && c; }
};

struct LBInstance {
    LBParams params;
    int ell_max = 0;
    TGraph g0, g1, g;
    long long y_pairs = 0;
    long long removed1 = 0;
    long long removed2 = 0;
    LBEvents events;

    long long class_count() const { return static_cast<long long>(g.edges.size()); }

    KGraph shadow() const { return shadow_k(g, params.k); }

    // The k-subsets of t-edge i form class i; a copy of K_t^(k).
    KGraph class_members(int i) const {
        TGraph one{params.n, params.uniformity_t, {g.edges[i]}};
        return shadow_k(one, params.k);
    }

    // k = 2 only: the shadow as an edge-colored graph (class ids = edge indices).
    ColoredGraph shadow_colored() const {
        if (params.k != 2) throw param_error("shadow_colored requires k = 2");
        std::vector<ColorClass> classes;
        for (size_t i = 0; i < g.edges.size(); ++i) {
            ColorClass c{static_cast<int>(i), {}};
            const TEdge& e = g.edges[i];
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b) c.edges.push_back(make_edge(e[a], e[b]));
            classes.push_back(std::move(c));
        }
        return ColoredGraph::create(params.n, std::move(classes));
    }
};

/**
 * Full pipeline: sample G0, prune intersecting pairs, prune distinguishable
 * copies up to ell_max, then color the k-shadow by covering t-edge.
 * Event failures are data (the caller may resample), never errors.
 */
inline LBInstance build_lb_instance(const LBParams& params, const std::vector<DenseSequence>& families,
                                    std::optional<int> ell_max_override = std::nullopt) {
    params.validate();
    LBInstance inst;
    inst.params = params;
    inst.ell_max = ell_max_override.value_or(params.default_ell_max());
    inst.g0 = sample_random_tgraph(params.n, params.uniformity_t, params.p(), params.seed);
    double ln_target = params.L * static_cast<double>(params.n);
    inst.events.a = static_cast<double>(inst.g0.edges.size()) >= 3.0 * ln_target;
    IntersectRemoval st1 = remove_intersecting(inst.g0);
    inst.g1 = std::move(st1.g1);
    inst.removed1 = st1.removed;
    inst.y_pairs = st1.intersecting_pairs;
    inst.events.b = static_cast<double>(inst.y_pairs) <= ln_target;
    DistinguishableRemoval st2 = remove_distinguishable(inst.g1, families, inst.ell_max);
    inst.g = std::move(st2.g);
    inst.removed2 = st2.removed;
    inst.events.c = static_cast<double>(inst.removed2) <= ln_target;
    return inst;
}

namespace hdetail {

// Strict Berge-cycle copy search on the k-shadow: ell core vertices, ell
// k-sets with pairwise distinct covering t-edges, and all k-2 per-edge
// extras distinct from every core and from each other.  Independent of the
// removal loop's finder.
struct BergeSearcher {
    const LBInstance& inst;
    std::unordered_map<std::uint64_t, std::vector<int>> covers;  // pair -> t-edge indices

    explicit BergeSearcher(const LBInstance& instance) : inst(instance) {
        for (size_t i = 0; i < inst.g.edges.size(); ++i) {
            const TEdge& e = inst.g.edges[i];
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b)
                    covers[edge_key(make_edge(e[a], e[b]))].push_back(static_cast<int>(i));
        }
    }

    bool pick_extras(const TEdge& cover, int needed, std::vector<char>& used_vertex,
                     std::vector<int>& chosen, size_t from,
                     const std::function<bool()>& continuation) {
        if (needed == 0) return continuation();
        for (size_t i = from; i < cover.size(); ++i) {
            int v = cover[i];
            if (used_vertex[v]) continue;
            used_vertex[v] = 1;
            chosen.push_back(v);
            if (pick_extras(cover, needed - 1, used_vertex, chosen, i + 1, continuation)) return true;
            chosen.pop_back();
            used_vertex[v] = 0;
        }
        return false;
    }

    bool place(int ell, int depth, std::vector<int>& core, std::vector<char>& used_vertex,
               std::vector<char>& used_color) {
        int k = inst.params.k;
        if (depth == ell) {
            // close: a k-set covering {core[ell-1], core[0]} with a fresh color
            auto it = covers.find(edge_key(make_edge(core.back(), core.front())));
            if (it == covers.end()) return false;
            for (int col : it->second) {
                if (used_color[col]) continue;
                used_color[col] = 1;
                std::vector<int> extras;
                bool ok = pick_extras(inst.g.edges[col], k - 2, used_vertex, extras, 0,
                                      []() { return true; });
                used_color[col] = 0;
                if (ok) return true;
            }
            return false;
        }
        // choose next core vertex reachable from core[depth-1] via a fresh color
        int prev = core[depth - 1];
        for (int w = 0; w < inst.params.n; ++w) {
            if (used_vertex[w]) continue;
            auto it = covers.find(edge_key(make_edge(prev, w)));
            if (it == covers.end()) continue;
            for (int col : it->second) {
                if (used_color[col]) continue;
                used_color[col] = 1;
                used_vertex[w] = 1;
                core.push_back(w);
                std::vector<int> extras;
                bool done = pick_extras(inst.g.edges[col], k - 2, used_vertex, extras, 0, [&]() {
                    return place(ell, depth + 1, core, used_vertex, used_color);
                });
                core.pop_back();
                used_vertex[w] = 0;
                used_color[col] = 0;
                if (done) return true;
            }
        }
        return false;
    }

    std::optional<int> min_copy_size(int cap) {
        int n = inst.params.n;
        for (int ell = 2; ell <= cap; ++ell) {
            if (inst.params.k == 2 && ell == 2) continue;  // no realizable member
            std::vector<char> used_vertex(n, 0), used_color(inst.g.edges.size(), 0);
            std::vector<int> core;
            for (int s = 0; s < n; ++s) {
                core.assign(1, s);
                used_vertex[s] = 1;
                if (place(ell, 1, core, used_vertex, used_color)) return ell;
                used_vertex[s] = 0;
            }
        }
        return std::nullopt;
    }
};

}  // namespace hdetail

/**
 * Smallest family-member size admitting a rainbow copy in the shadow, up to
 * the cap.  For graph cycles (k = 2) this runs the exact rainbow-girth
 * solver on the colored shadow; Berge families use the strict-copy
 * searcher.  Both are independent of the removal loop.
 */
inline std::optional<long long> min_rainbow_family_size(const LBInstance& inst,
                                                        const std::vector<DenseSequence>& families,
                                                        int search_cap) {
    std::optional<long long> best;
    for (const auto& fam : families) {
        if (fam.kind == FamilyKind::graph_cycles) {
            if (inst.params.k != 2) throw param_error("graph-cycle family requires k = 2");
            if (inst.g.edges.empty()) continue;
            auto out = rainbow_girth_exact(inst.shadow_colored(), std::max(3, search_cap));
            if (out.status == RainbowGirthOutcome::Status::found && out.length <= search_cap)
                if (!best || out.length < *best) best = out.length;
        } else {
            hdetail::BergeSearcher searcher(inst);
            auto got = searcher.min_copy_size(search_cap);
            if (got && (!best || *got < *best)) best = *got;
        }
    }
    return best;
}

// Hypergraph text format: first line "n t", then one t-edge per line.
inline std::string tgraph_to_text(const TGraph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.t) + "\n";
    for (const TEdge& e : g.edges) {
        for (size_t i = 0; i < e.size(); ++i) {
            out += std::to_string(e[i]);
            out += i + 1 < e.size() ? ' ' : '\n';
        }
    }
    return out;
}

inline TGraph tgraph_from_text(std::istream& in, const std::string& origin = "<stream>") {
    TGraph g;
    if (!(in >> g.n >> g.t)) throw io_error(origin + ": missing 'n t' header");
    if (g.n < 1 || g.t < 1) throw io_error(origin + ": bad header");
    TEdge e(g.t);
    while (in >> e[0]) {
        for (int i = 1; i < g.t; ++i)
            if (!(in >> e[i])) throw io_error(origin + ": truncated t-edge line");
        TEdge sorted = e;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < g.t; ++i) {
            if (sorted[i] < 0 || sorted[i] >= g.n) throw io_error(origin + ": vertex out of range");
            if (i > 0 && sorted[i] == sorted[i - 1]) throw io_error(origin + ": repeated vertex in edge");
        }
        g.edges.push_back(std::move(sorted));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace rainbow

#endif
