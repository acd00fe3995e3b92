#ifndef RAINBOW_CORE_HPP
#define RAINBOW_CORE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) {
    if (a == b) throw param_error("loop edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return a < b ? Edge{a, b} : Edge{b, a};
}

inline std::uint64_t edge_key(const Edge& e) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(e.u)) << 32) |
           static_cast<std::uint32_t>(e.v);
}

struct ColorClass {
    int id = 0;
    std::vector<Edge> edges;  // sorted lexicographically; the class-local canonical order
};

// Structural facts about one color class.
struct ColorClassProfile {
    long long size = 0;
    bool has_matching2 = false;  // two vertex-disjoint edges
    bool has_star2 = false;      // two edges sharing a vertex
    bool has_triangle = false;   // three edges forming a triangle
};

inline long long excess(long long vertex_count, long long edge_count) {
    if (vertex_count < 0 || edge_count < 0) throw param_error("negative count in excess()");
    return edge_count - vertex_count;
}

// Exhaustive pair/triple scan.  Classes are tiny at the scales this project
// targets, so the O(s^2) cost is irrelevant.
inline ColorClassProfile classify_class(const std::vector<Edge>& edges) {
    if (edges.empty()) throw param_error("classify_class: empty color class");
    ColorClassProfile p;
    p.size = static_cast<long long>(edges.size());
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const Edge& e : edges) present.insert(edge_key(e));
    for (size_t i = 0; i < edges.size() && !(p.has_matching2 && p.has_star2 && p.has_triangle); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& a = edges[i];
            const Edge& b = edges[j];
            int shared = -1;
            if (a.u == b.u || a.u == b.v) shared = a.u;
            else if (a.v == b.u || a.v == b.v) shared = a.v;
            if (shared < 0) {
                p.has_matching2 = true;
                continue;
            }
            p.has_star2 = true;
            if (!p.has_triangle) {
                int x = a.u == shared ? a.v : a.u;
                int y = b.u == shared ? b.v : b.u;
                if (x != y && present.count(edge_key(make_edge(x, y)))) p.has_triangle = true;
            }
        }
    }
    return p;
}

/**
 * An n-vertex graph whose edge set is partitioned into color classes.
 * Vertices are 0..n-1.  Each vertex pair carries at most one color
 * globally (simple-graph model); loaders and constructors reject
 * duplicates.  Immutable after construction.
 */
class ColoredGraph {
public:
    static ColoredGraph create(int n, std::vector<ColorClass> classes) {
        if (n < 0) throw param_error("negative vertex count");
        std::sort(classes.begin(), classes.end(),
                  [](const ColorClass& a, const ColorClass& b) { return a.id < b.id; });
        ColoredGraph g;
        g.n_ = n;
        std::unordered_map<std::uint64_t, int> owner;
        long long edge_total = 0;
        for (size_t idx = 0; idx < classes.size(); ++idx) {
            ColorClass& c = classes[idx];
            if (c.id < 0) throw param_error("negative class id");
            if (idx > 0 && classes[idx - 1].id == c.id)
                throw param_error("duplicate class id " + std::to_string(c.id));
            if (c.edges.empty())
                throw param_error("class " + std::to_string(c.id) + " is empty");
            for (Edge& e : c.edges) {
                e = make_edge(e.u, e.v);
                if (e.u < 0 || e.v >= n)
                    throw param_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                      ") out of range for n=" + std::to_string(n));
            }
            std::sort(c.edges.begin(), c.edges.end());
            for (const Edge& e : c.edges) {
                auto [it, fresh] = owner.emplace(edge_key(e), static_cast<int>(idx));
                if (!fresh)
                    throw param_error("vertex pair (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ") appears in classes " +
                                      std::to_string(classes[it->second].id) + " and " +
                                      std::to_string(c.id));
            }
            edge_total += static_cast<long long>(c.edges.size());
        }
        if (edge_total > static_cast<long long>(n) * (n - 1) / 2)
            throw param_error("edge count exceeds simple-graph capacity");
        g.classes_ = std::move(classes);
        g.edge_owner_ = std::move(owner);
        g.edge_count_ = edge_total;
        return g;
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }
    const std::vector<ColorClass>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }

    const ColorClass* class_by_id(int id) const {
        auto it = std::lower_bound(classes_.begin(), classes_.end(), id,
                                   [](const ColorClass& c, int key) { return c.id < key; });
        if (it == classes_.end() || it->id != id) return nullptr;
        return &*it;
    }

    // Class id owning this vertex pair, if the pair is an edge of the graph.
    std::optional<int> class_id_of(Edge e) const {
        e = make_edge(e.u, e.v);
        auto it = edge_owner_.find(edge_key(e));
        if (it == edge_owner_.end()) return std::nullopt;
        return classes_[it->second].id;
    }

    bool has_edge(Edge e) const { return class_id_of(e).has_value(); }

private:
    int n_ = 0;
    long long edge_count_ = 0;
    std::vector<ColorClass> classes_;
    std::unordered_map<std::uint64_t, int> edge_owner_;
};

inline std::vector<ColorClassProfile> profiles(const ColoredGraph& g) {
    std::vector<ColorClassProfile> out;
    out.reserve(g.classes().size());
    for (const auto& c : g.classes()) out.push_back(classify_class(c.edges));
    return out;
}

struct ClassCensus {
    long long matching2 = 0;       // classes containing a 2-matching
    long long star2_only = 0;      // star-of-2 present, no 2-matching
    long long triangle = 0;        // classes containing a triangle
    long long matching_or_triangle = 0;
    long long rest = 0;            // neither 2-matching nor star-of-2 (size-1 classes)
    long long min_class_size = 0;
};

inline ClassCensus census(const ColoredGraph& g) {
    ClassCensus c;
    c.min_class_size = g.class_count() == 0 ? 0 : (1LL << 62);
    for (const auto& cls : g.classes()) {
        ColorClassProfile p = classify_class(cls.edges);
        if (p.has_matching2) ++c.matching2;
        else if (p.has_star2) ++c.star2_only;
        else ++c.rest;
        if (p.has_triangle) ++c.triangle;
        if (p.has_matching2 || p.has_triangle) ++c.matching_or_triangle;
        c.min_class_size = std::min(c.min_class_size, p.size);
    }
    return c;
}

// The three disjoint families of the random-sampling argument: classes with a
// 2-matching, classes with a star of size two, and the remainder.
struct ClassPartition {
    std::vector<int> f_matching;
    std::vector<int> f_star;
    std::vector<int> f_rest;
};

namespace detail {
inline long long needed(const Rat& share, const Rat& xi, long long n) {
    Rat req = (share - xi) * Rat(n);
    if (req <= Rat(0)) return 0;
    return ceil_to_int(req);
}
}  // namespace detail

/**
 * Greedy witness for the three cardinality conditions
 *   |F_M| >= (alpha-xi) n,  |F_S| >= (beta-xi) n,  |F_rest| >= (1-alpha-beta-xi) n.
 * Quotas are filled lowest class id first; F_M draws from classes with a
 * 2-matching, F_S from remaining classes with a star of size two, everything
 * else lands in F_rest.  Throws infeasible_error naming the first failing
 * condition.
 */
inline ClassPartition partition_classes(const ColoredGraph& g, const Rat& alpha, const Rat& beta,
                                        const Rat& xi) {
    if (alpha < Rat(0) || beta < Rat(0)) throw param_error("alpha, beta must be nonnegative");
    long long n = g.vertex_count();
    long long need_m = detail::needed(alpha, xi, n);
    long long need_s = detail::needed(beta, xi, n);
    long long need_rest = detail::needed(Rat(1) - alpha - beta, xi, n);

    auto prof = profiles(g);
    ClassPartition part;
    std::vector<char> taken(prof.size(), 0);
    const auto& classes = g.classes();

    for (size_t i = 0; i < classes.size() && (long long)part.f_matching.size() < need_m; ++i) {
        if (prof[i].has_matching2) {
            part.f_matching.push_back(classes[i].id);
            taken[i] = 1;
        }
    }
    if ((long long)part.f_matching.size() < need_m)
        throw infeasible_error("matching_classes",
                               "need " + std::to_string(need_m) + " classes with a 2-matching, found " +
                                   std::to_string(part.f_matching.size()));

    for (size_t i = 0; i < classes.size() && (long long)part.f_star.size() < need_s; ++i) {
        if (!taken[i] && prof[i].has_star2) {
            part.f_star.push_back(classes[i].id);
            taken[i] = 1;
        }
    }
    if ((long long)part.f_star.size() < need_s)
        throw infeasible_error("star_classes",
                               "need " + std::to_string(need_s) + " classes with a star of size two, found " +
                                   std::to_string(part.f_star.size()));

    for (size_t i = 0; i < classes.size(); ++i)
        if (!taken[i]) part.f_rest.push_back(classes[i].id);
    if ((long long)part.f_rest.size() < need_rest)
        throw infeasible_error("rest_classes",
                               "need " + std::to_string(need_rest) + " remaining classes, found " +
                                   std::to_string(part.f_rest.size()));
    return part;
}

// Schedule-aware overload: xi = gamma^2/4000 (the derived schedule's slack)
// when gamma = 2*alpha + beta - 1 is positive, and zero at or below the
// threshold, where only exact-census audits such as the tightness example
// make sense.
inline ClassPartition partition_classes(const ColoredGraph& g, const Rat& alpha, const Rat& beta) {
    Rat gamma = Rat(2) * alpha + beta - Rat(1);
    Rat xi = gamma > Rat(0) ? gamma * gamma / Rat(4000) : Rat(0);
    return partition_classes(g, alpha, beta, xi);
}

/**
 * Closed rainbow walk: vertices[i] -- vertices[i+1] (cyclically) is
 * edges[i], and edges[i] belongs to the class colors[i].  Checkable in
 * linear time against any ColoredGraph.
 */
struct RainbowCycleCertificate {
    std::vector<int> vertices;
    std::vector<Edge> edges;
    std::vector<int> colors;

    size_t length() const { return vertices.size(); }
};

inline bool verify_certificate(const ColoredGraph& g, const RainbowCycleCertificate& cert) {
    size_t len = cert.vertices.size();
    if (len < 3) return false;
    if (cert.edges.size() != len || cert.colors.size() != len) return false;
    std::unordered_set<int> seen_vertices;
    for (int v : cert.vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen_vertices.insert(v).second) return false;
    }
    std::unordered_set<int> seen_colors;
    for (int c : cert.colors)
        if (!seen_colors.insert(c).second) return false;
    for (size_t i = 0; i < len; ++i) {
        Edge expect = make_edge(cert.vertices[i], cert.vertices[(i + 1) % len]);
        Edge listed = make_edge(cert.edges[i].u, cert.edges[i].v);
        if (expect != listed) return false;
        auto cls = g.class_id_of(listed);
        if (!cls || *cls != cert.colors[i]) return false;
    }
    return true;
}

// Builds the certificate for a cycle given as a vertex sequence; colors are
// looked up from the graph.  Throws if an edge is missing.
inline RainbowCycleCertificate certificate_from_cycle(const ColoredGraph& g,
                                                      const std::vector<int>& cycle) {
    RainbowCycleCertificate cert;
    cert.vertices = cycle;
    size_t len = cycle.size();
    for (size_t i = 0; i < len; ++i) {
        Edge e = make_edge(cycle[i], cycle[(i + 1) % len]);
        auto cls = g.class_id_of(e);
        if (!cls)
            throw param_error("cycle edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") not present in graph");
        cert.edges.push_back(e);
        cert.colors.push_back(*cls);
    }
    return cert;
}

}  // namespace rainbow

#endif
