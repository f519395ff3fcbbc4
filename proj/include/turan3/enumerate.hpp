#ifndef TURAN3_ENUMERATE_HPP
#define TURAN3_ENUMERATE_HPP

#include "canonical.hpp"
#include "containment.hpp"
#include "hypergraph.hpp"
#include "patterns.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace turan3 {

struct EnumerationReport {
    int n = 0;
    std::vector<std::string> forbidden;
    std::uint64_t total = 0;
    std::map<int, std::uint64_t> by_edges;
    int max_edges = 0;
    /// Sorted canonical codes of the classes with max_edges edges.
    std::vector<CanonicalCode> extremal;

    void record(int edges, const CanonicalCode& code) {
        ++total;
        ++by_edges[edges];
        if (extremal.empty() || edges > max_edges) {
            max_edges = edges;
            extremal.assign(1, code);
        } else if (edges == max_edges) {
            extremal.push_back(code);
        }
    }

    /// Commutative merge of two partial reports over the same (n, forbidden).
    void merge(const EnumerationReport& other) {
        total += other.total;
        for (const auto& [e, c] : other.by_edges) by_edges[e] += c;
        if (other.extremal.empty()) return;
        if (extremal.empty() || other.max_edges > max_edges) {
            max_edges = other.max_edges;
            extremal = other.extremal;
        } else if (other.max_edges == max_edges) {
            extremal.insert(extremal.end(), other.extremal.begin(), other.extremal.end());
        }
        normalize();
    }

    void normalize() {
        std::sort(extremal.begin(), extremal.end());
        extremal.erase(std::unique(extremal.begin(), extremal.end()), extremal.end());
    }
};

struct EnumerationOptions {
    unsigned jobs = 1;
    /// Subtrees rooted at this many edges form the parallel work units.
    int split_depth = 3;
};

/// Called once per isomorphism class; with jobs > 1 calls may be concurrent.
using Visitor = std::function<void(const Hypergraph3&)>;

namespace detail {

/// Canonical augmentation by edges. A child G+e of G is generated once per
/// Aut(G)-orbit of addable non-edges, and kept only when e lies in the
/// Aut(G+e)-orbit of the canonical deletion edge of G+e: among the edges of
/// maximal (degree sum, co-degree sum), the one with the largest canonical rank.
class Augmenter {
public:
    Augmenter(int n, const std::vector<Pattern>& forbidden) : n_(n) {
        if (n < 0 || n > max_vertices) throw std::invalid_argument("enumeration needs 0 <= n <= 16");
        for (const auto& p : forbidden) embedders_.emplace_back(p.graph);
    }

    struct Node {
        Adjacency adj;
        TripleSet edges;
        TripleSet addable;
        int edge_count = 0;
        Labelling labelling;
    };

    int n() const { return n_; }

    Node root() const {
        Node r;
        r.adj.n = n_;
        for (int i = 0; i < choose3(n_); ++i) {
            Adjacency probe = r.adj;
            const Triple t = triple_at(i);
            probe.add(t);
            if (free_through(probe, t)) r.addable.set(i);
        }
        r.labelling = canonical_labelling(r.adj);
        return r;
    }

    /// Calls fn(child) for every accepted child of `node`.
    template <typename Fn>
    void children(const Node& node, Fn&& fn) const {
        std::vector<std::uint16_t> orbit;
        if (!node.labelling.generators.empty()) orbit = triple_orbits(node.labelling.generators, n_);
        node.addable.for_each([&](int e) {
            if (!orbit.empty() && orbit[e] != e) return;
            Node child;
            if (!accept(node, e, child)) return;
            node.addable.for_each([&](int f) {
                if (f == e) return;
                const Triple t = triple_at(f);
                Adjacency probe = child.adj;
                probe.add(t);
                if (free_through(probe, t)) child.addable.set(f);
            });
            fn(std::move(child));
        });
    }

    bool free_through(const Adjacency& adj, const Triple& t) const {
        for (const auto& emb : embedders_)
            if (emb.contains_through(adj, t)) return false;
        return true;
    }

private:
    static int edge_invariant(const Adjacency& adj, const Triple& t) {
        const int deg = adj.deg[t.a] + adj.deg[t.b] + adj.deg[t.c];
        const int co = adj.codegree(t.a, t.b) + adj.codegree(t.a, t.c) + adj.codegree(t.b, t.c);
        return deg * 64 + co;
    }

    bool accept(const Node& parent, int e, Node& child) const {
        const Triple te = triple_at(e);
        child.adj = parent.adj;
        child.adj.add(te);
        child.edges = parent.edges;
        child.edges.set(e);
        child.edge_count = parent.edge_count + 1;

        const int inv_e = edge_invariant(child.adj, te);
        int ties = 0;
        bool beaten = false;
        child.edges.for_each([&](int f) {
            if (beaten) return;
            const int inv = edge_invariant(child.adj, triple_at(f));
            if (inv > inv_e) {
                beaten = true;
            } else if (inv == inv_e) {
                ++ties;
            }
        });
        if (beaten) return false;

        child.labelling = canonical_labelling(child.adj);
        if (ties == 1) return true;

        const Permutation& lab = child.labelling.labelling;
        int deletion = -1, deletion_rank = -1;
        child.edges.for_each([&](int f) {
            const Triple t = triple_at(f);
            if (edge_invariant(child.adj, t) != inv_e) return;
            const int rank = triple_index(lab[t.a], lab[t.b], lab[t.c]);
            if (rank > deletion_rank) {
                deletion_rank = rank;
                deletion = f;
            }
        });
        if (deletion == e) return true;
        return same_orbit(child.labelling.generators, e, deletion);
    }

    bool same_orbit(const std::vector<Permutation>& gens, int from, int to) const {
        if (gens.empty()) return false;
        std::vector<int> stack{from};
        TripleSet seen;
        seen.set(from);
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                const int y = apply_to_triple(g, x);
                if (y == to) return true;
                if (!seen.test(y)) {
                    seen.set(y);
                    stack.push_back(y);
                }
            }
        }
        return false;
    }

    int n_;
    std::vector<Embedder> embedders_;
};

template <typename Fn>
void run_parallel(std::size_t count, unsigned jobs, Fn&& work) {
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned id) {
        for (std::size_t i = next++; i < count; i = next++) work(id, i);
    };
    if (jobs == 1) {
        worker(0);
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
}

} // namespace detail

/// Visits one representative of every isomorphism class of F-free 3-graphs
/// on n vertices and aggregates the counts. The report does not depend on
/// the worker count.
inline EnumerationReport enumerate_free(int n, const std::vector<Pattern>& forbidden, const Visitor& visit = {},
                                        const EnumerationOptions& options = {}) {
    if (n > 10) throw std::invalid_argument("enumeration is supported for n <= 10");
    const detail::Augmenter aug(n, forbidden);
    using Node = detail::Augmenter::Node;

    EnumerationReport report;
    report.n = n;
    report.forbidden = pattern_names(forbidden);

    auto emit = [&](const Node& node, EnumerationReport& into) {
        into.record(node.edge_count, node.labelling.code);
        if (visit) visit(Hypergraph3(n, node.edges));
    };

    std::vector<Node> frontier;
    {
        std::vector<Node> level{aug.root()};
        for (int depth = 0; !level.empty(); ++depth) {
            if (depth == options.split_depth) {
                frontier = std::move(level);
                break;
            }
            std::vector<Node> next;
            for (const auto& node : level) {
                emit(node, report);
                aug.children(node, [&](Node&& child) { next.push_back(std::move(child)); });
            }
            level = std::move(next);
        }
    }

    std::vector<EnumerationReport> partial(std::max(1U, options.jobs));
    detail::run_parallel(frontier.size(), options.jobs, [&](unsigned id, std::size_t i) {
        auto dfs = [&](auto&& self, const Node& node) -> void {
            emit(node, partial[id]);
            aug.children(node, [&](Node&& child) { self(self, child); });
        };
        dfs(dfs, frontier[i]);
    });
    for (const auto& p : partial) report.merge(p);
    report.normalize();
    return report;
}

struct ExtremalResult {
    int max_edges = 0;
    std::vector<CanonicalCode> classes;
};

/// Maximum edge count of an F-free 3-graph on n vertices, with every class
/// attaining it. A subtree is cut when its edges plus its addable non-edges
/// fall short of the best count found so far.
inline ExtremalResult extremal(int n, const std::vector<Pattern>& forbidden, const EnumerationOptions& options = {}) {
    if (n > 10) throw std::invalid_argument("extremal search is supported for n <= 10");
    const detail::Augmenter aug(n, forbidden);
    using Node = detail::Augmenter::Node;

    std::atomic<int> best{0};
    std::mutex merge_lock;
    ExtremalResult result;

    auto collect = [&](ExtremalResult& local, const Node& node) {
        if (node.edge_count > best.load()) {
            int cur = best.load();
            while (cur < node.edge_count && !best.compare_exchange_weak(cur, node.edge_count)) {
            }
        }
        if (node.edge_count > local.max_edges) {
            local.max_edges = node.edge_count;
            local.classes.clear();
        }
        if (node.edge_count == local.max_edges) local.classes.push_back(node.labelling.code);
    };
    auto bound = [](const Node& node) { return node.edge_count + node.addable.count(); };

    std::vector<Node> frontier;
    ExtremalResult shallow;
    {
        std::vector<Node> level{aug.root()};
        for (int depth = 0; !level.empty(); ++depth) {
            if (depth == options.split_depth) {
                frontier = std::move(level);
                break;
            }
            std::vector<Node> next;
            for (const auto& node : level) {
                collect(shallow, node);
                aug.children(node, [&](Node&& child) { next.push_back(std::move(child)); });
            }
            level = std::move(next);
        }
    }

    std::vector<ExtremalResult> partial(std::max(1U, options.jobs));
    detail::run_parallel(frontier.size(), options.jobs, [&](unsigned id, std::size_t i) {
        auto dfs = [&](auto&& self, const Node& node) -> void {
            if (bound(node) < best.load()) return;
            collect(partial[id], node);
            aug.children(node, [&](Node&& child) { self(self, child); });
        };
        dfs(dfs, frontier[i]);
    });
    partial.push_back(std::move(shallow));
    const std::lock_guard guard(merge_lock);
    for (auto& p : partial) {
        if (p.classes.empty()) continue;
        if (p.max_edges > result.max_edges || result.classes.empty()) {
            result.max_edges = p.max_edges;
            result.classes.clear();
        }
        if (p.max_edges == result.max_edges) {
            result.classes.insert(result.classes.end(), p.classes.begin(), p.classes.end());
        }
    }
    std::sort(result.classes.begin(), result.classes.end());
    result.classes.erase(std::unique(result.classes.begin(), result.classes.end()), result.classes.end());
    return result;
}

/// Number of labelled F-free 3-graphs on [0, n), by filtering all 2^C(n,3) graphs.
inline std::uint64_t count_labeled_free(int n, const std::vector<Pattern>& forbidden) {
    if (n < 0 || n > 6) throw std::invalid_argument("labelled brute force is limited to n <= 6");
    std::vector<Embedder> embedders;
    for (const auto& p : forbidden) embedders.emplace_back(p.graph);
    const int triples = choose3(n);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << triples); ++mask) {
        TripleSet s;
        s.set_word(0, mask);
        const Adjacency adj(Hypergraph3(n, s));
        bool free = true;
        for (const auto& emb : embedders) {
            if (emb.contains(adj)) {
                free = false;
                break;
            }
        }
        count += free;
    }
    return count;
}

} // namespace turan3

#endif // TURAN3_ENUMERATE_HPP
