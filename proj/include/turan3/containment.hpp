#ifndef TURAN3_CONTAINMENT_HPP
#define TURAN3_CONTAINMENT_HPP

#include "hypergraph.hpp"

#include <array>
#include <bit>
#include <optional>
#include <utility>
#include <vector>

namespace turan3 {

/// Non-induced subgraph search for a fixed pattern H. Pattern vertices are
/// placed in a precomputed order; a vertex's candidates are the host vertices
/// closing every pattern edge whose other two ends are already placed, filtered
/// by degree and pairwise co-degree.
class Embedder {
public:
    explicit Embedder(const Hypergraph3& pattern) : pattern_(pattern), adj_(pattern), k_(pattern.vertex_count()) {
        edge_count_ = pattern.edge_count();
        if (k_ > 0) {
            int start = 0;
            for (int v = 1; v < k_; ++v)
                if (adj_.deg[v] > adj_.deg[start]) start = v;
            free_plan_ = build_plan({start});
        }
        for (const auto& t : pattern.edges()) rooted_plans_.push_back(build_plan({t.a, t.b, t.c}));
    }

    const Hypergraph3& pattern() const { return pattern_; }

    /// witness[v] is the host vertex of pattern vertex v.
    std::optional<std::vector<int>> find(const Adjacency& host) const {
        if (!fits(host)) return std::nullopt;
        State s;
        if (k_ == 0 || extend(host, free_plan_, 0, s)) return witness(s);
        return std::nullopt;
    }

    bool contains(const Adjacency& host) const { return find(host).has_value(); }

    /// True iff some copy of H in the host uses the host edge e. e must be an edge.
    bool contains_through(const Adjacency& host, const Triple& e) const {
        if (!fits(host)) return false;
        static constexpr std::array<std::array<int, 3>, 6> orders{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        const std::array<int, 3> ev{e.a, e.b, e.c};
        for (const auto& plan : rooted_plans_) {
            for (const auto& o : orders) {
                State s;
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i) {
                    ok = admissible(host, plan, i, ev[o[i]], s);
                    if (ok) place(i, ev[o[i]], s);
                }
                if (ok && extend(host, plan, 3, s)) return true;
            }
        }
        return false;
    }

private:
    struct Step {
        int vertex = 0;
        int degree = 0;
        // earlier positions (i, j) with {order[i], order[j], vertex} a pattern edge
        std::vector<std::pair<int, int>> closing;
        // earlier position sharing some pattern edge with vertex, or -1
        int anchor = -1;
        // earlier positions i with codegree(order[i], vertex) > 0, and that codegree
        std::vector<std::pair<int, int>> codegree;
    };
    using Plan = std::vector<Step>;

    struct State {
        std::array<int, max_vertices> image{};
        VertexMask used = 0;
    };

    bool fits(const Adjacency& host) const {
        if (k_ > host.n) return false;
        int host_edges = 0;
        for (int v = 0; v < host.n; ++v) host_edges += host.deg[v];
        return edge_count_ * 3 <= host_edges;
    }

    Plan build_plan(std::vector<int> prefix) const {
        std::vector<int> order = std::move(prefix);
        std::array<bool, max_vertices> placed{};
        for (int v : order) placed[v] = true;
        while (static_cast<int>(order.size()) < k_) {
            int best = -1;
            std::array<int, 3> best_key{-1, -1, -1};
            for (int v = 0; v < k_; ++v) {
                if (placed[v]) continue;
                int closing = 0, touching = 0;
                for (std::size_t i = 0; i < order.size(); ++i) {
                    const int c = std::popcount(adj_.pair[v][order[i]]);
                    touching += c > 0;
                    for (std::size_t j = i + 1; j < order.size(); ++j)
                        closing += (adj_.pair[v][order[i]] >> order[j]) & 1U;
                }
                const std::array<int, 3> key{closing, touching, adj_.deg[v]};
                if (key > best_key) {
                    best_key = key;
                    best = v;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        Plan plan(order.size());
        for (std::size_t p = 0; p < order.size(); ++p) {
            Step& st = plan[p];
            st.vertex = order[p];
            st.degree = adj_.deg[order[p]];
            for (std::size_t i = 0; i < p; ++i) {
                const int cd = adj_.codegree(order[i], order[p]);
                if (cd > 0) {
                    st.codegree.emplace_back(static_cast<int>(i), cd);
                    if (st.anchor < 0) st.anchor = static_cast<int>(i);
                }
                for (std::size_t j = i + 1; j < p; ++j)
                    if ((adj_.pair[order[p]][order[i]] >> order[j]) & 1U)
                        st.closing.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
        return plan;
    }

    static VertexMask candidates(const Adjacency& host, const Step& st, const State& s) {
        VertexMask cand = static_cast<VertexMask>((1U << host.n) - 1);
        if (!st.closing.empty()) {
            for (const auto& [i, j] : st.closing) cand &= host.pair[s.image[i]][s.image[j]];
        } else if (st.anchor >= 0) {
            cand &= host.neighbours(s.image[st.anchor]);
        }
        return static_cast<VertexMask>(cand & ~s.used);
    }

    static bool admissible(const Adjacency& host, const Plan& plan, int pos, int h, const State& s) {
        const Step& st = plan[pos];
        if ((s.used >> h) & 1U) return false;
        if (host.deg[h] < st.degree) return false;
        for (const auto& [i, cd] : st.codegree)
            if (host.codegree(s.image[i], h) < cd) return false;
        for (const auto& [i, j] : st.closing)
            if (!((host.pair[s.image[i]][s.image[j]] >> h) & 1U)) return false;
        return true;
    }

    static void place(int pos, int h, State& s) {
        s.image[pos] = h;
        s.used = static_cast<VertexMask>(s.used | (1U << h));
    }

    bool extend(const Adjacency& host, const Plan& plan, int pos, State& s) const {
        if (pos == k_) return true;
        const Step& st = plan[pos];
        for (VertexMask cand = candidates(host, st, s); cand; cand &= cand - 1) {
            const int h = std::countr_zero(cand);
            if (host.deg[h] < st.degree) continue;
            bool ok = true;
            for (const auto& [i, cd] : st.codegree) {
                if (host.codegree(s.image[i], h) < cd) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            s.image[pos] = h;
            s.used = static_cast<VertexMask>(s.used | (1U << h));
            if (extend(host, plan, pos + 1, s)) return true;
            s.used = static_cast<VertexMask>(s.used & ~(1U << h));
        }
        return false;
    }

    std::vector<int> witness(const State& s) const {
        std::vector<int> out(static_cast<std::size_t>(k_));
        for (int p = 0; p < k_; ++p) out[static_cast<std::size_t>(free_plan_[p].vertex)] = s.image[p];
        return out;
    }

    Hypergraph3 pattern_;
    Adjacency adj_;
    int k_ = 0;
    int edge_count_ = 0;
    Plan free_plan_;
    std::vector<Plan> rooted_plans_;
};

/// True iff some injection V(H) -> V(G) maps every edge of H onto an edge of G.
inline bool contains(const Hypergraph3& host, const Hypergraph3& pattern) {
    return Embedder(pattern).contains(Adjacency(host));
}

inline std::optional<std::vector<int>> find_embedding(const Hypergraph3& host, const Hypergraph3& pattern) {
    return Embedder(pattern).find(Adjacency(host));
}

} // namespace turan3

#endif // TURAN3_CONTAINMENT_HPP
