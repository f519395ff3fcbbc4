// Brute-force reference implementations used only by the tests. None of them
// share code with the library's search routines.
#ifndef TURAN3_TESTS_ORACLES_HPP
#define TURAN3_TESTS_ORACLES_HPP

#include <turan3/hypergraph.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using turan3::Hypergraph3;

/// Edge list of g as a sorted vector of sorted triples after relabelling by perm.
inline std::vector<std::array<int, 3>> mapped_edges(const Hypergraph3& g, const std::vector<int>& perm) {
    std::vector<std::array<int, 3>> out;
    for (const auto& e : g.edges()) {
        std::array<int, 3> t{perm[e.a], perm[e.b], perm[e.c]};
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Smallest relabelled edge list over all n! permutations.
inline std::vector<std::array<int, 3>> min_form(const Hypergraph3& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    auto best = mapped_edges(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, mapped_edges(g, perm));
    return best;
}

inline bool isomorphic(const Hypergraph3& g, const Hypergraph3& h) {
    return g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count() && min_form(g) == min_form(h);
}

/// Tries every injection V(h) -> V(g).
inline bool contains(const Hypergraph3& g, const Hypergraph3& h) {
    const int n = g.vertex_count(), k = h.vertex_count();
    if (k > n) return false;
    const auto edges = h.edges();
    std::vector<int> image(static_cast<std::size_t>(k));
    std::vector<bool> used(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            for (const auto& e : edges)
                if (!g.has_edge(image[e.a], image[e.b], image[e.c])) return false;
            return true;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            image[i] = v;
            if (self(self, i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Labelled graph on n vertices whose edge set is the low bits of `mask`.
inline Hypergraph3 from_mask(int n, std::uint64_t mask) {
    Hypergraph3 g(n);
    for (int i = 0; i < turan3::choose3(n); ++i)
        if ((mask >> i) & 1U) g.add_edge(turan3::triple_at(i));
    return g;
}

inline Hypergraph3 random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Hypergraph3 g(n);
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a)
                if (coin(rng)) g.add_edge(a, b, c);
    return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Number of isomorphism classes among the labelled graphs on n vertices
/// accepted by `keep`, by explicit action of the symmetric group.
template <typename Keep>
std::size_t orbit_count(int n, Keep&& keep) {
    std::set<std::vector<std::array<int, 3>>> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << turan3::choose3(n)); ++mask) {
        const Hypergraph3 g = from_mask(n, mask);
        if (keep(g)) classes.insert(min_form(g));
    }
    return classes.size();
}

} // namespace oracle

#endif // TURAN3_TESTS_ORACLES_HPP
