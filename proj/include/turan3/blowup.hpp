#ifndef TURAN3_BLOWUP_HPP
#define TURAN3_BLOWUP_HPP

#include "canonical.hpp"
#include "hypergraph.hpp"
#include "patterns.hpp"

#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan3 {

/// parts[s - 1][c] is the host vertex for walk label s^c.
using PartMap = std::vector<std::vector<int>>;

/// Contiguous parts, part v holding the next sizes[v] vertices.
inline PartMap blowup_parts(std::span<const int> sizes) {
    PartMap parts;
    int next = 0;
    for (int s : sizes) {
        auto& p = parts.emplace_back();
        for (int i = 0; i < s; ++i) p.push_back(next++);
    }
    return parts;
}

/// Replaces vertex v by an independent set of sizes[v] vertices; a triple
/// meeting three distinct parts is an edge iff their base vertices form one.
inline Hypergraph3 blowup(const Hypergraph3& h, std::span<const int> sizes) {
    if (static_cast<int>(sizes.size()) != h.vertex_count()) {
        throw std::invalid_argument("blow-up needs one part size per vertex");
    }
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("blow-up part sizes must be at least 1");
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total > max_vertices) {
        throw std::length_error("blow-up would have " + std::to_string(total) + " vertices; the limit is 16");
    }
    const PartMap parts = blowup_parts(sizes);
    Hypergraph3 out(total);
    for (const auto& t : h.edges())
        for (int x : parts[t.a])
            for (int y : parts[t.b])
                for (int z : parts[t.c]) out.add_edge(x, y, z);
    return out;
}

/// Balanced blow-up H[t].
inline Hypergraph3 blowup(const Hypergraph3& h, int t) {
    std::vector<int> sizes(static_cast<std::size_t>(h.vertex_count()), t);
    return blowup(h, sizes);
}

inline std::vector<int> resolve_walk(const PartMap& parts, const WalkString& walk) {
    std::vector<int> out;
    for (const auto& t : walk.tokens) {
        const auto base = static_cast<std::size_t>(t.base - 1);
        if (base >= parts.size() || t.copy < 0 || static_cast<std::size_t>(t.copy) >= parts[base].size()) {
            throw std::out_of_range("walk label " + t.to_string() + " does not name a vertex of the part map");
        }
        out.push_back(parts[base][static_cast<std::size_t>(t.copy)]);
    }
    return out;
}

/// Checks that the walk, resolved through the part map, is a closed tight walk
/// x1 ... xl x1 on l distinct host vertices whose consecutive triples are all
/// host edges, so that it exhibits a copy of C_l minus an edge.
inline bool verify_walk_embedding(const Hypergraph3& host, const PartMap& parts, const WalkString& walk) {
    const std::vector<int> r = resolve_walk(parts, walk);
    const int length = static_cast<int>(r.size()) - 1;
    if (length < 4 || r.front() != r.back()) return false;
    VertexMask seen = 0;
    for (int i = 0; i < length; ++i) {
        if ((seen >> r[i]) & 1U) return false;
        seen = static_cast<VertexMask>(seen | (1U << r[i]));
    }
    for (std::size_t i = 0; i + 2 < r.size(); ++i) {
        if (!host.has_edge(r[i], r[i + 1], r[i + 2])) return false;
    }
    WalkString relabelled;
    for (int v : r) relabelled.tokens.push_back({v + 1, 0});
    return isomorphic(from_walk(relabelled), tight_cycle_minus(length).graph);
}

} // namespace turan3

#endif // TURAN3_BLOWUP_HPP
