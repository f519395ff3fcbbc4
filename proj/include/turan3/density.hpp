#ifndef TURAN3_DENSITY_HPP
#define TURAN3_DENSITY_HPP

#include "canonical.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace turan3 {

namespace detail {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Calls fn(mask) for every k-subset of [0, n).
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k > n || k < 0) return;
    if (k == 0) {
        fn(VertexMask{0});
        return;
    }
    std::uint32_t m = (1U << k) - 1;
    const std::uint32_t limit = 1U << n;
    while (m < limit) {
        fn(static_cast<VertexMask>(m));
        const std::uint32_t low = m & (~m + 1);
        const std::uint32_t ripple = m + low;
        m = (((ripple ^ m) >> 2) / low) | ripple;
    }
}

} // namespace detail

/// Number of |V(H)|-subsets of V(G) inducing a copy of H.
inline std::uint64_t count_induced(const Hypergraph3& g, const Hypergraph3& h) {
    const int k = h.vertex_count();
    const CanonicalCode target = canonical_code(h);
    const int target_edges = h.edge_count();
    std::uint64_t count = 0;
    detail::for_each_subset(g.vertex_count(), k, [&](VertexMask m) {
        const Hypergraph3 sub = induced(g, m);
        if (sub.edge_count() == target_edges && canonical_code(sub) == target) ++count;
    });
    return count;
}

/// Induced density p(H, G) = count_induced / C(n, k); zero when k > n.
inline Rational induced_density(const Hypergraph3& g, const Hypergraph3& h) {
    const BigInt total = detail::binomial(g.vertex_count(), h.vertex_count());
    if (total == 0) return Rational(0);
    return Rational(BigInt(count_induced(g, h)), total);
}

struct DensityEntry {
    CanonicalCode type;
    std::uint64_t count = 0;
    Rational density;
};

/// Every k-vertex isomorphism type with nonzero induced density, ordered by code.
inline std::vector<DensityEntry> density_table(const Hypergraph3& g, int k) {
    if (k < 0 || k > g.vertex_count()) throw std::invalid_argument("density order k must lie in [0, n]");
    std::map<CanonicalCode, std::uint64_t> counts;
    detail::for_each_subset(g.vertex_count(), k, [&](VertexMask m) { ++counts[canonical_code(induced(g, m))]; });
    const BigInt total = detail::binomial(g.vertex_count(), k);
    std::vector<DensityEntry> out;
    for (const auto& [code, c] : counts) out.push_back({code, c, Rational(BigInt(c), total)});
    return out;
}

} // namespace turan3

#endif // TURAN3_DENSITY_HPP
