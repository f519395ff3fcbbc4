#ifndef TURAN3_HYPERGRAPH_HPP
#define TURAN3_HYPERGRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan3 {

inline constexpr int max_vertices = 16;
inline constexpr int max_triples = 560; // C(16,3)

using VertexMask = std::uint16_t;

constexpr int choose2(int n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr int choose3(int n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

/// An unordered triple of distinct vertices stored ascending.
struct Triple {
    int a = 0;
    int b = 0;
    int c = 0;

    friend constexpr bool operator==(const Triple&, const Triple&) = default;
    friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

constexpr Triple sorted_triple(int x, int y, int z) {
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return {x, y, z};
}

namespace detail {

struct TripleTables {
    std::array<std::uint16_t, max_vertices * max_vertices * max_vertices> index{};
    std::array<Triple, max_triples> triple{};

    constexpr TripleTables() {
        for (int c = 0; c < max_vertices; ++c) {
            for (int b = 0; b < c; ++b) {
                for (int a = 0; a < b; ++a) {
                    const int i = choose3(c) + choose2(b) + a;
                    triple[i] = {a, b, c};
                    // all six orderings resolve to the same colex index
                    const int p[3] = {a, b, c};
                    for (int x = 0; x < 3; ++x)
                        for (int y = 0; y < 3; ++y)
                            for (int z = 0; z < 3; ++z)
                                if (x != y && y != z && x != z)
                                    index[(p[x] * max_vertices + p[y]) * max_vertices + p[z]] =
                                        static_cast<std::uint16_t>(i);
                }
            }
        }
    }
};

inline constexpr TripleTables triple_tables{};

} // namespace detail

/// Colexicographic rank of {x,y,z}; vertices must be distinct and < 16.
/// The triples of [0,n) occupy exactly the ranks [0, C(n,3)).
constexpr int triple_index(int x, int y, int z) {
    return detail::triple_tables.index[(x * max_vertices + y) * max_vertices + z];
}

constexpr Triple triple_at(int index) { return detail::triple_tables.triple[index]; }

/// Fixed-width set over the 560 triples of a 16-vertex ground set.
class TripleSet {
public:
    static constexpr int words = (max_triples + 63) / 64;

    constexpr bool test(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1U; }
    constexpr void set(int i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(int i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    constexpr int count() const {
        int total = 0;
        for (auto w : bits_) total += std::popcount(w);
        return total;
    }

    constexpr bool none() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    /// Index of the highest set bit, or -1.
    constexpr int highest() const {
        for (int w = words - 1; w >= 0; --w)
            if (bits_[w]) return w * 64 + 63 - std::countl_zero(bits_[w]);
        return -1;
    }

    template <typename Fn>
    constexpr void for_each(Fn&& fn) const {
        for (int w = 0; w < words; ++w) {
            for (std::uint64_t x = bits_[w]; x; x &= x - 1) {
                fn(w * 64 + std::countr_zero(x));
            }
        }
    }

    constexpr std::uint64_t word(int w) const { return bits_[w]; }
    constexpr void set_word(int w, std::uint64_t v) { bits_[w] = v; }

    constexpr TripleSet& operator|=(const TripleSet& o) {
        for (int w = 0; w < words; ++w) bits_[w] |= o.bits_[w];
        return *this;
    }
    constexpr TripleSet& operator&=(const TripleSet& o) {
        for (int w = 0; w < words; ++w) bits_[w] &= o.bits_[w];
        return *this;
    }
    constexpr bool is_subset_of(const TripleSet& o) const {
        for (int w = 0; w < words; ++w)
            if (bits_[w] & ~o.bits_[w]) return false;
        return true;
    }

    friend constexpr bool operator==(const TripleSet&, const TripleSet&) = default;

    /// Numeric order: the set is read as a 560-bit unsigned integer.
    friend constexpr std::strong_ordering operator<=>(const TripleSet& x, const TripleSet& y) {
        for (int w = words - 1; w >= 0; --w) {
            if (x.bits_[w] != y.bits_[w]) return x.bits_[w] <=> y.bits_[w];
        }
        return std::strong_ordering::equal;
    }

private:
    std::array<std::uint64_t, words> bits_{};
};

/// A 3-uniform hypergraph on at most 16 labelled vertices.
class Hypergraph3 {
public:
    Hypergraph3() = default;

    explicit Hypergraph3(int n) : n_(n) {
        if (n < 0 || n > max_vertices) {
            throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 16]");
        }
    }

    Hypergraph3(int n, const TripleSet& edges) : Hypergraph3(n) {
        edges.for_each([&](int i) {
            if (i >= choose3(n)) throw std::invalid_argument("edge set exceeds the vertex range");
        });
        edges_ = edges;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edges_.count(); }
    const TripleSet& edge_set() const { return edges_; }

    bool has_edge(int x, int y, int z) const {
        return distinct_in_range(x, y, z) && edges_.test(triple_index(x, y, z));
    }
    bool has_edge(const Triple& t) const { return has_edge(t.a, t.b, t.c); }

    void add_edge(int x, int y, int z) {
        check_triple(x, y, z);
        edges_.set(triple_index(x, y, z));
    }
    void add_edge(const Triple& t) { add_edge(t.a, t.b, t.c); }

    void remove_edge(int x, int y, int z) {
        check_triple(x, y, z);
        edges_.reset(triple_index(x, y, z));
    }

    std::vector<Triple> edges() const {
        std::vector<Triple> out;
        out.reserve(static_cast<std::size_t>(edge_count()));
        edges_.for_each([&](int i) { out.push_back(triple_at(i)); });
        std::sort(out.begin(), out.end());
        return out;
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        edges_.for_each([&](int i) {
            const Triple t = triple_at(i);
            d += (t.a == v || t.b == v || t.c == v);
        });
        return d;
    }

    friend bool operator==(const Hypergraph3&, const Hypergraph3&) = default;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
        }
    }

private:
    bool distinct_in_range(int x, int y, int z) const {
        return x != y && y != z && x != z && x >= 0 && y >= 0 && z >= 0 && x < n_ && y < n_ && z < n_;
    }

    void check_triple(int x, int y, int z) const {
        if (x == y || y == z || x == z) {
            throw std::invalid_argument("triple {" + std::to_string(x) + "," + std::to_string(y) + "," +
                                        std::to_string(z) + "} repeats a vertex");
        }
        check_vertex(x);
        check_vertex(y);
        check_vertex(z);
    }

    int n_ = 0;
    TripleSet edges_;
};

inline Hypergraph3 make(int n, std::span<const Triple> triples) {
    Hypergraph3 g(n);
    for (const auto& t : triples) g.add_edge(t.a, t.b, t.c);
    return g;
}

inline Hypergraph3 make(int n, std::initializer_list<Triple> triples) {
    return make(n, std::span<const Triple>(triples.begin(), triples.size()));
}

/// Pair-indexed neighbourhoods: bit c of pair(a,b) is set iff {a,b,c} is an edge.
struct Adjacency {
    int n = 0;
    std::array<std::array<VertexMask, max_vertices>, max_vertices> pair{};
    std::array<int, max_vertices> deg{};

    Adjacency() = default;

    explicit Adjacency(const Hypergraph3& g) : n(g.vertex_count()) {
        g.edge_set().for_each([&](int i) { toggle(triple_at(i)); });
    }

    void add(const Triple& t) { toggle(t); }
    void remove(const Triple& t) { toggle(t); }

    int codegree(int a, int b) const { return std::popcount(pair[a][b]); }

    /// Vertices that share at least one edge with v.
    VertexMask neighbours(int v) const {
        VertexMask m = 0;
        for (int a = 0; a < n; ++a)
            if (pair[v][a]) m |= static_cast<VertexMask>(1U << a);
        return m;
    }

private:
    void toggle(const Triple& t) {
        const auto bit = [](int v) { return static_cast<VertexMask>(1U << v); };
        pair[t.a][t.b] ^= bit(t.c);
        pair[t.b][t.a] ^= bit(t.c);
        pair[t.a][t.c] ^= bit(t.b);
        pair[t.c][t.a] ^= bit(t.b);
        pair[t.b][t.c] ^= bit(t.a);
        pair[t.c][t.b] ^= bit(t.a);
        const int sign = (pair[t.a][t.b] >> t.c) & 1U ? 1 : -1;
        deg[t.a] += sign;
        deg[t.b] += sign;
        deg[t.c] += sign;
    }
};

/// A simple 2-graph on at most 16 vertices.
class Graph2 {
public:
    Graph2() = default;
    explicit Graph2(int n) : n_(n) {
        if (n < 0 || n > max_vertices) throw std::invalid_argument("vertex count outside [0, 16]");
    }

    int vertex_count() const { return n_; }

    bool has_edge(int a, int b) const {
        return a >= 0 && b >= 0 && a < n_ && b < n_ && a != b && ((adj_[a] >> b) & 1U);
    }

    void add_edge(int a, int b) {
        if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) {
            throw std::invalid_argument("invalid pair {" + std::to_string(a) + "," + std::to_string(b) + "}");
        }
        adj_[a] |= static_cast<VertexMask>(1U << b);
        adj_[b] |= static_cast<VertexMask>(1U << a);
    }

    VertexMask neighbours(int v) const { return adj_[v]; }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if ((adj_[a] >> b) & 1U) out.emplace_back(a, b);
        return out;
    }

    bool is_triangle_free() const {
        for (int a = 0; a < n_; ++a)
            for (int b = a + 1; b < n_; ++b)
                if (((adj_[a] >> b) & 1U) && (adj_[a] & adj_[b])) return false;
        return true;
    }

    friend bool operator==(const Graph2&, const Graph2&) = default;

private:
    int n_ = 0;
    std::array<VertexMask, max_vertices> adj_{};
};

/// Link of v: the pairs {a,b} with {v,a,b} an edge, on all n vertices.
inline Graph2 link(const Hypergraph3& g, int v) {
    g.check_vertex(v);
    Graph2 out(g.vertex_count());
    g.edge_set().for_each([&](int i) {
        const Triple t = triple_at(i);
        if (t.a == v) out.add_edge(t.b, t.c);
        else if (t.b == v) out.add_edge(t.a, t.c);
        else if (t.c == v) out.add_edge(t.a, t.b);
    });
    return out;
}

/// Adds a twin w = n of v. w copies every edge of v; no edge holds both.
inline Hypergraph3 duplicate_vertex(const Hypergraph3& g, int v) {
    g.check_vertex(v);
    if (g.vertex_count() >= max_vertices) {
        throw std::length_error("cannot duplicate a vertex: graph already has 16 vertices");
    }
    const int w = g.vertex_count();
    Hypergraph3 out(w + 1, g.edge_set());
    g.edge_set().for_each([&](int i) {
        const Triple t = triple_at(i);
        if (t.a == v) out.add_edge(w, t.b, t.c);
        else if (t.b == v) out.add_edge(t.a, w, t.c);
        else if (t.c == v) out.add_edge(t.a, t.b, w);
    });
    return out;
}

/// Subgraph induced by `keep`, relabelled 0..|keep|-1 in ascending vertex order.
inline Hypergraph3 induced(const Hypergraph3& g, VertexMask keep) {
    std::array<int, max_vertices> relabel{};
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        relabel[v] = ((keep >> v) & 1U) ? k++ : -1;
    }
    Hypergraph3 out(k);
    g.edge_set().for_each([&](int i) {
        const Triple t = triple_at(i);
        if (relabel[t.a] >= 0 && relabel[t.b] >= 0 && relabel[t.c] >= 0) {
            out.add_edge(relabel[t.a], relabel[t.b], relabel[t.c]);
        }
    });
    return out;
}

inline Hypergraph3 induced(const Hypergraph3& g, std::span<const int> vertices) {
    VertexMask keep = 0;
    for (int v : vertices) {
        g.check_vertex(v);
        keep |= static_cast<VertexMask>(1U << v);
    }
    return induced(g, keep);
}

inline Hypergraph3 relabel(const Hypergraph3& g, std::span<const int> perm) {
    Hypergraph3 out(g.vertex_count());
    g.edge_set().for_each([&](int i) {
        const Triple t = triple_at(i);
        out.add_edge(perm[t.a], perm[t.b], perm[t.c]);
    });
    return out;
}

/// True iff some vertex 3-colouring makes every edge rainbow.
inline bool is_3partite(const Hypergraph3& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    // edges indexed by their largest vertex, checked once that vertex is coloured
    std::array<std::vector<Triple>, max_vertices> closing;
    for (const auto& t : edges) closing[t.c].push_back(t);
    std::array<int, max_vertices> colour{};

    auto assign = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        // colours beyond the first unused one are symmetric
        const int limit = std::min(3, used + 1);
        for (int c = 0; c < limit; ++c) {
            colour[v] = c;
            bool ok = true;
            for (const auto& t : closing[v]) {
                if (colour[t.a] == colour[t.b] || colour[t.a] == c || colour[t.b] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, v + 1, std::max(used, c + 1))) return true;
        }
        return false;
    };
    return assign(assign, 0, 0);
}

} // namespace turan3

#endif // TURAN3_HYPERGRAPH_HPP
