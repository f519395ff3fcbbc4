#ifndef TURAN3_CANONICAL_HPP
#define TURAN3_CANONICAL_HPP

#include "hypergraph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turan3 {

/// perm[v] is the image of vertex v.
using Permutation = std::array<std::uint8_t, max_vertices>;

inline Permutation identity_permutation() {
    Permutation p{};
    std::iota(p.begin(), p.end(), std::uint8_t{0});
    return p;
}

inline int apply_to_triple(const Permutation& p, int triple) {
    const Triple t = triple_at(triple);
    return triple_index(p[t.a], p[t.b], p[t.c]);
}

inline TripleSet apply_to_set(const Permutation& p, const TripleSet& s) {
    TripleSet out;
    s.for_each([&](int i) { out.set(apply_to_triple(p, i)); });
    return out;
}

/// Isomorphism-class key: the certificate of the canonical labelling.
/// Two graphs have equal codes iff they are isomorphic.
struct CanonicalCode {
    int n = 0;
    TripleSet bits;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend std::strong_ordering operator<=>(const CanonicalCode& x, const CanonicalCode& y) {
        if (auto c = x.n <=> y.n; c != 0) return c;
        return x.bits <=> y.bits;
    }

    Hypergraph3 graph() const { return Hypergraph3(n, bits); }

    /// "h3:<n>:<hex>", lowercase, most significant nibble first, ceil(C(n,3)/4) digits.
    std::string to_string() const {
        static constexpr char digits[] = "0123456789abcdef";
        const int nibbles = (choose3(n) + 3) / 4;
        std::string out = "h3:" + std::to_string(n) + ":";
        for (int k = nibbles - 1; k >= 0; --k) {
            int v = 0;
            for (int b = 3; b >= 0; --b) v = (v << 1) | (bits.test(4 * k + b) ? 1 : 0);
            out.push_back(digits[v]);
        }
        return out;
    }

    static CanonicalCode parse(std::string_view text) {
        auto bad = [&](const std::string& why) {
            return std::invalid_argument("malformed canonical code '" + std::string(text) + "': " + why);
        };
        if (text.substr(0, 3) != "h3:") throw bad("missing 'h3:' prefix");
        text.remove_prefix(3);
        const auto colon = text.find(':');
        if (colon == std::string_view::npos || colon == 0) throw bad("missing vertex count");
        int n = 0;
        for (char ch : text.substr(0, colon)) {
            if (ch < '0' || ch > '9') throw bad("vertex count is not a number");
            n = n * 10 + (ch - '0');
            if (n > max_vertices) throw bad("vertex count above 16");
        }
        const std::string_view hex = text.substr(colon + 1);
        const int nibbles = (choose3(n) + 3) / 4;
        if (static_cast<int>(hex.size()) != nibbles) throw bad("expected " + std::to_string(nibbles) + " hex digits");
        CanonicalCode code;
        code.n = n;
        for (int i = 0; i < nibbles; ++i) {
            const char ch = hex[static_cast<std::size_t>(i)];
            int v;
            if (ch >= '0' && ch <= '9') v = ch - '0';
            else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
            else throw bad("non-hex digit");
            const int k = nibbles - 1 - i;
            for (int b = 0; b < 4; ++b) {
                if ((v >> b) & 1) {
                    if (4 * k + b >= choose3(n)) throw bad("bit beyond C(n,3)");
                    code.bits.set(4 * k + b);
                }
            }
        }
        return code;
    }
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept {
        std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(c.n);
        for (int w = 0; w < TripleSet::words; ++w) {
            h ^= c.bits.word(w);
            h *= 1099511628211ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Result of the canonical labelling search.
struct Labelling {
    /// labelling[v] is the canonical position of v.
    Permutation labelling{};
    CanonicalCode code;
    /// Generators of the full automorphism group (identity omitted).
    std::vector<Permutation> generators;
};

namespace detail {

/// Ordered partition of the vertex set into cells.
struct OrderedPartition {
    std::array<VertexMask, max_vertices> cells{};
    std::array<std::uint8_t, max_vertices> cell_of{};
    int size = 0;

    void index() {
        for (int k = 0; k < size; ++k)
            for (VertexMask m = cells[k]; m; m &= m - 1) cell_of[std::countr_zero(m)] = static_cast<std::uint8_t>(k);
    }

    void individualize(int v) {
        const int k = cell_of[v];
        for (int j = size; j > k + 1; --j) cells[j] = cells[j - 1];
        cells[k + 1] = static_cast<VertexMask>(cells[k] & ~(1U << v));
        cells[k] = static_cast<VertexMask>(1U << v);
        ++size;
        index();
    }
};

class Canonizer {
public:
    explicit Canonizer(const Adjacency& adj) : adj_(adj), n_(adj.n) {}

    Labelling run() {
        OrderedPartition root;
        if (n_ > 0) {
            root.cells[0] = static_cast<VertexMask>((1U << n_) - 1);
            root.size = 1;
            root.index();
        }
        search(root, 0);
        Labelling out;
        out.labelling = best_lab_;
        out.code = CanonicalCode{n_, best_cert_};
        out.generators = std::move(generators_);
        return out;
    }

private:
    // Splits every cell by the vector of cell-pair counts seen from each vertex,
    // repeated until stable. Cells keep their relative order; new cells are
    // ordered by ascending signature, so the result commutes with relabelling.
    void refine(OrderedPartition& p) const {
        while (p.size < n_) {
            const int nc = p.size;
            const int width = nc * (nc + 1) / 2;
            std::array<std::array<std::uint8_t, 136>, max_vertices> sig{};
            for (int v = 0; v < n_; ++v) {
                if (std::popcount(p.cells[p.cell_of[v]]) == 1) continue;
                auto& s = sig[v];
                for (int a = 0; a < n_; ++a) {
                    const VertexMask row = adj_.pair[v][a];
                    if (!row) continue;
                    const int pa = p.cell_of[a];
                    // pairs {a,b} with cell(a) <= cell(b); equal cells counted twice
                    int off = pa * nc - pa * (pa - 1) / 2;
                    for (int q = pa; q < nc; ++q) {
                        s[off + q - pa] = static_cast<std::uint8_t>(s[off + q - pa] + std::popcount(static_cast<VertexMask>(row & p.cells[q])));
                    }
                }
            }
            OrderedPartition next;
            for (int k = 0; k < nc; ++k) {
                const VertexMask cell = p.cells[k];
                if (std::popcount(cell) == 1) {
                    next.cells[next.size++] = cell;
                    continue;
                }
                std::array<int, max_vertices> vs{};
                int m = 0;
                for (VertexMask x = cell; x; x &= x - 1) vs[m++] = std::countr_zero(x);
                auto less = [&](int x, int y) {
                    return std::lexicographical_compare(sig[x].begin(), sig[x].begin() + width, sig[y].begin(),
                                                        sig[y].begin() + width);
                };
                std::sort(vs.begin(), vs.begin() + m, less);
                VertexMask cur = static_cast<VertexMask>(1U << vs[0]);
                for (int i = 1; i < m; ++i) {
                    if (less(vs[i - 1], vs[i])) {
                        next.cells[next.size++] = cur;
                        cur = 0;
                    }
                    cur = static_cast<VertexMask>(cur | (1U << vs[i]));
                }
                next.cells[next.size++] = cur;
            }
            if (next.size == nc) return;
            next.index();
            p = next;
        }
    }

    TripleSet certificate(const Permutation& lab) const {
        TripleSet out;
        for (int c = 0; c < n_; ++c)
            for (int b = 0; b < c; ++b)
                for (VertexMask m = static_cast<VertexMask>(adj_.pair[b][c] & ((1U << b) - 1)); m; m &= m - 1) {
                    const int a = std::countr_zero(m);
                    out.set(triple_index(lab[a], lab[b], lab[c]));
                }
        return out;
    }

    static Permutation compose_inverse(const Permutation& target, const Permutation& lab, int n) {
        // gamma(v) = target^{-1}(lab(v))
        Permutation inv{};
        for (int v = 0; v < n; ++v) inv[target[v]] = static_cast<std::uint8_t>(v);
        Permutation g = identity_permutation();
        for (int v = 0; v < n; ++v) g[v] = inv[lab[v]];
        return g;
    }

    // Union-find orbits of the subgroup generated by generators fixing seq_[0..depth).
    std::array<std::uint8_t, max_vertices> orbits_fixing(int depth) const {
        std::array<std::uint8_t, max_vertices> parent{};
        std::iota(parent.begin(), parent.end(), std::uint8_t{0});
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& g : generators_) {
            bool fixes = true;
            for (int i = 0; i < depth && fixes; ++i) fixes = g[seq_[i]] == seq_[i];
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v), b = find(g[v]);
                if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(find(v));
        return parent;
    }

    // Returns the depth whose current branch became redundant, or -1.
    int search(OrderedPartition p, int depth) {
        refine(p);
        if (p.size == n_) return leaf(p, depth);

        int target = 0;
        while (std::popcount(p.cells[target]) == 1) ++target;
        explored_[depth] = 0;
        std::size_t seen_generators = static_cast<std::size_t>(-1);
        std::array<std::uint8_t, max_vertices> orbit{};
        for (VertexMask m = p.cells[target]; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            if (seen_generators != generators_.size()) {
                orbit = orbits_fixing(depth);
                seen_generators = generators_.size();
            }
            bool redundant = false;
            for (VertexMask e = explored_[depth]; e && !redundant; e &= e - 1) {
                redundant = orbit[std::countr_zero(e)] == orbit[w];
            }
            if (redundant) continue;
            seq_[depth] = static_cast<std::uint8_t>(w);
            explored_[depth] = static_cast<VertexMask>(explored_[depth] | (1U << w));
            OrderedPartition child = p;
            child.individualize(w);
            const int r = search(child, depth + 1);
            if (r >= 0 && r < depth) return r;
        }
        return -1;
    }

    int leaf(const OrderedPartition& p, int depth) {
        Permutation lab = identity_permutation();
        for (int v = 0; v < n_; ++v) lab[v] = p.cell_of[v];
        const TripleSet cert = certificate(lab);
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = best_cert_ = cert;
            first_lab_ = best_lab_ = lab;
            return -1;
        }
        Permutation gamma{};
        if (cert == first_cert_) {
            gamma = compose_inverse(first_lab_, lab, n_);
        } else if (cert == best_cert_) {
            gamma = compose_inverse(best_lab_, lab, n_);
        } else {
            if (cert < best_cert_) {
                best_cert_ = cert;
                best_lab_ = lab;
            }
            return -1;
        }
        bool trivial = true;
        for (int v = 0; v < n_ && trivial; ++v) trivial = gamma[v] == v;
        if (trivial) return -1;
        for (int v = n_; v < max_vertices; ++v) gamma[v] = static_cast<std::uint8_t>(v);
        generators_.push_back(gamma);
        for (int d = 0; d < depth; ++d) {
            const auto orbit = orbits_fixing(d);
            for (VertexMask e = explored_[d]; e; e &= e - 1) {
                const int u = std::countr_zero(e);
                if (u != seq_[d] && orbit[u] == orbit[seq_[d]]) return d;
            }
        }
        return -1;
    }

    const Adjacency& adj_;
    int n_;
    std::array<std::uint8_t, max_vertices> seq_{};
    std::array<VertexMask, max_vertices + 1> explored_{};
    bool have_first_ = false;
    TripleSet first_cert_, best_cert_;
    Permutation first_lab_{}, best_lab_{};
    std::vector<Permutation> generators_;
};

} // namespace detail

inline Labelling canonical_labelling(const Adjacency& adj) { return detail::Canonizer(adj).run(); }

inline Labelling canonical_labelling(const Hypergraph3& g) { return canonical_labelling(Adjacency(g)); }

inline CanonicalCode canonical_code(const Hypergraph3& g) { return canonical_labelling(g).code; }

inline bool isomorphic(const Hypergraph3& g, const Hypergraph3& h) {
    return g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count() &&
           canonical_code(g) == canonical_code(h);
}

/// Orbits of the group generated by `gens` on the triples in `domain`;
/// returns, for every triple index, the smallest triple index in its orbit.
inline std::vector<std::uint16_t> triple_orbits(const std::vector<Permutation>& gens, int n) {
    const int total = choose3(n);
    std::vector<std::uint16_t> parent(static_cast<std::size_t>(total));
    std::iota(parent.begin(), parent.end(), std::uint16_t{0});
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens) {
        for (int i = 0; i < total; ++i) {
            const int a = find(i), b = find(apply_to_triple(g, i));
            if (a != b) parent[std::max(a, b)] = static_cast<std::uint16_t>(std::min(a, b));
        }
    }
    for (int i = 0; i < total; ++i) parent[i] = static_cast<std::uint16_t>(find(i));
    return parent;
}

/// |Aut(G)| by direct search over all n! permutations. Intended for n <= 9.
inline std::uint64_t automorphism_count(const Hypergraph3& g) {
    const int n = g.vertex_count();
    if (n > 9) throw std::invalid_argument("automorphism_count is brute force and limited to n <= 9");
    std::array<int, max_vertices> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        g.edge_set().for_each([&](int i) {
            if (!ok) return;
            const Triple t = triple_at(i);
            ok = g.edge_set().test(triple_index(perm[t.a], perm[t.b], perm[t.c]));
        });
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return count;
}

} // namespace turan3

#endif // TURAN3_CANONICAL_HPP
