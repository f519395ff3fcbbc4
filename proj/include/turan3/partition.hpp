#ifndef TURAN3_PARTITION_HPP
#define TURAN3_PARTITION_HPP

#include "hypergraph.hpp"
#include "rational.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace turan3 {

enum class Part : std::uint8_t { X1 = 0, X2 = 1, X3 = 2, T = 3 };

/// Assignment of every vertex to one of X1, X2, X3, T.
struct Partition4 {
    std::vector<Part> assignment;

    static Partition4 from_parts(int n, std::initializer_list<std::initializer_list<int>> x123) {
        Partition4 p;
        p.assignment.assign(static_cast<std::size_t>(n), Part::T);
        int i = 0;
        for (const auto& part : x123) {
            for (int v : part) p.assignment.at(static_cast<std::size_t>(v)) = static_cast<Part>(i);
            ++i;
        }
        return p;
    }
};

/// The constant on the right of the main partition inequality.
inline Rational eqmain_threshold() { return make_rational(221119, 1000000); }

/// 6 x1 x2 x3 - f2 + 0.196 t + 0.366 t (1 - t), exactly.
inline Rational eqmain_lhs(const Rational& x1, const Rational& x2, const Rational& x3, const Rational& t,
                           const Rational& f2) {
    return 6 * x1 * x2 * x3 - f2 + make_rational(196, 1000) * t + make_rational(366, 1000) * t * (1 - t);
}

struct PartitionStats {
    Rational x1, x2, x3, t;
    /// funky edges (two vertices in one X_i, one in another) over C(n,3)
    Rational f1;
    /// non-edges meeting each of X1, X2, X3 over C(n,3)
    Rational f2;
    std::uint64_t funky_edges = 0;
    std::uint64_t funky_non_edges = 0;
    Rational eqmain;
};

/// Exact part sizes and funky-triple densities. On n = 0 every field is zero.
inline PartitionStats partition_stats(const Hypergraph3& g, const Partition4& p) {
    const int n = g.vertex_count();
    if (static_cast<int>(p.assignment.size()) != n) {
        throw std::invalid_argument("partition must assign every vertex exactly once");
    }
    PartitionStats s;
    if (n == 0) return s;
    std::array<int, 4> size{};
    for (Part x : p.assignment) ++size[static_cast<int>(x)];
    s.x1 = make_rational(size[0], n);
    s.x2 = make_rational(size[1], n);
    s.x3 = make_rational(size[2], n);
    s.t = make_rational(size[3], n);
    for (int i = 0; i < choose3(n); ++i) {
        const Triple tr = triple_at(i);
        const int pa = static_cast<int>(p.assignment[tr.a]);
        const int pb = static_cast<int>(p.assignment[tr.b]);
        const int pc = static_cast<int>(p.assignment[tr.c]);
        if (pa == 3 || pb == 3 || pc == 3) continue;
        const bool rainbow = pa != pb && pb != pc && pa != pc;
        const bool two_one = !rainbow && !(pa == pb && pb == pc);
        if (g.edge_set().test(i)) {
            s.funky_edges += two_one;
        } else {
            s.funky_non_edges += rainbow;
        }
    }
    const BigInt triples = choose3(n);
    if (triples > 0) {
        s.f1 = Rational(BigInt(s.funky_edges), triples);
        s.f2 = Rational(BigInt(s.funky_non_edges), triples);
    }
    s.eqmain = eqmain_lhs(s.x1, s.x2, s.x3, s.t, s.f2);
    return s;
}

} // namespace turan3

#endif // TURAN3_PARTITION_HPP
