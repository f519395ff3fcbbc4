#ifndef TURAN3_CLAIMS_HPP
#define TURAN3_CLAIMS_HPP

#include "containment.hpp"
#include "hypergraph.hpp"
#include "partition.hpp"
#include "patterns.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan3 {

// ---------------------------------------------------------------------------
// Six-vertex ratio

/// Vertex names used by the ratio: pairs (u1,v1), (u2,v2), (u3,v3) are 0-1, 2-3, 4-5.
inline constexpr std::array<int, 6> ratio_vertices{0, 1, 2, 3, 4, 5};

struct RatioWitness {
    Hypergraph3 graph;
    int numerator = 0;
    int denominator = 0;
    Rational ratio;
    /// labelled {K4-, C5-}-free graphs on the six vertices
    std::uint64_t free_count = 0;
};

/// Weighted count of cross edges in the ratio's numerator.
inline int ratio_numerator(const Hypergraph3& g) {
    int num = 0;
    for (int t2 : {2, 3}) num += 2 * g.has_edge(0, 1, t2);
    for (int t3 : {4, 5}) num += 2 * g.has_edge(0, 1, t3);
    for (int t1 : {0, 1}) num += g.has_edge(t1, 2, 3) + g.has_edge(t1, 4, 5);
    return num;
}

/// Non-edges with one vertex in each of the pairs {0,1}, {2,3}, {4,5}.
inline int ratio_denominator(const Hypergraph3& g) {
    int den = 0;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) den += !g.has_edge(a, b, c);
    return den;
}

namespace detail {

/// Edge masks of every labelled copy of `pattern` inside the 20 triples on six vertices.
inline std::vector<std::uint32_t> copies_in_six(const Hypergraph3& pattern) {
    const auto edges = pattern.edges();
    std::vector<std::uint32_t> out;
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    do {
        std::uint32_t mask = 0;
        for (const auto& e : edges) mask |= std::uint32_t{1} << triple_index(perm[e.a], perm[e.b], perm[e.c]);
        out.push_back(mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    // a copy that contains another copy is redundant
    std::vector<std::uint32_t> minimal;
    for (auto m : out) {
        bool redundant = false;
        for (auto o : out) redundant |= (o != m && (o & m) == o);
        if (!redundant) minimal.push_back(m);
    }
    return minimal;
}

} // namespace detail

/// Maximum numerator/denominator over all labelled {K4-, C5-}-free graphs on six
/// vertices with a positive denominator. The witness is the first maximiser in
/// bitmask order. Throws std::logic_error if some free graph has a positive
/// numerator and no qualifying non-edge.
inline RatioWitness six_vertex_ratio() {
    std::vector<std::uint32_t> copies = detail::copies_in_six(k4_minus().graph);
    const auto c5 = detail::copies_in_six(tight_cycle_minus(5).graph);
    copies.insert(copies.end(), c5.begin(), c5.end());

    RatioWitness best;
    best.ratio = 0;
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << 20); ++mask) {
        bool free = true;
        for (auto c : copies) {
            if ((mask & c) == c) {
                free = false;
                break;
            }
        }
        if (!free) continue;
        ++best.free_count;
        TripleSet s;
        s.set_word(0, mask);
        const Hypergraph3 g(6, s);
        const int num = ratio_numerator(g);
        const int den = ratio_denominator(g);
        if (den == 0) {
            if (num > 0) throw std::logic_error("a free graph has an unbounded ratio");
            continue;
        }
        const Rational r = make_rational(num, den);
        if (!found || r > best.ratio) {
            found = true;
            best.graph = g;
            best.numerator = num;
            best.denominator = den;
            best.ratio = r;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// One-variable polynomials

/// (2/9)(1-t)^3 + 0.196 t + 0.366 (1-t) t - 0.221119
inline Polynomial f2_polynomial() {
    const Polynomial t = Polynomial::variable();
    const Polynomial one_minus_t = Polynomial::constant(1) - t;
    return Polynomial::constant(make_rational(2, 9)) * one_minus_t * one_minus_t * one_minus_t +
           Polynomial::constant(make_rational(196, 1000)) * t +
           Polynomial::constant(make_rational(366, 1000)) * one_minus_t * t -
           Polynomial::constant(eqmain_threshold());
}

inline Rational f2_poly(const Rational& t) {
    if (t < 0 || t > 1) throw std::domain_error("f2_poly is defined on [0, 1]");
    return f2_polynomial()(t);
}

struct PolyMaximum {
    Rational argmax;
    Rational value;
    /// the bound value >= f on all of [0, 1] was proved by interval subdivision
    bool certified = false;
};

/// Certifies f2_poly(t) <= f2_poly(0) on [0, 1]: each piece either has an
/// enclosure below f(0), or is decreasing and starts at 0.
inline PolyMaximum f2_poly_max() {
    const Polynomial f = f2_polynomial();
    const Polynomial df = f.derivative();
    PolyMaximum out{0, f(0), false};
    out.certified = certify_on(0, 1, [&](const Rational& a, const Rational& b) {
        if (f.range(a, b).hi <= out.value) return true;
        return a == 0 && df.range(a, b).hi < 0;
    });
    return out;
}

struct RootBracket {
    Interval bracket;
    /// f is decreasing on [0, hi] and negative on [hi, 1], so the bracket holds the only root
    bool certified = false;
};

/// Smallest positive root of f2_poly, bracketed to width at most 10^-6.
inline RootBracket f2_poly_root() {
    const Polynomial f = f2_polynomial();
    const Polynomial df = f.derivative();
    const Rational width = make_rational(1, 1000000);
    // f(0) > 0 > f(1/50)
    RootBracket out{bisect_root(f, 0, make_rational(1, 50), width), false};
    const Rational hi = out.bracket.hi;
    const bool decreasing = certify_on(0, hi, [&](const Rational& a, const Rational& b) { return df.range(a, b).hi < 0; });
    const bool negative_after =
        f(hi) < 0 && certify_on(hi, 1, [&](const Rational& a, const Rational& b) { return f.range(a, b).hi < 0; });
    out.certified = f(out.bracket.lo) > 0 && decreasing && negative_after;
    return out;
}

/// 1.5 x (1 - x)^2 - 0.221119: the main inequality with f2 = t = 0 and two equal parts.
inline Polynomial balanced_part_polynomial() {
    const Polynomial x = Polynomial::variable();
    const Polynomial one_minus_x = Polynomial::constant(1) - x;
    return Polynomial::constant(make_rational(3, 2)) * x * one_minus_x * one_minus_x -
           Polynomial::constant(eqmain_threshold());
}

enum class BoundDirection { lower, upper };

struct PolyBoundReport {
    std::string name;
    Interval computed;
    Rational reference_value;
    BoundDirection direction = BoundDirection::lower;
    bool consistent = false;

    std::string verdict() const { return consistent ? "consistent" : "violated"; }
};

/// Root intervals for the smallest part, the largest part, the largest t and the
/// f2 maximum, each compared with the stated bound in its direction.
inline std::vector<PolyBoundReport> part_bounds() {
    const Rational width = make_rational(1, 1000000);
    const Polynomial g = balanced_part_polynomial();
    std::vector<PolyBoundReport> out;

    // g < 0 at 0 and 1, g > 0 at 1/3
    const Interval x3 = bisect_root(g, 0, make_rational(1, 3), width);
    out.push_back({"x3_lower", x3, make_rational(306, 1000), BoundDirection::lower, x3.lo >= make_rational(306, 1000)});
    const Interval x1 = bisect_root(g, make_rational(1, 3), 1, width);
    out.push_back({"x1_upper", x1, make_rational(361, 1000), BoundDirection::upper, x1.hi <= make_rational(361, 1000)});

    const RootBracket t = f2_poly_root();
    out.push_back({"t_upper", t.bracket, make_rational(109, 10000), BoundDirection::upper,
                   t.certified && t.bracket.hi <= make_rational(109, 10000)});

    const PolyMaximum m = f2_poly_max();
    out.push_back({"f2_upper", {m.value, m.value}, make_rational(1104, 1000000), BoundDirection::upper,
                   m.certified && m.value <= make_rational(1104, 1000000)});
    return out;
}

// ---------------------------------------------------------------------------
// Falsification sweep over the part-size simplex

/// eqMain with f2 = 0: 6 x1 x2 x3 + 0.196 t + 0.366 t (1 - t) >= 0.221119.
inline bool eqmain_feasible(const Rational& x1, const Rational& x2, const Rational& x3, const Rational& t) {
    return eqmain_lhs(x1, x2, x3, t, 0) >= eqmain_threshold();
}

/// Right-hand side of the degree-balance inequality after f2 is eliminated.
inline Rational balance_polynomial(const Rational& x1, const Rational& x2, const Rational& x3, const Rational& t) {
    auto q = [](long long p, long long d) { return make_rational(p, d); };
    return q(-221119, 100000) * x1 + q(196, 100) * x1 * t + q(884476, 1000000) * x3 + q(2216, 1000) * x3 * t -
           3 * x1 * x3 + 6 * x1 * x1 * x3 * t + 3 * x1 * x1 * x1 * x3 + 60 * x1 * x1 * x2 * x3 +
           q(366, 100) * x1 * t - q(366, 100) * x1 * t * t - q(1464, 1000) * x3 * t + q(1464, 1000) * x3 * t * t;
}

/// Names of the four refined part bounds that fail at the point.
inline std::vector<std::string> refined_bound_failures(const Rational& x1, const Rational& x2, const Rational& x3) {
    std::vector<std::string> out;
    if (x3 < make_rational(31723, 100000)) out.emplace_back("x3>=0.31723");
    if (x2 * x3 < make_rational(10613, 100000)) out.emplace_back("x2x3>=0.10613");
    if (x1 > make_rational(33865, 100000)) out.emplace_back("x1<=0.33865");
    if (x1 * x2 > make_rational(11378, 100000)) out.emplace_back("x1x2<=0.11378");
    return out;
}

struct FalsifyPoint {
    Rational x1, x2, x3, t;
    std::vector<std::string> failed;
};

struct FalsifyReport {
    Rational step;
    std::uint64_t points = 0;
    std::uint64_t feasible = 0;
    std::uint64_t violation_count = 0;
    /// the first violations found, at most `max_listed`
    std::vector<FalsifyPoint> violations;
    static constexpr std::size_t max_listed = 100;
};

/// Sweeps x1 >= x2 >= x3 >= 0, t = 1 - x1 - x2 - x3 >= 0 with every x_i a
/// multiple of `step`. A point is feasible when eqMain holds with f2 = 0 and the
/// balance polynomial is nonnegative; feasible points are tested against the
/// refined bounds. Everything is scaled to integers by the step denominator.
inline FalsifyReport falsify_region(const Rational& step) {
    if (step <= 0 || step > make_rational(1, 100)) throw std::invalid_argument("grid step must lie in (0, 1/100]");
    const BigInt bp = numerator_of(step), bq = denominator_of(step);
    if (bq > 20000) throw std::invalid_argument("grid step denominator must be at most 20000");
    using i128 = __int128;
    const long long a = bp.convert_to<long long>();
    const long long q = bq.convert_to<long long>();
    const i128 Q = q, Q2 = Q * Q, Q3 = Q2 * Q;

    FalsifyReport out;
    out.step = step;
    const long long steps = q / a;
    for (long long k1 = 0; k1 <= steps; ++k1) {
        for (long long k2 = 0; k2 <= k1; ++k2) {
            for (long long k3 = 0; k3 <= k2; ++k3) {
                const i128 X1 = i128{k1} * a, X2 = i128{k2} * a, X3 = i128{k3} * a;
                const i128 T = Q - X1 - X2 - X3;
                if (T < 0) break;
                ++out.points;
                // eqMain scaled by 10^6 q^3
                const i128 main = 6'000'000 * X1 * X2 * X3 + 196'000 * T * Q2 + 366'000 * T * (Q - T) * Q - 221'119 * Q3;
                if (main < 0) continue;
                // balance polynomial scaled by 10^6 q^4
                const i128 bal = -2'211'190 * X1 * Q3 + 1'960'000 * X1 * T * Q2 + 884'476 * X3 * Q3 +
                                 2'216'000 * X3 * T * Q2 - 3'000'000 * X1 * X3 * Q2 + 6'000'000 * X1 * X1 * X3 * T +
                                 3'000'000 * X1 * X1 * X1 * X3 + 60'000'000 * X1 * X1 * X2 * X3 +
                                 3'660'000 * X1 * T * Q2 - 3'660'000 * X1 * T * T * Q - 1'464'000 * X3 * T * Q2 +
                                 1'464'000 * X3 * T * T * Q;
                if (bal < 0) continue;
                ++out.feasible;
                const bool bad = 100'000 * X3 < 31'723 * Q || 100'000 * X2 * X3 < 10'613 * Q2 ||
                                 100'000 * X1 > 33'865 * Q || 100'000 * X1 * X2 > 11'378 * Q2;
                if (!bad) continue;
                ++out.violation_count;
                if (out.violations.size() < FalsifyReport::max_listed) {
                    const Rational x1 = step * k1, x2 = step * k2, x3 = step * k3;
                    out.violations.push_back({x1, x2, x3, 1 - x1 - x2 - x3, refined_bound_failures(x1, x2, x3)});
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Duplication

struct DuplicationCase {
    std::string base;
    int vertex = 0;
    int degree = 0;
    bool contains_c5_minus = false;
};

struct DuplicationReport {
    /// degree-3 vertices of K4- and every vertex of K4
    std::vector<DuplicationCase> claimed;
    /// the remaining vertices of K4-, reported without a claim
    std::vector<DuplicationCase> other;
    bool holds = false;
};

inline DuplicationReport duplication_report() {
    const Embedder c5(tight_cycle_minus(5).graph);
    DuplicationReport out;
    out.holds = true;
    for (const Pattern& base : {k4_minus(), k4()}) {
        for (int v = 0; v < base.graph.vertex_count(); ++v) {
            DuplicationCase c{base.name, v, base.graph.degree(v), false};
            c.contains_c5_minus = c5.contains(Adjacency(duplicate_vertex(base.graph, v)));
            if (c.degree == 3) {
                out.holds = out.holds && c.contains_c5_minus;
                out.claimed.push_back(c);
            } else {
                out.other.push_back(c);
            }
        }
    }
    return out;
}

inline bool duplication_forces_c5minus() { return duplication_report().holds; }

} // namespace turan3

#endif // TURAN3_CLAIMS_HPP
