#ifndef TURAN3_CONSTRUCTIONS_HPP
#define TURAN3_CONSTRUCTIONS_HPP

#include "hypergraph.hpp"
#include "rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace turan3 {

/// The three near-equal part sizes (floor(n/3), floor((n+1)/3), floor((n+2)/3)).
constexpr std::array<long long, 3> balanced_split(long long n) { return {n / 3, (n + 1) / 3, (n + 2) / 3}; }

/// Memoised ||H_n||: zero for n <= 2, else i*j*k + ||H_i|| + ||H_j|| + ||H_k||.
/// Not synchronised; give each thread its own table.
class EdgeCountTable {
public:
    const BigInt& get(long long n) {
        if (n < 0) throw std::invalid_argument("H_n needs n >= 0");
        if (auto it = memo_.find(n); it != memo_.end()) return it->second;
        BigInt value = 0;
        if (n >= 3) {
            const auto [i, j, k] = balanced_split(n);
            value = BigInt(i) * j * k;
            value += get(i);
            value += get(j);
            value += get(k);
        }
        return memo_.emplace(n, std::move(value)).first->second;
    }

private:
    std::map<long long, BigInt> memo_;
};

inline BigInt hn_edge_count(long long n) {
    EdgeCountTable table;
    return table.get(n);
}

namespace detail {

template <typename Base>
void build_recursive(Hypergraph3& g, int offset, int n, Base&& base) {
    if (base(g, offset, n)) return;
    const auto split = balanced_split(n);
    const int i = static_cast<int>(split[0]), j = static_cast<int>(split[1]), k = static_cast<int>(split[2]);
    build_recursive(g, offset, i, base);
    build_recursive(g, offset + i, j, base);
    build_recursive(g, offset + i + j, k, base);
    for (int x = offset; x < offset + i; ++x)
        for (int y = offset + i; y < offset + i + j; ++y)
            for (int z = offset + i + j; z < offset + n; ++z) g.add_edge(x, y, z);
}

inline void check_capacity(int n) {
    if (n < 0 || n > max_vertices) {
        throw std::length_error("explicit constructions need 0 <= n <= 16, got " + std::to_string(n));
    }
}

inline void add_complete(Hypergraph3& g, int offset, int n) {
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b)
            for (int a = 0; a < b; ++a) g.add_edge(offset + a, offset + b, offset + c);
}

/// All C(n-1, 2) triples through the first vertex of the block.
inline void add_star(Hypergraph3& g, int offset, int n) {
    for (int c = 2; c < n; ++c)
        for (int b = 1; b < c; ++b) g.add_edge(offset, offset + b, offset + c);
}

} // namespace detail

/// Iterated balanced blow-up of an edge; parts occupy contiguous vertex
/// ranges, smallest first.
inline Hypergraph3 hn_graph(int n) {
    detail::check_capacity(n);
    Hypergraph3 g(n);
    detail::build_recursive(g, 0, n, [](Hypergraph3&, int, int s) { return s <= 2; });
    return g;
}

/// Three complete 4-vertex blocks with all 64 edges across them.
inline Hypergraph3 modified_construction_12() {
    Hypergraph3 g(12);
    for (int b = 0; b < 3; ++b) detail::add_complete(g, 4 * b, 4);
    for (int x = 0; x < 4; ++x)
        for (int y = 4; y < 8; ++y)
            for (int z = 8; z < 12; ++z) g.add_edge(x, y, z);
    return g;
}

/// Largest C5- -free graph on s <= 8 vertices: empty, an edge, K4, then the star.
inline Hypergraph3 c5_minus_extremal(int s) {
    if (s < 0 || s > 8) throw std::invalid_argument("the small C5- extremal graphs are known for s <= 8");
    Hypergraph3 g(s);
    if (s == 3 || s == 4) detail::add_complete(g, 0, s);
    if (s >= 5) detail::add_star(g, 0, s);
    return g;
}

/// The H_n recursion bottoming out at the known C_l^- -free extremal graphs:
/// the small C5- graphs above for l = 5, complete graphs on fewer than l
/// vertices for l >= 7.
inline Hypergraph3 best_known(int n, int cycle_length = 5) {
    detail::check_capacity(n);
    if (cycle_length < 5 || cycle_length % 3 == 0) {
        throw std::invalid_argument("best_known needs a cycle length >= 5 not divisible by 3");
    }
    Hypergraph3 g(n);
    detail::build_recursive(g, 0, n, [cycle_length](Hypergraph3& h, int offset, int s) {
        if (cycle_length == 5 && s <= 8) {
            const Hypergraph3 block = c5_minus_extremal(s);
            for (const auto& t : block.edges()) h.add_edge(offset + t.a, offset + t.b, offset + t.c);
            return true;
        }
        if (cycle_length >= 7 && s < cycle_length) {
            detail::add_complete(h, offset, s);
            return true;
        }
        return s <= 2;
    });
    return g;
}

/// Certified bracket lo <= log_3(n) <= hi.
struct Log3Bracket {
    long long whole = 0;
    /// lo = whole + numer / 2^bits, hi = lo + 2^-bits (hi = lo when exact)
    std::uint64_t numer = 0;
    int bits = 0;
    bool exact = false;

    Rational lo() const { return Rational(BigInt(whole)) + Rational(BigInt(numer), BigInt(1) << bits); }
    Rational hi() const { return exact ? lo() : lo() + Rational(BigInt(1), BigInt(1) << bits); }
};

/// Binary digits of log_3(n) by repeated squaring of n / 3^a in fixed point,
/// carrying a lower and an upper approximation so every digit is certified.
inline Log3Bracket log3_bracket(std::uint64_t n, int bits = 20) {
    if (n == 0) throw std::domain_error("log3 of zero");
    using u128 = unsigned __int128;
    constexpr int frac = 60;
    const u128 one = u128{1} << frac;
    const u128 three = 3 * one;
    Log3Bracket out;
    std::uint64_t power = 1;
    while (power <= n / 3) {
        power *= 3;
        ++out.whole;
    }
    u128 lo = (u128{n} << frac) / power;
    u128 hi = ((u128{n} << frac) + power - 1) / power;
    out.exact = (n == power);
    if (out.exact) {
        out.bits = bits;
        return out;
    }
    for (int k = 0; k < bits; ++k) {
        const u128 sq_lo = (lo * lo) >> frac;
        const u128 sq_hi = ((hi * hi) + one - 1) >> frac;
        if (sq_lo >= three) {
            out.numer = (out.numer << 1) | 1;
            lo = sq_lo / 3;
            hi = (sq_hi + 2) / 3;
        } else if (sq_hi < three) {
            out.numer <<= 1;
            lo = sq_lo;
            hi = sq_hi;
        } else {
            break;
        }
        ++out.bits;
    }
    return out;
}

struct BoundCheckResult {
    bool holds = true;
    long long checked = 0;
    /// n minimising the slack per vertex
    long long worst_n = 0;
    /// n log3(n)/6 + C n - | ||H_n|| - n^3/24 | at worst_n, with log3 bracketed from below
    Rational worst_slack;
    Rational worst_slack_per_vertex;
    long long first_failure = 0;
};

/// Checks | ||H_n|| - n^3/24 | <= n log3(n) / 6 + C n for 3 <= n <= n_max
/// with exact integer arithmetic and a certified lower bracket for log3(n).
inline BoundCheckResult bound_check(long long n_max, const Rational& c) {
    if (n_max < 3) throw std::invalid_argument("bound_check needs n_max >= 3");
    if (n_max > 5'000'000) throw std::invalid_argument("bound_check supports n_max <= 5,000,000");
    if (c <= 0) throw std::invalid_argument("the linear constant must be positive");
    const BigInt cp = numerator_of(c), cq = denominator_of(c);
    if (cp >= (BigInt(1) << 24) || cq >= (BigInt(1) << 24)) {
        throw std::invalid_argument("the linear constant must have numerator and denominator below 2^24");
    }
    using i128 = __int128;
    const i128 p = cp.convert_to<long long>(), q = cq.convert_to<long long>();
    constexpr int bits = 20;
    const i128 scale = i128{1} << bits;

    std::vector<std::uint64_t> h(static_cast<std::size_t>(n_max) + 1, 0);
    for (long long n = 3; n <= n_max; ++n) {
        const auto [i, j, k] = balanced_split(n);
        h[static_cast<std::size_t>(n)] = static_cast<std::uint64_t>(i * j * k) + h[static_cast<std::size_t>(i)] +
                                         h[static_cast<std::size_t>(j)] + h[static_cast<std::size_t>(k)];
    }

    BoundCheckResult out;
    i128 worst_num = 0;
    long long worst_n = 0;
    for (long long n = 3; n <= n_max; ++n) {
        const i128 nn = n;
        i128 dev = i128{24} * h[static_cast<std::size_t>(n)] - nn * nn * nn;
        if (dev < 0) dev = -dev;
        const Log3Bracket log3 = log3_bracket(static_cast<std::uint64_t>(n), bits);
        const i128 log_num = (i128{log3.whole} << log3.bits) + log3.numer;
        const i128 log_scale = i128{1} << log3.bits;
        // slack * 24 * scale * q, where slack = n L/6 + C n - dev/24
        const i128 slack = 4 * nn * log_num * (scale / log_scale) * q + 24 * p * nn * scale - dev * scale * q;
        if (slack < 0) {
            out.holds = false;
            if (out.first_failure == 0) out.first_failure = n;
        }
        // compare slack/n across n by cross-multiplication
        if (worst_n == 0 || slack * worst_n < worst_num * nn) {
            worst_num = slack;
            worst_n = n;
        }
        ++out.checked;
    }
    auto to_big = [](i128 v) {
        const bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        BigInt r = static_cast<std::uint64_t>(u >> 64);
        r <<= 64;
        r += static_cast<std::uint64_t>(u);
        return neg ? BigInt(-r) : r;
    };
    const BigInt den = BigInt(24) * (BigInt(1) << bits) * cq;
    out.worst_n = worst_n;
    out.worst_slack = Rational(to_big(worst_num), den);
    out.worst_slack_per_vertex = out.worst_slack / worst_n;
    return out;
}

} // namespace turan3

#endif // TURAN3_CONSTRUCTIONS_HPP
