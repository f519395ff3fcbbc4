#ifndef TURAN3_POLYNOMIAL_HPP
#define TURAN3_POLYNOMIAL_HPP

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace turan3 {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }
    explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

    static Polynomial constant(const Rational& v) { return Polynomial({v}); }
    static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        std::vector<Rational> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long long>(k));
        return Polynomial(std::move(d));
    }

    /// p(x + a)
    Polynomial shifted(const Rational& a) const {
        std::vector<Rational> out(c_);
        // repeated synthetic division (Taylor shift)
        const std::size_t n = out.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t k = n - 1; k > i; --k) out[k - 1] += a * out[k];
        return Polynomial(std::move(out));
    }

    /// Enclosure of p over [lo, hi]: expand around lo and bound each term of
    /// the shifted polynomial separately on [0, hi - lo].
    Interval range(const Rational& lo, const Rational& hi) const {
        const Polynomial s = shifted(lo);
        if (s.c_.empty()) return {0, 0};
        const Rational w = hi - lo;
        Interval out{s.c_[0], s.c_[0]};
        Rational pw = 1;
        for (std::size_t k = 1; k < s.c_.size(); ++k) {
            pw *= w;
            const Rational term = s.c_[k] * pw;
            if (term > 0) out.hi += term;
            else out.lo += term;
        }
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Polynomial::constant(-1); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.c_.empty() || b.c_.empty()) return {};
        std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Splits [lo, hi] until `settled(a, b)` holds on every piece; false if some
/// piece is still unsettled at the depth limit.
inline bool certify_on(const Rational& lo, const Rational& hi,
                       const std::function<bool(const Rational&, const Rational&)>& settled, int max_depth = 40) {
    struct Piece {
        Rational a, b;
        int depth;
    };
    std::vector<Piece> stack{{lo, hi, 0}};
    while (!stack.empty()) {
        Piece p = stack.back();
        stack.pop_back();
        if (settled(p.a, p.b)) continue;
        if (p.depth == max_depth) return false;
        const Rational mid = (p.a + p.b) / 2;
        stack.push_back({mid, p.b, p.depth + 1});
        stack.push_back({p.a, mid, p.depth + 1});
    }
    return true;
}

/// Bisects [lo, hi] for a sign change of p (signs at the ends must differ)
/// until the bracket is at most `width` wide.
inline Interval bisect_root(const Polynomial& p, Rational lo, Rational hi, const Rational& width) {
    const bool lo_positive = p(lo) > 0;
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        if ((p(mid) > 0) == lo_positive) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

} // namespace turan3

#endif // TURAN3_POLYNOMIAL_HPP
