#ifndef TURAN3_PATTERNS_HPP
#define TURAN3_PATTERNS_HPP

#include "hypergraph.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turan3 {

/// One walk token: a base vertex symbol (1-based) and a copy index, so that
/// "3^1" is copy 1 of vertex 3 and plain "3" is copy 0.
struct WalkLabel {
    int base = 1;
    int copy = 0;

    friend bool operator==(const WalkLabel&, const WalkLabel&) = default;
    friend auto operator<=>(const WalkLabel&, const WalkLabel&) = default;

    std::string to_string() const {
        return copy == 0 ? std::to_string(base) : std::to_string(base) + "^" + std::to_string(copy);
    }
};

/// A tight walk: every three consecutive tokens name an edge.
struct WalkString {
    std::vector<WalkLabel> tokens;

    std::string to_string() const {
        std::string out;
        for (const auto& t : tokens) {
            if (!out.empty()) out.push_back(' ');
            out += t.to_string();
        }
        return out;
    }

    /// Whitespace-separated tokens "b" or "b^c" with b >= 1, c >= 0.
    static WalkString parse(std::string_view text) {
        WalkString w;
        std::istringstream in{std::string(text)};
        std::string tok;
        auto number = [&](std::string_view s) {
            if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string_view::npos) {
                throw std::invalid_argument("bad walk token '" + tok + "'");
            }
            return std::stoi(std::string(s));
        };
        while (in >> tok) {
            WalkLabel label;
            const std::string_view sv(tok);
            if (auto caret = sv.find('^'); caret != std::string_view::npos) {
                label.base = number(sv.substr(0, caret));
                label.copy = number(sv.substr(caret + 1));
            } else {
                label.base = number(sv);
            }
            if (label.base < 1) throw std::invalid_argument("walk vertex symbols start at 1");
            w.tokens.push_back(label);
        }
        return w;
    }

    static WalkString sequence(std::initializer_list<int> bases) {
        WalkString w;
        for (int b : bases) w.tokens.push_back({b, 0});
        return w;
    }
};

/// Graph whose edges are the consecutive triples of the walk, on its distinct
/// labels numbered in order of first appearance.
inline Hypergraph3 from_walk(const WalkString& walk) {
    if (walk.tokens.size() < 3) throw std::invalid_argument("a walk needs at least three tokens");
    std::map<WalkLabel, int> ids;
    std::vector<int> vertex;
    for (const auto& t : walk.tokens) {
        auto [it, fresh] = ids.try_emplace(t, static_cast<int>(ids.size()));
        vertex.push_back(it->second);
    }
    if (ids.size() > static_cast<std::size_t>(max_vertices)) throw std::length_error("walk names more than 16 vertices");
    Hypergraph3 g(static_cast<int>(ids.size()));
    for (std::size_t i = 0; i + 2 < vertex.size(); ++i) {
        const int x = vertex[i], y = vertex[i + 1], z = vertex[i + 2];
        if (x == y || y == z || x == z) {
            throw std::invalid_argument("walk triple '" + walk.tokens[i].to_string() + " " + walk.tokens[i + 1].to_string() +
                                        " " + walk.tokens[i + 2].to_string() + "' repeats a label");
        }
        g.add_edge(x, y, z);
    }
    return g;
}

struct Pattern {
    std::string name;
    Hypergraph3 graph;
    std::optional<WalkString> walk;
};

namespace detail {

inline WalkString cycle_walk(int length, int wrap) {
    WalkString w;
    for (int i = 1; i <= length; ++i) w.tokens.push_back({i, 0});
    for (int i = 1; i <= wrap; ++i) w.tokens.push_back({i, 0});
    return w;
}

inline void check_cycle_length(int length) {
    if (length < 4) throw std::invalid_argument("tight cycles need length >= 4");
    if (length > max_vertices) throw std::length_error("tight cycles are limited to 16 vertices");
}

} // namespace detail

/// C_l: consecutive triples of 1 2 ... l 1 2.
inline Pattern tight_cycle(int length) {
    detail::check_cycle_length(length);
    auto w = detail::cycle_walk(length, 2);
    return {"C" + std::to_string(length), from_walk(w), w};
}

/// C_l minus an edge: consecutive triples of 1 2 ... l 1.
inline Pattern tight_cycle_minus(int length) {
    detail::check_cycle_length(length);
    auto w = detail::cycle_walk(length, 1);
    return {"C" + std::to_string(length) + "-", from_walk(w), w};
}

inline Pattern k4() {
    auto p = tight_cycle(4);
    p.name = "K4";
    return p;
}

/// Labelled as C4-, so vertex 3 (0-based 2) lies in all three edges.
inline Pattern k4_minus() {
    auto p = tight_cycle_minus(4);
    p.name = "K4-";
    return p;
}

inline Pattern book32() { return {"B32", make(5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}), std::nullopt}; }

inline Pattern book33() { return {"B33", make(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}}), std::nullopt}; }

/// C<l>, C<l>-, K4, K4-, B32 or B33.
inline Pattern pattern_by_name(std::string_view name) {
    if (name == "K4") return k4();
    if (name == "K4-") return k4_minus();
    if (name == "B32") return book32();
    if (name == "B33") return book33();
    if (name.size() >= 2 && name[0] == 'C') {
        std::string_view digits = name.substr(1);
        const bool minus = digits.back() == '-';
        if (minus) digits.remove_suffix(1);
        if (!digits.empty() && digits.size() <= 2 && digits.find_first_not_of("0123456789") == std::string_view::npos) {
            const int length = std::stoi(std::string(digits));
            return minus ? tight_cycle_minus(length) : tight_cycle(length);
        }
    }
    throw std::invalid_argument("unknown pattern name '" + std::string(name) + "'");
}

/// Comma-separated pattern names; an empty string yields no patterns.
inline std::vector<Pattern> parse_pattern_list(std::string_view list) {
    std::vector<Pattern> out;
    while (!list.empty()) {
        const auto comma = list.find(',');
        const auto item = list.substr(0, comma);
        if (!item.empty()) out.push_back(pattern_by_name(item));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    return out;
}

inline std::vector<std::string> pattern_names(const std::vector<Pattern>& patterns) {
    std::vector<std::string> out;
    for (const auto& p : patterns) out.push_back(p.name);
    return out;
}

} // namespace turan3

#endif // TURAN3_PATTERNS_HPP
