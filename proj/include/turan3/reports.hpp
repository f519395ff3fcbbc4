#ifndef TURAN3_REPORTS_HPP
#define TURAN3_REPORTS_HPP

#include "canonical.hpp"
#include "claims.hpp"
#include "constructions.hpp"
#include "density.hpp"
#include "enumerate.hpp"
#include "hypergraph.hpp"
#include "partition.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace turan3 {

using Json = nlohmann::json;

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json interval_json(const Interval& i) { return {{"lo", to_string(i.lo)}, {"hi", to_string(i.hi)}}; }

inline Json edges_json(const Hypergraph3& g) {
    Json out = Json::array();
    for (const auto& e : g.edges()) out.push_back({e.a, e.b, e.c});
    return out;
}

inline Json graph_json(const Hypergraph3& g) {
    return {{"n", g.vertex_count()},
            {"edge_count", g.edge_count()},
            {"edges", edges_json(g)},
            {"canonical", canonical_code(g).to_string()}};
}

inline Json codes_json(const std::vector<CanonicalCode>& codes) {
    Json out = Json::array();
    for (const auto& c : codes) out.push_back(c.to_string());
    return out;
}

inline Json report_json(const EnumerationReport& r) {
    Json by_edges = Json::object();
    for (const auto& [e, c] : r.by_edges) by_edges[std::to_string(e)] = c;
    return {{"n", r.n},
            {"forbidden", r.forbidden},
            {"total", r.total},
            {"by_edges", by_edges},
            {"max_edges", r.max_edges},
            {"extremal", codes_json(r.extremal)}};
}

inline Json report_json(int n, const std::vector<std::string>& forbidden, const ExtremalResult& r) {
    return {{"n", n}, {"forbidden", forbidden}, {"max_edges", r.max_edges}, {"extremal", codes_json(r.classes)}};
}

inline Json report_json(const BoundCheckResult& r) {
    return {{"holds", r.holds},
            {"checked", r.checked},
            {"worst_n", r.worst_n},
            {"worst_slack", rational_json(r.worst_slack)},
            {"worst_slack_per_vertex", rational_json(r.worst_slack_per_vertex)},
            {"first_failure", r.first_failure == 0 ? Json(nullptr) : Json(r.first_failure)}};
}

inline Json report_json(const std::vector<DensityEntry>& table) {
    Json out = Json::array();
    for (const auto& e : table) {
        out.push_back({{"type", e.type.to_string()}, {"count", e.count}, {"density", rational_json(e.density)}});
    }
    return out;
}

inline Json report_json(const PartitionStats& s) {
    return {{"x1", rational_json(s.x1)},       {"x2", rational_json(s.x2)},
            {"x3", rational_json(s.x3)},       {"t", rational_json(s.t)},
            {"f1", rational_json(s.f1)},       {"f2", rational_json(s.f2)},
            {"funky_edges", s.funky_edges},    {"funky_non_edges", s.funky_non_edges},
            {"eqmain_lhs", rational_json(s.eqmain)}};
}

inline const char* verdict(bool ok) { return ok ? "consistent" : "violated"; }

inline Json report_json(const RatioWitness& r) {
    const bool ok = r.ratio == make_rational(5, 4);
    return {{"claim", "ratio"},
            {"computed", rational_json(r.ratio)},
            {"reference_value", "5/4"},
            {"numerator", r.numerator},
            {"denominator", r.denominator},
            {"witness", edges_json(r.graph)},
            {"free_graphs", r.free_count},
            {"verdict", verdict(ok)}};
}

inline Json report_json(const PolyBoundReport& r) {
    return {{"name", r.name},
            {"computed", interval_json(r.computed)},
            {"computed_decimal", {to_double(r.computed.lo), to_double(r.computed.hi)}},
            {"reference_value", rational_json(r.reference_value)},
            {"direction", r.direction == BoundDirection::lower ? "lower" : "upper"},
            {"verdict", r.verdict()}};
}

inline Json report_json(const FalsifyReport& r) {
    Json listed = Json::array();
    for (const auto& p : r.violations) {
        listed.push_back({{"x1", rational_json(p.x1)},
                          {"x2", rational_json(p.x2)},
                          {"x3", rational_json(p.x3)},
                          {"t", rational_json(p.t)},
                          {"failed", p.failed}});
    }
    return {{"claim", "falsify"},
            {"grid_step", rational_json(r.step)},
            {"points", r.points},
            {"feasible", r.feasible},
            {"violations", r.violation_count},
            {"listed", listed},
            {"verdict", verdict(r.violation_count == 0)}};
}

inline Json report_json(const DuplicationReport& r) {
    auto cases = [](const std::vector<DuplicationCase>& v) {
        Json out = Json::array();
        for (const auto& c : v) {
            out.push_back({{"base", c.base}, {"vertex", c.vertex}, {"degree", c.degree}, {"contains_C5-", c.contains_c5_minus}});
        }
        return out;
    };
    return {{"claim", "duplication"}, {"claimed", cases(r.claimed)}, {"other", cases(r.other)}, {"verdict", verdict(r.holds)}};
}

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 15];
    return out;
}

/// Digest of the compact serialisation; object keys are already sorted.
inline std::string result_digest(const Json& result) { return fnv1a_hex(result.dump()); }

} // namespace turan3

#endif // TURAN3_REPORTS_HPP
