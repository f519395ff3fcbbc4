// Acceptance checks, one line per criterion. `acceptance --only 3` runs a single one.
#include "oracles.hpp"

#include <turan3/turan3.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

using namespace turan3;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

unsigned jobs() {
    if (const char* env = std::getenv("TURAN3_JOBS"); env && *env) return static_cast<unsigned>(std::atoi(env));
    return std::max(1U, std::thread::hardware_concurrency());
}

Hypergraph3 star(int n) {
    Hypergraph3 g(n);
    for (int b = 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) g.add_edge(0, b, c);
    return g;
}

void enumeration_counts(Outcome& o) {
    struct Case {
        const char* forbid;
        std::uint64_t expected;
    };
    for (const Case& c : {Case{"C5-,K4-", 161023}, Case{"C5-", 1528500}}) {
        const auto start = std::chrono::steady_clock::now();
        const EnumerationReport r = enumerate_free(8, parse_pattern_list(c.forbid), {}, {jobs(), 3});
        o.detail << "{" << c.forbid << "}: " << r.total << " (" << seconds_since(start) << "s) ";
        o.check(r.total == c.expected, std::string(c.forbid) + " expected " + std::to_string(c.expected));
    }
}

void extremal_values(Outcome& o) {
    const std::vector<Pattern> forbid{tight_cycle_minus(5)};
    const int expected[] = {4, 6, 10, 15, 21};
    for (int n = 4; n <= 8; ++n) {
        const ExtremalResult r = extremal(n, forbid, {jobs(), 3});
        o.detail << "ex(" << n << ")=" << r.max_edges << " classes=" << r.classes.size() << " ";
        o.check(r.max_edges == expected[n - 4], "ex(C5-," + std::to_string(n) + ")");
        if (n == 4) {
            o.check(r.classes.size() == 1 && r.classes[0] == canonical_code(k4().graph), "n=4 class is K4");
        } else {
            const auto s = canonical_code(star(n));
            o.check(std::find(r.classes.begin(), r.classes.end(), s) != r.classes.end(),
                    "star among n=" + std::to_string(n) + " classes");
        }
    }
}

void six_vertex(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    try {
        const RatioWitness w = six_vertex_ratio();
        const double t = seconds_since(start);
        o.detail << "max ratio " << to_string(w.ratio) << " over " << w.free_count << " free graphs (" << t << "s)";
        o.check(w.ratio == make_rational(5, 4), "ratio 5/4");
        o.check(t <= 60, "runtime within one minute");
    } catch (const std::logic_error& e) {
        o.check(false, e.what());
    }
}

void constructions(Outcome& o) {
    const Hypergraph3 m = modified_construction_12();
    o.detail << "|H6|=" << hn_graph(6).edge_count() << " |H12|=" << hn_graph(12).edge_count()
             << " modified=" << m.edge_count();
    o.check(hn_graph(6).edge_count() == 8 && hn_edge_count(6) == 8, "|H6| = 8");
    o.check(hn_graph(12).edge_count() == 70 && hn_edge_count(12) == 70, "|H12| = 70");
    o.check(m.edge_count() == 76, "modified construction has 76 edges");
    o.check(!contains(m, tight_cycle_minus(5).graph), "modified construction is C5- free");
}

void embeddings(Outcome& o) {
    const std::vector<int> twos4(4, 2), twos5(5, 2);
    const Hypergraph3 k4m2 = blowup(k4_minus().graph, twos4);
    const Hypergraph3 c52 = blowup(tight_cycle_minus(5).graph, twos5);
    o.check(contains(k4m2, tight_cycle_minus(5).graph), "C5- in K4-[2]");
    o.check(verify_walk_embedding(k4m2, blowup_parts(twos4), WalkString::parse("1 3 2 4 3^1 1")), "walk 1 3 2 4 3^1 1");
    o.check(contains(c52, tight_cycle_minus(7).graph), "C7- in C5-[2]");
    o.check(verify_walk_embedding(c52, blowup_parts(twos5), WalkString::parse("1 3 2 4 3^1 5 4^1 1")),
            "walk 1 3 2 4 3^1 5 4^1 1");
    for (int k : {5, 7, 8, 10, 11}) {
        // the walk only uses second copies of 1, 2 and 3; doubling just those
        // gives a subgraph of C_k-[2] that fits in 16 vertices for every k
        std::vector<int> sizes(static_cast<std::size_t>(k), 1);
        sizes[0] = sizes[1] = sizes[2] = 2;
        const Hypergraph3 host = blowup(tight_cycle_minus(k).graph, sizes);
        std::string walk = "1 2 3 1^1 2^1 3^1";
        for (int s = 4; s <= k; ++s) walk += " " + std::to_string(s);
        walk += " 1";
        const bool via_walk = verify_walk_embedding(host, blowup_parts(sizes), WalkString::parse(walk));
        const bool via_search = contains(host, tight_cycle_minus(k + 3).graph);
        o.check(via_walk && via_search, "C" + std::to_string(k + 3) + "- in C" + std::to_string(k) + "-[2]");
        if (2 * k <= max_vertices) {
            o.check(contains(blowup(tight_cycle_minus(k).graph, 2), tight_cycle_minus(k + 3).graph),
                    "C" + std::to_string(k + 3) + "- in the full C" + std::to_string(k) + "-[2]");
        }
        o.detail << "k=" << k << (via_walk && via_search ? " ok " : " missing ");
    }
}

void polynomial_claims(Outcome& o) {
    const PolyMaximum m = f2_poly_max();
    const RootBracket root = f2_poly_root();
    const auto bounds = part_bounds();
    const Interval x3 = bounds.at(0).computed, x1 = bounds.at(1).computed;
    const Rational width = make_rational(1, 1000000);
    o.detail << "f2 max " << to_string(m.value) << " at t=" << to_string(m.argmax) << "; root in [" << to_double(root.bracket.lo)
             << ", " << to_double(root.bracket.hi) << "]; x3 in [" << to_double(x3.lo) << ", " << to_double(x3.hi)
             << "]; x1 in [" << to_double(x1.lo) << ", " << to_double(x1.hi) << "] ";
    o.check(m.certified && m.argmax == 0, "f2 maximum certified at t = 0");
    o.check(m.value == make_rational(2, 9) - make_rational(221119, 1000000), "f2 maximum value");
    o.check(m.value <= make_rational(1104, 1000000), "f2 maximum below 0.001104");
    o.check(root.certified && root.bracket.width() <= width, "root bracket certified, width <= 1e-6");
    o.check(root.bracket.within(make_rational(108, 10000), make_rational(109, 10000)), "root in [0.0108, 0.0109]");
    o.check(x3.width() <= width && x3.within(make_rational(306, 1000), make_rational(3065, 10000)),
            "x3 bound in [0.306, 0.3065]");
    o.check(x1.width() <= width && x1.within(make_rational(3605, 10000), make_rational(361, 1000)),
            "x1 bound in [0.3605, 0.361]");
}

void bound_theorem(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    const BoundCheckResult r = bound_check(1000000, 2);
    const double t = seconds_since(start);
    o.detail << "checked " << r.checked << " values, worst n=" << r.worst_n << " slack "
             << to_double(r.worst_slack) << " (" << t << "s)";
    o.check(r.holds, "bound holds for 3 <= n <= 10^6");
    o.check(t <= 60, "runtime within one minute");
}

void property_suites(Outcome& o) {
    std::mt19937_64 rng(2024);
    int bad_codes = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = static_cast<int>(rng() % 9);
        const Hypergraph3 g = oracle::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(rng() % 9) / 8);
        bad_codes += canonical_code(g) != canonical_code(relabel(g, oracle::random_permutation(rng, n)));
    }
    o.check(bad_codes == 0, "canonical code invariance");

    const std::vector<std::vector<Pattern>> sets{
        {},           {k4()},       {k4_minus()}, {tight_cycle(4)}, {tight_cycle_minus(4)},         {tight_cycle(5)},
        {tight_cycle_minus(5)},     {book32()},   {book33()},       {tight_cycle_minus(5), k4_minus()}};
    int mismatches = 0;
    for (const auto& f : sets) {
        for (int n = 0; n <= 5; ++n) {
            const auto expected = oracle::orbit_count(n, [&](const Hypergraph3& g) {
                for (const auto& p : f)
                    if (oracle::contains(g, p.graph)) return false;
                return true;
            });
            mismatches += enumerate_free(n, f).total != expected;
        }
    }
    o.check(mismatches == 0, "enumeration equals brute-force orbit counts for n <= 5");

    int apex = 0, triangles = 0, closure = 0;
    const Pattern c5 = tight_cycle_minus(5), km = k4_minus();
    for (int n = 3; n <= 6; ++n) {
        enumerate_free(n, {c5}, [&](const Hypergraph3& g) {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c) {
                        int count = 0;
                        for (int v = 0; v < n; ++v) {
                            count += v != a && v != b && v != c && g.has_edge(v, a, b) && g.has_edge(v, a, c) &&
                                     g.has_edge(v, b, c);
                        }
                        apex += count > 1;
                    }
        });
        enumerate_free(n, {km}, [&](const Hypergraph3& g) {
            for (int v = 0; v < n; ++v) triangles += !link(g, v).is_triangle_free();
        });
        enumerate_free(n, {km, c5}, [&](const Hypergraph3& g) {
            for (int v = 0; v < n; ++v) {
                const Hypergraph3 d = duplicate_vertex(g, v);
                closure += contains(d, km.graph) || contains(d, c5.graph);
            }
        });
    }
    o.check(apex == 0, "apex uniqueness in C5- free graphs");
    o.check(triangles == 0, "triangle-free links in K4- free graphs");
    o.check(closure == 0, "duplication closure for {K4-, C5-} free graphs");

    const FalsifyReport f = falsify_region(make_rational(1, 200));
    o.check(f.violation_count == 0, "falsification sweep at 1/200");
    o.detail << "code mismatches " << bad_codes << ", count mismatches " << mismatches << ", apex " << apex
             << ", triangles " << triangles << ", closure " << closure << ", sweep " << f.points << " points / "
             << f.feasible << " feasible / " << f.violation_count << " violations";
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "enumeration counts on 8 vertices", enumeration_counts},
        {2, "extremal numbers of C5- for n = 4..8", extremal_values},
        {3, "six-vertex ratio", six_vertex},
        {4, "H6, H12 and the 76-edge construction", constructions},
        {5, "blow-up embeddings of longer cycles", embeddings},
        {6, "polynomial claims", polynomial_claims},
        {7, "H_n edge-count bound up to 10^6", bound_theorem},
        {8, "property suites", property_suites},
    };
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            only.push_back(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--only N]...\n";
            return 2;
        }
    }
    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        c.run(o);
        std::cout << "AC" << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " (" << seconds_since(start)
                  << "s): " << o.detail.str() << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
