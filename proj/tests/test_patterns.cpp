#include "oracles.hpp"

#include <turan3/blowup.hpp>
#include <turan3/canonical.hpp>
#include <turan3/constructions.hpp>
#include <turan3/containment.hpp>
#include <turan3/density.hpp>
#include <turan3/enumerate.hpp>
#include <turan3/io.hpp>
#include <turan3/patterns.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace turan3;

namespace {

std::vector<Hypergraph3> all_classes_up_to(int n_max) {
    std::vector<Hypergraph3> out;
    for (int n = 1; n <= n_max; ++n) enumerate_free(n, {}, [&](const Hypergraph3& g) { out.push_back(g); });
    return out;
}

} // namespace

TEST(FromWalk, Examples) {
    const Hypergraph3 c5m = from_walk(WalkString::parse("1 2 3 4 5 1"));
    EXPECT_EQ(c5m.vertex_count(), 5);
    EXPECT_EQ(c5m.edge_count(), 4);
    EXPECT_TRUE(oracle::isomorphic(c5m, make(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}})));

    const Hypergraph3 c5 = from_walk(WalkString::parse("1 2 3 4 5 1 2"));
    EXPECT_EQ(c5.vertex_count(), 5);
    EXPECT_EQ(c5.edge_count(), 5);

    EXPECT_EQ(from_walk(WalkString::parse("1 2 3")), make(3, {{0, 1, 2}}));
    // labels are numbered by first appearance
    EXPECT_EQ(from_walk(WalkString::parse("7 3^2 5 7")), make(3, {{0, 1, 2}}));
}

TEST(FromWalk, Errors) {
    EXPECT_THROW(from_walk(WalkString::parse("1 2 1 3")), std::invalid_argument);
    EXPECT_THROW(from_walk(WalkString::parse("1 2")), std::invalid_argument);
    EXPECT_THROW(WalkString::parse("1 x 3"), std::invalid_argument);
    EXPECT_THROW(WalkString::parse("0 1 2"), std::invalid_argument);
    EXPECT_THROW(WalkString::parse("1 2^ 3"), std::invalid_argument);
    EXPECT_EQ(WalkString::parse(" 1  3^1\t2 ").to_string(), "1 3^1 2");
}

TEST(Patterns, NamedGraphs) {
    EXPECT_TRUE(isomorphic(tight_cycle(4).graph, k4().graph));
    EXPECT_TRUE(isomorphic(tight_cycle_minus(4).graph, k4_minus().graph));
    EXPECT_EQ(tight_cycle_minus(5).graph.vertex_count(), 5);
    EXPECT_EQ(tight_cycle_minus(5).graph.edge_count(), 4);
    for (int l = 5; l <= 16; ++l) {
        EXPECT_EQ(tight_cycle(l).graph.edge_count(), l);
        EXPECT_EQ(tight_cycle_minus(l).graph.edge_count(), l - 1);
        EXPECT_EQ(tight_cycle_minus(l).graph.vertex_count(), l);
    }
    EXPECT_THROW(tight_cycle(3), std::invalid_argument);
    EXPECT_THROW(tight_cycle_minus(3), std::invalid_argument);
    EXPECT_EQ(book32().graph.edge_count(), 3);
    EXPECT_EQ(book33().graph.edge_count(), 4);
    EXPECT_EQ(k4_minus().graph.edge_count(), 3);
}

TEST(Patterns, ByName) {
    for (const char* name : {"C5-", "C7", "K4", "K4-", "B32", "B33", "C16-"}) {
        EXPECT_EQ(pattern_by_name(name).name, name);
    }
    EXPECT_THROW(pattern_by_name("C3"), std::invalid_argument);
    EXPECT_THROW(pattern_by_name("K5"), std::invalid_argument);
    EXPECT_THROW(pattern_by_name("C"), std::invalid_argument);
    EXPECT_THROW(pattern_by_name("C17-"), std::length_error);
    EXPECT_EQ(pattern_names(parse_pattern_list("C5-,K4-")), (std::vector<std::string>{"C5-", "K4-"}));
    EXPECT_TRUE(parse_pattern_list("").empty());

    // built-in names identify distinct isomorphism classes
    std::set<CanonicalCode> codes;
    for (const char* name : {"C4-", "C5", "C5-", "C6", "C6-", "B32", "B33", "K4-", "K4"}) {
        codes.insert(canonical_code(pattern_by_name(name).graph));
    }
    EXPECT_EQ(codes.size(), 8U);  // C4 and K4 coincide, C4- and K4- coincide
}

TEST(Contains, Examples) {
    EXPECT_TRUE(contains(k4().graph, make(3, {{0, 1, 2}})));
    EXPECT_FALSE(contains(hn_graph(6), tight_cycle_minus(5).graph));
    EXPECT_TRUE(contains(blowup(k4_minus().graph, 2), tight_cycle_minus(5).graph));
    EXPECT_FALSE(contains(make(3, {}), make(4, {})));
    EXPECT_TRUE(contains(make(4, {}), make(4, {})));
}

TEST(Contains, WitnessIsAnEmbedding) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const Hypergraph3 host = oracle::random_graph(rng, 6 + static_cast<int>(rng() % 7), 0.5);
        const Hypergraph3& pattern = tight_cycle_minus(4 + static_cast<int>(rng() % 3)).graph;
        const auto w = find_embedding(host, pattern);
        if (!w) continue;
        std::set<int> image(w->begin(), w->end());
        EXPECT_EQ(image.size(), w->size());
        for (const auto& e : pattern.edges()) EXPECT_TRUE(host.has_edge((*w)[e.a], (*w)[e.b], (*w)[e.c]));
    }
}

TEST(Contains, AgreesWithExhaustiveInjections) {
    const auto patterns = all_classes_up_to(5);
    std::vector<Hypergraph3> hosts;
    for (std::uint64_t m = 0; m < 1024; m += 3) hosts.push_back(oracle::from_mask(5, m));
    std::mt19937_64 rng(32);
    for (int i = 0; i < 120; ++i) hosts.push_back(oracle::random_graph(rng, 6, 0.15 + 0.7 * (i % 5) / 4.0));
    for (const auto& h : patterns) {
        if (h.edge_count() == 0) continue;
        const Embedder emb(h);
        for (const auto& g : hosts) {
            ASSERT_EQ(emb.contains(Adjacency(g)), oracle::contains(g, h)) << format_graph(g) << format_graph(h);
        }
    }
}

TEST(Contains, RootedSearchFindsExactlyTheCopiesThroughAnEdge) {
    std::mt19937_64 rng(33);
    const std::vector<Pattern> patterns{tight_cycle_minus(5), k4_minus(), book32(), tight_cycle(5)};
    for (int trial = 0; trial < 400; ++trial) {
        Hypergraph3 g = oracle::random_graph(rng, 5 + static_cast<int>(rng() % 3), 0.35);
        const Triple e = triple_at(static_cast<int>(rng() % static_cast<unsigned>(choose3(g.vertex_count()))));
        if (g.has_edge(e)) continue;
        const Pattern& p = patterns[trial % patterns.size()];
        const bool before = oracle::contains(g, p.graph);
        g.add_edge(e);
        const bool after = oracle::contains(g, p.graph);
        if (!before) EXPECT_EQ(Embedder(p.graph).contains_through(Adjacency(g), e), after);
    }
}

TEST(Contains, ReflexiveAndMonotone) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const Hypergraph3 g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 6), 0.4);
        EXPECT_TRUE(contains(g, g));
        Hypergraph3 h = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 3), 0.6);
        if (!contains(g, h)) continue;
        for (const auto& e : h.edges()) {
            h.remove_edge(e.a, e.b, e.c);
            EXPECT_TRUE(contains(g, h));
        }
    }
}

TEST(Blowup, Examples) {
    const Hypergraph3 e = make(3, {{0, 1, 2}});
    const std::vector<int> twos{2, 2, 2};
    EXPECT_TRUE(isomorphic(blowup(e, twos), hn_graph(6)));
    EXPECT_EQ(blowup(e, twos).edge_count(), 8);
    EXPECT_EQ(blowup(tight_cycle_minus(5).graph, 1), tight_cycle_minus(5).graph);
    EXPECT_TRUE(contains(blowup(tight_cycle_minus(5).graph, 2), tight_cycle_minus(7).graph));
    EXPECT_THROW(blowup(k4().graph, 5), std::length_error);
    EXPECT_THROW(blowup(e, std::vector<int>{1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(blowup(e, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST(Blowup, NoEdgeMeetsAPartTwice) {
    const std::vector<int> sizes{3, 1, 2, 4};
    const Hypergraph3 b = blowup(k4().graph, sizes);
    const PartMap parts = blowup_parts(sizes);
    std::vector<int> part_of(10);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    for (const auto& t : b.edges()) {
        EXPECT_NE(part_of[t.a], part_of[t.b]);
        EXPECT_NE(part_of[t.b], part_of[t.c]);
        EXPECT_NE(part_of[t.a], part_of[t.c]);
    }
    EXPECT_EQ(b.edge_count(), 3 * 1 * 2 + 3 * 1 * 4 + 3 * 2 * 4 + 1 * 2 * 4);
}

TEST(Blowup, PreservesContainment) {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        const Hypergraph3 g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 2), 0.5);
        const Hypergraph3 h = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 2), 0.5);
        if (!contains(g, h)) continue;
        for (int t = 1; t <= 3; ++t) EXPECT_TRUE(contains(blowup(g, t), h));
    }
}

TEST(WalkEmbedding, StatedStrings) {
    const std::vector<int> twos4(4, 2), twos5(5, 2);
    const Hypergraph3 k4m2 = blowup(k4_minus().graph, twos4);
    const PartMap p4 = blowup_parts(twos4);
    // K4- here is the walk 1 2 3 4 1, so vertex symbol s is pattern vertex s - 1
    EXPECT_TRUE(verify_walk_embedding(k4m2, p4, WalkString::parse("1 3 2 4 3^1 1")));

    const Hypergraph3 c52 = blowup(tight_cycle_minus(5).graph, twos5);
    const PartMap p5 = blowup_parts(twos5);
    EXPECT_TRUE(verify_walk_embedding(c52, p5, WalkString::parse("1 3 2 4 3^1 5 4^1 1")));
    EXPECT_TRUE(verify_walk_embedding(c52, p5, WalkString::parse("1 2 3 1^1 2^1 3^1 4 5 1")));

    EXPECT_FALSE(verify_walk_embedding(c52, p5, WalkString::parse("1 2 4 5 1")));
    EXPECT_FALSE(verify_walk_embedding(c52, p5, WalkString::parse("1 2 3 4 5 2")));
    EXPECT_FALSE(verify_walk_embedding(c52, p5, WalkString::parse("1 2 3 1")));
    EXPECT_THROW(verify_walk_embedding(c52, p5, WalkString::parse("1 2 3 6 1")), std::out_of_range);
    EXPECT_THROW(verify_walk_embedding(c52, p5, WalkString::parse("1 2 3^2 4 1")), std::out_of_range);
}

TEST(WalkEmbedding, LongerCyclesInDoubledCycles) {
    for (int k : {5, 7, 8, 10, 11}) {
        // only vertices 1, 2, 3 need a second copy; the full doubling of C10-
        // and C11- exceeds 16 vertices, and this blow-up is a subgraph of it
        std::vector<int> sizes(static_cast<std::size_t>(k), 1);
        sizes[0] = sizes[1] = sizes[2] = 2;
        const Hypergraph3 host = blowup(tight_cycle_minus(k).graph, sizes);
        const PartMap parts = blowup_parts(sizes);
        std::string walk = "1 2 3 1^1 2^1 3^1";
        for (int s = 4; s <= k; ++s) walk += " " + std::to_string(s);
        walk += " 1";
        EXPECT_TRUE(verify_walk_embedding(host, parts, WalkString::parse(walk))) << k;
        EXPECT_TRUE(contains(host, tight_cycle_minus(k + 3).graph)) << k;
        if (2 * k <= max_vertices) EXPECT_TRUE(contains(blowup(tight_cycle_minus(k).graph, 2), tight_cycle_minus(k + 3).graph));
    }
}

TEST(ThreePartite, CycleMinusIffLengthDivisibleByThree) {
    for (int l = 4; l <= 12; ++l) EXPECT_EQ(is_3partite(tight_cycle_minus(l).graph), l % 3 == 0) << l;
}

TEST(Density, Examples) {
    const Hypergraph3 edge = make(3, {{0, 1, 2}});
    EXPECT_EQ(count_induced(k4().graph, edge), 4U);
    EXPECT_EQ(count_induced(hn_graph(6), tight_cycle_minus(5).graph), 0U);
    EXPECT_EQ(induced_density(hn_graph(6), edge), make_rational(8, 20));
    EXPECT_EQ(induced_density(k4().graph, k4().graph), 1);
    EXPECT_THROW(density_table(k4().graph, 5), std::invalid_argument);
}

TEST(Density, TableSumsToOneAndMatchesCounts) {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const Hypergraph3 g = oracle::random_graph(rng, n, 0.5);
        for (int k = 0; k <= std::min(n, 5); ++k) {
            Rational sum = 0;
            for (const auto& e : density_table(g, k)) {
                sum += e.density;
                EXPECT_EQ(e.count, count_induced(g, e.type.graph()));
            }
            EXPECT_EQ(sum, 1);
        }
    }
}
