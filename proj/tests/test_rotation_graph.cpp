#include <doctest.h>

#include "rotsys/rot_format.hpp"
#include "rotsys/rotation_graph.hpp"
#include "test_util.hpp"

using namespace rotsys;

TEST_CASE("parses K4 from a 4-line file") {
    const auto g = parse_rotation_graph(
        "a: b c d\n"
        "b: a d c\n"
        "c: a b d\n"
        "d: a c b\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.adjacent(g.index_of("a"), g.index_of("d")));
    CHECK(g.degree(0) == 3);
}

TEST_CASE("comments and blank lines are ignored") {
    const auto g = parse_rotation_graph(
        "# a triangle\n"
        "\n"
        "a: b c   # neighbors of a\n"
        "b: c a\n"
        "c: a b\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("asymmetric adjacency is rejected") {
    CHECK_THROWS_WITH_AS(parse_rotation_graph("a: b\nb:\n"),
                         doctest::Contains("asymmetric"), ValidationError);
}

TEST_CASE("duplicate neighbor in a rotation is rejected") {
    CHECK_THROWS_WITH_AS(parse_rotation_graph("a: b b\nb: a\n"),
                         doctest::Contains("duplicate neighbor"), ValidationError);
}

TEST_CASE("unknown neighbor id is rejected") {
    CHECK_THROWS_WITH_AS(parse_rotation_graph("a: q\n"), doctest::Contains("unknown neighbor"),
                         ValidationError);
}

TEST_CASE("loops are rejected") {
    CHECK_THROWS_AS(parse_rotation_graph("a: a\n"), ValidationError);
}

TEST_CASE("syntax errors carry the line number") {
    try {
        parse_rotation_graph("a: b\nnonsense line\nb: a\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("serialization starts each rotation at the smallest neighbor") {
    const auto g = parse_rotation_graph("m: z q a\nz: m\nq: m\na: m\n");
    CHECK(serialize_rotation_graph(g) == "a: m\nm: a z q\nq: m\nz: m\n");
}

TEST_CASE("parse then serialize is the identity on serialized output") {
    const auto g = testutil::random_rotation_graph(12, 14, 7);
    const std::string text = serialize_rotation_graph(g);
    const auto reparsed = parse_rotation_graph(text);
    CHECK(serialize_rotation_graph(reparsed) == text);
    CHECK(reparsed.vertex_count() == g.vertex_count());
    CHECK(reparsed.edge_count() == g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        CHECK(reparsed.id(v) == g.id(v));
        // same cyclic order: rotations agree up to starting point
        const auto a = g.rotation(v);
        const auto b = reparsed.rotation(v);
        REQUIRE(a.size() == b.size());
        if (a.empty()) continue;
        const int shift = reparsed.rotation_pos(v, a[0]);
        REQUIRE(shift >= 0);
        for (std::size_t k = 0; k < a.size(); ++k)
            CHECK(b[(shift + k) % b.size()] == a[k]);
    }
}

TEST_CASE("induced subgraph keeps ids and cyclic order") {
    const auto g = testutil::w4();
    const auto sub = g.induced({g.index_of("b"), g.index_of("c"), g.index_of("a")});
    CHECK(sub.vertex_count() == 3);
    CHECK(sub.edge_count() == 3);  // hub a with rim b, c adjacent
}

TEST_CASE("connectivity") {
    CHECK(testutil::cycle(5).connected());
    const auto two = RotationGraph::from_rotations({{"a", {"b"}}, {"b", {"a"}}, {"c", {}}});
    CHECK_FALSE(two.connected());
}
