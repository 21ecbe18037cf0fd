#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "fracfactor/graph.hpp"
#include "test_support.hpp"

using namespace fracfactor;

namespace {

std::vector<int> sorted_degrees(const Graph& g)
{
    auto d = g.degrees();
    std::sort(d.rbegin(), d.rend());
    return d;
}

int degree_sum(const Graph& g)
{
    auto d = g.degrees();
    return std::accumulate(d.begin(), d.end(), 0);
}

}  // namespace

TEST_CASE("graph6 parses the smallest hand-encoded strings")
{
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    const Graph k2 = parse_graph6("A_");
    CHECK(k2 == complete(2));

    const Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);

    CHECK(parse_graph6(">>graph6<<Bw\n") == complete(3));
}

TEST_CASE("graph6 serializes complete graphs")
{
    CHECK(to_graph6(complete(1)) == "@");
    CHECK(to_graph6(complete(2)) == "A_");
    CHECK(to_graph6(complete(3)) == "Bw");
}

TEST_CASE("graph6 uses the four-byte size form above 62 vertices")
{
    const Graph g = path(63);
    const std::string s = to_graph6(g);
    CHECK(static_cast<unsigned char>(s[0]) == 126);
    CHECK(s.substr(1, 3) == std::string{static_cast<char>(63), static_cast<char>(63 + 0), static_cast<char>(63 + 63)});
    CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 rejects malformed input with a byte offset")
{
    auto offset_of = [](std::string_view s) -> std::size_t {
        try {
            (void)parse_graph6(s);
        } catch (const Graph6Error& e) {
            return e.offset();
        }
        FAIL("expected a parse error");
        return 0;
    };
    CHECK(offset_of("Bw?") == 2);   // one byte too many
    CHECK(offset_of("B") == 1);     // truncated payload
    CHECK(offset_of("B ") == 1);    // space is below 63
    CHECK(offset_of("Ax") == 1);    // padding bit set: 'x' = 57 = 111001
    CHECK(offset_of(">>graph6<<A ") == 11);
    CHECK_THROWS_AS((void)parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS((void)parse_graph6("?"), Graph6Error);  // n = 0
    CHECK_THROWS_WITH_AS((void)parse_graph6(":Fa@x^"), doctest::Contains("sparse6"), Graph6Error);
    CHECK_THROWS_WITH_AS((void)parse_graph6("&B?o"), doctest::Contains("digraph6"), Graph6Error);
}

TEST_CASE("graph6 round trip on random labeled graphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 70;
        const Graph g = random_graph(n, 0.37, rng);
        const std::string s = to_graph6(g);
        const Graph back = parse_graph6(s);
        REQUIRE(back == g);
        REQUIRE(to_graph6(back) == s);
    }
}

TEST_CASE("edge lists")
{
    CHECK(parse_edge_list("2\n0 1") == complete(2));

    const Graph c4 = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0");
    CHECK(c4 == cycle(4));
    for (Vertex v = 0; v < 4; ++v)
        CHECK(c4.degree(v) == 2);

    const Graph p3 = parse_edge_list("3\n0 1\n0 1\n1 2");
    CHECK(p3.size() == 2);
    CHECK(p3 == path(3));

    auto line_of = [](std::string_view s) -> std::size_t {
        try {
            (void)parse_edge_list(s);
        } catch (const EdgeListError& e) {
            return e.line();
        }
        FAIL("expected a parse error");
        return 0;
    };
    CHECK(line_of("3\n0 1\n2 2") == 3);
    CHECK(line_of("3\n0 1\n\n1 3") == 4);
    CHECK(line_of("3\n0 x") == 2);
    CHECK(line_of("3\n0 1 2") == 2);
}

TEST_CASE("complete graphs")
{
    CHECK(complete(1).size() == 0);
    const Graph k4 = complete(4);
    CHECK(k4.size() == 6);
    CHECK(k4.min_degree() == 3);
    const Graph k7 = complete(7);
    CHECK(k7.size() == 21);
    for (Vertex v = 0; v < 7; ++v)
        CHECK(k7.degree(v) == 6);
    CHECK(complete(0).order() == 0);
}

TEST_CASE("disjoint union")
{
    const Graph two = disjoint_union(complete(1), complete(1));
    CHECK(two.order() == 2);
    CHECK(two.size() == 0);

    const Graph g = disjoint_union(complete(3), complete(2));
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);
    CHECK(g.adjacent(3, 4));
    CHECK_FALSE(g.adjacent(2, 3));

    const Graph h = disjoint_union(complete(5), complete(1));
    CHECK(h.order() == 6);
    CHECK(h.size() == 10);
    CHECK(h.min_degree() == 0);
}

TEST_CASE("join")
{
    CHECK(join(complete(1), complete(1)) == complete(2));
    CHECK(join(complete(1), disjoint_union(complete(1), complete(1))) == star(2));
    for (int n = 2; n <= 8; ++n)
        for (int a = 1; a < n; ++a)
            CHECK(join(complete(a), complete(n - a)) == complete(n));
}

TEST_CASE("join size law on random graphs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g1 = random_graph(1 + trial % 7, 0.5, rng);
        const Graph g2 = random_graph(1 + trial % 5, 0.3, rng);
        const Graph j = join(g1, g2);
        REQUIRE(j.size() == g1.size() + g2.size() + g1.order() * g2.order());
        REQUIRE(degree_sum(j) == 2 * j.size());
    }
}

TEST_CASE("extremal construction")
{
    const Graph e71 = extremal(7, 1);
    CHECK(e71.order() == 7);
    CHECK(e71.size() == 16);
    CHECK(sorted_degrees(e71) == std::vector<int>{6, 5, 5, 5, 5, 5, 1});

    // n = a + 2 leaves two K_1 vertices, both of degree a.
    const Graph e53 = extremal(5, 3);
    CHECK(e53.size() == 9);
    const auto d53 = e53.degrees();
    CHECK(std::count(d53.begin(), d53.end(), 3) == 2);
    CHECK(e53.min_degree() == 3);

    const Graph e31 = extremal(3, 1);
    CHECK(e31.size() == 2);
    CHECK(e31 == star(2));

    CHECK_THROWS_AS((void)extremal(4, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)extremal(5, 0), std::invalid_argument);
}

TEST_CASE("extremal size law")
{
    for (int a = 1; a <= 6; ++a)
        for (int n = a + 2; n <= a + 12; ++n) {
            const Graph g = extremal(n, a);
            CAPTURE(n);
            CAPTURE(a);
            REQUIRE(2 * g.size() == (n - 1) * (n - 2) + 2 * a);
            REQUIRE(g.min_degree() == a);
            REQUIRE(degree_sum(g) == 2 * g.size());
            if (n >= a + 3) {
                const auto d = g.degrees();
                REQUIRE(std::count(d.begin(), d.end(), a) == 1);
                REQUIRE(g.degree(n - 1) == a);
            }
        }
}

TEST_CASE("edge deletion")
{
    CHECK(delete_edge(complete(3), 0, 2) == path(3));
    CHECK(delete_edge(complete(2), 0, 1) == empty_graph(2));
    const Graph p4 = delete_edge(cycle(4), 3, 0);
    CHECK(p4 == path(4));
    CHECK(p4.size() == 3);
    CHECK_THROWS_AS((void)delete_edge(path(4), 0, 2), std::invalid_argument);
}

TEST_CASE("vertex deletion")
{
    const auto k4 = delete_vertices(complete(4), VertexSet{0});
    CHECK(k4.graph == complete(3));
    CHECK(k4.old_to_new == std::vector<Vertex>{-1, 0, 1, 2});
    CHECK(k4.new_to_old == std::vector<Vertex>{1, 2, 3});

    const auto c4 = delete_vertices(cycle(4), VertexSet{2});
    CHECK(c4.graph.size() == 2);
    CHECK(c4.graph == star(2));  // path 3-0-1, centre 0

    std::mt19937_64 rng(3);
    const Graph g = random_graph(9, 0.5, rng);
    CHECK(delete_vertices(g, VertexSet{}).graph == g);
    CHECK(delete_vertices(g, VertexSet{7, 2, 4}).graph == delete_vertices(g, VertexSet{2, 4, 7}).graph);
    const auto step = delete_vertices(delete_vertices(g, VertexSet{2}).graph, VertexSet{3});  // old 4
    CHECK(step.graph == delete_vertices(g, VertexSet{2, 4}).graph);
}

TEST_CASE("cut counts and d_{G-S}(T)")
{
    CHECK(cut_count(complete(4), VertexSet{0}, VertexSet{1, 2, 3}) == 3);
    CHECK(cut_count(cycle(4), VertexSet{0}, VertexSet{2}) == 0);
    CHECK(cut_count(extremal(7, 1), VertexSet{6}, VertexSet{0, 1, 2, 3, 4, 5}) == 1);
    CHECK_THROWS_AS((void)cut_count(complete(4), VertexSet{0, 1}, VertexSet{1}), std::invalid_argument);

    CHECK(degree_sum_minus(complete(5), VertexSet{0}, VertexSet{}) == 0);
    CHECK(degree_sum_minus(complete(5), VertexSet{0}, VertexSet{1, 2}) == 6);
    CHECK(degree_sum_minus(extremal(7, 1), VertexSet{}, VertexSet{6}) == 1);
    CHECK_THROWS_AS((void)degree_sum_minus(complete(3), VertexSet{2}, VertexSet{2}), std::invalid_argument);
}

TEST_CASE("set query identities on random graphs")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> role(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 9;
        const Graph g = random_graph(n, 0.5, rng);
        std::vector<Vertex> s_members, t_members;
        for (Vertex v = 0; v < n; ++v) {
            const int r = role(rng);
            if (r == 0)
                s_members.push_back(v);
            else if (r == 1)
                t_members.push_back(v);
        }
        const VertexSet s(s_members), t(t_members);
        REQUIRE(cut_count(g, s, t) == cut_count(g, t, s));

        // Recount d_{G-S}(T) on the induced subgraph G - S.
        const auto sub = delete_vertices(g, s);
        long recount = 0;
        for (Vertex v : t)
            recount += sub.graph.degree(sub.old_to_new[static_cast<std::size_t>(v)]);
        REQUIRE(degree_sum_minus(g, s, t) == recount);

        long d_t = 0;
        for (Vertex v : t)
            d_t += g.degree(v);
        REQUIRE(degree_sum_minus(g, s, t) == d_t - cut_count(g, s, t));
    }
}

TEST_CASE("components")
{
    const auto two = components(disjoint_union(complete(5), complete(1)));
    REQUIRE(two.size() == 2);
    CHECK(two[0].size() == 5);
    CHECK(two[1].size() == 1);
    CHECK(components(cycle(4)).size() == 1);
    CHECK(components(empty_graph(3)).size() == 3);
    CHECK(is_connected(cycle(4)));
    CHECK_FALSE(is_connected(empty_graph(2)));
}

TEST_CASE("graph invariants")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(1 + trial % 15, 0.4, rng);
        REQUIRE(degree_sum(g) == 2 * g.size());
        for (Vertex u = 0; u < g.order(); ++u) {
            REQUIRE_FALSE(g.adjacent(u, u));
            for (Vertex v = 0; v < g.order(); ++v)
                REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    CHECK_FALSE(g.remove_edge(0, 1));
}

TEST_CASE("permute and complement")
{
    const std::vector<Vertex> perm{2, 0, 1};
    const Graph p = permute(path(3), perm);  // 0-1-2 becomes 2-0-1
    CHECK(p.adjacent(2, 0));
    CHECK(p.adjacent(0, 1));
    CHECK_FALSE(p.adjacent(1, 2));
    CHECK_THROWS_AS((void)permute(path(3), std::vector<Vertex>{0, 0, 1}), std::invalid_argument);
    CHECK(complement(complete(5)) == empty_graph(5));
    CHECK(complement(cycle(5)).size() == 5);
}
