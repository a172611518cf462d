#include <doctest.h>

#include <algorithm>

#include "dyncycle/errors.hpp"
#include "dyncycle/ext_weight.hpp"
#include "dyncycle/graph.hpp"
#include "dyncycle/random.hpp"

using namespace dyncycle;

namespace {

EdgeBatch sorted(EdgeBatch b) {
    std::sort(b.begin(), b.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.from, x.to, x.weight) < std::tie(y.from, y.to, y.weight);
    });
    return b;
}

} // namespace

TEST_CASE("ext weight ordering and arithmetic") {
    CHECK(ExtWeight::neg_inf() < ExtWeight(-1e18));
    CHECK(ExtWeight(1e18) < ExtWeight::pos_inf());
    CHECK(ExtWeight(2) < ExtWeight(3));
    CHECK(ExtWeight() == ExtWeight::pos_inf());
    CHECK((ExtWeight(2) + ExtWeight(3)) == ExtWeight(5));
    CHECK((ExtWeight::neg_inf() + ExtWeight(3)).is_neg_inf());
    CHECK((ExtWeight::neg_inf() + ExtWeight::pos_inf()).is_pos_inf());
    CHECK(min(ExtWeight(4), ExtWeight::neg_inf()).is_neg_inf());
    CHECK(ExtWeight(7).to_string() == "7");
    CHECK(ExtWeight(-3).to_string() == "-3");
    CHECK(ExtWeight(1.5).to_string() == "1.5");
    CHECK(ExtWeight::pos_inf().to_string() == "+inf");
    CHECK(ExtWeight::neg_inf().to_string() == "-inf");
    CHECK(ExtWeight::from_double(ExtWeight(1.25).as_double()) == ExtWeight(1.25));
}

TEST_CASE("vertex update on an empty graph inserts the batch") {
    DynamicDigraph g(3);
    const EdgeBatch out{{0, 1, 5}};
    const EdgeBatch removed = g.apply_vertex_update(0, {}, out);
    CHECK(removed.empty());
    CHECK(g.get_weight(0, 1) == 5.0);
    CHECK(g.num_edges() == 1);
}

TEST_CASE("clearing vertex update returns removed edges") {
    DynamicDigraph g(3);
    g.insert_edge(0, 1, 5);
    const EdgeBatch removed = g.apply_vertex_update(0, {}, {});
    CHECK(removed == EdgeBatch{{0, 1, 5}});
    CHECK(g.num_edges() == 0);
}

TEST_CASE("vertex update replaces incident edges") {
    DynamicDigraph g(3);
    g.insert_edge(0, 1, 5);
    g.insert_edge(2, 0, 3);
    const EdgeBatch in{{2, 0, 7}};
    const EdgeBatch removed = g.apply_vertex_update(0, in, {});
    CHECK(sorted(removed) == sorted({{0, 1, 5}, {2, 0, 3}}));
    CHECK(g.edges() == EdgeBatch{{2, 0, 7}});
}

TEST_CASE("parallel insertions collapse to the minimum weight") {
    DynamicDigraph g(2);
    g.insert_edge(0, 1, 5);
    g.insert_edge(0, 1, 3);
    CHECK(g.get_weight(0, 1) == 3.0);
    g.insert_edge(0, 1, 9);
    CHECK(g.get_weight(0, 1) == 3.0);
    CHECK(g.num_edges() == 1);
}

TEST_CASE("deleting a missing edge signals NotPresent") {
    DynamicDigraph g(2);
    CHECK_THROWS_AS(g.delete_edge(0, 1), NotPresent);
    CHECK(g.num_edges() == 0);
}

TEST_CASE("self loops are ordinary edges") {
    DynamicDigraph g(2);
    g.insert_edge(0, 0, 2);
    CHECK(g.get_weight(0, 0) == 2.0);
    CHECK(g.incident_edges(0).size() == 1);
    CHECK(g.apply_vertex_update(0, {}, {}).size() == 1);
    CHECK(g.num_edges() == 0);
}

TEST_CASE("invalid input is rejected") {
    DynamicDigraph g(2);
    CHECK_THROWS_AS(g.insert_edge(0, 2, 1), InvalidVertex);
    CHECK_THROWS_AS(g.apply_vertex_update(5, {}, {}), InvalidVertex);
    const EdgeBatch bad{{1, 1, 1}};
    CHECK_THROWS_AS(g.apply_vertex_update(0, bad, {}), InvalidBatch);
    CHECK_THROWS_AS(g.insert_edge(0, 1, std::numeric_limits<double>::quiet_NaN()), InvalidBatch);
}

TEST_CASE("random update sequences keep adjacency mirrored and restorable") {
    Rng rng(11);
    const std::size_t n = 12;
    DynamicDigraph g(n);
    for (int step = 0; step < 400; ++step) {
        const auto v = static_cast<VertexId>(rng.below(n));
        EdgeBatch in;
        EdgeBatch out;
        for (VertexId u = 0; u < n; ++u) {
            if (rng.chance(0.2)) {
                in.push_back({u, v, static_cast<Weight>(rng.between(-5, 20))});
            }
            if (u != v && rng.chance(0.2)) {
                out.push_back({v, u, static_cast<Weight>(rng.between(-5, 20))});
            }
        }
        const EdgeBatch before = sorted(g.edges());
        const EdgeBatch removed = g.apply_vertex_update(v, {}, {});
        for (const Edge& e : removed) {
            g.insert_edge(e.from, e.to, e.weight);
        }
        CHECK(sorted(g.edges()) == before);
        g.apply_vertex_update(v, in, out);
        REQUIRE(g.check_consistency());
        std::size_t pairs = 0;
        for (VertexId a = 0; a < n; ++a) {
            for (VertexId b = 0; b < n; ++b) {
                pairs += g.has_edge(a, b);
            }
        }
        CHECK(pairs == g.num_edges());
    }
}

TEST_CASE("pair set degrees collapse duplicates") {
    const PairSet k(5, {{0, 1}, {1, 0}, {0, 1}, {2, 2}, {3, 4}});
    CHECK(k.size() == 5);
    CHECK(k.deg_k(0) == 1);
    CHECK(k.deg_k(1) == 1);
    CHECK(k.deg_k(2) == 1);
    CHECK(k.deg_k(3) == 1);
    CHECK(k.pairs_from(0) == std::vector<std::size_t>{0, 2});
    CHECK(k.pairs_to(2) == std::vector<std::size_t>{3});
    CHECK_THROWS_AS(PairSet(2, {{0, 2}}), InvalidVertex);
}
