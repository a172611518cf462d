#include <doctest.h>

#include "dyncycle/errors.hpp"
#include "dyncycle/oracles.hpp"
#include "dyncycle/threshold.hpp"
#include "dyncycle/workload.hpp"
#include "reference.hpp"

using namespace dyncycle;

namespace {

void check_invariants(const ThresholdDetector& t) {
    const DynamicDigraph& g0 = t.base_graph();
    CHECK(oracle_phi(g0) >= ExtWeight(t.mu()));
    CHECK(ref::feasible(g0, t.base_prices()));
    std::size_t pending = 0;
    for (VertexId v = 0; v < t.graph().num_vertices(); ++v) {
        pending += t.pending(v).size();
        for (const Edge& e : t.pending(v)) {
            CHECK(t.graph().get_weight(e.from, e.to) == e.weight);
            CHECK_FALSE(g0.has_edge(e.from, e.to));
        }
    }
    CHECK(pending + g0.num_edges() == t.graph().num_edges());
    CHECK(t.cycle_below_threshold() == oracle_threshold(t.graph(), t.mu()));
}

} // namespace

TEST_CASE("threshold construction") {
    CHECK_FALSE(ThresholdDetector(5, 0).cycle_below_threshold());
    CHECK_FALSE(ThresholdDetector(5, 3.5).cycle_below_threshold());
    CHECK_NOTHROW(ThresholdDetector(0, 1));
    CHECK_THROWS_AS(ThresholdDetector(3, -1), InvalidThreshold);
    CHECK_THROWS_AS(ThresholdDetector(3, std::numeric_limits<double>::quiet_NaN()), InvalidThreshold);
}

TEST_CASE("threshold is strict") {
    const EdgeBatch two_cycle{{0, 1, 1}, {1, 0, 2}};
    ThresholdDetector below(3, 4);
    below.insert(0, two_cycle);
    CHECK(below.cycle_below_threshold());
    ThresholdDetector equal(3, 3);
    equal.insert(0, two_cycle);
    CHECK_FALSE(equal.cycle_below_threshold());
}

TEST_CASE("threshold deletions and errors") {
    ThresholdDetector t(3, 4);
    t.insert(0, EdgeBatch{{0, 1, 1}, {1, 0, 2}});
    REQUIRE(t.cycle_below_threshold());
    t.remove(EdgeBatch{});
    CHECK(t.cycle_below_threshold());
    CHECK_THROWS_AS(t.remove(EdgeBatch{{1, 2, 0}}), NotPresent);
    CHECK(t.graph().num_edges() == 2);
    CHECK_THROWS_AS(t.insert(0, EdgeBatch{{0, 1, 5}}), AlreadyPresent);
    CHECK_THROWS_AS(t.insert(0, EdgeBatch{{1, 2, 5}}), InvalidBatch);
    t.remove(EdgeBatch{{1, 0, 0}});
    CHECK_FALSE(t.cycle_below_threshold());
    t.insert(2, EdgeBatch{});
    CHECK(t.graph().num_edges() == 1);
}

TEST_CASE("threshold vertex updates") {
    ThresholdDetector t(3, 10);
    t.vertex_update(0, EdgeBatch{{2, 0, 2}}, EdgeBatch{{0, 1, 2}});
    t.vertex_update(1, EdgeBatch{{0, 1, 2}}, EdgeBatch{{1, 2, 2}});
    CHECK(t.cycle_below_threshold());
    t.vertex_update(1, EdgeBatch{{0, 1, 2}}, EdgeBatch{{1, 2, 2}});
    CHECK(t.cycle_below_threshold());
    t.vertex_update(1, EdgeBatch{{0, 1, 5}}, EdgeBatch{{1, 2, 5}});
    CHECK_FALSE(t.cycle_below_threshold());
    t.vertex_update(1, EdgeBatch{{0, 1, 1}}, EdgeBatch{{1, 2, 1}});
    CHECK(t.cycle_below_threshold());
    t.vertex_update(2, {}, {});
    CHECK_FALSE(t.cycle_below_threshold());
    check_invariants(t);
}

TEST_CASE("negative cycle at threshold zero") {
    ThresholdDetector t(2, 0);
    t.insert(0, EdgeBatch{{0, 1, -3}, {1, 0, 2}});
    CHECK(t.cycle_below_threshold());
    t.vertex_update(1, EdgeBatch{{0, 1, -3}}, EdgeBatch{{1, 0, 3}});
    CHECK_FALSE(t.cycle_below_threshold());
    check_invariants(t);
}

TEST_CASE("pending batches merge when they close no light cycle") {
    ThresholdDetector t(4, 5);
    t.insert(0, EdgeBatch{{0, 1, 1}, {0, 2, 1}});
    CHECK(t.pending(0).empty());
    CHECK(t.base_graph().num_edges() == 2);
    t.insert(1, EdgeBatch{{1, 0, 3}});
    CHECK(t.pending(1).size() == 1);
    CHECK(t.queue_order() == std::vector<VertexId>{1});
    t.insert(3, EdgeBatch{{3, 3, 2}});
    CHECK(t.queue_order() == std::vector<VertexId>{1, 3});
    t.remove(EdgeBatch{{0, 1, 0}});
    CHECK(t.queue_order() == std::vector<VertexId>{3});
    check_invariants(t);
}

TEST_CASE("threshold random workloads keep invariants and the update budget") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        WorkloadParams params;
        params.n = 4 + seed % 9;
        params.W = 20;
        params.updates = 40;
        params.seed = seed;
        params.regime = seed % 3 == 0 ? WeightRegime::Signed : WeightRegime::Nonneg;
        const Workload wl = generate(params);
        Rng rng(seed);
        const double mu = params.regime == WeightRegime::Signed
                              ? 0.0
                              : static_cast<double>(rng.between(0, 3 * static_cast<std::int64_t>(params.n) * params.W));
        ThresholdDetector t(wl.n, mu);
        for (const Op& op : wl.ops) {
            if (op.kind == OpKind::VertexUpdate) {
                t.vertex_update(op.v, op.in, op.out);
                check_invariants(t);
            }
        }
        const auto& c = t.counters();
        CHECK(c.update_calls <= 2 * c.inserts + c.deletes);
    }
}
