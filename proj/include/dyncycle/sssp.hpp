#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "dyncycle/errors.hpp"
#include "dyncycle/ext_weight.hpp"
#include "dyncycle/graph.hpp"

namespace dyncycle {

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class Direction { Forward, Reverse };

// p is feasible for a graph iff w(uv) + p(u) - p(v) >= 0 on every edge.
// An empty span stands for p == 0.
using PriceFunction = std::vector<Weight>;

// Per-thread operation counters, read by the benchmark driver.
struct SsspCounters {
    std::uint64_t dijkstra_calls = 0;
    std::uint64_t bellman_ford_calls = 0;
};
SsspCounters& sssp_counters();

struct DistArray {
    std::vector<ExtWeight> dist;
    // Previous vertex on the shortest path tree (the next vertex towards the
    // source for Direction::Reverse); kNoVertex for the source and unreached.
    std::vector<VertexId> parent;
};

// Distances from `source` (Forward) or to `source` (Reverse) in g, using
// Dijkstra on costs reduced by p. Only vertices with allowed[v] != 0 are
// traversed when `allowed` is non-empty. Distances are reported in original
// units. Throws InfeasiblePrices on a negative reduced cost.
DistArray dijkstra(const DynamicDigraph& g, VertexId source, std::span<const Weight> p = {},
                   Direction dir = Direction::Forward, std::span<const char> allowed = {});

bool is_feasible(const DynamicDigraph& g, std::span<const Weight> p, std::span<const char> allowed = {});

// Minimum weight of a cycle through v in a non-negatively weighted graph.
// Throws NegativeEdge if h has a negative edge.
ExtWeight min_cycle_through_vertex(const DynamicDigraph& h, VertexId v);

struct InsertionCycle {
    // Minimum weight of a cycle through v in H+F.
    ExtWeight weight;
    // Feasible price function on H+F; present iff weight >= 0.
    std::optional<PriceFunction> prices;
};

// Minimum weight cycle through v in H+F where H has no negative cycle, p is
// feasible on H and F is centered at v. Edges of F parallel to edges of H
// collapse to the smaller weight. Throws InvalidBatch if F is not centered at v.
InsertionCycle min_cycle_with_insertion(const DynamicDigraph& h, std::span<const Weight> p, VertexId v,
                                        std::span<const Edge> f_v);

// Shortest <=h-hop distances from (Forward) or to (Reverse) a source in the
// graph with every edge touching a forbidden vertex removed, plus one
// witnessing walk per reached vertex.
class HopDistTable {
  public:
    HopDistTable(std::size_t n, VertexId source, std::size_t hops, Direction dir);

    VertexId source() const { return source_; }
    std::size_t hops() const { return hops_; }
    Direction direction() const { return dir_; }
    const std::vector<ExtWeight>& dist() const { return dist_; }
    ExtWeight dist(VertexId v) const { return dist_[v]; }

    // The stored walk as a vertex sequence. Forward: source ... v.
    // Reverse: v ... source. Empty if v was not reached.
    std::vector<VertexId> path(VertexId v) const;

  private:
    friend HopDistTable bellman_ford_hops(const DynamicDigraph&, VertexId, std::size_t, std::span<const char>,
                                          Direction);

    VertexId source_;
    std::size_t hops_;
    Direction dir_;
    std::size_t n_;
    std::vector<ExtWeight> dist_;
    // pred_[r * n + v]: neighbor used in round r to improve v, kNoVertex if
    // the value was carried over from round r - 1.
    std::vector<VertexId> pred_;
    // Last round at which dist_[v] changed.
    std::vector<std::uint32_t> round_;
};

// `forbidden` may be empty. A forbidden source still has distance 0 to itself.
HopDistTable bellman_ford_hops(const DynamicDigraph& g, VertexId source, std::size_t hops,
                               std::span<const char> forbidden = {}, Direction dir = Direction::Forward);

struct StaticCycleCheck {
    bool negative_cycle = false;
    // Feasible price function when !negative_cycle.
    PriceFunction prices;
};

// Bellman-Ford from a virtual source joined to every vertex by a 0-weight edge.
StaticCycleCheck static_negative_cycle(const DynamicDigraph& g);

namespace detail {

// Dijkstra over an implicit graph.
//
// for_each_arc(x, emit) must call emit(y, weight, reduced_cost) for every arc
// leaving x in the search direction. Keys are reduced distances; `dist`
// accumulates raw weights. on_settle(x) returning true stops the search.
template <class ForEachArc, class OnSettle>
void dijkstra_core(std::size_t n, std::span<const VertexId> sources, ForEachArc&& for_each_arc,
                   OnSettle&& on_settle, std::vector<double>& key, std::vector<double>& dist,
                   std::vector<VertexId>& parent) {
    ++sssp_counters().dijkstra_calls;
    constexpr double inf = std::numeric_limits<double>::infinity();
    key.assign(n, inf);
    dist.assign(n, inf);
    parent.assign(n, kNoVertex);
    std::vector<char> settled(n, 0);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (VertexId s : sources) {
        key[s] = 0;
        dist[s] = 0;
        heap.push({0.0, s});
    }
    while (!heap.empty()) {
        auto [k, x] = heap.top();
        heap.pop();
        if (settled[x] || k > key[x]) {
            continue;
        }
        settled[x] = 1;
        if (on_settle(x)) {
            return;
        }
        for_each_arc(x, [&](VertexId y, Weight w, Weight rc) {
            if (rc < 0) {
                if (rc < -1e-9 * (1.0 + std::abs(w) + std::abs(dist[x]) + std::abs(key[x]))) {
                    throw InfeasiblePrices("negative reduced cost " + std::to_string(rc) + " on arc " +
                                           std::to_string(x) + "->" + std::to_string(y));
                }
                rc = 0;
            }
            if (settled[y]) {
                return;
            }
            const double nk = key[x] + rc;
            if (nk < key[y]) {
                key[y] = nk;
                dist[y] = dist[x] + w;
                parent[y] = x;
                heap.push({nk, y});
            }
        });
    }
}

} // namespace detail

} // namespace dyncycle
