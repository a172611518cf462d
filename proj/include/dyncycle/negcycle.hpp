#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dyncycle/graph.hpp"
#include "dyncycle/sssp.hpp"

namespace dyncycle {

// Worst-case O(m + n log n) per vertex update maintenance of "does G have a
// negative cycle" together with a feasible price function when it does not.
//
// Every vertex v is split into v_in -> v_out (cost 0, capacity 1) and every
// edge uv becomes u_out -> v_in with cost w(uv) and capacity 1. The structure
// keeps a minimum cost circulation of this network plus potentials pi with
// non-negative reduced costs c(e) - pi(a) + pi(b) on every residual arc a->b.
// The circulation has negative cost iff G has a negative cycle, and otherwise
// p(v) = -pi(v_in) is feasible for G.
class NegativeCycleDetector {
  public:
    explicit NegativeCycleDetector(std::size_t n);

    std::size_t num_vertices() const { return g_.num_vertices(); }

    // Replaces every edge incident to v. Uses at most two shortest augmenting
    // path searches.
    void vertex_update(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out);

    bool has_negative_cycle() const { return cost_ < 0; }

    // p(v) = -pi(v_in). Throws NegativeCyclePresent if G has a negative cycle.
    PriceFunction price_function() const;

    // Clears every vertex of d (one vertex update each) and records what was
    // removed. Throws InvalidConfig if a removal is already pending.
    void remove_vertices(std::span<const VertexId> d);
    // Restores the edges cleared by the pending remove_vertices. Throws
    // NothingToRevert if there is none.
    void revert();
    bool removal_pending() const { return pending_.has_value(); }

    const DynamicDigraph& graph() const { return g_; }
    Weight circulation_cost() const { return cost_; }
    std::size_t dijkstra_count_last_update() const { return dijkstra_last_; }
    std::uint64_t total_augmentations() const { return augmentations_; }
    // Potential of the split vertices: in(v) = 2v, out(v) = 2v + 1.
    const std::vector<Weight>& potentials() const { return pi_; }

    // Exhaustive certificate checks, for tests.
    bool check_conservation() const;
    bool check_residual_feasibility() const;
    // Every flow-carrying arc has zero reduced cost (meaningful when the
    // circulation cost is 0).
    bool check_tight_flow() const;
    // Flow-carrying original edges, as (u, v, w).
    EdgeBatch flow_edges() const;
    bool carries_flow(VertexId v) const { return through_[v] != 0; }

  private:
    enum class ArcKind : unsigned char { SplitForward, SplitBackward, EdgeForward, EdgeBackward };

    static std::size_t in_node(VertexId v) { return 2 * std::size_t{v}; }
    static std::size_t out_node(VertexId v) { return 2 * std::size_t{v} + 1; }

    void cancel_through(VertexId v);
    void augment_once();
    void recompute_cost();

    struct Removal {
        std::vector<VertexId> order;
        std::vector<EdgeBatch> in;
        std::vector<EdgeBatch> out;
    };

    DynamicDigraph g_;
    std::vector<char> through_;     // flow on v_in -> v_out
    std::vector<VertexId> out_flow_; // z with flow on v_out -> z_in, or kNoVertex
    std::vector<VertexId> in_flow_;  // u with flow on u_out -> v_in, or kNoVertex
    std::vector<Weight> pi_;
    std::vector<std::size_t> excess_;  // split nodes with one unit of excess
    std::vector<std::size_t> deficit_; // split nodes with one unit of deficit
    Weight cost_ = 0;
    std::size_t dijkstra_last_ = 0;
    std::uint64_t augmentations_ = 0;
    std::optional<Removal> pending_;
};

} // namespace dyncycle
