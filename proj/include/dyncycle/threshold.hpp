#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <span>
#include <unordered_map>
#include <vector>

#include "dyncycle/graph.hpp"
#include "dyncycle/sssp.hpp"

namespace dyncycle {

// Maintains whether the minimum cycle weight of a dynamic digraph is below a
// fixed threshold mu >= 0, under batch insertions centered at a vertex and
// arbitrary batch deletions.
//
// The edge set is split into E0, whose graph G0 has no cycle lighter than mu,
// and per-vertex pending sets E1(v). E1 is non-empty exactly when the whole
// graph has a cycle lighter than mu, so the answer is "is any E1(v) non-empty".
// Pending vertices are kept in order of their last centered insertion, and
// repairs always start from the oldest one, which gives amortized
// O(m + n log n) per update. A feasible price function on G0 lets the cycle
// search run Dijkstra in the presence of negative weights.
class ThresholdDetector {
  public:
    struct Counters {
        std::uint64_t inserts = 0;
        std::uint64_t deletes = 0;
        std::uint64_t update_calls = 0;
    };

    // Throws InvalidThreshold if mu < 0 or mu is NaN.
    ThresholdDetector(std::size_t n, Weight mu);

    // Adds a batch centered at v. Empty batches are ignored. Throws
    // InvalidBatch if an edge does not touch v and AlreadyPresent if an edge
    // already exists (delete it first).
    void insert(VertexId v, std::span<const Edge> f_v);

    // Deletes the given edges (weights are ignored). Throws NotPresent, before
    // changing anything, if one of them is absent.
    void remove(std::span<const Edge> f);

    // Replaces every edge incident to v: remove(incident edges), then insert.
    void vertex_update(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out);

    bool cycle_below_threshold() const { return !queue_.empty(); }

    Weight mu() const { return mu_; }
    const DynamicDigraph& graph() const { return g_; }
    const DynamicDigraph& base_graph() const { return g0_; }
    const PriceFunction& base_prices() const { return p0_; }
    const EdgeBatch& pending(VertexId v) const { return e1_[v]; }
    std::vector<VertexId> queue_order() const { return {queue_.begin(), queue_.end()}; }
    const Counters& counters() const { return counters_; }

  private:
    static std::uint64_t key(VertexId u, VertexId v) { return (std::uint64_t{u} << 32) | v; }

    void update(VertexId v);
    void move_to_back(VertexId v);
    void drop_from_queue(VertexId v);

    Weight mu_;
    DynamicDigraph g_;
    DynamicDigraph g0_;
    PriceFunction p0_;
    std::vector<EdgeBatch> e1_;
    // Owner vertex of each pending edge; edges of E0 are absent.
    std::unordered_map<std::uint64_t, VertexId> owner_;
    std::list<VertexId> queue_;
    std::vector<std::list<VertexId>::iterator> queue_pos_;
    std::vector<char> queued_;
    Counters counters_;
};

} // namespace dyncycle
