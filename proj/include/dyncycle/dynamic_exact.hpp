#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dyncycle/batch_index.hpp"
#include "dyncycle/ext_weight.hpp"
#include "dyncycle/graph.hpp"
#include "dyncycle/negcycle.hpp"

namespace dyncycle {

// ceil(n^(1/3) * (log2 n)^(2/3)), at least 1.
std::size_t default_phase_length(std::size_t n);

// Fully dynamic multiple-pairs shortest paths and exact minimum weight cycle
// under vertex updates.
//
// Updates are grouped into phases of delta updates. At a phase start the
// graph is snapshotted as G0, the delta highest-degree vertices D* of G0 are
// set aside and a batch-deletion index is built on G0 \ D*. A query deletes
// D* and the vertices touched in the phase from the index and patches in
// paths through those vertices with Dijkstra on the current graph.
class DynamicExact {
  public:
    enum class Mode { Mpsp, MinCycle };

    struct MpspAnswer {
        bool negative_cycle = false;
        std::vector<ExtWeight> dist; // empty when negative_cycle
    };

    // Throws InvalidConfig if delta == 0.
    static DynamicExact new_mpsp(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs,
                                 std::size_t delta, std::uint64_t seed,
                                 double c_hit = BatchDeletionIndex::kDefaultHitConstant);
    // delta == 0 selects default_phase_length(n).
    static DynamicExact new_mincycle(std::size_t n, std::size_t delta, std::uint64_t seed,
                                     double c_hit = BatchDeletionIndex::kDefaultHitConstant);

    void vertex_update(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out);

    // Throws InvalidConfig in min-cycle mode.
    MpspAnswer query_mpsp();
    // Throws InvalidConfig in MPSP mode.
    ExtWeight query_mincycle();

    Mode mode() const { return mode_; }
    std::size_t delta() const { return delta_; }
    std::size_t phase() const { return phase_; }
    const DynamicDigraph& graph() const { return g_; }
    const DynamicDigraph& phase_snapshot() const { return g0_; }
    const std::vector<VertexId>& high_degree_set() const { return d_star_; }
    const std::vector<VertexId>& touched() const { return touched_; }
    const BatchDeletionIndex& index() const { return *index_; }
    // Edges of G0 \ D*.
    std::size_t index_edge_count() const { return index_->graph().num_edges(); }

  private:
    DynamicExact(Mode mode, std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs, std::size_t delta,
                 std::uint64_t seed, double c_hit);

    void start_phase();
    std::vector<VertexId> removed_set() const;

    Mode mode_;
    std::size_t delta_;
    std::uint64_t seed_;
    double c_hit_;
    std::size_t phase_ = 0;
    DynamicDigraph g_;
    DynamicDigraph g0_;
    NegativeCycleDetector negdet_;
    std::vector<std::pair<VertexId, VertexId>> pairs_; // MPSP mode
    std::vector<VertexId> d_star_;
    std::vector<char> in_d_star_;
    std::vector<VertexId> touched_;
    std::vector<char> is_touched_;
    std::unique_ptr<BatchDeletionIndex> index_;
    // Min-cycle mode: pair index of the reversed edge, keyed by (u << 32) | v.
    std::unordered_map<std::uint64_t, std::size_t> edge_pair_;
};

} // namespace dyncycle
