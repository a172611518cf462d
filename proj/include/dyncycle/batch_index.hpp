#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dyncycle/ext_weight.hpp"
#include "dyncycle/graph.hpp"
#include "dyncycle/negcycle.hpp"
#include "dyncycle/random.hpp"
#include "dyncycle/sssp.hpp"

namespace dyncycle {

// Batch-deletion multiple-pairs shortest paths.
//
// Preprocesses (G, pairs) so that for any vertex set D the distances
// delta_{G \ D}(s_l, t_l) of all pairs can be recomputed without touching the
// whole graph. Answers are exact with high probability: every reported value
// is the length of a real s_l -> t_l walk in G \ D, and it equals the distance
// whenever the sampled hub sets hit the relevant shortest paths.
//
// Levels k = 0 .. L-1 have hop limits 2^(k+1). Each level samples a hub set
// C, extends it to an ordered cover c_1, c_2, ... by alternating a sampled hub
// with the currently most congested vertex, and stores shortest <=hop-limit
// paths to and from every c_j in G minus {c_1 .. c_{j-1}}. A query rebuilds
// only the stored paths that D destroyed, using small sketch graphs.
class BatchDeletionIndex {
  public:
    static constexpr double kDefaultHitConstant = 4.0;

    struct PathRef {
        std::uint32_t j;     // cover position
        VertexId endpoint;   // the non-hub end of the stored path
        bool towards_hub;    // true: endpoint -> c_j ("from" path); false: c_j -> endpoint
    };

    struct Candidate {
        ExtWeight value;
        std::uint32_t j;
    };

    struct Level {
        std::size_t hop_limit = 0;
        std::vector<VertexId> sample;   // C, in sampled order
        std::vector<char> in_sample;
        std::vector<VertexId> cover;    // ordered superset of the sample
        std::vector<char> cover_from_sample;
        // [j][v]: <=hop_limit distance c_j -> v (to_len) and v -> c_j
        // (from_len) avoiding c_1 .. c_{j-1}.
        std::vector<std::vector<ExtWeight>> to_len;
        std::vector<std::vector<ExtWeight>> from_len;
        // [j]: stored walks, flattened; walk of v is verts[offset[v] .. offset[v+1]).
        struct PathStore {
            std::vector<std::uint32_t> offset;
            std::vector<VertexId> verts;
        };
        std::vector<PathStore> to_paths;
        std::vector<PathStore> from_paths;
        std::vector<double> congestion;
        // [u]: stored paths containing u.
        std::vector<std::vector<PathRef>> through;
        // [l]: (d^{j}(s_l, t_l), j) sorted ascending.
        std::vector<std::vector<Candidate>> candidates;
    };

    struct QueryResult {
        bool negative_cycle = false;
        std::vector<ExtWeight> dist; // empty when negative_cycle
    };

    // Intermediate values of a query, for diagnostics and tests.
    struct QueryTrace {
        std::size_t cutoff_level = 0;                      // 0-based level whose sample serves long paths
        std::vector<ExtWeight> long_paths;                 // [l]
        std::vector<std::vector<ExtWeight>> survivor;      // [level][l]: min over j not in X
        std::vector<std::vector<ExtWeight>> estimate;      // [level][l]
        std::vector<std::vector<std::vector<std::uint32_t>>> x_sets; // [level][l]
    };

    // Throws InvalidConfig if d_max == 0 or c_hit <= 0.
    BatchDeletionIndex(const DynamicDigraph& g, PairSet pairs, std::size_t d_max, std::uint64_t seed,
                       double c_hit = kDefaultHitConstant);

    // Distances of all pairs in G \ d, or a negative-cycle report.
    QueryResult query(std::span<const VertexId> d, QueryTrace* trace = nullptr);

    std::size_t num_vertices() const { return g_.num_vertices(); }
    const DynamicDigraph& graph() const { return g_; }
    const PairSet& pairs() const { return pairs_; }
    std::size_t max_hops() const { return h_; }
    const std::vector<Level>& levels() const { return levels_; }
    std::vector<VertexId> stored_path(std::size_t level, std::size_t j, VertexId v, bool towards_hub) const;
    // Additive log term used in congestion weights.
    std::size_t log_term() const { return log_term_; }

    // Cutoff level for |D| = d (0-based).
    std::size_t cutoff_level(std::size_t d) const;

  private:
    void build_level(Level& level, std::size_t hop_limit, Rng& rng);
    void process_hub(Level& level, VertexId c, std::vector<char>& removed);

    struct SketchDistances {
        std::vector<VertexId> vertices; // sorted
        std::vector<ExtWeight> dist;    // parallel to vertices
        ExtWeight lookup(VertexId v, bool& found) const;
    };
    SketchDistances sketch_distances(const Level& level, std::uint32_t j, std::vector<VertexId> hit,
                                     bool towards_hub, std::span<const char> in_d,
                                     std::span<const Weight> p, std::vector<std::uint32_t>& local);

    DynamicDigraph g_;
    PairSet pairs_;
    std::size_t d_max_;
    double c_hit_;
    std::size_t h_ = 2;
    std::size_t log_term_ = 0;
    std::vector<Level> levels_;
    NegativeCycleDetector negdet_;
};

// Largest power of two <= sqrt(n / d_max), clamped to [2, max(2, n)].
std::size_t hop_bound_for(std::size_t n, std::size_t d_max);

} // namespace dyncycle
