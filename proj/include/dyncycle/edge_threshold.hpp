#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <unordered_map>
#include <vector>

#include "dyncycle/ext_weight.hpp"
#include "dyncycle/graph.hpp"
#include "dyncycle/sssp.hpp"

namespace dyncycle {

enum class InsertOutcome { Ok, RefusedNegativeCycle };

// Exact fully dynamic distance oracle under single-edge updates. Insertions
// that would close a negative cycle are refused and leave the oracle
// unchanged.
class DynamicDistanceOracle {
  public:
    struct Counters {
        std::uint64_t inserts = 0;
        std::uint64_t deletes = 0;
        std::uint64_t distance_queries = 0;
        std::uint64_t refusals = 0;
        std::uint64_t total() const { return inserts + deletes + distance_queries; }
    };

    virtual ~DynamicDistanceOracle() = default;

    // Throws AlreadyPresent if uv exists.
    virtual InsertOutcome insert_edge(VertexId u, VertexId v, Weight w) = 0;
    // Throws NotPresent if uv is absent.
    virtual void delete_edge(VertexId u, VertexId v) = 0;
    virtual ExtWeight distance(VertexId s, VertexId t) = 0;
    virtual std::size_t num_vertices() const = 0;
    virtual std::size_t num_edges() const = 0;
    virtual const Counters& counters() const = 0;
};

// Graph plus a feasible price function; every distance is one Dijkstra.
class NaiveOracle final : public DynamicDistanceOracle {
  public:
    explicit NaiveOracle(std::size_t n);

    InsertOutcome insert_edge(VertexId u, VertexId v, Weight w) override;
    void delete_edge(VertexId u, VertexId v) override;
    ExtWeight distance(VertexId s, VertexId t) override;
    std::size_t num_vertices() const override { return g_.num_vertices(); }
    std::size_t num_edges() const override { return g_.num_edges(); }
    const Counters& counters() const override { return counters_; }

    const DynamicDigraph& graph() const { return g_; }
    const PriceFunction& prices() const { return p_; }

  private:
    DynamicDigraph g_;
    PriceFunction p_;
    Counters counters_;
};

// Threshold cycle detection, phi(G) < mu, under single-edge insertions and
// deletions, on top of a distance oracle holding the part G0 of the graph
// that has no cycle lighter than mu. Pending edges wait in per-vertex lists
// and migrate into the oracle one at a time. Requires mu >= 0.
class EdgeThresholdDetector {
  public:
    // Throws InvalidThreshold if mu < 0 or mu is not finite, InvalidConfig if
    // the oracle is null or holds edges.
    EdgeThresholdDetector(std::unique_ptr<DynamicDistanceOracle> oracle, Weight mu);

    // Throws AlreadyPresent if uv exists.
    void insert_edge(VertexId u, VertexId v, Weight w);
    // Throws NotPresent if uv is absent.
    void delete_edge(VertexId u, VertexId v);

    bool cycle_below_threshold() const { return !queue_.empty(); }

    Weight mu() const { return mu_; }
    const DynamicDigraph& graph() const { return g_; }
    // Edges held by the oracle.
    EdgeBatch base_edges() const;
    const EdgeBatch& pending(VertexId v) const { return e1_[v]; }
    const DynamicDistanceOracle& oracle() const { return *oracle_; }
    std::uint64_t updates() const { return updates_; }
    std::uint64_t update_calls() const { return update_calls_; }

  private:
    static std::uint64_t key(VertexId u, VertexId v) { return (std::uint64_t{u} << 32) | v; }

    void update(VertexId v);
    void move_to_back(VertexId v);
    void drop_from_queue(VertexId v);

    std::unique_ptr<DynamicDistanceOracle> oracle_;
    Weight mu_;
    DynamicDigraph g_;
    std::vector<EdgeBatch> e1_;
    std::unordered_map<std::uint64_t, VertexId> owner_;
    std::list<VertexId> queue_;
    std::vector<std::list<VertexId>::iterator> queue_pos_;
    std::vector<char> queued_;
    std::uint64_t updates_ = 0;
    std::uint64_t update_calls_ = 0;
};

} // namespace dyncycle
