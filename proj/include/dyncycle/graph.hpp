#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dyncycle/ext_weight.hpp"

namespace dyncycle {

using VertexId = std::uint32_t;

struct Edge {
    VertexId from = 0;
    VertexId to = 0;
    Weight weight = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeBatch = std::vector<Edge>;

// One adjacency entry: the neighbor on the other end and the edge weight.
struct Arc {
    VertexId head = 0;
    Weight weight = 0;
};

// Weighted digraph over the fixed vertex set {0, ..., n-1}.
//
// At most one edge per ordered pair; inserting a parallel edge keeps the
// smaller weight. Self-loops are ordinary edges. Both adjacency directions are
// stored so that vertex updates and reverse searches cost O(degree).
class DynamicDigraph {
  public:
    DynamicDigraph() = default;
    explicit DynamicDigraph(std::size_t n);

    std::size_t num_vertices() const { return out_.size(); }
    std::size_t num_edges() const { return m_; }

    // Inserts uv, or lowers its weight if uv is already present.
    void insert_edge(VertexId u, VertexId v, Weight w);
    // Throws NotPresent (graph unchanged) if uv is absent.
    Weight delete_edge(VertexId u, VertexId v);
    std::optional<Weight> get_weight(VertexId u, VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const { return get_weight(u, v).has_value(); }

    std::span<const Arc> out_arcs(VertexId v) const { return out_[v]; }
    // Arcs whose `head` is the tail of an edge into v.
    std::span<const Arc> in_arcs(VertexId v) const { return in_[v]; }

    std::size_t out_degree(VertexId v) const { return out_[v].size(); }
    std::size_t in_degree(VertexId v) const { return in_[v].size(); }
    // in + out; a self-loop counts twice.
    std::size_t degree(VertexId v) const { return out_[v].size() + in_[v].size(); }

    // Every edge touching v (a self-loop appears once).
    EdgeBatch incident_edges(VertexId v) const;

    // Removes every edge incident to v, then inserts the given batches. Every
    // edge of new_in must end at v and every edge of new_out must start at v.
    // Returns the removed edges.
    EdgeBatch apply_vertex_update(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out);

    // Removes every edge touching v and returns them.
    EdgeBatch clear_vertex(VertexId v);

    EdgeBatch edges() const;

    // Full scan of the mirror/count invariants; used by tests.
    bool check_consistency() const;

    void check_vertex(VertexId v) const;

  private:
    static std::vector<Arc>::iterator find_arc(std::vector<Arc>& arcs, VertexId head);
    static std::vector<Arc>::const_iterator find_arc(const std::vector<Arc>& arcs, VertexId head);

    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
    std::size_t m_ = 0;
};

// Throws InvalidBatch unless every edge of new_in ends at v and every edge of
// new_out starts at v.
void validate_centered(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out);

// Throws InvalidBatch unless every edge has v as an endpoint.
void validate_centered(VertexId v, std::span<const Edge> batch);

// An ordered list of source-target pairs together with the undirected pair
// graph K on V used to weight congestion.
class PairSet {
  public:
    PairSet() = default;
    PairSet(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs);

    std::size_t size() const { return pairs_.size(); }
    std::size_t num_vertices() const { return by_source_.size(); }
    const std::pair<VertexId, VertexId>& operator[](std::size_t l) const { return pairs_[l]; }
    const std::vector<std::pair<VertexId, VertexId>>& pairs() const { return pairs_; }

    // Number of distinct K-neighbors of v (duplicate pairs collapse).
    std::size_t deg_k(VertexId v) const { return deg_k_[v]; }
    const std::vector<VertexId>& k_neighbors(VertexId v) const { return k_adj_[v]; }

    // Indices l with s_l = v (resp. t_l = v).
    const std::vector<std::size_t>& pairs_from(VertexId v) const { return by_source_[v]; }
    const std::vector<std::size_t>& pairs_to(VertexId v) const { return by_target_[v]; }

  private:
    std::vector<std::pair<VertexId, VertexId>> pairs_;
    std::vector<std::vector<VertexId>> k_adj_;
    std::vector<std::size_t> deg_k_;
    std::vector<std::vector<std::size_t>> by_source_;
    std::vector<std::vector<std::size_t>> by_target_;
};

} // namespace dyncycle
