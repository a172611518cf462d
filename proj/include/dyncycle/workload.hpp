#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dyncycle/graph.hpp"

namespace dyncycle {

// Nonneg: weights in {0} u [1, W]. Signed: integers in [-W, W].
enum class WeightRegime { Nonneg, Signed };

enum class OpKind { VertexUpdate, InsertEdge, DeleteEdge, Query };

struct Op {
    OpKind kind = OpKind::Query;
    // VertexUpdate: v, in, out. InsertEdge: u, v, w. DeleteEdge: u, v.
    VertexId u = 0;
    VertexId v = 0;
    Weight w = 0;
    EdgeBatch in;
    EdgeBatch out;
    std::size_t line = 0; // source line when read from a file
};

std::string to_string(OpKind kind);
std::string to_string(WeightRegime regime);

struct Workload {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    WeightRegime regime = WeightRegime::Nonneg;
    std::int64_t W = 1;
    std::vector<Op> ops;
};

struct WorkloadParams {
    std::size_t n = 20;
    std::int64_t W = 100;
    WeightRegime regime = WeightRegime::Nonneg;
    double avg_degree = 3.0;
    std::size_t updates = 100;
    // Probability of a query after each update.
    double query_rate = 1.0;
    // Single-edge insertions and deletions instead of vertex updates.
    bool edge_ops = false;
    // Start by updating every vertex once (or inserting up to the target edge count).
    bool warmup = true;
    double zero_fraction = 0.1;
    double negative_fraction = 0.1;
    std::uint64_t seed = 1;
};

// Deterministic in params. Throws InvalidConfig on n == 0 or W outside [1, 2^30].
Workload generate(const WorkloadParams& params);

// Applies an update op to g (queries are ignored). Edge ops throw like the
// graph operations.
void apply_op(DynamicDigraph& g, const Op& op);

} // namespace dyncycle
