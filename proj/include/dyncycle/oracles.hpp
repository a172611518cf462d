#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dyncycle/ext_weight.hpp"
#include "dyncycle/graph.hpp"

namespace dyncycle {

// Brute-force references. They share no code with the dynamic structures.

// True iff g has a negative cycle (Bellman-Ford from a virtual source).
bool oracle_has_negative_cycle(const DynamicDigraph& g);

// Minimum cycle weight: -inf with a negative cycle, +inf if acyclic.
ExtWeight oracle_phi(const DynamicDigraph& g);

// oracle_phi(g) < mu.
bool oracle_threshold(const DynamicDigraph& g, Weight mu);

struct OracleMpsp {
    bool negative_cycle = false;
    std::vector<ExtWeight> dist; // empty when negative_cycle
};

// Distances of the pairs in G \ d (Johnson).
OracleMpsp oracle_mpsp(const DynamicDigraph& g, std::span<const VertexId> d,
                       std::span<const std::pair<VertexId, VertexId>> pairs);

} // namespace dyncycle
