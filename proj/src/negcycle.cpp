#include "dyncycle/negcycle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

#include "dyncycle/errors.hpp"

namespace dyncycle {

NegativeCycleDetector::NegativeCycleDetector(std::size_t n)
    : g_(n), through_(n, 0), out_flow_(n, kNoVertex), in_flow_(n, kNoVertex), pi_(2 * n, 0.0) {}

void NegativeCycleDetector::cancel_through(VertexId v) {
    if (!through_[v]) {
        return;
    }
    // Unit capacity on v_in -> v_out: exactly one unit enters v_in and leaves v_out.
    const VertexId u = in_flow_[v];
    const VertexId z = out_flow_[v];
    if (u == kNoVertex || z == kNoVertex) {
        throw std::logic_error("flow through split edge without matching edge flow");
    }
    through_[v] = 0;
    out_flow_[u] = kNoVertex;
    in_flow_[v] = kNoVertex;
    out_flow_[v] = kNoVertex;
    in_flow_[z] = kNoVertex;
    if (u != v) {
        excess_.push_back(out_node(u));
        deficit_.push_back(in_node(z));
    }
}

void NegativeCycleDetector::vertex_update(VertexId v, std::span<const Edge> new_in,
                                          std::span<const Edge> new_out) {
    g_.check_vertex(v);
    validate_centered(v, new_in, new_out);
    for (const Edge& e : new_in) {
        g_.check_vertex(e.from);
    }
    for (const Edge& e : new_out) {
        g_.check_vertex(e.to);
    }
    dijkstra_last_ = 0;
    excess_.clear();
    deficit_.clear();

    cancel_through(v);
    g_.clear_vertex(v);
    for (const Edge& e : new_in) {
        g_.insert_edge(e.from, e.to, e.weight);
    }
    for (const Edge& e : new_out) {
        g_.insert_edge(e.from, e.to, e.weight);
    }

    // No flow touches v any more; restore reduced-cost feasibility on its
    // arcs, leaving only v_in -> v_out possibly violated.
    Weight& pin = pi_[in_node(v)];
    Weight& pout = pi_[out_node(v)];
    for (const Arc& a : g_.in_arcs(v)) {
        pin = std::max(pin, pi_[out_node(a.head)] - a.weight);
    }
    for (const Arc& a : g_.out_arcs(v)) {
        pout = std::min(pout, a.weight + pi_[in_node(a.head)]);
    }
    if (pout - pin < 0) {
        through_[v] = 1;
        excess_.push_back(out_node(v));
        deficit_.push_back(in_node(v));
    }

    if (excess_.size() > 2 || deficit_.size() != excess_.size()) {
        throw std::logic_error("unexpected excess after vertex update");
    }
    while (!excess_.empty()) {
        augment_once();
    }
    recompute_cost();
}

// One successive-shortest-path step: search backwards from every deficit
// over residual arcs with reduced costs, stop at the nearest excess, shift
// potentials by the capped distances and push one unit along the path.
void NegativeCycleDetector::augment_once() {
    ++dijkstra_last_;
    ++augmentations_;
    ++sssp_counters().dijkstra_calls;
    const std::size_t nodes = pi_.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(nodes, inf);
    std::vector<std::size_t> next(nodes, nodes);
    std::vector<ArcKind> next_kind(nodes, ArcKind::SplitForward);
    std::vector<char> settled(nodes, 0);
    std::vector<char> is_excess(nodes, 0);
    for (std::size_t x : excess_) {
        is_excess[x] = 1;
    }
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::size_t t : deficit_) {
        dist[t] = 0;
        heap.push({0.0, t});
    }

    std::size_t found = nodes;
    while (!heap.empty()) {
        auto [d, b] = heap.top();
        heap.pop();
        if (settled[b] || d > dist[b]) {
            continue;
        }
        settled[b] = 1;
        if (is_excess[b]) {
            found = b;
            break;
        }
        // Residual arc a -> b of cost c.
        auto relax = [&](std::size_t a, Weight c, ArcKind kind) {
            if (settled[a]) {
                return;
            }
            Weight rc = c - pi_[a] + pi_[b];
            if (rc < 0) {
                if (rc < -1e-9 * (1.0 + std::abs(c) + std::abs(pi_[a]) + std::abs(pi_[b]))) {
                    throw InfeasiblePrices("negative reduced cost in residual network");
                }
                rc = 0;
            }
            if (d + rc < dist[a]) {
                dist[a] = d + rc;
                next[a] = b;
                next_kind[a] = kind;
                heap.push({dist[a], a});
            }
        };
        const auto v = static_cast<VertexId>(b / 2);
        if (b % 2 == 0) {
            // b = v_in
            for (const Arc& arc : g_.in_arcs(v)) {
                if (in_flow_[v] != arc.head) {
                    relax(out_node(arc.head), arc.weight, ArcKind::EdgeForward);
                }
            }
            if (through_[v]) {
                relax(out_node(v), 0.0, ArcKind::SplitBackward);
            }
        } else {
            // b = v_out
            if (!through_[v]) {
                relax(in_node(v), 0.0, ArcKind::SplitForward);
            }
            if (out_flow_[v] != kNoVertex) {
                const VertexId z = out_flow_[v];
                relax(in_node(z), -*g_.get_weight(v, z), ArcKind::EdgeBackward);
            }
        }
    }
    if (found == nodes) {
        throw std::logic_error("no augmenting path from excess to deficit");
    }

    const double cap = dist[found];
    for (std::size_t x = 0; x < nodes; ++x) {
        pi_[x] += std::min(dist[x], cap);
    }

    std::size_t a = found;
    while (next[a] != nodes) {
        const std::size_t b = next[a];
        switch (next_kind[a]) {
        case ArcKind::SplitForward:
            through_[a / 2] = 1;
            break;
        case ArcKind::SplitBackward:
            through_[a / 2] = 0;
            break;
        case ArcKind::EdgeForward:
            out_flow_[a / 2] = static_cast<VertexId>(b / 2);
            in_flow_[b / 2] = static_cast<VertexId>(a / 2);
            break;
        case ArcKind::EdgeBackward:
            // a = z_in, b = u_out: cancel flow on u_out -> z_in. The path may
            // already have routed a new unit into z_in.
            out_flow_[b / 2] = kNoVertex;
            if (in_flow_[a / 2] == b / 2) {
                in_flow_[a / 2] = kNoVertex;
            }
            break;
        }
        a = b;
    }
    excess_.erase(std::find(excess_.begin(), excess_.end(), found));
    deficit_.erase(std::find(deficit_.begin(), deficit_.end(), a));
}

void NegativeCycleDetector::recompute_cost() {
    cost_ = 0;
    for (VertexId u = 0; u < g_.num_vertices(); ++u) {
        if (out_flow_[u] != kNoVertex) {
            cost_ += *g_.get_weight(u, out_flow_[u]);
        }
    }
}

PriceFunction NegativeCycleDetector::price_function() const {
    if (has_negative_cycle()) {
        throw NegativeCyclePresent("graph has a negative cycle");
    }
    PriceFunction p(g_.num_vertices());
    for (VertexId v = 0; v < p.size(); ++v) {
        p[v] = -pi_[in_node(v)];
    }
    return p;
}

void NegativeCycleDetector::remove_vertices(std::span<const VertexId> d) {
    if (pending_) {
        throw InvalidConfig("remove_vertices called twice without revert");
    }
    for (VertexId v : d) {
        g_.check_vertex(v);
    }
    Removal removal;
    std::vector<char> seen(g_.num_vertices(), 0);
    for (VertexId v : d) {
        if (seen[v]) {
            continue;
        }
        seen[v] = 1;
        EdgeBatch in;
        EdgeBatch out;
        for (const Arc& a : g_.in_arcs(v)) {
            in.push_back({a.head, v, a.weight});
        }
        for (const Arc& a : g_.out_arcs(v)) {
            if (a.head != v) {
                out.push_back({v, a.head, a.weight});
            }
        }
        removal.order.push_back(v);
        removal.in.push_back(std::move(in));
        removal.out.push_back(std::move(out));
        vertex_update(v, {}, {});
    }
    pending_ = std::move(removal);
}

void NegativeCycleDetector::revert() {
    if (!pending_) {
        throw NothingToRevert("no pending removal");
    }
    Removal removal = std::move(*pending_);
    pending_.reset();
    for (std::size_t i = removal.order.size(); i-- > 0;) {
        vertex_update(removal.order[i], removal.in[i], removal.out[i]);
    }
}

bool NegativeCycleDetector::check_conservation() const {
    const std::size_t n = g_.num_vertices();
    std::vector<int> balance(2 * n, 0);
    for (VertexId v = 0; v < n; ++v) {
        if (through_[v]) {
            --balance[in_node(v)];
            ++balance[out_node(v)];
        }
        if (out_flow_[v] != kNoVertex) {
            const VertexId z = out_flow_[v];
            if (in_flow_[z] != v || !g_.has_edge(v, z)) {
                return false;
            }
            --balance[out_node(v)];
            ++balance[in_node(z)];
        }
        if (in_flow_[v] != kNoVertex && out_flow_[in_flow_[v]] != v) {
            return false;
        }
    }
    return std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; });
}

bool NegativeCycleDetector::check_residual_feasibility() const {
    auto ok = [&](std::size_t a, std::size_t b, Weight c) { return c - pi_[a] + pi_[b] >= 0; };
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
        if (through_[v] ? !ok(out_node(v), in_node(v), 0.0) : !ok(in_node(v), out_node(v), 0.0)) {
            return false;
        }
        for (const Arc& a : g_.out_arcs(v)) {
            const bool flow = out_flow_[v] == a.head;
            if (flow ? !ok(in_node(a.head), out_node(v), -a.weight) : !ok(out_node(v), in_node(a.head), a.weight)) {
                return false;
            }
        }
    }
    return true;
}

bool NegativeCycleDetector::check_tight_flow() const {
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
        if (through_[v] && pi_[out_node(v)] - pi_[in_node(v)] != 0) {
            return false;
        }
        if (out_flow_[v] != kNoVertex) {
            const VertexId z = out_flow_[v];
            if (*g_.get_weight(v, z) - pi_[out_node(v)] + pi_[in_node(z)] != 0) {
                return false;
            }
        }
    }
    return true;
}

EdgeBatch NegativeCycleDetector::flow_edges() const {
    EdgeBatch result;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
        if (out_flow_[v] != kNoVertex) {
            result.push_back({v, out_flow_[v], *g_.get_weight(v, out_flow_[v])});
        }
    }
    return result;
}

} // namespace dyncycle
