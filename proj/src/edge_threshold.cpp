#include "dyncycle/edge_threshold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dyncycle/errors.hpp"

namespace dyncycle {

NaiveOracle::NaiveOracle(std::size_t n) : g_(n), p_(n, 0.0) {}

InsertOutcome NaiveOracle::insert_edge(VertexId u, VertexId v, Weight w) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (g_.has_edge(u, v)) {
        throw AlreadyPresent("edge " + std::to_string(u) + "->" + std::to_string(v) + " already present");
    }
    ++counters_.inserts;
    const DistArray from_v = dijkstra(g_, v, p_);
    const ExtWeight closing = (u == v ? ExtWeight(0) : from_v.dist[u]) + ExtWeight(w);
    if (closing < ExtWeight(0)) {
        ++counters_.refusals;
        return InsertOutcome::RefusedNegativeCycle;
    }
    const Weight base = p_[u] + w;
    for (VertexId x = 0; x < g_.num_vertices(); ++x) {
        if (from_v.dist[x].is_finite()) {
            p_[x] = std::min(p_[x], base + from_v.dist[x].value());
        }
    }
    g_.insert_edge(u, v, w);
    if (!is_feasible(g_, p_)) {
        throw std::logic_error("price repair after insertion left an infeasible edge");
    }
    return InsertOutcome::Ok;
}

void NaiveOracle::delete_edge(VertexId u, VertexId v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    ++counters_.deletes;
    g_.delete_edge(u, v);
}

ExtWeight NaiveOracle::distance(VertexId s, VertexId t) {
    g_.check_vertex(s);
    g_.check_vertex(t);
    ++counters_.distance_queries;
    if (s == t) {
        return ExtWeight(0);
    }
    return dijkstra(g_, s, p_).dist[t];
}

EdgeThresholdDetector::EdgeThresholdDetector(std::unique_ptr<DynamicDistanceOracle> oracle, Weight mu)
    : oracle_(std::move(oracle)), mu_(mu) {
    if (!(mu >= 0) || !std::isfinite(mu)) {
        throw InvalidThreshold("threshold must be a finite non-negative number");
    }
    if (!oracle_) {
        throw InvalidConfig("oracle must not be null");
    }
    if (oracle_->num_edges() != 0) {
        throw InvalidConfig("oracle must start empty");
    }
    const std::size_t n = oracle_->num_vertices();
    g_ = DynamicDigraph(n);
    e1_.resize(n);
    queue_pos_.resize(n);
    queued_.assign(n, 0);
}

void EdgeThresholdDetector::move_to_back(VertexId v) {
    if (queued_[v]) {
        queue_.splice(queue_.end(), queue_, queue_pos_[v]);
        return;
    }
    queue_pos_[v] = queue_.insert(queue_.end(), v);
    queued_[v] = 1;
}

void EdgeThresholdDetector::drop_from_queue(VertexId v) {
    if (queued_[v]) {
        queue_.erase(queue_pos_[v]);
        queued_[v] = 0;
    }
}

void EdgeThresholdDetector::update(VertexId v) {
    ++update_calls_;
    auto& pending = e1_[v];
    std::size_t moved = 0;
    for (; moved < pending.size(); ++moved) {
        const Edge& e = pending[moved];
        if (oracle_->distance(e.to, e.from) + ExtWeight(e.weight) < ExtWeight(mu_)) {
            break;
        }
        if (oracle_->insert_edge(e.from, e.to, e.weight) != InsertOutcome::Ok) {
            throw std::logic_error("oracle refused an edge that closes no cycle below a non-negative threshold");
        }
        owner_.erase(key(e.from, e.to));
    }
    pending.erase(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(moved));
    if (pending.empty()) {
        drop_from_queue(v);
    }
}

void EdgeThresholdDetector::insert_edge(VertexId u, VertexId v, Weight w) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (g_.has_edge(u, v)) {
        throw AlreadyPresent("edge " + std::to_string(u) + "->" + std::to_string(v) + " already present");
    }
    ++updates_;
    g_.insert_edge(u, v, w);
    owner_.emplace(key(u, v), u);
    e1_[u].push_back({u, v, w});
    move_to_back(u);
    if (queue_.size() == 1) {
        update(u);
    }
}

void EdgeThresholdDetector::delete_edge(VertexId u, VertexId v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (!g_.has_edge(u, v)) {
        throw NotPresent("edge " + std::to_string(u) + "->" + std::to_string(v) + " not present");
    }
    ++updates_;
    g_.delete_edge(u, v);
    auto it = owner_.find(key(u, v));
    if (it == owner_.end()) {
        oracle_->delete_edge(u, v);
    } else {
        const VertexId w = it->second;
        owner_.erase(it);
        auto& pending = e1_[w];
        pending.erase(std::find_if(pending.begin(), pending.end(),
                                   [&](const Edge& x) { return x.from == u && x.to == v; }));
        if (pending.empty()) {
            drop_from_queue(w);
        }
    }
    while (!queue_.empty()) {
        const VertexId front = queue_.front();
        update(front);
        if (!e1_[front].empty()) {
            break;
        }
    }
}

EdgeBatch EdgeThresholdDetector::base_edges() const {
    EdgeBatch result;
    for (const Edge& e : g_.edges()) {
        if (!owner_.contains(key(e.from, e.to))) {
            result.push_back(e);
        }
    }
    return result;
}

} // namespace dyncycle
