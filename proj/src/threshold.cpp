#include "dyncycle/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyncycle/errors.hpp"

namespace dyncycle {

ThresholdDetector::ThresholdDetector(std::size_t n, Weight mu)
    : mu_(mu), g_(n), g0_(n), p0_(n, 0.0), e1_(n), queue_pos_(n), queued_(n, 0) {
    if (!(mu >= 0) || !std::isfinite(mu)) {
        throw InvalidThreshold("threshold must be a finite non-negative number");
    }
}

void ThresholdDetector::move_to_back(VertexId v) {
    if (queued_[v]) {
        queue_.splice(queue_.end(), queue_, queue_pos_[v]);
        return;
    }
    queue_pos_[v] = queue_.insert(queue_.end(), v);
    queued_[v] = 1;
}

void ThresholdDetector::drop_from_queue(VertexId v) {
    if (queued_[v]) {
        queue_.erase(queue_pos_[v]);
        queued_[v] = 0;
    }
}

void ThresholdDetector::update(VertexId v) {
    ++counters_.update_calls;
    const InsertionCycle found = min_cycle_with_insertion(g0_, p0_, v, e1_[v]);
    if (found.weight < ExtWeight(mu_)) {
        return;
    }
    for (const Edge& e : e1_[v]) {
        g0_.insert_edge(e.from, e.to, e.weight);
        owner_.erase(key(e.from, e.to));
    }
    e1_[v].clear();
    drop_from_queue(v);
    // mu >= 0, so the cycle search also produced prices for the merged graph.
    p0_ = *found.prices;
}

void ThresholdDetector::insert(VertexId v, std::span<const Edge> f_v) {
    g_.check_vertex(v);
    if (f_v.empty()) {
        return;
    }
    validate_centered(v, f_v);
    for (const Edge& e : f_v) {
        if (g_.has_edge(e.from, e.to)) {
            throw AlreadyPresent("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                 " already present");
        }
    }
    ++counters_.inserts;
    for (const Edge& e : f_v) {
        g_.insert_edge(e.from, e.to, e.weight);
    }
    // Re-read weights so duplicates inside the batch collapse to one edge.
    for (const Edge& e : f_v) {
        auto [it, fresh] = owner_.try_emplace(key(e.from, e.to), v);
        if (fresh) {
            e1_[v].push_back({e.from, e.to, *g_.get_weight(e.from, e.to)});
        }
    }
    move_to_back(v);
    if (queue_.size() == 1) {
        update(v);
    }
}

void ThresholdDetector::remove(std::span<const Edge> f) {
    for (const Edge& e : f) {
        if (!g_.has_edge(e.from, e.to)) {
            throw NotPresent("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) + " not present");
        }
    }
    ++counters_.deletes;
    for (const Edge& e : f) {
        if (!g_.has_edge(e.from, e.to)) {
            continue; // listed twice
        }
        g_.delete_edge(e.from, e.to);
        auto it = owner_.find(key(e.from, e.to));
        if (it == owner_.end()) {
            g0_.delete_edge(e.from, e.to);
            continue;
        }
        const VertexId w = it->second;
        owner_.erase(it);
        auto& pending = e1_[w];
        auto jt = std::find_if(pending.begin(), pending.end(),
                               [&](const Edge& x) { return x.from == e.from && x.to == e.to; });
        *jt = pending.back();
        pending.pop_back();
        if (pending.empty()) {
            drop_from_queue(w);
        }
    }
    while (!queue_.empty()) {
        const VertexId v = queue_.front();
        update(v);
        if (!e1_[v].empty()) {
            break;
        }
    }
}

void ThresholdDetector::vertex_update(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out) {
    g_.check_vertex(v);
    validate_centered(v, new_in, new_out);
    for (const Edge& e : new_in) {
        g_.check_vertex(e.from);
    }
    for (const Edge& e : new_out) {
        g_.check_vertex(e.to);
    }
    const EdgeBatch old = g_.incident_edges(v);
    remove(old);
    EdgeBatch batch(new_in.begin(), new_in.end());
    batch.insert(batch.end(), new_out.begin(), new_out.end());
    insert(v, batch);
}

} // namespace dyncycle
