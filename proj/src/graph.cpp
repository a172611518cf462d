#include "dyncycle/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "dyncycle/errors.hpp"

namespace dyncycle {

std::string format_weight(Weight w) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), w);
    return std::string(buf, res.ptr);
}

std::string ExtWeight::to_string() const {
    switch (tag_) {
    case Tag::NegInf:
        return "-inf";
    case Tag::PosInf:
        return "+inf";
    default:
        return format_weight(value_);
    }
}

DynamicDigraph::DynamicDigraph(std::size_t n) : out_(n), in_(n) {}

void DynamicDigraph::check_vertex(VertexId v) const {
    if (v >= out_.size()) {
        throw InvalidVertex("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(out_.size()) + ")");
    }
}

std::vector<Arc>::iterator DynamicDigraph::find_arc(std::vector<Arc>& arcs, VertexId head) {
    return std::find_if(arcs.begin(), arcs.end(), [head](const Arc& a) { return a.head == head; });
}

std::vector<Arc>::const_iterator DynamicDigraph::find_arc(const std::vector<Arc>& arcs, VertexId head) {
    return std::find_if(arcs.begin(), arcs.end(), [head](const Arc& a) { return a.head == head; });
}

void DynamicDigraph::insert_edge(VertexId u, VertexId v, Weight w) {
    check_vertex(u);
    check_vertex(v);
    if (!std::isfinite(w)) {
        throw InvalidBatch("edge weight must be finite");
    }
    auto it = find_arc(out_[u], v);
    if (it != out_[u].end()) {
        if (w < it->weight) {
            it->weight = w;
            find_arc(in_[v], u)->weight = w;
        }
        return;
    }
    out_[u].push_back({v, w});
    in_[v].push_back({u, w});
    ++m_;
}

Weight DynamicDigraph::delete_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    auto it = find_arc(out_[u], v);
    if (it == out_[u].end()) {
        throw NotPresent("edge " + std::to_string(u) + "->" + std::to_string(v) + " not present");
    }
    const Weight w = it->weight;
    *it = out_[u].back();
    out_[u].pop_back();
    auto jt = find_arc(in_[v], u);
    *jt = in_[v].back();
    in_[v].pop_back();
    --m_;
    return w;
}

std::optional<Weight> DynamicDigraph::get_weight(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = find_arc(out_[u], v);
    if (it == out_[u].end()) {
        return std::nullopt;
    }
    return it->weight;
}

EdgeBatch DynamicDigraph::incident_edges(VertexId v) const {
    check_vertex(v);
    EdgeBatch result;
    result.reserve(out_[v].size() + in_[v].size());
    for (const Arc& a : out_[v]) {
        result.push_back({v, a.head, a.weight});
    }
    for (const Arc& a : in_[v]) {
        if (a.head != v) {
            result.push_back({a.head, v, a.weight});
        }
    }
    return result;
}

EdgeBatch DynamicDigraph::clear_vertex(VertexId v) {
    EdgeBatch removed = incident_edges(v);
    for (const Arc& a : out_[v]) {
        if (a.head == v) {
            continue;
        }
        auto& mirror = in_[a.head];
        auto jt = find_arc(mirror, v);
        *jt = mirror.back();
        mirror.pop_back();
    }
    for (const Arc& a : in_[v]) {
        if (a.head == v) {
            continue;
        }
        auto& mirror = out_[a.head];
        auto jt = find_arc(mirror, v);
        *jt = mirror.back();
        mirror.pop_back();
    }
    m_ -= removed.size();
    out_[v].clear();
    in_[v].clear();
    return removed;
}

void validate_centered(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out) {
    for (const Edge& e : new_in) {
        if (e.to != v) {
            throw InvalidBatch("incoming edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                               " does not end at " + std::to_string(v));
        }
    }
    for (const Edge& e : new_out) {
        if (e.from != v) {
            throw InvalidBatch("outgoing edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                               " does not start at " + std::to_string(v));
        }
    }
}

void validate_centered(VertexId v, std::span<const Edge> batch) {
    for (const Edge& e : batch) {
        if (e.from != v && e.to != v) {
            throw InvalidBatch("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                               " is not incident to " + std::to_string(v));
        }
    }
}

EdgeBatch DynamicDigraph::apply_vertex_update(VertexId v, std::span<const Edge> new_in,
                                              std::span<const Edge> new_out) {
    check_vertex(v);
    validate_centered(v, new_in, new_out);
    for (const Edge& e : new_in) {
        check_vertex(e.from);
    }
    for (const Edge& e : new_out) {
        check_vertex(e.to);
    }
    EdgeBatch removed = clear_vertex(v);
    for (const Edge& e : new_in) {
        insert_edge(e.from, e.to, e.weight);
    }
    for (const Edge& e : new_out) {
        insert_edge(e.from, e.to, e.weight);
    }
    return removed;
}

EdgeBatch DynamicDigraph::edges() const {
    EdgeBatch result;
    result.reserve(m_);
    for (VertexId u = 0; u < out_.size(); ++u) {
        for (const Arc& a : out_[u]) {
            result.push_back({u, a.head, a.weight});
        }
    }
    return result;
}

bool DynamicDigraph::check_consistency() const {
    std::size_t count = 0;
    for (VertexId u = 0; u < out_.size(); ++u) {
        for (std::size_t i = 0; i < out_[u].size(); ++i) {
            const Arc& a = out_[u][i];
            for (std::size_t j = i + 1; j < out_[u].size(); ++j) {
                if (out_[u][j].head == a.head) {
                    return false;
                }
            }
            auto it = find_arc(in_[a.head], u);
            if (it == in_[a.head].end() || it->weight != a.weight) {
                return false;
            }
            ++count;
        }
    }
    std::size_t in_count = 0;
    for (const auto& arcs : in_) {
        in_count += arcs.size();
    }
    return count == m_ && in_count == m_;
}

PairSet::PairSet(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs)
    : pairs_(std::move(pairs)), k_adj_(n), deg_k_(n, 0), by_source_(n), by_target_(n) {
    for (std::size_t l = 0; l < pairs_.size(); ++l) {
        const auto [s, t] = pairs_[l];
        if (s >= n || t >= n) {
            throw InvalidVertex("pair (" + std::to_string(s) + ", " + std::to_string(t) + ") out of range");
        }
        by_source_[s].push_back(l);
        by_target_[t].push_back(l);
        k_adj_[s].push_back(t);
        if (s != t) {
            k_adj_[t].push_back(s);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& adj = k_adj_[v];
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        deg_k_[v] = adj.size();
    }
}

} // namespace dyncycle
