#include "dyncycle/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>

namespace dyncycle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Plain {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<VertexId, Weight>>> out;
};

Plain flatten(const DynamicDigraph& g, std::span<const char> removed) {
    Plain p;
    p.n = g.num_vertices();
    p.out.resize(p.n);
    for (const Edge& e : g.edges()) {
        if (!removed.empty() && (removed[e.from] || removed[e.to])) {
            continue;
        }
        p.out[e.from].emplace_back(e.to, e.weight);
    }
    return p;
}

// Potentials from a virtual source, or nullopt on a negative cycle.
std::optional<std::vector<double>> potentials(const Plain& g) {
    std::vector<double> h(g.n, 0.0);
    for (std::size_t round = 0; round <= g.n; ++round) {
        bool changed = false;
        for (VertexId u = 0; u < g.n; ++u) {
            for (const auto& [v, w] : g.out[u]) {
                if (h[u] + w < h[v]) {
                    h[v] = h[u] + w;
                    changed = true;
                }
            }
        }
        if (!changed) {
            return h;
        }
    }
    return std::nullopt;
}

std::vector<double> shortest_from(const Plain& g, const std::vector<double>& h, VertexId s) {
    std::vector<double> key(g.n, kInf);
    std::vector<char> done(g.n, 0);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    key[s] = 0;
    pq.push({0.0, s});
    while (!pq.empty()) {
        auto [k, u] = pq.top();
        pq.pop();
        if (done[u]) {
            continue;
        }
        done[u] = 1;
        for (const auto& [v, w] : g.out[u]) {
            const double nk = k + w + h[u] - h[v];
            if (nk < key[v]) {
                key[v] = nk;
                pq.push({nk, v});
            }
        }
    }
    std::vector<double> dist(g.n, kInf);
    for (VertexId v = 0; v < g.n; ++v) {
        if (key[v] < kInf) {
            dist[v] = key[v] - h[s] + h[v];
        }
    }
    return dist;
}

} // namespace

bool oracle_has_negative_cycle(const DynamicDigraph& g) { return !potentials(flatten(g, {})).has_value(); }

ExtWeight oracle_phi(const DynamicDigraph& g) {
    const Plain plain = flatten(g, {});
    const auto h = potentials(plain);
    if (!h) {
        return ExtWeight::neg_inf();
    }
    std::vector<std::vector<std::pair<VertexId, Weight>>> in(plain.n);
    for (VertexId u = 0; u < plain.n; ++u) {
        for (const auto& [v, w] : plain.out[u]) {
            in[v].emplace_back(u, w);
        }
    }
    double best = kInf;
    for (VertexId v = 0; v < plain.n; ++v) {
        if (in[v].empty()) {
            continue;
        }
        const std::vector<double> dist = shortest_from(plain, *h, v);
        for (const auto& [u, w] : in[v]) {
            if (dist[u] < kInf) {
                best = std::min(best, dist[u] + w);
            }
        }
    }
    return ExtWeight::from_double(best);
}

bool oracle_threshold(const DynamicDigraph& g, Weight mu) { return oracle_phi(g) < ExtWeight(mu); }

OracleMpsp oracle_mpsp(const DynamicDigraph& g, std::span<const VertexId> d,
                       std::span<const std::pair<VertexId, VertexId>> pairs) {
    std::vector<char> removed(g.num_vertices(), 0);
    for (VertexId v : d) {
        removed[v] = 1;
    }
    const Plain plain = flatten(g, removed);
    OracleMpsp result;
    const auto h = potentials(plain);
    if (!h) {
        result.negative_cycle = true;
        return result;
    }
    std::vector<std::vector<double>> cache(plain.n);
    for (const auto& [s, t] : pairs) {
        if (removed[s] || removed[t]) {
            result.dist.push_back(ExtWeight::pos_inf());
            continue;
        }
        if (cache[s].empty()) {
            cache[s] = shortest_from(plain, *h, s);
        }
        result.dist.push_back(ExtWeight::from_double(cache[s][t]));
    }
    return result;
}

} // namespace dyncycle
