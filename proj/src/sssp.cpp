#include "dyncycle/sssp.hpp"

#include <algorithm>

namespace dyncycle {

SsspCounters& sssp_counters() {
    thread_local SsspCounters counters;
    return counters;
}

namespace {

Weight price_at(std::span<const Weight> p, VertexId v) { return p.empty() ? 0.0 : p[v]; }

bool allowed_at(std::span<const char> allowed, VertexId v) { return allowed.empty() || allowed[v] != 0; }

DistArray to_dist_array(const std::vector<double>& dist, std::vector<VertexId>&& parent) {
    DistArray out;
    out.dist.reserve(dist.size());
    for (double d : dist) {
        out.dist.push_back(ExtWeight::from_double(d));
    }
    out.parent = std::move(parent);
    return out;
}

} // namespace

DistArray dijkstra(const DynamicDigraph& g, VertexId source, std::span<const Weight> p, Direction dir,
                   std::span<const char> allowed) {
    g.check_vertex(source);
    const std::size_t n = g.num_vertices();
    std::vector<double> key;
    std::vector<double> dist;
    std::vector<VertexId> parent;
    const VertexId sources[] = {source};
    if (dir == Direction::Forward) {
        detail::dijkstra_core(
            n, sources,
            [&](VertexId x, auto&& emit) {
                for (const Arc& a : g.out_arcs(x)) {
                    if (allowed_at(allowed, a.head)) {
                        emit(a.head, a.weight, a.weight + price_at(p, x) - price_at(p, a.head));
                    }
                }
            },
            [](VertexId) { return false; }, key, dist, parent);
    } else {
        detail::dijkstra_core(
            n, sources,
            [&](VertexId x, auto&& emit) {
                for (const Arc& a : g.in_arcs(x)) {
                    if (allowed_at(allowed, a.head)) {
                        emit(a.head, a.weight, a.weight + price_at(p, a.head) - price_at(p, x));
                    }
                }
            },
            [](VertexId) { return false; }, key, dist, parent);
    }
    return to_dist_array(dist, std::move(parent));
}

bool is_feasible(const DynamicDigraph& g, std::span<const Weight> p, std::span<const char> allowed) {
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        if (!allowed_at(allowed, u)) {
            continue;
        }
        for (const Arc& a : g.out_arcs(u)) {
            if (allowed_at(allowed, a.head) && a.weight + price_at(p, u) - price_at(p, a.head) < 0) {
                return false;
            }
        }
    }
    return true;
}

ExtWeight min_cycle_through_vertex(const DynamicDigraph& h, VertexId v) {
    h.check_vertex(v);
    for (VertexId u = 0; u < h.num_vertices(); ++u) {
        for (const Arc& a : h.out_arcs(u)) {
            if (a.weight < 0) {
                throw NegativeEdge("min_cycle_through_vertex requires non-negative weights");
            }
        }
    }
    const DistArray from_v = dijkstra(h, v);
    ExtWeight best = ExtWeight::pos_inf();
    for (const Arc& a : h.in_arcs(v)) {
        best = min(best, from_v.dist[a.head] + ExtWeight(a.weight));
    }
    return best;
}

InsertionCycle min_cycle_with_insertion(const DynamicDigraph& h, std::span<const Weight> p, VertexId v,
                                        std::span<const Edge> f_v) {
    h.check_vertex(v);
    validate_centered(v, f_v);
    for (const Edge& e : f_v) {
        h.check_vertex(e.from);
        h.check_vertex(e.to);
    }
    const std::size_t n = h.num_vertices();

    // Out-arcs of v in H' = H + F - (edges into v), and the removed edges into
    // v, both collapsed to the minimum weight per neighbor.
    auto merge_min = [](std::vector<Arc>& arcs, VertexId head, Weight w) {
        for (Arc& a : arcs) {
            if (a.head == head) {
                a.weight = std::min(a.weight, w);
                return;
            }
        }
        arcs.push_back({head, w});
    };
    std::vector<Arc> v_out;
    std::vector<Arc> v_in; // head = tail of the edge into v
    for (const Arc& a : h.out_arcs(v)) {
        if (a.head != v) {
            v_out.push_back(a);
        }
    }
    for (const Arc& a : h.in_arcs(v)) {
        v_in.push_back(a);
    }
    for (const Edge& e : f_v) {
        if (e.to == v) {
            merge_min(v_in, e.from, e.weight);
        } else {
            merge_min(v_out, e.to, e.weight);
        }
    }

    PriceFunction shifted(n, 0.0);
    for (VertexId x = 0; x < n; ++x) {
        shifted[x] = price_at(p, x);
    }
    for (const Arc& a : v_out) {
        shifted[v] = std::max(shifted[v], shifted[a.head] - a.weight);
    }

    std::vector<double> key;
    std::vector<double> dist;
    std::vector<VertexId> parent;
    const VertexId sources[] = {v};
    detail::dijkstra_core(
        n, sources,
        [&](VertexId x, auto&& emit) {
            if (x == v) {
                for (const Arc& a : v_out) {
                    emit(a.head, a.weight, a.weight + shifted[v] - shifted[a.head]);
                }
                return;
            }
            for (const Arc& a : h.out_arcs(x)) {
                if (a.head != v) {
                    emit(a.head, a.weight, a.weight + shifted[x] - shifted[a.head]);
                }
            }
        },
        [](VertexId) { return false; }, key, dist, parent);

    InsertionCycle result;
    result.weight = ExtWeight::pos_inf();
    for (const Arc& a : v_in) {
        result.weight = min(result.weight, ExtWeight::from_double(dist[a.head]) + ExtWeight(a.weight));
    }
    if (result.weight < ExtWeight(0)) {
        return result;
    }

    // Reachable part gets exact distances from v; the rest keeps p shifted by
    // the largest deficit over edges entering the reachable part.
    constexpr double inf = std::numeric_limits<double>::infinity();
    auto reached = [&](VertexId x) { return dist[x] != inf; };
    bool any_crossing = false;
    Weight shift = 0;
    auto consider = [&](VertexId z, VertexId y, Weight w) {
        if (reached(z)) {
            return;
        }
        const Weight need = dist[y] - price_at(p, z) - w;
        shift = any_crossing ? std::max(shift, need) : need;
        any_crossing = true;
    };
    for (VertexId y = 0; y < n; ++y) {
        if (!reached(y)) {
            continue;
        }
        if (y == v) {
            for (const Arc& a : v_in) {
                consider(a.head, v, a.weight);
            }
            continue;
        }
        for (const Arc& a : h.in_arcs(y)) {
            consider(a.head, y, a.weight);
        }
    }
    if (!any_crossing) {
        shift = 0;
    }
    PriceFunction prices(n);
    for (VertexId x = 0; x < n; ++x) {
        prices[x] = reached(x) ? dist[x] : price_at(p, x) + shift;
    }
    result.prices = std::move(prices);
    return result;
}

HopDistTable::HopDistTable(std::size_t n, VertexId source, std::size_t hops, Direction dir)
    : source_(source), hops_(hops), dir_(dir), n_(n), dist_(n, ExtWeight::pos_inf()),
      pred_((hops + 1) * n, kNoVertex), round_(n, 0) {}

std::vector<VertexId> HopDistTable::path(VertexId v) const {
    if (!dist_[v].is_finite()) {
        return {};
    }
    std::vector<VertexId> walk{v};
    VertexId cur = v;
    for (std::size_t r = round_[v]; r > 0; --r) {
        const VertexId prev = pred_[r * n_ + cur];
        if (prev != kNoVertex) {
            cur = prev;
            walk.push_back(cur);
        }
    }
    if (dir_ == Direction::Forward) {
        std::reverse(walk.begin(), walk.end());
    }
    return walk;
}

HopDistTable bellman_ford_hops(const DynamicDigraph& g, VertexId source, std::size_t hops,
                               std::span<const char> forbidden, Direction dir) {
    g.check_vertex(source);
    ++sssp_counters().bellman_ford_calls;
    const std::size_t n = g.num_vertices();
    HopDistTable table(n, source, hops, dir);
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cur(n, inf);
    cur[source] = 0;
    auto blocked = [&](VertexId x) { return !forbidden.empty() && forbidden[x] != 0; };
    std::vector<VertexId> frontier{source};
    std::vector<char> in_next(n, 0);
    for (std::size_t r = 1; r <= hops && !frontier.empty() && !blocked(source); ++r) {
        // Double-buffered: round r only extends values from round r - 1.
        std::vector<double> next = cur;
        std::vector<VertexId> next_frontier;
        for (VertexId x : frontier) {
            if (blocked(x)) {
                continue;
            }
            const auto arcs = dir == Direction::Forward ? g.out_arcs(x) : g.in_arcs(x);
            for (const Arc& a : arcs) {
                if (blocked(a.head)) {
                    continue;
                }
                const double cand = cur[x] + a.weight;
                if (cand < next[a.head]) {
                    next[a.head] = cand;
                    table.pred_[r * n + a.head] = x;
                    table.round_[a.head] = static_cast<std::uint32_t>(r);
                    if (!in_next[a.head]) {
                        in_next[a.head] = 1;
                        next_frontier.push_back(a.head);
                    }
                }
            }
        }
        for (VertexId x : next_frontier) {
            in_next[x] = 0;
        }
        cur = std::move(next);
        frontier = std::move(next_frontier);
    }
    for (VertexId x = 0; x < n; ++x) {
        table.dist_[x] = ExtWeight::from_double(cur[x]);
    }
    return table;
}

StaticCycleCheck static_negative_cycle(const DynamicDigraph& g) {
    ++sssp_counters().bellman_ford_calls;
    const std::size_t n = g.num_vertices();
    StaticCycleCheck result;
    result.prices.assign(n, 0.0);
    const EdgeBatch edges = g.edges();
    for (std::size_t round = 0; round < n; ++round) {
        bool changed = false;
        for (const Edge& e : edges) {
            if (result.prices[e.from] + e.weight < result.prices[e.to]) {
                result.prices[e.to] = result.prices[e.from] + e.weight;
                changed = true;
            }
        }
        if (!changed) {
            return result;
        }
    }
    result.negative_cycle = n > 0 && !is_feasible(g, result.prices);
    if (result.negative_cycle) {
        result.prices.clear();
    }
    return result;
}

} // namespace dyncycle
