#include "dyncycle/dynamic_exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dyncycle/errors.hpp"

namespace dyncycle {

namespace {

std::uint64_t edge_key(VertexId u, VertexId v) { return (std::uint64_t{u} << 32) | v; }

std::uint64_t phase_seed(std::uint64_t seed, std::size_t phase) {
    return seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(phase) + 1));
}

} // namespace

std::size_t default_phase_length(std::size_t n) {
    if (n <= 1) {
        return 1;
    }
    const double x = std::cbrt(static_cast<double>(n)) * std::pow(std::log2(static_cast<double>(n)), 2.0 / 3.0);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(x)));
}

DynamicExact DynamicExact::new_mpsp(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs,
                                    std::size_t delta, std::uint64_t seed, double c_hit) {
    return DynamicExact(Mode::Mpsp, n, std::move(pairs), delta, seed, c_hit);
}

DynamicExact DynamicExact::new_mincycle(std::size_t n, std::size_t delta, std::uint64_t seed, double c_hit) {
    return DynamicExact(Mode::MinCycle, n, {}, delta == 0 ? default_phase_length(n) : delta, seed, c_hit);
}

DynamicExact::DynamicExact(Mode mode, std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs,
                           std::size_t delta, std::uint64_t seed, double c_hit)
    : mode_(mode), delta_(delta), seed_(seed), c_hit_(c_hit), g_(n), g0_(n), negdet_(n), pairs_(std::move(pairs)),
      in_d_star_(n, 0), is_touched_(n, 0) {
    if (delta == 0) {
        throw InvalidConfig("phase length must be at least 1");
    }
    for (const auto& [s, t] : pairs_) {
        g_.check_vertex(s);
        g_.check_vertex(t);
    }
    start_phase();
}

void DynamicExact::start_phase() {
    const std::size_t n = g_.num_vertices();
    g0_ = g_;
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    const std::size_t take = std::min(delta_, n);
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                      [&](VertexId a, VertexId b) {
                          const std::size_t da = g0_.degree(a);
                          const std::size_t db = g0_.degree(b);
                          return da != db ? da > db : a < b;
                      });
    std::fill(in_d_star_.begin(), in_d_star_.end(), 0);
    d_star_.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    for (VertexId v : d_star_) {
        in_d_star_[v] = 1;
    }

    DynamicDigraph reduced = g0_;
    for (VertexId v : d_star_) {
        reduced.clear_vertex(v);
    }
    std::vector<std::pair<VertexId, VertexId>> index_pairs;
    edge_pair_.clear();
    if (mode_ == Mode::MinCycle) {
        for (const Edge& e : reduced.edges()) {
            edge_pair_.emplace(edge_key(e.from, e.to), index_pairs.size());
            index_pairs.emplace_back(e.to, e.from);
        }
    } else {
        index_pairs = pairs_;
    }
    index_ = std::make_unique<BatchDeletionIndex>(reduced, PairSet(n, std::move(index_pairs)), 2 * delta_,
                                                  phase_seed(seed_, phase_), c_hit_);
    for (VertexId v : touched_) {
        is_touched_[v] = 0;
    }
    touched_.clear();
}

void DynamicExact::vertex_update(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out) {
    g_.check_vertex(v);
    validate_centered(v, new_in, new_out);
    negdet_.vertex_update(v, new_in, new_out);
    g_.apply_vertex_update(v, new_in, new_out);
    if (!is_touched_[v]) {
        is_touched_[v] = 1;
        touched_.push_back(v);
    }
    if (touched_.size() >= delta_) {
        ++phase_;
        start_phase();
    }
}

std::vector<VertexId> DynamicExact::removed_set() const {
    std::vector<VertexId> d = d_star_;
    for (VertexId v : touched_) {
        if (!in_d_star_[v]) {
            d.push_back(v);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

DynamicExact::MpspAnswer DynamicExact::query_mpsp() {
    if (mode_ != Mode::Mpsp) {
        throw InvalidConfig("query_mpsp requires MPSP mode");
    }
    MpspAnswer answer;
    if (negdet_.has_negative_cycle()) {
        answer.negative_cycle = true;
        return answer;
    }
    const PriceFunction p = negdet_.price_function();
    const std::vector<VertexId> d = removed_set();
    BatchDeletionIndex::QueryResult base = index_->query(d);
    if (base.negative_cycle) {
        // G \ D is a subgraph of G, which has no negative cycle.
        throw std::logic_error("index reported a negative cycle absent from the graph");
    }
    answer.dist = std::move(base.dist);
    for (VertexId v : d) {
        const DistArray to_v = dijkstra(g_, v, p, Direction::Reverse);
        const DistArray from_v = dijkstra(g_, v, p, Direction::Forward);
        for (std::size_t l = 0; l < pairs_.size(); ++l) {
            const auto [s, t] = pairs_[l];
            answer.dist[l] = min(answer.dist[l], to_v.dist[s] + from_v.dist[t]);
        }
    }
    for (std::size_t l = 0; l < pairs_.size(); ++l) {
        if (pairs_[l].first == pairs_[l].second) {
            answer.dist[l] = ExtWeight(0);
        }
    }
    return answer;
}

ExtWeight DynamicExact::query_mincycle() {
    if (mode_ != Mode::MinCycle) {
        throw InvalidConfig("query_mincycle requires min-cycle mode");
    }
    if (negdet_.has_negative_cycle()) {
        return ExtWeight::neg_inf();
    }
    const PriceFunction p = negdet_.price_function();
    const std::vector<VertexId> d = removed_set();
    std::vector<char> in_d(g_.num_vertices(), 0);
    for (VertexId v : d) {
        in_d[v] = 1;
    }
    BatchDeletionIndex::QueryResult base = index_->query(d);
    if (base.negative_cycle) {
        throw std::logic_error("index reported a negative cycle absent from the graph");
    }

    ExtWeight best = ExtWeight::pos_inf();
    for (VertexId u = 0; u < g_.num_vertices(); ++u) {
        if (in_d[u]) {
            continue;
        }
        for (const Arc& a : g_.out_arcs(u)) {
            if (in_d[a.head]) {
                continue;
            }
            // Untouched edges are exactly the edges of G0 \ D*.
            const auto it = edge_pair_.find(edge_key(u, a.head));
            if (it == edge_pair_.end()) {
                throw std::logic_error("edge outside the removed set missing from the phase index");
            }
            best = min(best, base.dist[it->second] + ExtWeight(a.weight));
        }
    }
    for (VertexId v : d) {
        best = min(best, min_cycle_with_insertion(g_, p, v, {}).weight);
    }
    return best;
}

} // namespace dyncycle
