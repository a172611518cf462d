#include "dyncycle/batch_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dyncycle/errors.hpp"

namespace dyncycle {

namespace {

constexpr std::uint32_t kNoLocal = std::numeric_limits<std::uint32_t>::max();

std::size_t floor_log2(std::size_t x) {
    std::size_t r = 0;
    while (x > 1) {
        x >>= 1;
        ++r;
    }
    return r;
}

std::size_t ceil_log2(std::size_t x) {
    std::size_t r = 0;
    while ((std::size_t{1} << r) < x) {
        ++r;
    }
    return r;
}

bool candidate_less(const BatchDeletionIndex::Candidate& a, const BatchDeletionIndex::Candidate& b) {
    if (a.value != b.value) {
        return a.value < b.value;
    }
    return a.j < b.j;
}

void sort_unique(std::vector<VertexId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::size_t hop_bound_for(std::size_t n, std::size_t d_max) {
    const double ratio = std::sqrt(static_cast<double>(n) / static_cast<double>(d_max));
    std::size_t h = 1;
    while (static_cast<double>(h * 2) <= ratio) {
        h *= 2;
    }
    std::size_t cap = 2;
    while (cap * 2 <= n) {
        cap *= 2;
    }
    return std::clamp<std::size_t>(h, 2, cap);
}

BatchDeletionIndex::BatchDeletionIndex(const DynamicDigraph& g, PairSet pairs, std::size_t d_max,
                                       std::uint64_t seed, double c_hit)
    : g_(g), pairs_(std::move(pairs)), d_max_(d_max), c_hit_(c_hit), negdet_(g.num_vertices()) {
    const std::size_t n = g_.num_vertices();
    if (d_max == 0) {
        throw InvalidConfig("d_max must be positive");
    }
    if (!(c_hit > 0)) {
        throw InvalidConfig("hitting constant must be positive");
    }
    if (pairs_.num_vertices() != n) {
        throw InvalidConfig("pair set and graph have different vertex counts");
    }
    h_ = hop_bound_for(n, d_max);
    log_term_ = ceil_log2(n);

    Rng rng(seed);
    const std::size_t num_levels = floor_log2(h_);
    levels_.resize(num_levels);
    for (std::size_t k = 0; k < num_levels; ++k) {
        build_level(levels_[k], std::size_t{1} << (k + 1), rng);
    }

    // Each edge is added when its larger endpoint is updated.
    for (VertexId v = 0; v < n; ++v) {
        EdgeBatch in;
        EdgeBatch out;
        for (const Arc& a : g_.in_arcs(v)) {
            if (a.head <= v) {
                in.push_back({a.head, v, a.weight});
            }
        }
        for (const Arc& a : g_.out_arcs(v)) {
            if (a.head < v) {
                out.push_back({v, a.head, a.weight});
            }
        }
        negdet_.vertex_update(v, in, out);
    }
}

void BatchDeletionIndex::build_level(Level& level, std::size_t hop_limit, Rng& rng) {
    const std::size_t n = g_.num_vertices();
    level.hop_limit = hop_limit;
    const double raw = c_hit_ * (static_cast<double>(n) / static_cast<double>(hop_limit)) *
                       std::log(static_cast<double>(n));
    const std::size_t size = std::min<std::size_t>(n, std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw))));
    level.sample = rng.sample<VertexId>(n, size);
    level.in_sample.assign(n, 0);
    for (VertexId c : level.sample) {
        level.in_sample[c] = 1;
    }
    level.congestion.assign(n, 0.0);
    level.through.assign(n, {});

    std::vector<char> removed(n, 0);
    for (VertexId c : level.sample) {
        process_hub(level, c, removed);
        level.cover_from_sample.push_back(1);
        VertexId best = kNoVertex;
        for (VertexId u = 0; u < n; ++u) {
            if (removed[u] || level.in_sample[u]) {
                continue;
            }
            if (best == kNoVertex || level.congestion[u] > level.congestion[best]) {
                best = u;
            }
        }
        if (best != kNoVertex) {
            process_hub(level, best, removed);
            level.cover_from_sample.push_back(0);
        }
    }

    level.candidates.assign(pairs_.size(), {});
    for (std::size_t l = 0; l < pairs_.size(); ++l) {
        const auto [s, t] = pairs_[l];
        auto& list = level.candidates[l];
        list.reserve(level.cover.size());
        for (std::uint32_t j = 0; j < level.cover.size(); ++j) {
            list.push_back({level.from_len[j][s] + level.to_len[j][t], j});
        }
        std::sort(list.begin(), list.end(), candidate_less);
    }
}

void BatchDeletionIndex::process_hub(Level& level, VertexId c, std::vector<char>& removed) {
    const std::size_t n = g_.num_vertices();
    const auto j = static_cast<std::uint32_t>(level.cover.size());
    level.cover.push_back(c);
    std::vector<std::uint32_t> stamp(n, kNoLocal);
    std::uint32_t stamp_id = 0;

    for (bool towards : {false, true}) {
        const HopDistTable table =
            bellman_ford_hops(g_, c, level.hop_limit, removed, towards ? Direction::Reverse : Direction::Forward);
        Level::PathStore store;
        store.offset.assign(n + 1, 0);
        for (VertexId v = 0; v < n; ++v) {
            store.offset[v] = static_cast<std::uint32_t>(store.verts.size());
            if (!table.dist(v).is_finite()) {
                continue;
            }
            const std::vector<VertexId> path = table.path(v);
            const double weight = static_cast<double>(g_.degree(v) + pairs_.deg_k(v) + log_term_);
            ++stamp_id;
            for (VertexId x : path) {
                store.verts.push_back(x);
                if (stamp[x] == stamp_id) {
                    continue;
                }
                stamp[x] = stamp_id;
                level.congestion[x] += weight;
                level.through[x].push_back({j, v, towards});
            }
        }
        store.offset[n] = static_cast<std::uint32_t>(store.verts.size());
        if (towards) {
            level.from_len.push_back(table.dist());
            level.from_paths.push_back(std::move(store));
        } else {
            level.to_len.push_back(table.dist());
            level.to_paths.push_back(std::move(store));
        }
    }
    removed[c] = 1;
}

std::vector<VertexId> BatchDeletionIndex::stored_path(std::size_t level, std::size_t j, VertexId v,
                                                      bool towards_hub) const {
    const Level& lv = levels_.at(level);
    const Level::PathStore& store = towards_hub ? lv.from_paths.at(j) : lv.to_paths.at(j);
    return {store.verts.begin() + store.offset.at(v), store.verts.begin() + store.offset.at(v + 1)};
}

std::size_t BatchDeletionIndex::cutoff_level(std::size_t d) const {
    const double ratio = std::sqrt(static_cast<double>(num_vertices()) / static_cast<double>(std::max<std::size_t>(d, 1)));
    const auto raw = static_cast<long>(std::floor(std::log2(ratio)));
    const long top = static_cast<long>(levels_.size());
    return static_cast<std::size_t>(std::clamp<long>(raw, 1, top) - 1);
}

ExtWeight BatchDeletionIndex::SketchDistances::lookup(VertexId v, bool& found) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    found = it != vertices.end() && *it == v;
    return found ? dist[static_cast<std::size_t>(it - vertices.begin())] : ExtWeight::pos_inf();
}

// Distances from c_j (towards_hub = false) or to c_j (true) in G \ D,
// restricted to the vertices `hit` whose stored paths D destroyed. Every
// other vertex contributes through its intact stored path.
BatchDeletionIndex::SketchDistances BatchDeletionIndex::sketch_distances(
    const Level& level, std::uint32_t j, std::vector<VertexId> hit, bool towards_hub, std::span<const char> in_d,
    std::span<const Weight> p, std::vector<std::uint32_t>& local) {
    const VertexId c = level.cover[j];
    std::vector<VertexId> nodes{c};
    local[c] = 0;
    for (VertexId z : hit) {
        if (!in_d[z] && z != c) {
            local[z] = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back(z);
        }
    }
    const std::vector<ExtWeight>& stored = towards_hub ? level.from_len[j] : level.to_len[j];

    struct LocalArc {
        std::uint32_t to;
        Weight w;
        Weight rc;
    };
    std::vector<std::vector<LocalArc>> adj(nodes.size());
    for (std::uint32_t lz = 1; lz < nodes.size(); ++lz) {
        const VertexId z = nodes[lz];
        const auto arcs = towards_hub ? g_.out_arcs(z) : g_.in_arcs(z);
        for (const Arc& a : arcs) {
            const VertexId v = a.head;
            if (in_d[v]) {
                continue;
            }
            // Original edge is v -> z (towards_hub = false) or z -> v.
            if (local[v] != kNoLocal) {
                const Weight rc = towards_hub ? a.weight + p[z] - p[v] : a.weight + p[v] - p[z];
                adj[local[v]].push_back({lz, a.weight, rc});
            } else if (stored[v].is_finite()) {
                const Weight w = stored[v].value() + a.weight;
                const Weight rc = towards_hub ? w + p[z] - p[c] : w + p[c] - p[z];
                adj[0].push_back({lz, w, rc});
            }
        }
    }

    std::vector<double> key;
    std::vector<double> dist;
    std::vector<VertexId> parent;
    const VertexId source = 0;
    detail::dijkstra_core(
        nodes.size(), std::span<const VertexId>(&source, 1),
        [&](VertexId x, auto&& emit) {
            for (const LocalArc& a : adj[x]) {
                emit(a.to, a.w, a.rc);
            }
        },
        [](VertexId) { return false; }, key, dist, parent);

    SketchDistances out;
    std::vector<std::pair<VertexId, ExtWeight>> entries;
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
        entries.emplace_back(nodes[i], ExtWeight::from_double(dist[i]));
        local[nodes[i]] = kNoLocal;
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [v, d] : entries) {
        out.vertices.push_back(v);
        out.dist.push_back(d);
    }
    return out;
}

BatchDeletionIndex::QueryResult BatchDeletionIndex::query(std::span<const VertexId> d, QueryTrace* trace) {
    const std::size_t n = num_vertices();
    for (VertexId v : d) {
        g_.check_vertex(v);
    }
    std::vector<VertexId> dset(d.begin(), d.end());
    sort_unique(dset);
    std::vector<char> in_d(n, 0);
    std::vector<char> allowed(n, 1);
    for (VertexId v : dset) {
        in_d[v] = 1;
        allowed[v] = 0;
    }

    QueryResult result;
    negdet_.remove_vertices(dset);
    if (negdet_.has_negative_cycle()) {
        negdet_.revert();
        result.negative_cycle = true;
        return result;
    }
    const PriceFunction p = negdet_.price_function();
    negdet_.revert();

    const std::size_t k = pairs_.size();
    std::vector<ExtWeight> best(k, ExtWeight::pos_inf());

    // Long shortest paths contain a hub of the cutoff level.
    const std::size_t cut = cutoff_level(dset.size());
    for (VertexId c : levels_[cut].sample) {
        if (in_d[c]) {
            continue;
        }
        const DistArray fwd = dijkstra(g_, c, p, Direction::Forward, allowed);
        const DistArray rev = dijkstra(g_, c, p, Direction::Reverse, allowed);
        for (std::size_t l = 0; l < k; ++l) {
            best[l] = min(best[l], rev.dist[pairs_[l].first] + fwd.dist[pairs_[l].second]);
        }
    }
    if (trace) {
        trace->cutoff_level = cut;
        trace->long_paths = best;
        trace->survivor.assign(levels_.size(), {});
        trace->estimate.assign(levels_.size(), {});
        trace->x_sets.assign(levels_.size(), {});
    }

    std::vector<std::uint32_t> local(n, kNoLocal);
    for (std::size_t li = 0; li < levels_.size(); ++li) {
        const Level& level = levels_[li];
        const std::size_t cover_size = level.cover.size();
        std::vector<std::vector<std::uint32_t>> x(k);
        std::vector<std::vector<VertexId>> hit_to(cover_size);
        std::vector<std::vector<VertexId>> hit_from(cover_size);
        for (VertexId dv : dset) {
            for (const PathRef& ref : level.through[dv]) {
                if (ref.towards_hub) {
                    hit_from[ref.j].push_back(ref.endpoint);
                    for (std::size_t l : pairs_.pairs_from(ref.endpoint)) {
                        x[l].push_back(ref.j);
                    }
                } else {
                    hit_to[ref.j].push_back(ref.endpoint);
                    for (std::size_t l : pairs_.pairs_to(ref.endpoint)) {
                        x[l].push_back(ref.j);
                    }
                }
            }
        }
        for (auto& xs : x) {
            std::sort(xs.begin(), xs.end());
            xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        }

        std::vector<ExtWeight> estimate(k, ExtWeight::pos_inf());
        std::vector<ExtWeight> survivor(k, ExtWeight::pos_inf());
        for (std::size_t l = 0; l < k; ++l) {
            for (const Candidate& cand : level.candidates[l]) {
                if (!std::binary_search(x[l].begin(), x[l].end(), cand.j)) {
                    survivor[l] = cand.value;
                    break;
                }
            }
            estimate[l] = survivor[l];
        }

        std::vector<SketchDistances> sketch_to(cover_size);
        std::vector<SketchDistances> sketch_from(cover_size);
        std::vector<char> built(cover_size, 0);
        for (std::size_t l = 0; l < k; ++l) {
            const auto [s, t] = pairs_[l];
            for (std::uint32_t j : x[l]) {
                if (in_d[level.cover[j]]) {
                    continue;
                }
                if (!built[j]) {
                    sort_unique(hit_to[j]);
                    sort_unique(hit_from[j]);
                    sketch_to[j] = sketch_distances(level, j, hit_to[j], false, in_d, p, local);
                    sketch_from[j] = sketch_distances(level, j, hit_from[j], true, in_d, p, local);
                    built[j] = 1;
                }
                bool found = false;
                ExtWeight left = sketch_from[j].lookup(s, found);
                if (!found) {
                    left = level.from_len[j][s];
                }
                ExtWeight right = sketch_to[j].lookup(t, found);
                if (!found) {
                    right = level.to_len[j][t];
                }
                estimate[l] = min(estimate[l], left + right);
            }
            best[l] = min(best[l], estimate[l]);
        }
        if (trace) {
            trace->survivor[li] = std::move(survivor);
            trace->estimate[li] = std::move(estimate);
            trace->x_sets[li] = std::move(x);
        }
    }

    for (std::size_t l = 0; l < k; ++l) {
        const auto [s, t] = pairs_[l];
        if (in_d[s] || in_d[t]) {
            best[l] = ExtWeight::pos_inf();
        } else if (s == t) {
            best[l] = ExtWeight(0);
        }
    }
    result.dist = std::move(best);
    return result;
}

} // namespace dyncycle
