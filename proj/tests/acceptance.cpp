// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance [bench.csv]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dyncycle/approx.hpp"
#include "dyncycle/batch_index.hpp"
#include "dyncycle/cli/runner.hpp"
#include "dyncycle/dynamic_exact.hpp"
#include "dyncycle/edge_threshold.hpp"
#include "dyncycle/negcycle.hpp"
#include "dyncycle/oracles.hpp"
#include "dyncycle/sssp.hpp"
#include "dyncycle/threshold.hpp"
#include "dyncycle/workload.hpp"
#include "reference.hpp"

using namespace dyncycle;

namespace {

struct Outcome {
    bool pass = true;
    bool soft = false;
    std::string summary;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        pass = false;
        if (failures.size() < 10) {
            failures.push_back(what);
        }
    }
    void require(bool ok, const std::string& what) {
        if (!ok) {
            fail(what);
        }
    }
};

std::string str(const ExtWeight& w) { return w.to_string(); }

template <class... Args>
std::string cat(const Args&... args) {
    std::ostringstream out;
    (out << ... << args);
    return out.str();
}

// Criteria 1 and 2 share their runs.
struct ThresholdRuns {
    Outcome correctness;
    Outcome amortization;
};

ThresholdRuns threshold_runs() {
    ThresholdRuns r;
    std::size_t checks = 0;
    std::size_t yes = 0;
    std::uint64_t worst_slack = ~std::uint64_t{0};
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        Rng rng(seed * 0x9e3779b97f4a7c15ULL);
        WorkloadParams params;
        params.n = 2 + rng.below(39);
        params.W = 100;
        params.avg_degree = 1 + 3 * rng.unit();
        params.updates = 30;
        params.seed = seed;
        const Workload wl = generate(params);
        const auto top = 3 * static_cast<std::int64_t>(wl.n) * wl.W;
        const double mu = static_cast<double>(rng.chance(0.5) ? rng.between(0, top) : rng.between(0, 4 * wl.W));
        ThresholdDetector t(wl.n, mu);
        for (const Op& op : wl.ops) {
            if (op.kind != OpKind::VertexUpdate) {
                continue;
            }
            t.vertex_update(op.v, op.in, op.out);
            const bool want = oracle_threshold(t.graph(), mu);
            ++checks;
            yes += want;
            r.correctness.require(t.cycle_below_threshold() == want,
                                  cat("seed ", seed, " mu ", mu, ": got ", t.cycle_below_threshold(), " want ", want));
            const auto& c = t.counters();
            const std::uint64_t budget = 2 * c.inserts + c.deletes;
            r.amortization.require(c.update_calls <= budget,
                                   cat("seed ", seed, ": update_calls ", c.update_calls, " > ", budget));
            if (c.update_calls <= budget) {
                worst_slack = std::min(worst_slack, budget - c.update_calls);
            }
        }
    }
    r.correctness.summary = cat("500 workloads, ", checks, " checks (", yes, " below, ", checks - yes, " not below)");
    r.amortization.summary = cat("update_calls <= 2*inserts + deletes after ", checks, " updates, min slack ", worst_slack);
    return r;
}

Outcome approx_sandwich() {
    Outcome out;
    std::size_t checks = 0;
    std::size_t neg = 0;
    std::size_t zero = 0;
    std::size_t finite = 0;
    std::size_t acyclic = 0;
    double worst = 1.0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Rng rng(seed + 1000);
        WorkloadParams params;
        params.n = 2 + rng.below(24);
        params.W = 100;
        params.avg_degree = 0.5 + 2.5 * rng.unit();
        params.updates = 30;
        params.seed = seed + 1000;
        // Signed workloads exercise the -inf case.
        params.regime = seed % 5 == 0 ? WeightRegime::Signed : WeightRegime::Nonneg;
        params.negative_fraction = 0.05;
        const Workload wl = generate(params);
        const double eps = seed % 2 ? 0.1 : 0.5;
        const double big_c = static_cast<double>(wl.n) * static_cast<double>(wl.W);
        ApproxMinCycle a(wl.n, eps, 1, big_c);
        for (const Op& op : wl.ops) {
            if (op.kind != OpKind::VertexUpdate) {
                continue;
            }
            a.vertex_update(op.v, op.in, op.out);
            const ExtWeight phi = oracle_phi(a.graph());
            const ExtWeight est = a.estimate();
            ++checks;
            if (phi.is_finite() && phi.value() > 0) {
                if (phi.value() < 1 || phi.value() > big_c) {
                    // Signed workloads may break the [c, C] promise; skip those states.
                    --checks;
                    continue;
                }
                ++finite;
                const bool ok = est >= phi && est.is_finite() && est.value() <= (1 + eps) * phi.value();
                out.require(ok, cat("seed ", seed, " eps ", eps, ": estimate ", str(est), " phi ", str(phi)));
                if (ok) {
                    worst = std::max(worst, est.value() / phi.value());
                }
            } else {
                neg += phi.is_neg_inf();
                zero += phi == ExtWeight(0);
                acyclic += phi.is_pos_inf();
                out.require(est == phi, cat("seed ", seed, ": estimate ", str(est), " phi ", str(phi)));
            }
        }
    }
    out.require(neg > 0 && zero > 0 && finite > 0 && acyclic > 0, "not every outcome type was covered");
    out.summary = cat("200 workloads, ", checks, " checks (-inf ", neg, ", 0 ", zero, ", finite ", finite, ", +inf ",
                      acyclic, "), worst ratio ", worst);
    return out;
}

Outcome negcycle_worst_case() {
    Outcome out;
    std::size_t checks = 0;
    std::size_t negative = 0;
    std::size_t max_dijkstra = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Rng rng(seed + 2000);
        WorkloadParams params;
        params.n = 2 + rng.below(39);
        params.W = 100;
        params.avg_degree = 1 + rng.unit();
        params.updates = 300;
        params.warmup = false;
        params.regime = WeightRegime::Signed;
        params.seed = seed + 2000;
        const Workload wl = generate(params);
        NegativeCycleDetector d(wl.n);
        for (const Op& op : wl.ops) {
            if (op.kind != OpKind::VertexUpdate) {
                continue;
            }
            d.vertex_update(op.v, op.in, op.out);
            ++checks;
            const bool want = oracle_has_negative_cycle(d.graph());
            negative += want;
            const std::string where = cat("seed ", seed, " step ", checks);
            out.require(d.has_negative_cycle() == want, where + ": flag mismatch");
            if (!want && !d.has_negative_cycle()) {
                out.require(ref::feasible(d.graph(), d.price_function()), where + ": infeasible prices");
            }
            out.require(d.check_residual_feasibility(), where + ": negative reduced cost on a residual arc");
            out.require(d.check_conservation(), where + ": flow not conserved");
            out.require(d.dijkstra_count_last_update() <= 2,
                        cat(where, ": ", d.dijkstra_count_last_update(), " augmentations"));
            max_dijkstra = std::max(max_dijkstra, d.dijkstra_count_last_update());
        }
    }
    out.require(negative > 0 && negative < checks, "flag never changed");
    out.summary = cat("40 workloads of 300 updates, ", checks, " checks (", negative,
                      " with a negative cycle), max augmentations per update ", max_dijkstra);
    return out;
}

Outcome batch_mpsp() {
    Outcome out;
    std::size_t queries = 0;
    std::size_t pair_checks = 0;
    std::size_t negative = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Rng rng(seed + 3000);
        const std::size_t n = 2 + rng.below(59);
        const double prob = std::min(1.0, static_cast<double>(1 + rng.below(300)) / static_cast<double>(n * n));
        DynamicDigraph g(n);
        if (seed % 4 == 0) {
            g = ref::random_graph(rng, n, prob, -5, 30);
        } else {
            g = ref::random_feasible_graph(rng, n, prob, 30, 15).g;
        }
        while (g.num_edges() > 300) {
            const EdgeBatch edges = g.edges();
            const Edge& e = edges[rng.below(edges.size())];
            g.delete_edge(e.from, e.to);
        }
        const std::size_t k = 1 + rng.below(100);
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (std::size_t i = 0; i < k; ++i) {
            pairs.emplace_back(static_cast<VertexId>(rng.below(n)), static_cast<VertexId>(rng.below(n)));
        }
        BatchDeletionIndex index(g, PairSet(n, pairs), 8, seed, BatchDeletionIndex::kDefaultHitConstant);
        for (int q = 0; q < 3; ++q) {
            const auto d = rng.sample<VertexId>(n, rng.below(std::min<std::size_t>(n, 8) + 1));
            const auto got = index.query(d);
            const OracleMpsp want = oracle_mpsp(g, d, pairs);
            ++queries;
            negative += want.negative_cycle;
            if (got.negative_cycle != want.negative_cycle) {
                out.fail(cat("seed ", seed, ": negative cycle flag ", got.negative_cycle));
                continue;
            }
            if (want.negative_cycle) {
                continue;
            }
            for (std::size_t l = 0; l < k; ++l) {
                ++pair_checks;
                out.require(got.dist[l] == want.dist[l], cat("seed ", seed, " pair ", l, ": got ", str(got.dist[l]),
                                                             " want ", str(want.dist[l])));
            }
        }
    }
    out.summary = cat("200 instances, ", queries, " queries (", negative, " negative cycle), ", pair_checks,
                      " pair distances");
    return out;
}

Outcome exact_mincycle() {
    Outcome out;
    std::size_t checks = 0;
    std::size_t neg = 0;
    std::size_t zero = 0;
    std::size_t finite = 0;
    std::size_t acyclic = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        Rng rng(seed + 4000);
        WorkloadParams params;
        params.n = 2 + rng.below(49);
        params.W = 100;
        params.avg_degree = 0.5 + 2 * rng.unit();
        params.updates = 200;
        params.warmup = false;
        params.regime = seed % 3 == 0 ? WeightRegime::Signed : WeightRegime::Nonneg;
        params.seed = seed + 4000;
        const Workload wl = generate(params);
        const std::size_t deltas[] = {1, 4, wl.n};
        const std::size_t delta = deltas[seed % 3];
        DynamicExact mc = DynamicExact::new_mincycle(wl.n, delta, seed);
        for (const Op& op : wl.ops) {
            if (op.kind != OpKind::VertexUpdate) {
                continue;
            }
            mc.vertex_update(op.v, op.in, op.out);
            const ExtWeight got = mc.query_mincycle();
            const ExtWeight want = oracle_phi(mc.graph());
            ++checks;
            neg += want.is_neg_inf();
            zero += want == ExtWeight(0);
            finite += want.is_finite() && want != ExtWeight(0);
            acyclic += want.is_pos_inf();
            out.require(got == want, cat("seed ", seed, " delta ", delta, ": got ", str(got), " want ", str(want)));
        }
    }
    out.require(neg > 0 && zero > 0 && finite > 0 && acyclic > 0, "not every outcome type was covered");
    out.summary = cat("100 workloads of 200 updates, ", checks, " queries (-inf ", neg, ", 0 ", zero, ", finite ",
                      finite, ", +inf ", acyclic, ")");
    return out;
}

Outcome insertion_cycles() {
    Outcome out;
    std::size_t with_prices = 0;
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        Rng rng(seed + 5000);
        const std::size_t n = 1 + rng.below(12);
        auto [h, p] = ref::random_feasible_graph(rng, n, 0.1 + 0.3 * rng.unit(), 20, 10);
        const auto v = static_cast<VertexId>(rng.below(n));
        EdgeBatch f;
        for (VertexId u = 0; u < n; ++u) {
            if (rng.chance(0.3)) {
                f.push_back({u, v, static_cast<Weight>(rng.between(-15, 25))});
            }
            if (u != v && rng.chance(0.3)) {
                f.push_back({v, u, static_cast<Weight>(rng.between(-15, 25))});
            }
        }
        DynamicDigraph hf = h;
        for (const Edge& e : f) {
            hf.insert_edge(e.from, e.to, e.weight);
        }
        const InsertionCycle r = min_cycle_with_insertion(h, p, v, f);
        const ExtWeight want = ExtWeight::from_double(ref::dfs_min_cycle_value(hf, v));
        out.require(r.weight == want, cat("seed ", seed, ": got ", str(r.weight), " want ", str(want)));
        out.require(r.prices.has_value() == (r.weight >= ExtWeight(0)), cat("seed ", seed, ": price presence"));
        if (r.prices) {
            ++with_prices;
            out.require(ref::feasible(hf, *r.prices), cat("seed ", seed, ": infeasible prices"));
        }
    }
    out.summary = cat("500 instances, ", with_prices, " with a returned price function");
    return out;
}

// Forwards to a NaiveOracle and checks each insertion outcome against an
// independent Bellman-Ford run.
class CheckedOracle final : public DynamicDistanceOracle {
  public:
    CheckedOracle(std::size_t n, Outcome& out) : inner_(n), out_(out) {}

    InsertOutcome insert_edge(VertexId u, VertexId v, Weight w) override {
        const bool closes = closes_negative(inner_.graph(), u, v, w);
        const InsertOutcome r = inner_.insert_edge(u, v, w);
        out_.require((r == InsertOutcome::RefusedNegativeCycle) == closes, "refusal disagrees with the oracle");
        refusals_ += r == InsertOutcome::RefusedNegativeCycle;
        return r;
    }
    void delete_edge(VertexId u, VertexId v) override { inner_.delete_edge(u, v); }
    ExtWeight distance(VertexId s, VertexId t) override { return inner_.distance(s, t); }
    std::size_t num_vertices() const override { return inner_.num_vertices(); }
    std::size_t num_edges() const override { return inner_.num_edges(); }
    const Counters& counters() const override { return inner_.counters(); }

    static bool closes_negative(const DynamicDigraph& g, VertexId u, VertexId v, Weight w) {
        const std::vector<double> from_v = ref::bellman_ford(g, v, std::vector<char>(g.num_vertices(), 0));
        return from_v[u] + w < 0;
    }
    std::size_t refusals() const { return refusals_; }
    const DynamicDigraph& graph() const { return inner_.graph(); }

  private:
    NaiveOracle inner_;
    Outcome& out_;
    std::size_t refusals_ = 0;
};

Outcome edge_detector() {
    Outcome out;
    std::size_t checks = 0;
    std::size_t yes = 0;
    std::size_t probes = 0;
    std::size_t refusals = 0;
    double worst_ratio = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Rng rng(seed + 6000);
        WorkloadParams params;
        params.n = 2 + rng.below(39);
        params.W = 100;
        params.avg_degree = 1 + 2 * rng.unit();
        params.updates = 60;
        params.edge_ops = true;
        params.seed = seed + 6000;
        const Workload wl = generate(params);
        const auto top = 3 * static_cast<std::int64_t>(wl.n) * wl.W;
        const double mu = static_cast<double>(rng.chance(0.5) ? rng.between(0, top) : rng.between(0, 4 * wl.W));
        auto oracle = std::make_unique<CheckedOracle>(wl.n, out);
        EdgeThresholdDetector d(std::move(oracle), mu);
        std::uint64_t updates = 0;
        for (const Op& op : wl.ops) {
            if (op.kind == OpKind::InsertEdge) {
                d.insert_edge(op.u, op.v, op.w);
            } else if (op.kind == OpKind::DeleteEdge) {
                d.delete_edge(op.u, op.v);
            } else {
                continue;
            }
            ++updates;
            const bool want = oracle_threshold(d.graph(), mu);
            ++checks;
            yes += want;
            out.require(d.cycle_below_threshold() == want, cat("seed ", seed, " mu ", mu, ": answer mismatch"));
        }
        const std::uint64_t calls = d.oracle().counters().total();
        out.require(calls <= 8 * updates, cat("seed ", seed, ": ", calls, " oracle calls for ", updates, " updates"));
        if (updates > 0) {
            worst_ratio = std::max(worst_ratio, static_cast<double>(calls) / static_cast<double>(updates));
        }

        // Direct probes with signed weights, where refusals actually happen.
        CheckedOracle probe(wl.n, out);
        for (int i = 0; i < 40; ++i) {
            const auto u = static_cast<VertexId>(rng.below(wl.n));
            const auto v = static_cast<VertexId>(rng.below(wl.n));
            const auto w = static_cast<Weight>(rng.between(-20, 60));
            if (probe.graph().has_edge(u, v)) {
                probe.delete_edge(u, v);
                continue;
            }
            probe.insert_edge(u, v, w);
            ++probes;
        }
        refusals += probe.refusals();
    }
    out.require(refusals > 0, "no refusal was exercised");
    out.summary = cat("200 workloads, ", checks, " checks (", yes, " below), ", probes, " signed probes with ",
                      refusals, " refusals, max oracle calls per update ", worst_ratio);
    return out;
}

Outcome performance(const std::string& csv_path) {
    Outcome out;
    out.soft = true;
    WorkloadParams params;
    params.n = 300;
    params.W = 1000;
    params.avg_degree = 4;
    params.updates = 300;
    params.warmup = true;
    params.seed = 9;
    const Workload wl = generate(params);
    cli::RunConfig config;
    config.structure = "exact-mincycle";
    config.seed = 9;
    std::ofstream csv(csv_path);
    const auto start = std::chrono::steady_clock::now();
    cli::bench_workload(config, wl, csv);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    DynamicDigraph g(wl.n);
    std::size_t updates = 0;
    std::size_t queries = 0;
    for (const Op& op : wl.ops) {
        apply_op(g, op);
        updates += op.kind != OpKind::Query;
        queries += op.kind == OpKind::Query;
    }
    out.require(seconds < 300, cat("took ", seconds, " s"));
    out.require(static_cast<bool>(csv), "could not write " + csv_path);
    out.summary = cat("n=300, m=", g.num_edges(), ", delta=", default_phase_length(300), ", ", updates, " updates and ",
                      queries, " queries in ", seconds, " s, bench CSV ", csv_path);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const std::string csv_path = argc > 1 ? argv[1] : "acceptance_bench.csv";
    std::vector<std::pair<std::string, Outcome>> results;
    auto run = [&](const std::string& name, const std::function<Outcome()>& f) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = f();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.summary += cat(" [", static_cast<int>(s * 1000) / 1000.0, " s]");
        results.emplace_back(name, std::move(o));
    };
    const auto t_start = std::chrono::steady_clock::now();
    ThresholdRuns t = threshold_runs();
    const double t_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    t.correctness.summary += cat(" [", static_cast<int>(t_s * 1000) / 1000.0, " s]");
    results.emplace_back("1 threshold correctness", std::move(t.correctness));
    results.emplace_back("2 amortization counter", std::move(t.amortization));
    run("3 approximation sandwich", approx_sandwich);
    run("4 negative cycle worst case", negcycle_worst_case);
    run("5 batch deletion MPSP", batch_mpsp);
    run("6 fully dynamic exact min cycle", exact_mincycle);
    run("7 cycle through an inserted batch", insertion_cycles);
    run("8 edge detector over the naive oracle", edge_detector);
    run("9 performance smoke", [&] { return performance(csv_path); });

    int hard_failures = 0;
    for (const auto& [name, o] : results) {
        const char* status = o.pass ? "PASS" : (o.soft ? "SOFT-FAIL" : "FAIL");
        std::cout << status << "  criterion " << name << ": " << o.summary << "\n";
        for (const std::string& f : o.failures) {
            std::cout << "      " << f << "\n";
        }
        hard_failures += !o.pass && !o.soft;
    }
    return hard_failures == 0 ? 0 : 1;
}
