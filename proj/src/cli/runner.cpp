#include "dyncycle/cli/runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>

#include "dyncycle/approx.hpp"
#include "dyncycle/cli/workload_io.hpp"
#include "dyncycle/dynamic_exact.hpp"
#include "dyncycle/edge_threshold.hpp"
#include "dyncycle/errors.hpp"
#include "dyncycle/negcycle.hpp"
#include "dyncycle/oracles.hpp"
#include "dyncycle/threshold.hpp"

namespace dyncycle::cli {

namespace {

std::string bool_answer(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<ExtWeight>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += ';';
        }
        out += values[i].to_string();
    }
    return out;
}

// Vertex-update structures. Edge ops become an update of the tail vertex.
class VertexBased : public Structure {
  public:
    explicit VertexBased(std::size_t n) : mirror_(n) {}

    void apply(const Op& op) final {
        switch (op.kind) {
        case OpKind::Query:
            return;
        case OpKind::VertexUpdate:
            update(op.v, op.in, op.out);
            break;
        case OpKind::InsertEdge:
        case OpKind::DeleteEdge: {
            mirror_.check_vertex(op.u);
            mirror_.check_vertex(op.v);
            const bool present = mirror_.has_edge(op.u, op.v);
            if (op.kind == OpKind::InsertEdge && present) {
                throw AlreadyPresent("edge " + std::to_string(op.u) + "->" + std::to_string(op.v) +
                                     " already present");
            }
            if (op.kind == OpKind::DeleteEdge && !present) {
                throw NotPresent("edge " + std::to_string(op.u) + "->" + std::to_string(op.v) + " not present");
            }
            EdgeBatch in;
            EdgeBatch out;
            for (const Arc& a : mirror_.in_arcs(op.u)) {
                if (!(op.kind == OpKind::DeleteEdge && a.head == op.u && op.v == op.u)) {
                    in.push_back({a.head, op.u, a.weight});
                }
            }
            for (const Arc& a : mirror_.out_arcs(op.u)) {
                if (a.head != op.u && !(op.kind == OpKind::DeleteEdge && a.head == op.v)) {
                    out.push_back({op.u, a.head, a.weight});
                }
            }
            if (op.kind == OpKind::InsertEdge) {
                (op.u == op.v ? in : out).push_back({op.u, op.v, op.w});
            }
            update(op.u, in, out);
            return;
        }
        }
    }

  protected:
    virtual void do_update(VertexId v, std::span<const Edge> in, std::span<const Edge> out) = 0;

  private:
    void update(VertexId v, std::span<const Edge> in, std::span<const Edge> out) {
        mirror_.check_vertex(v);
        validate_centered(v, in, out);
        for (const Edge& e : in) {
            mirror_.check_vertex(e.from);
        }
        for (const Edge& e : out) {
            mirror_.check_vertex(e.to);
        }
        do_update(v, in, out);
        mirror_.apply_vertex_update(v, in, out);
    }

    DynamicDigraph mirror_;
};

class ThresholdAdapter final : public VertexBased {
  public:
    ThresholdAdapter(std::size_t n, Weight mu) : VertexBased(n), d_(n, mu) {}
    std::string answer() override { return bool_answer(d_.cycle_below_threshold()); }
    std::uint64_t update_calls() const override { return d_.counters().update_calls; }

  protected:
    void do_update(VertexId v, std::span<const Edge> in, std::span<const Edge> out) override {
        d_.vertex_update(v, in, out);
    }

  private:
    ThresholdDetector d_;
};

class ApproxAdapter final : public VertexBased {
  public:
    ApproxAdapter(std::size_t n, double eps, Weight c, Weight C) : VertexBased(n), d_(n, eps, c, C) {}
    std::string answer() override { return d_.estimate().to_string(); }
    std::uint64_t update_calls() const override { return d_.total_update_calls(); }

  protected:
    void do_update(VertexId v, std::span<const Edge> in, std::span<const Edge> out) override {
        d_.vertex_update(v, in, out);
    }

  private:
    ApproxMinCycle d_;
};

class NegcycleAdapter final : public VertexBased {
  public:
    explicit NegcycleAdapter(std::size_t n) : VertexBased(n), d_(n) {}
    std::string answer() override { return bool_answer(d_.has_negative_cycle()); }
    std::uint64_t update_calls() const override { return d_.total_augmentations(); }

  protected:
    void do_update(VertexId v, std::span<const Edge> in, std::span<const Edge> out) override {
        d_.vertex_update(v, in, out);
    }

  private:
    NegativeCycleDetector d_;
};

class ExactAdapter final : public VertexBased {
  public:
    ExactAdapter(std::size_t n, DynamicExact d) : VertexBased(n), d_(std::move(d)) {}
    std::string answer() override {
        if (d_.mode() == DynamicExact::Mode::MinCycle) {
            return d_.query_mincycle().to_string();
        }
        const DynamicExact::MpspAnswer a = d_.query_mpsp();
        return a.negative_cycle ? "-inf" : join(a.dist);
    }
    std::uint64_t update_calls() const override { return d_.phase(); }

  protected:
    void do_update(VertexId v, std::span<const Edge> in, std::span<const Edge> out) override {
        d_.vertex_update(v, in, out);
    }

  private:
    DynamicExact d_;
};

class OracleAdapter final : public VertexBased {
  public:
    explicit OracleAdapter(std::size_t n) : VertexBased(n), g_(n) {}
    std::string answer() override { return oracle_phi(g_).to_string(); }

  protected:
    void do_update(VertexId v, std::span<const Edge> in, std::span<const Edge> out) override {
        g_.apply_vertex_update(v, in, out);
    }

  private:
    DynamicDigraph g_;
};

// Vertex updates become deletions of the incident edges followed by insertions.
class EdgeThresholdAdapter final : public Structure {
  public:
    EdgeThresholdAdapter(std::size_t n, Weight mu) : d_(std::make_unique<NaiveOracle>(n), mu) {}

    void apply(const Op& op) override {
        switch (op.kind) {
        case OpKind::Query:
            return;
        case OpKind::InsertEdge:
            d_.insert_edge(op.u, op.v, op.w);
            return;
        case OpKind::DeleteEdge:
            d_.delete_edge(op.u, op.v);
            return;
        case OpKind::VertexUpdate: {
            const DynamicDigraph& g = d_.graph();
            g.check_vertex(op.v);
            validate_centered(op.v, op.in, op.out);
            DynamicDigraph target(g.num_vertices());
            target.apply_vertex_update(op.v, op.in, op.out);
            for (const Edge& e : g.incident_edges(op.v)) {
                d_.delete_edge(e.from, e.to);
            }
            for (const Edge& e : target.edges()) {
                d_.insert_edge(e.from, e.to, e.weight);
            }
            return;
        }
        }
    }
    std::string answer() override { return bool_answer(d_.cycle_below_threshold()); }
    std::uint64_t update_calls() const override { return d_.update_calls(); }

  private:
    EdgeThresholdDetector d_;
};

Weight default_c(const RunConfig& config) { return config.c.value_or(1.0); }

Weight default_C(const RunConfig& config, const Workload& wl) {
    return config.C.value_or(std::max(1.0, static_cast<double>(wl.n) * static_cast<double>(wl.W)));
}

Weight require_mu(const RunConfig& config) {
    if (!config.mu) {
        throw InvalidConfig("structure " + config.structure + " needs --mu");
    }
    return *config.mu;
}

std::optional<double> parse_answer(const std::string& s) {
    if (s == "-inf") {
        return -INFINITY;
    }
    if (s == "+inf") {
        return INFINITY;
    }
    double x = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return x;
}

bool sandwich_ok(const std::string& got, const std::string& phi_text, double eps) {
    const auto est = parse_answer(got);
    const auto phi = parse_answer(phi_text);
    if (!est || !phi) {
        return false;
    }
    if (!std::isfinite(*phi) || *phi <= 0) {
        return got == phi_text;
    }
    return *est >= *phi && *est <= (1 + eps) * *phi;
}

template <class F>
void for_each_op(const Workload& wl, F&& f) {
    for (std::size_t i = 0; i < wl.ops.size(); ++i) {
        const Op& op = wl.ops[i];
        try {
            f(i, op);
        } catch (const InvalidConfig&) {
            throw;
        } catch (const Error& e) {
            throw InputError(op.line, e.what());
        }
    }
}

} // namespace

const std::vector<std::string>& structure_names() {
    static const std::vector<std::string> names{"threshold", "approx",         "negcycle", "mpsp",
                                                "exact-mincycle", "edge-threshold", "oracle"};
    return names;
}

std::unique_ptr<Structure> make_structure(const RunConfig& config, const Workload& wl) {
    const std::size_t n = wl.n;
    const std::string& s = config.structure;
    if (s == "threshold") {
        return std::make_unique<ThresholdAdapter>(n, require_mu(config));
    }
    if (s == "approx") {
        return std::make_unique<ApproxAdapter>(n, config.eps, default_c(config), default_C(config, wl));
    }
    if (s == "negcycle") {
        return std::make_unique<NegcycleAdapter>(n);
    }
    if (s == "mpsp") {
        const std::size_t delta = config.delta ? config.delta : default_phase_length(n);
        return std::make_unique<ExactAdapter>(n, DynamicExact::new_mpsp(n, config.pairs, delta, config.seed));
    }
    if (s == "exact-mincycle") {
        return std::make_unique<ExactAdapter>(n, DynamicExact::new_mincycle(n, config.delta, config.seed));
    }
    if (s == "edge-threshold") {
        return std::make_unique<EdgeThresholdAdapter>(n, require_mu(config));
    }
    if (s == "oracle") {
        return std::make_unique<OracleAdapter>(n);
    }
    throw InvalidConfig("unknown structure " + s);
}

std::vector<std::string> run_workload(const RunConfig& config, const Workload& wl) {
    auto structure = make_structure(config, wl);
    std::vector<std::string> answers;
    for_each_op(wl, [&](std::size_t, const Op& op) {
        if (op.kind == OpKind::Query) {
            answers.push_back(structure->answer());
        } else {
            structure->apply(op);
        }
    });
    return answers;
}

std::vector<std::string> oracle_answers(const RunConfig& config, const Workload& wl) {
    const std::string& s = config.structure;
    if (std::find(structure_names().begin(), structure_names().end(), s) == structure_names().end()) {
        throw InvalidConfig("unknown structure " + s);
    }
    const bool threshold = s == "threshold" || s == "edge-threshold";
    const Weight mu = threshold ? require_mu(config) : 0.0;
    DynamicDigraph g(wl.n);
    std::vector<std::string> answers;
    for_each_op(wl, [&](std::size_t, const Op& op) {
        if (op.kind != OpKind::Query) {
            apply_op(g, op);
            return;
        }
        if (threshold) {
            answers.push_back(bool_answer(oracle_threshold(g, mu)));
        } else if (s == "negcycle") {
            answers.push_back(bool_answer(oracle_has_negative_cycle(g)));
        } else if (s == "mpsp") {
            const OracleMpsp r = oracle_mpsp(g, {}, config.pairs);
            answers.push_back(r.negative_cycle ? "-inf" : join(r.dist));
        } else {
            answers.push_back(oracle_phi(g).to_string());
        }
    });
    return answers;
}

CheckReport check_workload(const RunConfig& config, const Workload& wl,
                           const std::optional<std::vector<std::string>>& expected) {
    const std::vector<std::string> got = run_workload(config, wl);
    const std::vector<std::string> want = expected ? *expected : oracle_answers(config, wl);
    const bool sandwich = !expected && config.structure == "approx";
    CheckReport report;
    report.queries = got.size();
    if (got.size() != want.size()) {
        ++report.mismatches;
        report.messages.push_back("query count " + std::to_string(got.size()) + " != expected " +
                                  std::to_string(want.size()));
    }
    for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
        const bool ok = sandwich ? sandwich_ok(got[i], want[i], config.eps) : got[i] == want[i];
        if (!ok) {
            ++report.mismatches;
            report.messages.push_back("query " + std::to_string(i) + ": got " + got[i] + ", expected " +
                                      (sandwich ? "within (1+eps) of " : "") + want[i]);
        }
    }
    return report;
}

void bench_workload(const RunConfig& config, const Workload& wl, std::ostream& out) {
    auto structure = make_structure(config, wl);
    out << "op_index,op_kind,wall_ns,dijkstra_calls,update_calls\n";
    for_each_op(wl, [&](std::size_t i, const Op& op) {
        const std::uint64_t dij0 = sssp_counters().dijkstra_calls;
        const std::uint64_t upd0 = structure->update_calls();
        const auto t0 = std::chrono::steady_clock::now();
        if (op.kind == OpKind::Query) {
            (void)structure->answer();
        } else {
            structure->apply(op);
        }
        const auto t1 = std::chrono::steady_clock::now();
        out << i << ',' << to_string(op.kind) << ','
            << std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() << ','
            << sssp_counters().dijkstra_calls - dij0 << ',' << structure->update_calls() - upd0 << '\n';
    });
}

} // namespace dyncycle::cli
