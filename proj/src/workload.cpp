#include "dyncycle/workload.hpp"

#include <string>

#include "dyncycle/errors.hpp"
#include "dyncycle/random.hpp"

namespace dyncycle {

std::string to_string(OpKind kind) {
    switch (kind) {
    case OpKind::VertexUpdate:
        return "vertex_update";
    case OpKind::InsertEdge:
        return "insert_edge";
    case OpKind::DeleteEdge:
        return "delete_edge";
    case OpKind::Query:
        return "query";
    }
    return "unknown";
}

std::string to_string(WeightRegime regime) { return regime == WeightRegime::Nonneg ? "nonneg" : "signed"; }

namespace {

class Generator {
  public:
    explicit Generator(const WorkloadParams& params)
        : p_(params), rng_(params.seed), g_(params.n), edge_prob_(params.avg_degree / static_cast<double>(params.n)) {}

    Workload run() {
        Workload wl;
        wl.n = p_.n;
        wl.seed = p_.seed;
        wl.regime = p_.regime;
        wl.W = p_.W;
        if (p_.warmup) {
            warmup(wl);
        }
        for (std::size_t i = 0; i < p_.updates; ++i) {
            push(wl, p_.edge_ops ? edge_op() : vertex_op(static_cast<VertexId>(rng_.below(p_.n))));
        }
        return wl;
    }

  private:
    Weight weight() {
        if (p_.regime == WeightRegime::Signed && rng_.chance(p_.negative_fraction)) {
            return static_cast<Weight>(rng_.between(-p_.W, -1));
        }
        if (rng_.chance(p_.zero_fraction)) {
            return 0;
        }
        return static_cast<Weight>(rng_.between(1, p_.W));
    }

    Op vertex_op(VertexId v) {
        Op op;
        op.kind = OpKind::VertexUpdate;
        op.v = v;
        for (VertexId u = 0; u < p_.n; ++u) {
            if (rng_.chance(edge_prob_)) {
                op.in.push_back({u, v, weight()});
            }
        }
        for (VertexId z = 0; z < p_.n; ++z) {
            if (z != v && rng_.chance(edge_prob_)) {
                op.out.push_back({v, z, weight()});
            }
        }
        return op;
    }

    Op insert_op() {
        const std::size_t total = p_.n * p_.n;
        while (true) {
            const std::uint64_t x = rng_.below(total);
            const auto u = static_cast<VertexId>(x / p_.n);
            const auto v = static_cast<VertexId>(x % p_.n);
            if (!g_.has_edge(u, v)) {
                Op op;
                op.kind = OpKind::InsertEdge;
                op.u = u;
                op.v = v;
                op.w = weight();
                return op;
            }
        }
    }

    Op delete_op() {
        const EdgeBatch edges = g_.edges();
        const Edge& e = edges[rng_.below(edges.size())];
        Op op;
        op.kind = OpKind::DeleteEdge;
        op.u = e.from;
        op.v = e.to;
        return op;
    }

    Op edge_op() {
        const double target = p_.avg_degree * static_cast<double>(p_.n);
        const auto m = static_cast<double>(g_.num_edges());
        if (m == 0) {
            return insert_op();
        }
        if (m >= static_cast<double>(p_.n * p_.n)) {
            return delete_op();
        }
        return rng_.chance(m < target ? 0.7 : 0.3) ? insert_op() : delete_op();
    }

    void warmup(Workload& wl) {
        if (!p_.edge_ops) {
            for (VertexId v : rng_.sample<VertexId>(p_.n, p_.n)) {
                push(wl, vertex_op(v), false);
            }
            return;
        }
        const auto target = static_cast<std::size_t>(p_.avg_degree * static_cast<double>(p_.n));
        while (g_.num_edges() < target && g_.num_edges() < p_.n * p_.n) {
            push(wl, insert_op(), false);
        }
    }

    void push(Workload& wl, Op op, bool maybe_query = true) {
        apply_op(g_, op);
        wl.ops.push_back(std::move(op));
        if (maybe_query && rng_.chance(p_.query_rate)) {
            wl.ops.push_back(Op{});
        }
    }

    const WorkloadParams& p_;
    Rng rng_;
    DynamicDigraph g_;
    double edge_prob_;
};

} // namespace

Workload generate(const WorkloadParams& params) {
    if (params.n == 0) {
        throw InvalidConfig("workload needs at least one vertex");
    }
    if (params.W < 1 || params.W > (std::int64_t{1} << 30)) {
        throw InvalidConfig("W must lie in [1, 2^30]");
    }
    return Generator(params).run();
}

void apply_op(DynamicDigraph& g, const Op& op) {
    switch (op.kind) {
    case OpKind::VertexUpdate:
        g.apply_vertex_update(op.v, op.in, op.out);
        break;
    case OpKind::InsertEdge:
        g.check_vertex(op.u);
        g.check_vertex(op.v);
        if (g.has_edge(op.u, op.v)) {
            throw AlreadyPresent("edge " + std::to_string(op.u) + "->" + std::to_string(op.v) + " already present");
        }
        g.insert_edge(op.u, op.v, op.w);
        break;
    case OpKind::DeleteEdge:
        g.delete_edge(op.u, op.v);
        break;
    case OpKind::Query:
        break;
    }
}

} // namespace dyncycle
