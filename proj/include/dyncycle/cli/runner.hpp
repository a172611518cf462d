#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dyncycle/workload.hpp"

namespace dyncycle::cli {

struct RunConfig {
    // threshold | approx | negcycle | mpsp | exact-mincycle | edge-threshold | oracle
    std::string structure = "oracle";
    std::optional<double> mu;
    double eps = 0.5;
    std::optional<double> c;
    std::optional<double> C;
    std::size_t delta = 0; // 0: default phase length
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::uint64_t seed = 1;
};

const std::vector<std::string>& structure_names();

// A structure driven by workload ops. Edge ops are translated into vertex
// updates for vertex-based structures and vice versa.
class Structure {
  public:
    virtual ~Structure() = default;
    virtual void apply(const Op& op) = 0;
    virtual std::string answer() = 0;
    // Structure-specific repair counter (cumulative).
    virtual std::uint64_t update_calls() const { return 0; }
};

// Throws InvalidConfig on a bad parameter set.
std::unique_ptr<Structure> make_structure(const RunConfig& config, const Workload& wl);

// Answers of every query op. Throws InputError for ops that do not apply to
// the current graph.
std::vector<std::string> run_workload(const RunConfig& config, const Workload& wl);

// Reference answers from the brute-force oracles.
std::vector<std::string> oracle_answers(const RunConfig& config, const Workload& wl);

struct CheckReport {
    std::size_t queries = 0;
    std::size_t mismatches = 0;
    std::vector<std::string> messages;
};

// Against `expected` if given, else against the oracles. The approximation
// structure is checked for the (1+eps) sandwich instead of equality.
CheckReport check_workload(const RunConfig& config, const Workload& wl,
                           const std::optional<std::vector<std::string>>& expected);

// CSV op_index,op_kind,wall_ns,dijkstra_calls,update_calls; one row per op.
void bench_workload(const RunConfig& config, const Workload& wl, std::ostream& out);

} // namespace dyncycle::cli
