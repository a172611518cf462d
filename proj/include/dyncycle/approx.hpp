#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dyncycle/ext_weight.hpp"
#include "dyncycle/graph.hpp"
#include "dyncycle/threshold.hpp"

namespace dyncycle {

// (1+eps)-approximate minimum cycle weight under vertex updates, assuming
// every positive cycle weighs within [c, C].
//
// Runs one ThresholdDetector per power (1+eps)^k with k in [k_min, k_max],
// plus one at 0 (negative cycle) and one at c (zero-weight cycle). The
// estimate is the smallest power whose detector fires.
class ApproxMinCycle {
  public:
    // Throws InvalidConfig unless 0 < eps <= 1 and 0 < c <= C.
    ApproxMinCycle(std::size_t n, double eps, Weight c, Weight C);

    void vertex_update(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out);

    // -inf, 0, (1+eps)^k* or +inf.
    ExtWeight estimate() const;

    double eps() const { return eps_; }
    int k_min() const { return k_min_; }
    int k_max() const { return k_max_; }
    // Thresholds of the power detectors, index i <-> k = k_min + i.
    const std::vector<Weight>& thresholds() const { return thresholds_; }
    std::size_t num_detectors() const { return powers_.size() + 2; }
    const ThresholdDetector& power_detector(std::size_t i) const { return powers_[i]; }
    const DynamicDigraph& graph() const { return negative_.graph(); }
    std::uint64_t total_update_calls() const;

  private:
    double eps_;
    Weight c_;
    Weight C_;
    int k_min_;
    int k_max_;
    std::vector<Weight> thresholds_;
    std::vector<ThresholdDetector> powers_;
    ThresholdDetector negative_;
    ThresholdDetector zero_;
};

// Smallest integer k with base^k >= x, for base > 1 and x > 0.
int ceil_log(double base, double x);

} // namespace dyncycle
