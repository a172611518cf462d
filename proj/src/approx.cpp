#include "dyncycle/approx.hpp"

#include <cmath>

#include "dyncycle/errors.hpp"

namespace dyncycle {

int ceil_log(double base, double x) {
    int k = static_cast<int>(std::ceil(std::log(x) / std::log(base)));
    // log() rounding can land one off when x is an exact power.
    while (std::pow(base, k - 1) >= x) {
        --k;
    }
    while (std::pow(base, k) < x) {
        ++k;
    }
    return k;
}

ApproxMinCycle::ApproxMinCycle(std::size_t n, double eps, Weight c, Weight C)
    : eps_(eps), c_(c), C_(C), k_min_(0), k_max_(0), negative_(n, 0.0), zero_(n, c > 0 ? c : 0.0) {
    if (!(eps > 0 && eps <= 1)) {
        throw InvalidConfig("eps must lie in (0, 1]");
    }
    if (!(c > 0 && c <= C) || !std::isfinite(C)) {
        throw InvalidConfig("cycle weight bounds must satisfy 0 < c <= C < inf");
    }
    const double base = 1 + eps;
    k_min_ = ceil_log(base, c);
    k_max_ = ceil_log(base, C);
    // Successive products, so each threshold is the rounded product of the
    // previous one and (1+eps).
    Weight mu = std::pow(base, k_min_);
    for (int k = k_min_; k <= k_max_; ++k) {
        thresholds_.push_back(mu);
        powers_.emplace_back(n, mu);
        mu *= base;
    }
}

void ApproxMinCycle::vertex_update(VertexId v, std::span<const Edge> new_in, std::span<const Edge> new_out) {
    negative_.vertex_update(v, new_in, new_out);
    zero_.vertex_update(v, new_in, new_out);
    for (ThresholdDetector& d : powers_) {
        d.vertex_update(v, new_in, new_out);
    }
}

ExtWeight ApproxMinCycle::estimate() const {
    if (negative_.cycle_below_threshold()) {
        return ExtWeight::neg_inf();
    }
    if (zero_.cycle_below_threshold()) {
        return ExtWeight(0);
    }
    for (std::size_t i = 0; i < powers_.size(); ++i) {
        if (powers_[i].cycle_below_threshold()) {
            return ExtWeight(thresholds_[i]);
        }
    }
    return ExtWeight::pos_inf();
}

std::uint64_t ApproxMinCycle::total_update_calls() const {
    std::uint64_t total = negative_.counters().update_calls + zero_.counters().update_calls;
    for (const ThresholdDetector& d : powers_) {
        total += d.counters().update_calls;
    }
    return total;
}

} // namespace dyncycle
