#pragma once

// Asymptotic quantities of the weight sequences that decide tractability.
// +infinity is a legal value; an empty optional means "not known".

#include <optional>

#include "expweight/params.hpp"

namespace expweight {

struct LimitSet {
    std::optional<double> alpha;         // lim a_j / log j
    std::optional<double> alpha_star;    // liminf log(a_j) / j
    std::optional<double> alpha_ecqpt;   // liminf (1 + log j) log(a_j) / j
    std::optional<double> lim_a;         // lim a_j
    std::optional<double> lim_log_ratio; // lim log(a_j) / log j
    std::optional<double> B;             // sum_j 1/b_j
    std::optional<double> B_star;        // sup_s (sum_{j<=s} 1/b_j) / (1 + log s)
    double B_error = 0.0;                // absolute error bound on a finite B
    /// Finiteness of B_star, which can be known without its value (B < inf).
    std::optional<bool> B_star_finite;
};

/// Closed-form limits of a_j = c_a j^v1 exp(v2 j), b_j = c_b j^v3.
LimitSet family_limits(const FamilyParams& p);

/// sum_{j>=1} 1/(c_b j^v) for v > 1, with its error bound.
struct SeriesValue {
    double value;
    double error;
};
SeriesValue power_series_sum(double c_b, double v);

/// Family limits, or the declared limits of an explicit list completed by
/// the implications between them (e.g. alpha_star > 0 forces alpha = inf).
/// Throws ParameterError when the declared values contradict each other.
LimitSet resolve_limits(const WeightFamily& weights);

} // namespace expweight
