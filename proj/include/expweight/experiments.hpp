#pragma once

// Experiments over a geometric grid of budgets: the log-log slope of
// n(x, s) and the lower/exact/upper sandwich.

#include <cstddef>
#include <optional>
#include <vector>

#include "expweight/complexity.hpp"
#include "expweight/params.hpp"

namespace expweight {

struct BudgetGrid {
    double x_min = 1.0;
    double x_max = 10.0;
    std::size_t points = 3;

    /// Geometric points x_min .. x_max inclusive.
    std::vector<double> values() const;
};

struct FitResult {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    double predicted_B_s = 0;
    std::size_t points_used = 0;
};

/// Least-squares fit of log n against log x; zero counts are skipped.
FitResult run_fit_exp(const SpaceConfig& config, const BudgetGrid& grid, const CountOptions& options = {});

struct SandwichRow {
    double x = 0;
    BigCount lower;
    BigCount exact;
    BigCount upper;
    std::optional<BigCount> upper_pp14; // m_0 = 1 only
    bool ok = true;
};

/// Lower bound IV (I when x <= a_1, where it is exact), exact count and
/// upper bound III per grid point.
std::vector<SandwichRow> run_sandwich(const SpaceConfig& config, const std::vector<double>& xs,
                                      const CountOptions& options = {});

} // namespace expweight

#include <random>

namespace expweight {

struct RandomInstance {
    SpaceConfig config;
    double x;
};

/// Random instance with s <= max_s, omega in [0.1, 0.9], prefix length <= 4,
/// entries and tail in [1, 3], and x <= max_x shrunk until the brute-force box
/// holds at most box_cap points. About a third of the budgets sit exactly on
/// an exponent sum.
RandomInstance random_instance(std::mt19937_64& rng, std::size_t max_s = 4, double max_x = 25.0,
                               double box_cap = 2e6);

} // namespace expweight
