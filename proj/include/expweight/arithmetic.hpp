#pragma once

// Exponent sums  sum_j a_j k_j^{b_j}  and their comparison with a budget x.
//
// Two modes share one interface:
//  * exact: every b_j (j <= s) is a positive integer and every a_j is a short
//    decimal. Values are integers scaled by 10^scale, sums are exact, and a
//    budget x is stored as ceil(x * 10^scale), so "sum < x" is decided exactly.
//  * float: values are doubles. Sums are always accumulated from j = s down
//    to j = 1, so every caller evaluating the same multi-index performs the
//    same rounding steps and sees the same predicate.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "expweight/params.hpp"

namespace expweight {

__extension__ typedef __int128 Int128;

/// value = mantissa * 10^exponent
struct Decimal {
    Int128 mantissa = 0;
    int exponent = 0;
};

/// Shortest round-trip decimal of a finite nonnegative double.
std::optional<Decimal> shortest_decimal(double v);

std::string to_string(Int128 v);

struct Exponent {
    Int128 scaled = 0; // exact mode only
    double value = 0.0;
};

class ExponentArithmetic {
public:
    /// allow_exact = false forces float mode.
    explicit ExponentArithmetic(const SpaceConfig& config, bool allow_exact = true);

    bool exact() const noexcept { return exact_; }
    int scale() const noexcept { return scale_; }
    std::size_t dimension() const noexcept { return a_.size(); }

    Exponent zero() const noexcept { return {}; }
    /// a_j k^{b_j}, with 0^b = 0. j is 1-based.
    Exponent cost(std::size_t j, std::uint64_t k) const;
    Exponent budget(double x) const;
    Exponent add(const Exponent& p, const Exponent& q) const noexcept;
    bool less(const Exponent& p, const Exponent& q) const noexcept;
    bool equal(const Exponent& p, const Exponent& q) const noexcept;
    double to_double(const Exponent& p) const noexcept;

    /// Sum over j = s..1 of cost(j, k[j-1]).
    Exponent index_sum(const std::vector<std::uint64_t>& k) const;

    /// #{k >= 0 : partial + a_j k^{b_j} < x}.
    std::uint64_t feasible_levels(std::size_t j, const Exponent& partial, const Exponent& x) const;
    /// #{k >= 0 : factor * a_j k^{b_j} < x}, i.e. ceil((x / (factor a_j))^{1/b_j}).
    std::uint64_t feasible_levels_scaled(std::size_t j, std::uint64_t factor, const Exponent& x) const;

    /// Upper limit on the level index any counting routine will visit.
    static constexpr std::uint64_t max_levels = std::uint64_t{1} << 40;

private:
    template <class Pred>
    std::uint64_t boundary_search(double estimate, Pred feasible) const;

    bool exact_ = false;
    int scale_ = 0;
    std::vector<double> a_;
    std::vector<double> b_;
    std::vector<Int128> a_scaled_;
    std::vector<unsigned> b_int_;
};

} // namespace expweight
