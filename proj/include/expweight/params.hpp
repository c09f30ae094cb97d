#pragma once

// Problem parameters for tensor-product spaces with exponential weights:
// the base omega, the weight sequences (a_j), (b_j), the multiplicity
// sequence (m_k) and the dimension s.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace expweight {

/// Arbitrary-precision nonnegative count (information complexities reach m_0^s).
using BigCount = boost::multiprecision::cpp_int;

/// A violated precondition or an invalid parameter value.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or evaluation budget was exhausted before finishing.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bounded multiplicity sequence m_0, m_1, ... stored as a finite prefix
/// followed by a constant tail.
class MultiplicitySpec {
public:
    MultiplicitySpec(std::vector<std::uint64_t> prefix, std::uint64_t tail);

    /// m_k = 1 for all k (l2, Hermite, cosine and Walsh spaces).
    static MultiplicitySpec ones() { return {{}, 1}; }
    /// m_0 = 1, m_k = 2 for k >= 1 (Korobov space).
    static MultiplicitySpec korobov() { return {{1}, 2}; }

    std::uint64_t at(std::uint64_t k) const noexcept
    {
        return k < prefix_.size() ? prefix_[k] : tail_;
    }
    std::uint64_t m0() const noexcept { return at(0); }

    // Extremes over k >= 1; m_0 is excluded.
    std::uint64_t max_positive() const noexcept { return max_pos_; }
    std::uint64_t min_positive() const noexcept { return min_pos_; }

    const std::vector<std::uint64_t>& prefix() const noexcept { return prefix_; }
    std::uint64_t tail() const noexcept { return tail_; }

    /// r_k = m_0 + ... + m_{k-1}.
    std::uint64_t prefix_count(std::uint64_t k) const;
    /// [r_0, ..., r_K].
    std::vector<std::uint64_t> prefix_counts(std::uint64_t K) const;
    /// The unique k with r_k <= n < r_{k+1}.
    std::uint64_t level_of(std::uint64_t n) const;

    bool operator==(const MultiplicitySpec&) const = default;

private:
    std::vector<std::uint64_t> prefix_;
    std::uint64_t tail_;
    std::vector<std::uint64_t> sums_; // r_0..r_P for the prefix
    std::uint64_t max_pos_ = 0;
    std::uint64_t min_pos_ = 0;
};

/// a_j = c_a j^v1 exp(v2 j),  b_j = c_b j^v3.
struct FamilyParams {
    double c_a = 1.0;
    double v1 = 0.0;
    double v2 = 0.0;
    double c_b = 1.0;
    double v3 = 0.0;

    bool operator==(const FamilyParams&) const = default;
};

/// Limit values a user may attach to explicit weight lists. Infinity is a
/// legal value. Absent entries are never estimated from the finite lists.
struct DeclaredLimits {
    std::optional<double> alpha;         // lim a_j / log j
    std::optional<double> alpha_star;    // liminf log(a_j) / j
    std::optional<double> alpha_ecqpt;   // liminf (1 + log j) log(a_j) / j
    std::optional<double> lim_a;         // lim a_j
    std::optional<double> lim_log_ratio; // lim log(a_j) / log j
    std::optional<double> B;             // sum_j 1 / b_j
    std::optional<double> B_star;        // sup_s (sum_{j<=s} 1/b_j) / (1 + log s)

    bool operator==(const DeclaredLimits&) const = default;
};

struct WeightPair {
    double a;
    double b;
};

class WeightFamily {
public:
    static WeightFamily family(const FamilyParams& p);
    static WeightFamily explicit_lists(std::vector<double> a, std::vector<double> b,
                                       DeclaredLimits limits = {});

    bool is_family() const noexcept { return family_mode_; }

    /// (a_j, b_j) for j >= 1.
    WeightPair at(std::size_t j) const;
    double a(std::size_t j) const { return at(j).a; }
    double b(std::size_t j) const { return at(j).b; }

    /// Number of stored entries in explicit mode; empty for a family.
    std::optional<std::size_t> length() const;

    /// True when a_j is known to be an exact short decimal (integer exponent
    /// v1, no exponential factor) or was entered explicitly.
    bool a_is_decimal(std::size_t j) const;

    const FamilyParams& params() const noexcept { return params_; }
    const DeclaredLimits& declared() const noexcept { return limits_; }
    const std::vector<double>& a_list() const noexcept { return a_; }
    const std::vector<double>& b_list() const noexcept { return b_; }

    bool operator==(const WeightFamily&) const = default;

private:
    WeightFamily() = default;

    bool family_mode_ = true;
    FamilyParams params_;
    std::vector<double> a_;
    std::vector<double> b_;
    DeclaredLimits limits_;
};

struct SpaceConfig {
    SpaceConfig(double omega, WeightFamily weights, MultiplicitySpec mult, std::size_t s);

    double omega;
    WeightFamily weights;
    MultiplicitySpec mult;
    std::size_t s;

    double log_inv_omega() const;
    bool operator==(const SpaceConfig&) const = default;
};

} // namespace expweight
