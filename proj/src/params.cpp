#include "expweight/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace expweight {

MultiplicitySpec::MultiplicitySpec(std::vector<std::uint64_t> prefix, std::uint64_t tail)
    : prefix_(std::move(prefix)), tail_(tail)
{
    if (tail_ == 0)
        throw ParameterError("multiplicity tail must be >= 1");
    for (auto m : prefix_)
        if (m == 0)
            throw ParameterError("multiplicities must be >= 1");

    sums_.reserve(prefix_.size() + 1);
    sums_.push_back(0);
    for (auto m : prefix_)
        sums_.push_back(sums_.back() + m);

    max_pos_ = tail_;
    min_pos_ = tail_;
    for (std::size_t k = 1; k < prefix_.size(); ++k) {
        max_pos_ = std::max(max_pos_, prefix_[k]);
        min_pos_ = std::min(min_pos_, prefix_[k]);
    }
}

std::uint64_t MultiplicitySpec::prefix_count(std::uint64_t k) const
{
    const std::uint64_t P = prefix_.size();
    if (k <= P)
        return sums_[k];
    const std::uint64_t extra = k - P;
    if (extra > (std::numeric_limits<std::uint64_t>::max() - sums_[P]) / tail_)
        throw ResourceLimit("prefix count overflows 64 bits");
    return sums_[P] + extra * tail_;
}

std::vector<std::uint64_t> MultiplicitySpec::prefix_counts(std::uint64_t K) const
{
    std::vector<std::uint64_t> r;
    r.reserve(K + 1);
    r.push_back(0);
    for (std::uint64_t k = 0; k < K; ++k)
        r.push_back(r.back() + at(k));
    return r;
}

std::uint64_t MultiplicitySpec::level_of(std::uint64_t n) const
{
    const std::uint64_t P = prefix_.size();
    if (n >= sums_[P])
        return P + (n - sums_[P]) / tail_;
    // largest k with r_k <= n, inside the prefix
    auto it = std::upper_bound(sums_.begin(), sums_.end(), n);
    return static_cast<std::uint64_t>(it - sums_.begin()) - 1;
}

WeightFamily WeightFamily::family(const FamilyParams& p)
{
    if (!(p.c_a > 0) || !(p.c_b > 0) || !std::isfinite(p.c_a) || !std::isfinite(p.c_b))
        throw ParameterError("family constants c_a and c_b must be positive and finite");
    if (!(p.v1 >= 0) || !(p.v2 >= 0) || !(p.v3 >= 0) || !std::isfinite(p.v1) ||
        !std::isfinite(p.v2) || !std::isfinite(p.v3))
        throw ParameterError("family exponents v1, v2, v3 must be finite and >= 0");
    WeightFamily w;
    w.family_mode_ = true;
    w.params_ = p;
    return w;
}

WeightFamily WeightFamily::explicit_lists(std::vector<double> a, std::vector<double> b,
                                          DeclaredLimits limits)
{
    if (a.empty() || a.size() != b.size())
        throw ParameterError("explicit weights need nonempty a and b lists of equal length");
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (!(a[j] > 0) || !std::isfinite(a[j]))
            throw ParameterError("explicit a_j must be positive and finite");
        if (j > 0 && a[j] < a[j - 1])
            throw ParameterError("explicit a_j must be nondecreasing (a_" + std::to_string(j + 1) +
                                 " < a_" + std::to_string(j) + ")");
        if (!(b[j] > 0) || !std::isfinite(b[j]))
            throw ParameterError("explicit b_j must be positive and finite");
    }
    WeightFamily w;
    w.family_mode_ = false;
    w.a_ = std::move(a);
    w.b_ = std::move(b);
    w.limits_ = limits;
    return w;
}

WeightPair WeightFamily::at(std::size_t j) const
{
    if (j == 0)
        throw ParameterError("weight index j starts at 1");
    if (!family_mode_) {
        if (j > a_.size())
            throw ParameterError("weight index " + std::to_string(j) + " exceeds explicit length " +
                                 std::to_string(a_.size()));
        return {a_[j - 1], b_[j - 1]};
    }
    const double jd = static_cast<double>(j);
    double a = params_.c_a;
    if (params_.v1 != 0)
        a *= std::pow(jd, params_.v1);
    if (params_.v2 != 0)
        a *= std::exp(params_.v2 * jd);
    double b = params_.c_b;
    if (params_.v3 != 0)
        b *= std::pow(jd, params_.v3);
    return {a, b};
}

std::optional<std::size_t> WeightFamily::length() const
{
    if (family_mode_)
        return std::nullopt;
    return a_.size();
}

bool WeightFamily::a_is_decimal(std::size_t j) const
{
    if (!family_mode_)
        return true;
    if (params_.v2 != 0 || params_.v1 != std::floor(params_.v1))
        return false;
    // beyond 2^53 the double product no longer carries the exact integer power
    return a(j) < 9.0e15;
}

SpaceConfig::SpaceConfig(double omega_, WeightFamily weights_, MultiplicitySpec mult_, std::size_t s_)
    : omega(omega_), weights(std::move(weights_)), mult(std::move(mult_)), s(s_)
{
    if (!(omega > 0.0 && omega < 1.0))
        throw ParameterError("omega must lie strictly inside (0,1)");
    if (s == 0)
        throw ParameterError("dimension s must be >= 1");
    if (auto len = weights.length(); len && *len < s)
        throw ParameterError("explicit weight lists are shorter than s");
}

double SpaceConfig::log_inv_omega() const { return -std::log(omega); }

} // namespace expweight
