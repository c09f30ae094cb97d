#include "expweight/arithmetic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace expweight {

namespace {

constexpr Int128 kSaturated = Int128{1} << 125;
constexpr int kMaxScale = 30;
constexpr unsigned kMaxIntegerB = 512;

Int128 pow10(int e)
{
    Int128 r = 1;
    for (int i = 0; i < e; ++i)
        r *= 10;
    return r;
}

Int128 sat_mul(Int128 x, Int128 y)
{
    if (x == 0 || y == 0)
        return 0;
    if (x >= kSaturated || y >= kSaturated || x > kSaturated / y)
        return kSaturated;
    return x * y;
}

Int128 sat_add(Int128 x, Int128 y)
{
    const Int128 r = x + y;
    return r >= kSaturated ? kSaturated : r;
}

Int128 sat_pow(std::uint64_t k, unsigned b)
{
    Int128 r = 1;
    const Int128 base = static_cast<Int128>(k);
    for (unsigned i = 0; i < b && r < kSaturated; ++i)
        r = sat_mul(r, base);
    return r;
}

} // namespace

std::optional<Decimal> shortest_decimal(double v)
{
    if (!std::isfinite(v) || v < 0)
        return std::nullopt;
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
    if (ec != std::errc{})
        return std::nullopt;
    // d[.ddd]e[+-]xx
    Decimal d;
    int frac_digits = 0;
    bool after_point = false;
    const char* p = buf;
    for (; p != end && *p != 'e'; ++p) {
        if (*p == '.') {
            after_point = true;
            continue;
        }
        d.mantissa = d.mantissa * 10 + (*p - '0');
        if (after_point)
            ++frac_digits;
    }
    int e10 = 0;
    if (p != end) {
        ++p;
        std::from_chars(*p == '+' ? p + 1 : p, end, e10);
    }
    d.exponent = e10 - frac_digits;
    if (d.mantissa == 0)
        d.exponent = 0;
    while (d.mantissa != 0 && d.mantissa % 10 == 0) {
        d.mantissa /= 10;
        ++d.exponent;
    }
    return d;
}

std::string to_string(Int128 v)
{
    if (v == 0)
        return "0";
    const bool neg = v < 0;
    std::string s;
    while (v != 0) {
        const int digit = static_cast<int>(v % 10);
        s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
        v /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

ExponentArithmetic::ExponentArithmetic(const SpaceConfig& config, bool allow_exact)
{
    const std::size_t s = config.s;
    a_.resize(s);
    b_.resize(s);
    for (std::size_t j = 1; j <= s; ++j) {
        const auto w = config.weights.at(j);
        a_[j - 1] = w.a;
        b_[j - 1] = w.b;
    }

    bool exact = allow_exact;
    std::vector<Decimal> dec(s);
    for (std::size_t j = 1; j <= s && exact; ++j) {
        const double b = b_[j - 1];
        if (b != std::floor(b) || b < 1 || b > kMaxIntegerB || !config.weights.a_is_decimal(j)) {
            exact = false;
            break;
        }
        auto d = shortest_decimal(a_[j - 1]);
        if (!d) {
            exact = false;
            break;
        }
        dec[j - 1] = *d;
        scale_ = std::max(scale_, -d->exponent);
    }
    if (exact && scale_ <= kMaxScale) {
        a_scaled_.resize(s);
        b_int_.resize(s);
        for (std::size_t j = 0; j < s && exact; ++j) {
            const Int128 m = dec[j].mantissa;
            const int shift = dec[j].exponent + scale_;
            if (shift > kMaxScale) {
                exact = false;
                break;
            }
            a_scaled_[j] = sat_mul(m, pow10(shift));
            if (a_scaled_[j] >= (Int128{1} << 100))
                exact = false;
            b_int_[j] = static_cast<unsigned>(b_[j]);
        }
    } else {
        exact = false;
    }
    exact_ = exact;
    if (!exact_) {
        scale_ = 0;
        a_scaled_.clear();
        b_int_.clear();
    }
}

Exponent ExponentArithmetic::cost(std::size_t j, std::uint64_t k) const
{
    if (k == 0)
        return {};
    const double a = a_[j - 1];
    const double b = b_[j - 1];
    const double kd = static_cast<double>(k);
    Exponent e;
    if (exact_) {
        e.scaled = sat_mul(a_scaled_[j - 1], sat_pow(k, b_int_[j - 1]));
        e.value = to_double(e);
    } else if (b == std::floor(b)) {
        e.value = a * std::pow(kd, b);
    } else {
        e.value = a * std::exp(b * std::log(kd));
    }
    return e;
}

Exponent ExponentArithmetic::budget(double x) const
{
    Exponent e;
    e.value = x;
    if (!exact_)
        return e;
    auto d = shortest_decimal(std::max(x, 0.0));
    if (!d) {
        e.scaled = kSaturated;
        return e;
    }
    const int shift = d->exponent + scale_;
    if (shift >= 0) {
        // mantissa < 10^17, so shifts beyond ~19 saturate
        e.scaled = shift > 38 ? kSaturated : sat_mul(d->mantissa, pow10(std::min(shift, 38)));
    } else if (-shift > 38) {
        e.scaled = d->mantissa > 0 ? 1 : 0;
    } else {
        // integer sums S satisfy S < y  <=>  S < ceil(y)
        const Int128 div = pow10(-shift);
        e.scaled = d->mantissa / div + (d->mantissa % div != 0 ? 1 : 0);
    }
    return e;
}

Exponent ExponentArithmetic::add(const Exponent& p, const Exponent& q) const noexcept
{
    Exponent r;
    if (exact_) {
        r.scaled = sat_add(p.scaled, q.scaled);
        r.value = to_double(r);
    } else {
        r.value = p.value + q.value;
    }
    return r;
}

bool ExponentArithmetic::less(const Exponent& p, const Exponent& q) const noexcept
{
    return exact_ ? p.scaled < q.scaled : p.value < q.value;
}

bool ExponentArithmetic::equal(const Exponent& p, const Exponent& q) const noexcept
{
    return exact_ ? p.scaled == q.scaled : p.value == q.value;
}

double ExponentArithmetic::to_double(const Exponent& p) const noexcept
{
    if (!exact_)
        return p.value;
    if (p.scaled >= kSaturated)
        return HUGE_VAL;
    return static_cast<double>(static_cast<long double>(p.scaled) /
                               static_cast<long double>(pow10(scale_)));
}

Exponent ExponentArithmetic::index_sum(const std::vector<std::uint64_t>& k) const
{
    if (k.size() != a_.size())
        throw ParameterError("multi-index length " + std::to_string(k.size()) +
                             " does not match dimension " + std::to_string(a_.size()));
    Exponent p = zero();
    for (std::size_t j = k.size(); j >= 1; --j)
        p = add(p, cost(j, k[j - 1]));
    return p;
}

template <class Pred>
std::uint64_t ExponentArithmetic::boundary_search(double estimate, Pred feasible) const
{
    if (!(estimate >= 0))
        estimate = 0;
    if (estimate > static_cast<double>(max_levels))
        throw ResourceLimit("level count exceeds the enumeration cap");
    // count = smallest k that is infeasible
    std::uint64_t k = static_cast<std::uint64_t>(std::ceil(estimate));
    while (k > 0 && !feasible(k - 1))
        --k;
    while (feasible(k)) {
        ++k;
        if (k > max_levels)
            throw ResourceLimit("level count exceeds the enumeration cap");
    }
    return k;
}

std::uint64_t ExponentArithmetic::feasible_levels(std::size_t j, const Exponent& partial,
                                                  const Exponent& x) const
{
    const double room = to_double(x) - to_double(partial);
    if (!less(partial, x))
        return 0;
    const double estimate = std::pow(std::max(room, 0.0) / a_[j - 1], 1.0 / b_[j - 1]);
    return boundary_search(estimate, [&](std::uint64_t k) { return less(add(partial, cost(j, k)), x); });
}

std::uint64_t ExponentArithmetic::feasible_levels_scaled(std::size_t j, std::uint64_t factor,
                                                         const Exponent& x) const
{
    if (factor == 0)
        throw ParameterError("scale factor must be positive");
    const double estimate =
        std::pow(std::max(to_double(x), 0.0) / (a_[j - 1] * static_cast<double>(factor)), 1.0 / b_[j - 1]);
    return boundary_search(estimate, [&](std::uint64_t k) {
        const Exponent c = cost(j, k);
        if (exact_)
            return sat_mul(c.scaled, static_cast<Int128>(factor)) < x.scaled;
        return c.value * static_cast<double>(factor) < x.value;
    });
}

} // namespace expweight
