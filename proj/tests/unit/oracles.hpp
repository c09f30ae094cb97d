#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Exact instances keep every a_j and x as decimal strings and every
// b_j as a small integer, so feasibility is decided in rational arithmetic
// without touching the library's scaled-integer path.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "expweight/params.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using expweight::BigCount;

inline Rational decimal(const std::string& text)
{
    const auto dot = text.find('.');
    if (dot == std::string::npos)
        return decimal(text + ".0");
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    // a leading zero would make cpp_int read octal
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    boost::multiprecision::cpp_int den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i)
        den *= 10;
    return Rational(boost::multiprecision::cpp_int(digits), den);
}

struct ExactInstance {
    double omega = 0.5;
    std::vector<std::string> a;
    std::vector<unsigned> b;
    std::vector<std::uint64_t> prefix;
    std::uint64_t tail = 1;

    std::size_t s() const { return a.size(); }

    expweight::SpaceConfig config() const
    {
        std::vector<double> ad, bd;
        for (const auto& t : a)
            ad.push_back(std::stod(t));
        for (unsigned v : b)
            bd.push_back(v);
        return {omega, expweight::WeightFamily::explicit_lists(ad, bd), {prefix, tail}, a.size()};
    }

    std::uint64_t m(std::uint64_t k) const { return k < prefix.size() ? prefix[k] : tail; }

    Rational cost(std::size_t j, std::uint64_t k) const
    {
        Rational p = 1;
        for (unsigned i = 0; i < b[j]; ++i)
            p *= k;
        return decimal(a[j]) * p;
    }
};

/// Calls visit(k, sum) for every k with sum < bound (strict) or <= bound.
template <class Visit>
void enumerate(const ExactInstance& in, const Rational& bound, bool strict, Visit&& visit)
{
    const std::size_t s = in.s();
    std::vector<std::uint64_t> k(s, 0);
    auto inside = [&](const Rational& v) { return strict ? v < bound : v <= bound; };
    // depth-first over coordinates, pruning on the partial sum
    auto rec = [&](auto&& self, std::size_t j, const Rational& partial) -> void {
        if (j == s) {
            visit(k, partial);
            return;
        }
        for (std::uint64_t v = 0;; ++v) {
            const Rational next = partial + in.cost(j, v);
            if (!inside(next))
                break;
            k[j] = v;
            self(self, j + 1, next);
        }
        k[j] = 0;
    };
    if (inside(Rational(0)))
        rec(rec, 0, Rational(0));
}

/// n = sum over {k : sum_j a_j k_j^b_j < x} of prod m_{k_j}.
inline BigCount count(const ExactInstance& in, const std::string& x)
{
    BigCount n = 0;
    enumerate(in, decimal(x), true, [&](const std::vector<std::uint64_t>& k, const Rational&) {
        BigCount w = 1;
        for (auto v : k)
            w *= in.m(v);
        n += w;
    });
    return n;
}

struct Level {
    Rational sum;
    BigCount count;
    std::vector<std::vector<std::uint64_t>> members;
};

/// All distinct exponent sums <= bound, ascending, with grouped members.
inline std::vector<Level> levels(const ExactInstance& in, const Rational& bound)
{
    std::map<Rational, Level> by_sum;
    enumerate(in, bound, false, [&](const std::vector<std::uint64_t>& k, const Rational& sum) {
        Level& l = by_sum[sum];
        l.sum = sum;
        BigCount w = 1;
        for (auto v : k)
            w *= in.m(v);
        l.count += w;
        l.members.push_back(k);
    });
    std::vector<Level> out;
    for (auto& [sum, l] : by_sum) {
        std::sort(l.members.begin(), l.members.end());
        out.push_back(std::move(l));
    }
    return out;
}

} // namespace oracle
