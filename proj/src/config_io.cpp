#include "expweight/config_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace expweight {

namespace {

template <class T>
T required(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key))
        throw ParameterError(std::string("missing key '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParameterError(std::string("bad value for '") + key + "': " + e.what());
    }
}

template <class T>
T optional_or(const Json& doc, const char* key, T fallback)
{
    return doc.contains(key) ? required<T>(doc, key) : fallback;
}

const char* const kLimitKeys[] = {"alpha", "alpha_star", "alpha_ecqpt", "lim_a", "lim_log_ratio", "B", "B_star"};

std::optional<double> DeclaredLimits::*limit_field(int i)
{
    static std::optional<double> DeclaredLimits::*const fields[] = {
        &DeclaredLimits::alpha, &DeclaredLimits::alpha_star,    &DeclaredLimits::alpha_ecqpt,
        &DeclaredLimits::lim_a, &DeclaredLimits::lim_log_ratio, &DeclaredLimits::B,
        &DeclaredLimits::B_star};
    return fields[i];
}

} // namespace

double number_or_inf(const Json& v)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string() && (v == "inf" || v == "infinity" || v == "Infinity"))
        return std::numeric_limits<double>::infinity();
    throw ParameterError("expected a number or \"inf\", got " + v.dump());
}

Json json_number(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return nullptr;
    return v;
}

MultiplicitySpec mult_from_json(const Json& doc)
{
    if (doc.is_null())
        return MultiplicitySpec::ones();
    return {optional_or<std::vector<std::uint64_t>>(doc, "prefix", {}), required<std::uint64_t>(doc, "tail")};
}

Json mult_to_json(const MultiplicitySpec& mult)
{
    return {{"prefix", mult.prefix()}, {"tail", mult.tail()}};
}

WeightFamily weights_from_json(const Json& doc)
{
    if (doc.contains("family")) {
        const Json& f = doc.at("family");
        FamilyParams p;
        p.c_a = optional_or(f, "c_a", 1.0);
        p.v1 = optional_or(f, "v1", 0.0);
        p.v2 = optional_or(f, "v2", 0.0);
        p.c_b = optional_or(f, "c_b", 1.0);
        p.v3 = optional_or(f, "v3", 0.0);
        return WeightFamily::family(p);
    }
    if (doc.contains("explicit")) {
        const Json& e = doc.at("explicit");
        DeclaredLimits limits;
        if (e.contains("limits")) {
            const Json& l = e.at("limits");
            if (!l.is_object())
                throw ParameterError("'limits' must be an object");
            for (auto it = l.begin(); it != l.end(); ++it) {
                int i = 0;
                while (i < 7 && it.key() != kLimitKeys[i])
                    ++i;
                if (i == 7)
                    throw ParameterError("unknown limit '" + it.key() + "'");
                limits.*limit_field(i) = number_or_inf(it.value());
            }
        }
        return WeightFamily::explicit_lists(required<std::vector<double>>(e, "a"),
                                            required<std::vector<double>>(e, "b"), limits);
    }
    throw ParameterError("weights need a 'family' or an 'explicit' entry");
}

Json weights_to_json(const WeightFamily& weights)
{
    if (weights.is_family()) {
        const auto& p = weights.params();
        return {{"family", {{"c_a", p.c_a}, {"v1", p.v1}, {"v2", p.v2}, {"c_b", p.c_b}, {"v3", p.v3}}}};
    }
    Json e = {{"a", weights.a_list()}, {"b", weights.b_list()}};
    Json limits = Json::object();
    for (int i = 0; i < 7; ++i)
        if (const auto& v = weights.declared().*limit_field(i))
            limits[kLimitKeys[i]] = json_number(*v);
    if (!limits.empty())
        e["limits"] = limits;
    return {{"explicit", e}};
}

SpaceConfig config_from_json(const Json& doc)
{
    if (!doc.is_object())
        throw ParameterError("configuration must be a JSON object");
    const auto mult = mult_from_json(doc.contains("mult") ? doc.at("mult") : Json());
    if (!doc.contains("weights"))
        throw ParameterError("missing key 'weights'");
    return SpaceConfig(required<double>(doc, "omega"), weights_from_json(doc.at("weights")), mult,
                       required<std::size_t>(doc, "s"));
}

Json config_to_json(const SpaceConfig& config)
{
    return {{"omega", config.omega},
            {"s", config.s},
            {"mult", mult_to_json(config.mult)},
            {"weights", weights_to_json(config.weights)}};
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw ParameterError("'" + path + "' is not valid JSON: " + e.what());
    }
}

CoefficientVector coefficients_from_json(const Json& doc)
{
    CoefficientVector f;
    const auto basis = optional_or<std::string>(doc, "basis", "weighted");
    if (basis == "weighted")
        f.basis = Basis::weighted;
    else if (basis == "unweighted")
        f.basis = Basis::unweighted;
    else
        throw ParameterError("basis must be 'weighted' or 'unweighted'");
    for (const Json& e : required<Json>(doc, "entries")) {
        const auto index = required<MultiIndex>(e, "index");
        const Scalar c(optional_or(e, "re", 0.0), optional_or(e, "im", 0.0));
        if (!f.entries.emplace(index, c).second)
            throw ParameterError("duplicate coefficient index");
    }
    return f;
}

Json coefficients_to_json(const CoefficientVector& f)
{
    Json entries = Json::array();
    for (const auto& [n, c] : f.entries)
        entries.push_back({{"index", n}, {"re", c.real()}, {"im", c.imag()}});
    return {{"entries", entries}, {"basis", f.basis == Basis::weighted ? "weighted" : "unweighted"}};
}

} // namespace expweight
