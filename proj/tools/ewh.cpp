// ewh: command-line front end for the expweight library.
//
// Exit codes: 0 success, 1 failed invariant check, 2 bad parameters or
// violated precondition, 3 resource cap reached.

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "expweight/bounds.hpp"
#include "expweight/classify.hpp"
#include "expweight/complexity.hpp"
#include "expweight/config_io.hpp"
#include "expweight/experiments.hpp"
#include "expweight/spaces.hpp"
#include "expweight/spectrum.hpp"

using namespace expweight;

namespace {

struct InvariantFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string config_path;
    std::string format;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool echo_config = false;
    bool timestamp = false;
};

std::string num(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string iso_now()
{
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream os;
    os << std::put_time(std::gmtime(&t), "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

class Output {
public:
    Output(const Globals& g, std::string default_format) : g_(g)
    {
        format_ = g.format.empty() ? std::move(default_format) : g.format;
        if (format_ != "json" && format_ != "csv")
            throw ParameterError("--format must be csv or json");
    }

    bool csv() const { return format_ == "csv"; }

    /// Under --format csv the document is flattened to key,value rows.
    void json(Json result, const SpaceConfig* config) const
    {
        if (csv()) {
            std::vector<std::vector<std::string>> rows;
            flatten(result, "", rows);
            table({"key", "value"}, rows, config);
            return;
        }
        if (g_.timestamp)
            result["timestamp"] = iso_now();
        if (g_.echo_config && config)
            result["config"] = config_to_json(*config);
        std::cout << result.dump(2) << '\n';
    }

    void table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
               const SpaceConfig* config) const
    {
        if (g_.timestamp)
            std::cout << "# generated " << iso_now() << '\n';
        if (g_.echo_config && config)
            std::cout << "# config " << config_to_json(*config).dump() << '\n';
        print_row(header);
        for (const auto& r : rows)
            print_row(r);
    }

private:
    static void flatten(const Json& v, const std::string& key, std::vector<std::vector<std::string>>& rows)
    {
        if (v.is_object() || v.is_array()) {
            std::size_t i = 0;
            for (auto it = v.begin(); it != v.end(); ++it, ++i) {
                const std::string part = v.is_object() ? it.key() : std::to_string(i);
                flatten(*it, key.empty() ? part : key + "." + part, rows);
            }
        } else {
            rows.push_back({key, v.is_string() ? v.get<std::string>() : v.dump()});
        }
    }

    static void print_row(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i)
            std::cout << (i ? "," : "") << cells[i];
        std::cout << '\n';
    }

    const Globals& g_;
    std::string format_;
};

SpaceConfig load_config(const Globals& g)
{
    if (g.config_path.empty())
        throw ParameterError("--config FILE is required");
    return config_from_json(read_json_file(g.config_path));
}

struct BudgetArgs {
    std::optional<double> x;
    std::optional<double> log10_eps;

    void add_to(CLI::App* cmd)
    {
        auto* ox = cmd->add_option("--x", x, "budget x = log(eps^-2)/log(omega^-1)");
        auto* oe = cmd->add_option("--log10-eps", log10_eps, "log10 of eps (<= 0)");
        ox->excludes(oe);
    }

    Budget resolve(double omega) const
    {
        if (x) {
            if (!(*x >= 0) || !std::isfinite(*x))
                throw ParameterError("--x must be finite and >= 0");
            return Budget{*x};
        }
        if (log10_eps)
            return budget_from_eps(omega, *log10_eps);
        throw ParameterError("one of --x or --log10-eps is required");
    }
};

Json optional_number(const std::optional<double>& v)
{
    return v ? json_number(*v) : Json(nullptr);
}

Json exponents_json(const ExponentReport& r)
{
    auto interval = [](const std::optional<std::pair<double, double>>& p) -> Json {
        if (!p)
            return nullptr;
        return Json::array({json_number(p->first), json_number(p->second)});
    };
    return {{"B_s", r.B_s},
            {"B", optional_number(r.B)},
            {"B_star", optional_number(r.B_star)},
            {"p_s_star", r.p_s_star},
            {"p_star_uexp", optional_number(r.p_star_uexp)},
            {"t_star_qpt_upper", json_number(r.t_star_qpt_upper)},
            {"t_star_qpt_exact", r.t_star_qpt_exact},
            {"p_star_spt", optional_number(r.p_star_spt)},
            {"ec_qpt_interval", interval(r.ec_qpt_interval)},
            {"ec_spt_interval", interval(r.ec_spt_interval)}};
}

Json limits_json(const LimitSet& l)
{
    return {{"alpha", optional_number(l.alpha)},
            {"alpha_star", optional_number(l.alpha_star)},
            {"alpha_ecqpt", optional_number(l.alpha_ecqpt)},
            {"lim_a", optional_number(l.lim_a)},
            {"lim_log_ratio", optional_number(l.lim_log_ratio)},
            {"B", optional_number(l.B)},
            {"B_error", l.B_error},
            {"B_star", optional_number(l.B_star)},
            {"B_star_finite", l.B_star_finite ? Json(*l.B_star_finite) : Json(nullptr)}};
}

template <class F>
Json nullable_count(F&& compute)
{
    try {
        return compute().str();
    } catch (const ParameterError&) {
        return nullptr;
    }
}

MultiplicitySpec parse_mult(const std::string& text)
{
    // "p0,p1,.../tail" or "tail"
    std::vector<std::uint64_t> prefix;
    std::string tail_text = text;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::stringstream ps(text.substr(0, slash));
        for (std::string item; std::getline(ps, item, ',');)
            if (!item.empty())
                prefix.push_back(std::stoull(item));
        tail_text = text.substr(slash + 1);
    }
    return {prefix, std::stoull(tail_text)};
}

Json complex_json(Scalar v) { return {{"re", v.real()}, {"im", v.imag()}}; }

std::vector<double> parse_point(const std::string& text)
{
    std::vector<double> p;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size())
            throw ParameterError("bad coordinate '" + item + "'");
        p.push_back(v);
    }
    return p;
}

struct GridArgs {
    double x_min = 0;
    double x_max = 0;
    std::size_t points = 0;
    std::vector<double> xs;

    void add_to(CLI::App* cmd, bool allow_list)
    {
        cmd->add_option("--x-min", x_min, "smallest budget");
        cmd->add_option("--x-max", x_max, "largest budget");
        cmd->add_option("--points", points, "number of geometric grid points");
        if (allow_list)
            cmd->add_option("--xs", xs, "explicit budgets")->delimiter(',');
    }

    std::vector<double> values() const
    {
        if (!xs.empty())
            return xs;
        return BudgetGrid{x_min, x_max, points}.values();
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Information complexity and tractability of exponentially weighted approximation"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config_path, "instance JSON file");
    app.add_option("--format", g.format, "csv or json");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--threads", g.threads, "worker threads for the counting recursion")->check(CLI::Range(1u, 1024u));
    app.add_flag("--echo-config", g.echo_config, "include the parsed instance in the output");
    app.add_flag("--timestamp", g.timestamp, "add a generation timestamp");

    CountOptions count_opts;
    auto counting = [&] {
        count_opts.threads = g.threads;
        return count_opts;
    };

    // complexity
    auto* c_complexity = app.add_subcommand("complexity", "exact information complexity n(eps, APP_s)");
    BudgetArgs complexity_budget;
    complexity_budget.add_to(c_complexity);
    std::string method_name = "recursion";
    c_complexity->add_option("--method", method_name, "recursion or bruteforce");
    c_complexity->callback([&] {
        const Output out(g, "json");
        const auto config = load_config(g);
        const Budget b = complexity_budget.resolve(config.omega);
        const CountMethod method = parse_count_method(method_name);
        const BigCount n = info_complexity(config, b, method, counting());
        if (out.csv())
            out.table({"x", "s", "n", "method"},
                      {{num(b.x), std::to_string(config.s), n.str(), std::string(to_string(method))}}, &config);
        else
            out.json({{"x", b.x}, {"s", config.s}, {"n", n.str()}, {"method", to_string(method)}}, &config);
    });

    // spectrum
    auto* c_spectrum = app.add_subcommand("spectrum", "distinct eigenvalue levels in decreasing order");
    std::size_t spectrum_levels = 20;
    c_spectrum->add_option("--levels", spectrum_levels, "number of levels to emit");
    c_spectrum->callback([&] {
        const Output out(g, "csv");
        const auto config = load_config(g);
        EigenStream stream(config);
        std::vector<std::vector<std::string>> rows;
        Json levels = Json::array();
        for (std::size_t i = 0; i < spectrum_levels; ++i) {
            const BigCount before = stream.emitted();
            const EigenEntry e = stream.next();
            const std::string rank = BigCount(before + 1).str();
            rows.push_back({rank, num(e.exponent_sum), num(e.eigenvalue), e.count.str(), e.cumulative.str()});
            levels.push_back({{"rank_start", rank},
                              {"exponent_sum", e.exponent_sum},
                              {"eigenvalue", e.eigenvalue},
                              {"count", e.count.str()},
                              {"cumulative", e.cumulative.str()}});
        }
        if (out.csv())
            out.table({"rank_start", "exponent_sum", "eigenvalue", "count", "cumulative"}, rows, &config);
        else
            out.json({{"levels", levels}}, &config);
    });

    // error
    auto* c_error = app.add_subcommand("error", "n-th minimal worst-case error sqrt(lambda_{n+1})");
    std::string error_n = "0";
    c_error->add_option("--n", error_n, "number of functionals (decimal)");
    c_error->callback([&] {
        const Output out(g, "json");
        const auto config = load_config(g);
        BigCount n;
        try {
            n = BigCount(error_n);
        } catch (const std::exception&) {
            throw ParameterError("--n must be a nonnegative integer");
        }
        if (n < 0)
            throw ParameterError("--n must be a nonnegative integer");
        const double e = nth_minimal_error(config, n);
        if (out.csv())
            out.table({"n", "error"}, {{n.str(), num(e)}}, &config);
        else
            out.json({{"n", n.str()}, {"error", e}}, &config);
    });

    // bounds
    auto* c_bounds = app.add_subcommand("bounds", "lower/upper bounds next to the exact count");
    BudgetArgs bounds_budget;
    bounds_budget.add_to(c_bounds);
    c_bounds->callback([&] {
        const Output out(g, "json");
        const auto config = load_config(g);
        const Budget b = bounds_budget.resolve(config.omega);
        const BigCount exact = info_complexity(config, b, CountMethod::recursion, counting());
        Json r = {{"x", b.x},
                  {"lower_i", nullable_count([&] { return lemma1_lower(config, b, LowerVariant::I); })},
                  {"lower_ii", nullable_count([&] { return lemma1_lower(config, b, LowerVariant::II); })},
                  {"lower_iv", nullable_count([&] { return lemma1_lower(config, b, LowerVariant::IV); })},
                  {"exact", exact.str()},
                  {"upper_iii", nullable_count([&] { return lemma1_upper(config, b); })},
                  {"upper_pp14", nullable_count([&] { return pp14_upper(config, b); })}};
        for (const char* key : {"lower_i", "lower_ii", "lower_iv"})
            if (!r[key].is_null() && BigCount(r[key].get<std::string>()) > exact)
                throw InvariantFailure(std::string(key) + " exceeds the exact count");
        for (const char* key : {"upper_iii", "upper_pp14"})
            if (!r[key].is_null() && BigCount(r[key].get<std::string>()) < exact)
                throw InvariantFailure(std::string(key) + " is below the exact count");
        if (out.csv()) {
            std::vector<std::string> header, row;
            for (const char* key : {"x", "lower_i", "lower_ii", "lower_iv", "exact", "upper_iii", "upper_pp14"}) {
                header.push_back(key);
                const Json& v = r[key];
                row.push_back(v.is_null() ? "" : v.is_string() ? v.get<std::string>() : num(v.get<double>()));
            }
            out.table(header, {row}, &config);
        } else {
            out.json(r, &config);
        }
    });

    // sum-tau
    auto* c_tau = app.add_subcommand("sum-tau", "sum of lambda^tau over all eigenvalues");
    double tau = 1.0, tau_tol = 1e-10;
    c_tau->add_option("--tau", tau, "power tau > 0")->required();
    c_tau->add_option("--tol", tau_tol, "absolute error tolerance");
    c_tau->callback([&] {
        const Output out(g, "json");
        const auto config = load_config(g);
        const TauSum t = sum_tau(config, tau, tau_tol);
        if (out.csv())
            out.table({"tau", "value", "error_bound"}, {{num(tau), num(t.value), num(t.error_bound)}}, &config);
        else
            out.json({{"tau", tau}, {"value", t.value}, {"error_bound", t.error_bound}}, &config);
    });

    // exponents
    auto* c_exp = app.add_subcommand("exponents", "convergence and tractability exponents");
    c_exp->callback([&] {
        const Output out(g, "json");
        const auto config = load_config(g);
        out.json(exponents_json(exponents(config)), &config);
    });

    // classify
    auto* c_classify = app.add_subcommand("classify", "verdicts for all tractability notions");
    std::vector<double> family_v;
    double c_a = 1.0, c_b = 1.0;
    std::optional<std::uint64_t> m0;
    std::string mult_text;
    std::optional<double> omega_opt;
    std::optional<std::size_t> s_opt;
    c_classify->add_option("--family", family_v, "v1,v2,v3")->delimiter(',')->expected(3);
    c_classify->add_option("--c-a", c_a, "c_a");
    c_classify->add_option("--c-b", c_b, "c_b");
    auto* o_m0 = c_classify->add_option("--m0", m0, "m_0, with m_k = 1 for k >= 1");
    auto* o_mult = c_classify->add_option("--mult", mult_text, "multiplicities 'p0,p1,.../tail'");
    o_m0->excludes(o_mult);
    c_classify->add_option("--omega", omega_opt, "omega in (0,1)");
    c_classify->add_option("--s", s_opt, "dimension for the exponent report");
    c_classify->callback([&] {
        const Output out(g, "json");
        std::optional<SpaceConfig> file;
        if (!g.config_path.empty())
            file = load_config(g);
        if (family_v.empty() && !file)
            throw ParameterError("classify needs --family v1,v2,v3 or --config");
        const WeightFamily weights =
            family_v.empty() ? file->weights
                             : WeightFamily::family({c_a, family_v[0], family_v[1], c_b, family_v[2]});
        MultiplicitySpec mult = file ? file->mult : MultiplicitySpec::ones();
        if (m0)
            mult = MultiplicitySpec({*m0}, 1);
        else if (!mult_text.empty())
            mult = parse_mult(mult_text);
        const double omega = omega_opt ? *omega_opt : file ? file->omega : throw ParameterError("--omega is required");
        const std::size_t s = s_opt ? *s_opt : file ? file->s : 1;
        const auto report = classify(weights, mult, omega, s);
        if (const auto broken = check_implications(report); !broken.empty())
            throw InvariantFailure("implication violated: " + broken);
        Json verdicts = Json::object();
        for (Notion n : all_notions)
            verdicts[std::string(to_string(n))] = to_string(report[n]);
        Json result = {{"verdicts", verdicts},
                       {"regions",
                        {{"wt_t1t2", report.wt_t1t2.condition},
                         {"wt_t1t2_given_m0", report.wt_t1t2.given_m0},
                         {"ec_wt_t1t2", report.ec_wt_t1t2.condition},
                         {"ec_wt_t1t2_given_m0", report.ec_wt_t1t2.given_m0}}},
                       {"exponents", exponents_json(report.exponents)},
                       {"limits", limits_json(report.limits)}};
        const SpaceConfig echoed(omega, weights, mult, s);
        out.json(result, &echoed);
    });

    // kernel
    auto* c_kernel = app.add_subcommand("kernel", "reproducing kernel with certified tail");
    std::string kernel_kind = "korobov", kernel_x, kernel_y, kernel_basis = "weighted";
    double kernel_tol = 1e-10;
    c_kernel->add_option("--kind", kernel_kind, "l2seq, hermite, korobov, cosine, walsh[:base]");
    c_kernel->add_option("--x", kernel_x, "first point, comma separated")->required();
    c_kernel->add_option("--y", kernel_y, "second point, comma separated")->required();
    c_kernel->add_option("--tol", kernel_tol, "tail tolerance");
    c_kernel->add_option("--basis", kernel_basis, "weighted or unweighted");
    c_kernel->callback([&] {
        const Output out(g, "json");
        const auto config = load_config(g);
        const SpaceKind kind = SpaceKind::parse(kernel_kind);
        if (kernel_basis != "weighted" && kernel_basis != "unweighted")
            throw ParameterError("--basis must be weighted or unweighted");
        const auto k = kernel_eval(kind, config, parse_point(kernel_x), parse_point(kernel_y), kernel_tol,
                                   kernel_basis == "weighted" ? Basis::weighted : Basis::unweighted);
        if (out.csv())
            out.table({"re", "im", "tail_bound"}, {{num(k.value.real()), num(k.value.imag()), num(k.tail_bound)}},
                      &config);
        else
            out.json({{"kind", kind.name()},
                      {"value", complex_json(k.value)},
                      {"tail_bound", k.tail_bound},
                      {"levels", k.levels}},
                     &config);
    });

    // approx
    auto* c_approx = app.add_subcommand("approx", "optimal algorithm A_n^* on a coefficient vector");
    std::string approx_kind = "korobov", coeffs_path;
    std::uint64_t approx_n = 0;
    c_approx->add_option("--kind", approx_kind, "space kind");
    c_approx->add_option("--coeffs", coeffs_path, "coefficient JSON file")->required();
    c_approx->add_option("--n", approx_n, "number of kept coefficients")->required();
    c_approx->callback([&] {
        const Output out(g, "json");
        const auto config = load_config(g);
        SpaceKind::parse(approx_kind).check(config);
        const auto f = coefficients_from_json(read_json_file(coeffs_path));
        const Truncation t = truncate_optimal(config, f, approx_n);
        CoefficientVector residual = to_weighted(f, config);
        for (const auto& [idx, c] : t.approximation.entries)
            residual.entries[idx] -= c;
        const double residual_l2 = l2_norm(residual, config);
        const double scaled_bound = t.certificate.worst_case_error * hs_norm(f, config);
        if (residual_l2 > scaled_bound * (1 + 1e-12) + 1e-300)
            throw InvariantFailure("residual exceeds the certified worst-case error");
        out.json({{"approximation", coefficients_to_json(t.approximation)},
                  {"certificate",
                   {{"worst_case_error", t.certificate.worst_case_error},
                    {"n_used", t.certificate.n_used},
                    {"eigen_cutoff", t.certificate.eigen_cutoff}}},
                  {"residual_l2", residual_l2},
                  {"f_hs_norm", hs_norm(f, config)}},
                 &config);
    });

    // fit-exp
    auto* c_fit = app.add_subcommand("fit-exp", "log-log slope of n(x, s) against x");
    GridArgs fit_grid;
    fit_grid.add_to(c_fit, false);
    std::vector<std::size_t> fit_s;
    c_fit->add_option("--s", fit_s, "dimensions (default: the config's s)")->delimiter(',');
    c_fit->callback([&] {
        const Output out(g, "json");
        const auto config = load_config(g);
        if (fit_s.empty())
            fit_s.push_back(config.s);
        const BudgetGrid grid{fit_grid.x_min, fit_grid.x_max, fit_grid.points};
        if (grid.x_max < 10 * grid.x_min)
            throw ParameterError("the grid must span at least one decade");
        std::vector<std::vector<std::string>> rows;
        Json fits = Json::array();
        for (std::size_t s : fit_s) {
            const SpaceConfig cs(config.omega, config.weights, config.mult, s);
            const FitResult r = run_fit_exp(cs, grid, counting());
            rows.push_back({std::to_string(s), num(r.slope), num(r.intercept), num(r.r_squared),
                            num(r.predicted_B_s)});
            fits.push_back({{"s", s},
                            {"slope", r.slope},
                            {"intercept", r.intercept},
                            {"r_squared", r.r_squared},
                            {"predicted_B_s", r.predicted_B_s},
                            {"points_used", r.points_used}});
        }
        if (out.csv())
            out.table({"s", "slope", "intercept", "r_squared", "predicted_B_s"}, rows, &config);
        else
            out.json({{"fits", fits}}, &config);
    });

    // sandwich
    auto* c_sandwich = app.add_subcommand("sandwich", "lower <= exact <= upper over a budget grid");
    GridArgs sandwich_grid;
    sandwich_grid.add_to(c_sandwich, true);
    c_sandwich->callback([&] {
        const Output out(g, "csv");
        const auto config = load_config(g);
        const auto rows = run_sandwich(config, sandwich_grid.values(), counting());
        std::vector<std::vector<std::string>> table;
        Json js = Json::array();
        bool ok = true;
        for (const auto& r : rows) {
            ok = ok && r.ok;
            const std::string pp14 = r.upper_pp14 ? r.upper_pp14->str() : "";
            table.push_back({num(r.x), r.lower.str(), r.exact.str(), r.upper.str(), pp14});
            js.push_back({{"x", r.x},
                          {"lower_iv", r.lower.str()},
                          {"exact", r.exact.str()},
                          {"upper_iii", r.upper.str()},
                          {"upper_pp14", r.upper_pp14 ? Json(pp14) : Json(nullptr)}});
        }
        if (out.csv())
            out.table({"x", "lower_iv", "exact", "upper_iii", "upper_pp14"}, table, &config);
        else
            out.json({{"rows", js}}, &config);
        if (!ok)
            throw InvariantFailure("sandwich violated");
    });

    // selfcheck
    auto* c_self = app.add_subcommand("selfcheck", "randomized recursion/brute-force/bounds replay");
    std::size_t self_instances = 200;
    c_self->add_option("--instances", self_instances, "number of random instances");
    c_self->callback([&] {
        const Output out(g, "json");
        std::mt19937_64 rng(g.seed);
        std::size_t failures = 0;
        Json first_failure = nullptr;
        for (std::size_t i = 0; i < self_instances; ++i) {
            const auto inst = random_instance(rng);
            const Budget b{inst.x};
            const BigCount rec = info_complexity(inst.config, b, CountMethod::recursion, counting());
            const BigCount brute = info_complexity(inst.config, b, CountMethod::brute_force);
            const auto rows = run_sandwich(inst.config, {inst.x});
            if (rec != brute || !rows.front().ok) {
                ++failures;
                if (first_failure.is_null())
                    first_failure = {{"instance", i}, {"x", inst.x}, {"config", config_to_json(inst.config)}};
            }
        }
        out.json({{"seed", g.seed}, {"instances", self_instances}, {"failures", failures},
                  {"first_failure", first_failure}},
                 nullptr);
        if (failures)
            throw InvariantFailure("selfcheck found mismatches");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const InvariantFailure& e) {
        std::cerr << "invariant failure: " << e.what() << '\n';
        return 1;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
