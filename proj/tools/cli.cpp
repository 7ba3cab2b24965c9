#include "cli.hpp"

#include "capset/acceptance.hpp"
#include "capset/asymptotics.hpp"
#include "capset/bounds.hpp"
#include "capset/capsearch.hpp"
#include "capset/clp_verifier.hpp"
#include "capset/errors.hpp"
#include "capset/golden.hpp"
#include "capset/qnomial.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <thread>

namespace capset {

namespace {

using json = nlohmann::ordered_json;

json to_json(const BigInt& v) { return v.get_str(); }

json to_json(const BigFixed& v) {
    return {{"mantissa", v.mantissa().get_str()}, {"scale", v.scale()}, {"decimal", v.to_string()}};
}

json to_json(const BoundReport& r) {
    json ids = json::array();
    for (const auto& [name, pass] : r.identities) ids.push_back({{"name", name}, {"pass", pass}});
    return {{"n", r.n},
            {"q", r.q},
            {"d", r.d ? json(*r.d) : json(nullptr)},
            {"value", to_json(r.value)},
            {"method", to_string(r.method)},
            {"identities", ids}};
}

json to_json(const SaddleResult& r) {
    return {{"q", r.q}, {"x0", to_json(r.x0)}, {"constant", to_json(r.constant)}, {"residual", to_json(r.residual)}};
}

json to_json(const RatioEstimate& r) {
    return {{"q", r.q},
            {"n_low", r.n_low},
            {"n_high", r.n_high},
            {"ratio_low", to_json(r.ratio_low)},
            {"ratio_high", to_json(r.ratio_high)},
            {"extrapolated", to_json(r.extrapolated)},
            {"method", "one Richardson step in 1/n on interval midpoints n - 3/2"}};
}

json to_json(const PointSet& s) {
    json points = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::string line;
        for (auto c : s.point(i)) line += (line.empty() ? "" : " ") + std::to_string(c);
        points.push_back(line);
    }
    return {{"p", s.p()}, {"n", s.n()}, {"codes", s.codes()}, {"points", points}};
}

json to_json(const VerifierReport& r) {
    return {{"n", r.n},
            {"d", r.d},
            {"set_size", r.set_size},
            {"monomial_count", r.monomial_count},
            {"dim_v", r.dim_v},
            {"dim_lower_bound", r.dim_lower_bound},
            {"max_support", r.max_support},
            {"spread_support", r.spread_support},
            {"support_cap", r.support_cap},
            {"rank", r.rank},
            {"diagonal_ok", r.diagonal_ok},
            {"rank_ok", r.rank_ok},
            {"support_ok", r.support_ok},
            {"bound_ok", r.bound_ok}};
}

struct Report {
    std::string command;
    json inputs = json::object();
    json result = json::object();
    json checks = json::array();
    bool failed = false;

    void check(const std::string& name, bool pass, const std::string& detail = "", bool soft = false) {
        json c{{"name", name}, {"pass", pass}, {"detail", detail}};
        if (soft) c["soft"] = true;
        checks.push_back(std::move(c));
        if (!pass && !soft) failed = true;
    }
};

bool is_prime_power(int q) {
    int p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

std::optional<std::string_view> printed_growth(int q) {
    for (const auto& e : golden::kGrowthTable)
        if (e.q == q) return e.value;
    return std::nullopt;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs f(0..count-1) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& f) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) f(i);
    };
    const unsigned used = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (used == 1) return worker();
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < used; ++t) pool.emplace_back(worker);
}

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cap-set bounds, proof-core checks and asymptotic constants"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Report report;
    std::function<void()> action;

    // bound
    int b_n = 0;
    std::optional<long> b_d;
    bool b_opt = false, b_theorem = false, b_sharp = false;
    auto* bound = app.add_subcommand("bound", "Upper bounds on progression-free subsets of F_3^n");
    bound->add_option("--n", b_n, "Dimension")->required()->check(CLI::NonNegativeNumber);
    auto* d_opt = bound->add_option("--d", b_d, "Degree parameter");
    bound->add_flag("--optimize-d", b_opt, "Minimize over every integer d (default)")->excludes(d_opt);
    bound->add_flag("--theorem", b_theorem, "3 * sum_{k <= 2n/3} C(n,k)");
    bound->add_flag("--sharp", b_sharp, "Theorem bound minus C(n, 2n/3), n divisible by 3");
    bound->callback([&] {
        action = [&] {
            report.inputs = {{"n", b_n}};
            std::vector<BoundReport> reports;
            if (b_d) {
                report.inputs["d"] = *b_d;
                reports.push_back(bound_for_d(b_n, *b_d));
            }
            if (b_opt || (!b_d && !b_theorem && !b_sharp)) {
                report.inputs["optimize_d"] = true;
                reports.push_back(optimal_bound(b_n));
            }
            if (b_theorem) {
                report.inputs["theorem"] = true;
                reports.push_back(theorem_bound(b_n));
            }
            if (b_sharp) {
                report.inputs["sharp"] = true;
                reports.push_back(sharp_bound(b_n));
            }
            json all = json::array();
            for (const auto& r : reports) {
                all.push_back(to_json(r));
                for (const auto& [name, pass] : r.identities) report.check(to_string(r.method) + ": " + name, pass);
            }
            report.result = all.size() == 1 ? all[0] : json{{"reports", all}};
        };
    });

    // qnomial
    int qn_n = 0, qn_q = 3;
    long qn_k = 0;
    auto* qnom = app.add_subcommand("qnomial", "Coefficient of x^k in (1 + x + ... + x^(q-1))^n");
    qnom->add_option("--n", qn_n, "Exponent n")->required();
    qnom->add_option("--k", qn_k, "Power k")->required();
    qnom->add_option("--q", qn_q, "Number of terms q")->capture_default_str();
    qnom->callback([&] {
        action = [&] {
            report.inputs = {{"n", qn_n}, {"k", qn_k}, {"q", qn_q}};
            report.result = {{"value", to_json(qnomial(qn_n, qn_k, qn_q))}};
        };
    });

    // growth
    int g_q = 3, g_digits = kDefaultDigits, g_nmax = 120;
    std::string g_method = "saddle";
    auto* growth = app.add_subcommand("growth", "Growth constant of the bound over F_q^n");
    growth->add_option("--q", g_q, "Field size q")->required()->check(CLI::Range(2, 100000));
    growth->add_option("--digits", g_digits, "Decimal digits")->capture_default_str()->check(CLI::PositiveNumber);
    growth->add_option("--method", g_method, "saddle, ratio or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"saddle", "ratio", "both"}));
    growth->add_option("--nmax", g_nmax, "Largest n for the ratio method")->capture_default_str();
    growth->callback([&] {
        action = [&] {
            report.inputs = {{"q", g_q}, {"digits", g_digits}, {"method", g_method}};
            std::optional<SaddleResult> saddle;
            std::optional<RatioEstimate> ratio;
            if (g_method != "ratio") {
                saddle = saddle_point(g_q, g_digits);
                report.result["saddle"] = to_json(*saddle);
            }
            if (g_method != "saddle") {
                report.inputs["nmax"] = g_nmax;
                ratio = growth_constant_ratio(g_q, g_nmax);
                report.result["ratio"] = to_json(*ratio);
            }
            if (saddle && ratio) {
                const double s = saddle->constant.to_double();
                const double rel = std::abs(s - ratio->extrapolated.to_double()) / s;
                report.result["relative_difference"] = rel;
                report.check("saddle and ratio agree (rel < 1e-4)", rel < 1e-4, "rel = " + std::to_string(rel));
            }
        };
    });

    // table
    int t_qmin = 4, t_qmax = 31;
    unsigned threads = default_threads();
    auto* table = app.add_subcommand("table", "Growth constants for prime powers q in a range");
    table->add_option("--qmin", t_qmin, "Smallest q")->capture_default_str()->check(CLI::Range(2, 100000));
    table->add_option("--qmax", t_qmax, "Largest q")->capture_default_str()->check(CLI::Range(2, 100000));
    table->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    table->callback([&] {
        action = [&] {
            report.inputs = {{"qmin", t_qmin}, {"qmax", t_qmax}, {"threads", threads}};
            std::vector<int> qs;
            for (int q = t_qmin; q <= t_qmax; ++q)
                if (is_prime_power(q)) qs.push_back(q);
            std::vector<BigFixed> values(qs.size());
            parallel_for(qs.size(), threads, [&](std::size_t i) { values[i] = growth_constant(qs[i], kDefaultDigits); });
            json rows = json::array();
            for (std::size_t i = 0; i < qs.size(); ++i) {
                json row{{"q", qs[i]}, {"constant", to_json(values[i])}};
                if (auto printed = printed_growth(qs[i])) {
                    const BigFixed p = BigFixed::parse(*printed);
                    const BigFixed ulps = (values[i] - p).abs() / BigFixed::from_ratio(1, pow10(p.scale()), kDefaultDigits);
                    const bool pass = ulps <= BigFixed::from_int(1, 0);
                    row["printed"] = *printed;
                    row["ulps_off"] = ulps.rescale(2).to_string();
                    row["pass"] = pass;
                    report.check("q=" + std::to_string(qs[i]) + " matches printed value to 1 ulp", pass,
                                 values[i].rescale(p.scale() + 2).to_string() + " vs " + std::string(*printed));
                }
                rows.push_back(std::move(row));
            }
            report.result = {{"rows", rows}};
        };
    });

    // alpha
    int a_digits = 19;
    auto* alpha_cmd = app.add_subcommand("alpha", "Characteristic root and its cube root for q = 3");
    alpha_cmd->add_option("--digits", a_digits, "Decimal digits")->capture_default_str()->check(CLI::PositiveNumber);
    alpha_cmd->callback([&] {
        action = [&] {
            report.inputs = {{"digits", a_digits}};
            const BigFixed root = characteristic_root(a_digits);
            const BigFixed a = alpha(a_digits);
            report.result = {{"characteristic_root", to_json(root)}, {"alpha", to_json(a)}};
            const int shown = std::min(a_digits, BigFixed::parse(golden::kAlpha).scale());
            const int shared = agreeing_digits(a.to_string(), std::string(golden::kAlpha));
            report.check("alpha agrees with the published digits", shared >= shown,
                         std::to_string(shared) + " significant digits agree");
        };
    });

    // leading-constant
    int lc_digits = 19;
    bool lc_extrapolate = false;
    auto* lc = app.add_subcommand("leading-constant", "Constant C in bound ~ C alpha^n / sqrt(n)");
    lc->add_option("--digits", lc_digits, "Decimal digits")->capture_default_str()->check(CLI::PositiveNumber);
    lc->add_flag("--extrapolate", lc_extrapolate, "Also extrapolate the exact bounds over n = 300..2400");
    lc->callback([&] {
        action = [&] {
            report.inputs = {{"digits", lc_digits}, {"extrapolate", lc_extrapolate}};
            const BigFixed c = leading_constant(lc_digits);
            const int shared = agreeing_digits(c.to_string(), std::string(golden::kLeadingConstant));
            report.result = {{"constant", to_json(c)},
                             {"published", golden::kLeadingConstant},
                             {"agreeing_digits", shared}};
            report.check("at least 10 significant digits agree with the published constant", shared >= 10,
                         std::to_string(shared) + " digits agree");
            if (lc_extrapolate) {
                const int ns[] = {300, 600, 1200, 2400};
                const auto ex = extrapolate_leading_constant(ns);
                json samples = json::array();
                for (std::size_t i = 0; i < ex.ns.size(); ++i)
                    samples.push_back({{"n", ex.ns[i]}, {"value", to_json(ex.samples[i].rescale(20))}});
                const double rel = std::abs(ex.extrapolated.to_double() - c.to_double()) / c.to_double();
                report.result["samples"] = samples;
                report.result["extrapolated"] = to_json(ex.extrapolated.rescale(20));
                report.check("extrapolation agrees (rel < 1e-3)", rel < 1e-3, "rel = " + std::to_string(rel));
            }
        };
    });

    // verify-recurrence
    int r_nmax = 100;
    auto* rec = app.add_subcommand("verify-recurrence", "Exact check of the recurrence for C(3n, 2n)");
    rec->add_option("--nmax", r_nmax, "Largest n")->capture_default_str();
    rec->callback([&] {
        action = [&] {
            report.inputs = {{"nmax", r_nmax}};
            const auto r = verify_recurrence(r_nmax);
            report.result = {{"n_max", r.n_max},
                             {"all_zero", r.all_zero},
                             {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)}};
            report.check("every evaluation is exactly zero", r.all_zero);
        };
    });

    // search
    int s_n = 0;
    std::optional<std::uint64_t> s_budget;
    std::string s_out;
    auto* search = app.add_subcommand("search", "Largest progression-free subset of F_3^n");
    search->add_option("--n", s_n, "Dimension")->required();
    search->add_option("--budget", s_budget, "Node budget");
    search->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--out", s_out, "Write the witness in point-set format");
    search->callback([&] {
        action = [&] {
            report.inputs = {{"n", s_n}, {"threads", threads}};
            if (s_budget) report.inputs["budget"] = *s_budget;
            const auto r = max_capset(s_n, {s_budget, threads});
            report.result = {{"n", r.n},
                             {"max_size", r.max_size},
                             {"witness", to_json(r.witness)},
                             {"nodes_explored", r.nodes_explored},
                             {"proven_optimal", r.proven_optimal},
                             {"origin_fixed", r.origin_fixed}};
            report.check("witness is progression-free", is_progression_free(r.witness));
            if (!s_out.empty()) {
                report.inputs["out"] = s_out;
                std::ofstream file(s_out);
                if (!file) throw InputError("cannot write " + s_out);
                write_point_set(file, r.witness);
            }
        };
    });

    // verify-clp
    int v_n = 0, v_d = 0;
    std::string v_set;
    bool v_from_search = false;
    auto* clp = app.add_subcommand("verify-clp", "Check the rank and support argument on a cap");
    clp->add_option("--n", v_n, "Dimension")->required();
    clp->add_option("--d", v_d, "Degree parameter")->required();
    auto* set_opt = clp->add_option("--set", v_set, "Point-set file");
    auto* from_opt = clp->add_flag("--from-search", v_from_search, "Use the search witness for n");
    set_opt->excludes(from_opt);
    clp->callback([&] {
        action = [&] {
            report.inputs = {{"n", v_n}, {"d", v_d}};
            PointSet set(3, 0);
            if (!v_set.empty()) {
                report.inputs["set"] = v_set;
                std::ifstream file(v_set);
                if (!file) throw InputError("cannot read " + v_set);
                set = read_point_set(file, 3, v_n);
            } else if (v_from_search) {
                report.inputs["from_search"] = true;
                set = max_capset(v_n, {std::nullopt, threads}).witness;
            } else {
                throw InputError("verify-clp: one of --set or --from-search is required");
            }
            const auto r = verify_support_bound(v_n, v_d, set);
            report.result = to_json(r);
            report.result["set"] = to_json(set);
            report.check("product matrices are diagonal", r.diagonal_ok);
            report.check("ranks are at most 2|M(n, d/2)|", r.rank_ok, "max rank " + std::to_string(r.rank));
            report.check("supports are at most 2|M(n, d/2)|", r.support_ok,
                         "max support " + std::to_string(r.max_support) + ", cap " + std::to_string(r.support_cap));
            report.check("dim V and the size bound hold", r.bound_ok,
                         "dim V " + std::to_string(r.dim_v) + " >= " + std::to_string(r.dim_lower_bound));
        };
    });

    // verify-all
    std::string level = "quick";
    auto* all = app.add_subcommand("verify-all", "Run the acceptance suite");
    all->add_option("--level", level, "quick or full")->capture_default_str()->check(CLI::IsMember({"quick", "full"}));
    all->callback([&] {
        action = [&] {
            report.inputs = {{"level", level}};
            const auto results = run_acceptance(level == "full" ? AcceptanceLevel::Full : AcceptanceLevel::Quick,
                                                [&](const CriterionResult& r) {
                                                    err << (r.pass ? "PASS" : r.soft ? "WARN" : "FAIL") << " [" << r.id
                                                        << "] " << r.name << "\n";
                                                });
            json criteria = json::array();
            for (const auto& r : results) {
                criteria.push_back({{"id", r.id},
                                    {"name", r.name},
                                    {"pass", r.pass},
                                    {"soft", r.soft},
                                    {"detail", r.detail},
                                    {"seconds", r.seconds}});
                report.check(std::to_string(r.id) + ". " + r.name, r.pass, r.detail, r.soft);
            }
            report.result = {{"criteria", criteria}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    for (auto* sub : app.get_subcommands()) report.command = sub->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
        action();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {  // PreconditionError, bad numbers
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

    json doc{{"command", report.command},
             {"inputs", report.inputs},
             {"result", report.result},
             {"checks", report.checks},
             {"elapsed_ms", elapsed}};
    out << doc.dump(2) << "\n";
    return report.failed ? 1 : 0;
}

}  // namespace capset
