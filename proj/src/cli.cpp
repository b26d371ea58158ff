#include "novikov/cli.hpp"

#include "novikov/checks.hpp"
#include "novikov/expr.hpp"
#include "novikov/novikov.hpp"
#include "novikov/random.hpp"
#include "novikov/realization.hpp"
#include "novikov/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace novikov::cli {

namespace {

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("NOVIKOV_SEED");
    if (env == nullptr || *env == '\0') return fallback;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("NOVIKOV_SEED", "not an unsigned integer: " + std::string(env));
}

int cmd_eval(const std::string& expr, const std::string& param_text, bool as_json,
             std::ostream& out) {
    const Element param = evaluate(param_text, Element::unity());
    const Element value = evaluate(expr, param);
    if (as_json) {
        out << to_json(value).dump() << '\n';
    } else {
        out << to_string(value) << '\n';
    }
    return kExitOk;
}

int cmd_check(const std::vector<std::string>& identities, CheckOptions options, int threads,
              std::ostream& out) {
    set_thread_count(threads);
    std::vector<Identity> ids;
    for (const auto& name : identities) {
        if (name == "all") {
            ids.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
            break;
        }
        ids.push_back(*parse_identity(name));
    }
    out << "seed " << options.seed << ", trials " << options.trials << ", max index "
        << options.max_index << '\n';
    bool ok = true;
    for (Identity id : ids) {
        const auto results = check_identity(id, options);
        out << format_report(results);
        for (const auto& r : results) ok = ok && r.ok();
    }
    out << (ok ? "all identities hold" : "identity failures found") << '\n';
    return ok ? kExitOk : kExitFailure;
}

int cmd_table(const std::string& which, std::int64_t max_index, bool as_json, std::ostream& out) {
    const auto basis = basis_up_to(max_index);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : basis) {
        for (const auto& t : basis) {
            Element value;
            std::string lhs;
            if (which == "mul") {
                value = mul(Element::basis(s), Element::basis(t));
                lhs = s.str() + " * " + t.str();
            } else if (which == "circ") {
                value = closed_circ(s, t);
                lhs = s.str() + " o " + t.str();
            } else {
                value = closed_bracket(s, t);
                lhs = "[" + s.str() + ", " + t.str() + "]";
            }
            if (as_json) {
                rows.push_back({{"left", s.str()}, {"right", t.str()}, {"result", to_json(value)}});
            } else {
                out << lhs << " = " << to_string(value) << '\n';
            }
        }
    }
    if (as_json) out << nlohmann::json{{"table", which}, {"rows", rows}}.dump() << '\n';
    return kExitOk;
}

int cmd_realize(const std::string& text, const std::string& param_text,
                const std::vector<double>& samples, double tol, std::ostream& out) {
    const Element param = evaluate(param_text, Element::unity());
    const Expr expr = parse(text);
    const Element value = evaluate(expr, param);
    const FunctionRepr image = phi(value);
    const FunctionRepr t_side = evaluate_realized(expr, param);

    bool ok = true;
    out << "element: " << to_string(value) << '\n';
    out << "phi:     " << to_string(image) << '\n';
    if (image == t_side) {
        out << "structural: phi(value) equals the expression evaluated in T\n";
    } else {
        ok = false;
        out << "structural: MISMATCH, T-side = " << to_string(t_side) << '\n';
    }

    out << std::setprecision(12);
    for (double x : samples) {
        const double exact = eval(image, x);
        const double pointwise = evaluate_pointwise(expr, param, x);
        const double residual = std::fabs(exact - pointwise);
        const bool within = residual <= tol * (1.0 + std::fabs(pointwise));
        ok = ok && within;
        out << "x = " << x << ": phi = " << exact << ", pointwise = " << pointwise
            << ", residual = " << residual << (within ? "" : "  FAIL") << '\n';
    }
    out << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitFailure;
}

int cmd_independence(int n, bool numeric, std::ostream& out) {
    const auto dets = vandermonde_independence(n);
    bool ok = dets.odd != 0 && dets.even != 0;
    out << "n = " << n << '\n';
    out << "det_odd = " << dets.odd.get_str() << '\n';
    out << "det_even = " << dets.even.get_str() << '\n';
    out << "exact independence: " << (ok ? "yes" : "no") << '\n';
    if (numeric) {
        const auto samples = equispaced(-1.0, 1.0, static_cast<std::size_t>(2 * n + 1));
        const bool full = numeric_rank_independence(n, samples);
        out << "numeric rank (" << samples.size() << " samples on [-1, 1]): "
            << (full ? "full" : "deficient") << '\n';
        ok = ok && full;
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for a sinh/cosh Novikov algebra", "novikov"};
    app.require_subcommand(1);

    std::string expr;
    std::string param = "b_0";
    bool as_json = false;
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression");
    eval_cmd->add_option("expr", expr, "Expression, e.g. \"a_2 * a_3\"")->required();
    eval_cmd->add_option("--param", param, "Novikov parameter a (default b_0)");
    eval_cmd->add_flag("--json", as_json, "Print the element as JSON");

    std::vector<std::string> identities;
    CheckOptions options;
    std::uint64_t seed = 1;
    int threads = 0;
    bool serial = false;
    auto* check_cmd = app.add_subcommand("check", "Verify algebra identities on seeded sweeps");
    check_cmd->add_option("--identity", identities, "Identities to check")
        ->required()
        ->check(CLI::IsMember({"all", "assoc", "leftsym", "rightcomm", "jacobi", "leibniz",
                               "hamilton", "closedforms", "iso"}));
    check_cmd->add_option("--trials", options.trials, "Random trials per sweep")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-index", options.max_index, "Index bound for random elements")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000}));
    auto* seed_opt = check_cmd->add_option("--seed", seed, "Seed (falls back to NOVIKOV_SEED)");
    check_cmd->add_option("--threads", threads, "OpenMP threads (0 keeps the default)")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_flag("--serial", serial, "Use the serial reference runner");

    std::string table_kind;
    std::int64_t table_max = 3;
    auto* table_cmd = app.add_subcommand("table", "Print a multiplication table");
    table_cmd->add_option("kind", table_kind, "circ, bracket or mul")
        ->required()
        ->check(CLI::IsMember({"circ", "bracket", "mul"}));
    table_cmd->add_option("--max-index", table_max, "Largest basis index")
        ->required()
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{1000}));
    table_cmd->add_flag("--json", as_json, "Emit JSON");

    std::string realize_expr;
    std::vector<double> samples = default_samples();
    double tol = 1e-9;
    auto* realize_cmd = app.add_subcommand("realize", "Map an expression to sinh/cosh functions");
    realize_cmd->add_option("expr", realize_expr, "Expression")->required();
    realize_cmd->add_option("--samples", samples, "Sample points")->delimiter(',');
    realize_cmd->add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);
    realize_cmd->add_option("--param", param, "Novikov parameter a (default b_0)");

    int n = 0;
    bool numeric = false;
    auto* indep_cmd = app.add_subcommand("independence", "Vandermonde determinants for sinh/cosh");
    indep_cmd->add_option("--n", n, "Number of sinh/cosh pairs")
        ->required()
        ->check(CLI::Range(1, 64));
    indep_cmd->add_flag("--numeric", numeric, "Also run the numeric rank check");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*eval_cmd) return cmd_eval(expr, param, as_json, out);
        if (*check_cmd) {
            options.seed = seed_opt->count() > 0 ? seed : seed_from_env(1);
            options.mode = serial ? Execution::Serial : Execution::Parallel;
            return cmd_check(identities, options, threads, out);
        }
        if (*table_cmd) return cmd_table(table_kind, table_max, as_json, out);
        if (*realize_cmd) return cmd_realize(realize_expr, param, samples, tol, out);
        if (*indep_cmd) return cmd_independence(n, numeric, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IndexOverflowError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::range_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace novikov::cli
