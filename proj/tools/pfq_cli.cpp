// Command-line surface: series evaluation, closed-form checks, table dumps,
// and verification sweeps with machine-readable reports.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfq/pfq.hpp"

namespace {

enum ExitCode {
    kOk = 0,
    kCheckFailed = 1, // identity residual above tolerance, or MaxTermsExceeded
    kUsage = 2,
    kDomain = 3,
    kUnsupportedPair = 4,
    kPole = 5,
    kInternal = 70,
};

// scalar flags accept decimals and simple rationals ("-1/2"), so
// half-integer parameters arrive exact
double parse_scalar(const std::string& text) {
    const auto slash = text.find('/', 1);
    try {
        if (slash != std::string::npos) {
            size_t p1 = 0, p2 = 0;
            const std::string num_text = text.substr(0, slash);
            const std::string den_text = text.substr(slash + 1);
            double num = std::stod(num_text, &p1);
            double den = std::stod(den_text, &p2);
            if (p1 != num_text.size() || p2 != den_text.size() || den == 0.0)
                throw pfq::ConfigError("malformed rational '" + text + "'");
            return num / den;
        }
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size())
            throw pfq::ConfigError("malformed number '" + text + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw pfq::ConfigError("malformed number '" + text + "'");
    } catch (const std::out_of_range&) {
        throw pfq::ConfigError("number out of range '" + text + "'");
    }
}

std::vector<double> parse_scalar_list(const std::string& text) {
    std::vector<double> values;
    if (text.empty()) return values;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        values.push_back(parse_scalar(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return values;
}

struct GlobalOptions {
    std::string format = "human";
    std::optional<double> tol;
    std::optional<long> max_terms;
    std::optional<unsigned long> seed;

    pfq::SeriesControl control() const {
        pfq::SeriesControl ctl;
        if (tol) ctl.rel_tol = std::min(*tol, ctl.rel_tol);
        if (max_terms) ctl.max_terms = *max_terms;
        return ctl;
    }
};

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

void print_series_result(const pfq::SeriesResult& r, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json doc{{"value", r.value},
                                   {"terms_used", r.terms_used},
                                   {"status", pfq::to_string(r.status)}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "value,terms_used,status\n"
                  << format_value(r.value) << "," << r.terms_used << ","
                  << pfq::to_string(r.status) << "\n";
    } else {
        std::cout << "value      = " << format_value(r.value) << "\n"
                  << "terms_used = " << r.terms_used << "\n"
                  << "status     = " << pfq::to_string(r.status) << "\n";
    }
}

void print_identity_pair(const pfq::IdentityPair& p, const std::string& format) {
    if (format == "json") {
        nlohmann::ordered_json doc{{"lhs", p.lhs.value},
                                   {"rhs", p.rhs.value},
                                   {"residual", p.rel_residual},
                                   {"lhs_status", pfq::to_string(p.lhs.status)},
                                   {"rhs_status", pfq::to_string(p.rhs.status)}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "lhs,rhs,residual\n"
                  << format_value(p.lhs.value) << "," << format_value(p.rhs.value) << ","
                  << format_value(p.rel_residual) << "\n";
    } else {
        std::cout << "lhs      = " << format_value(p.lhs.value) << " (" << pfq::to_string(p.lhs.status)
                  << ", " << p.lhs.terms_used << " terms)\n"
                  << "rhs      = " << format_value(p.rhs.value) << " (" << pfq::to_string(p.rhs.status)
                  << ", " << p.rhs.terms_used << " terms)\n"
                  << "residual = " << format_value(p.rel_residual) << "\n";
    }
}

int finish_identity(const pfq::IdentityPair& p, const GlobalOptions& opts, double default_tol) {
    print_identity_pair(p, opts.format);
    if (!p.lhs.trustworthy() || !p.rhs.trustworthy()) return kCheckFailed;
    return p.rel_residual <= opts.tol.value_or(default_tol) ? kOk : kCheckFailed;
}

// --- subcommand payloads ----------------------------------------------------

struct EvalArgs {
    std::string num, den, z;
};

int run_eval_pfq(const EvalArgs& args, const GlobalOptions& opts) {
    pfq::PFQParams params{parse_scalar_list(args.num), parse_scalar_list(args.den)};
    pfq::SeriesResult r = pfq::eval_pfq(params, parse_scalar(args.z), opts.control());
    print_series_result(r, opts.format);
    return r.trustworthy() ? kOk : kCheckFailed;
}

struct DixonArgs {
    std::string a, b, c;
    int i = 0, j = 0;
};

int run_dixon(const DixonArgs& args, const GlobalOptions& opts) {
    pfq::DixonCase cs{parse_scalar(args.a), parse_scalar(args.b), parse_scalar(args.c),
                      args.i, args.j};
    pfq::DixonCase effective = cs;
    if (cs.j < 0) effective = pfq::symmetry_extend(cs);

    double closed = pfq::dixon_general(effective);
    // oracle: the series addressed by the *original* case
    double oracle;
    long terms = 0;
    if (pfq::is_nonpositive_integer(cs.b) || pfq::is_nonpositive_integer(cs.c)) {
        oracle = pfq::eval_pfq_terminating(pfq::dixon_series_params(cs), 1.0);
    } else {
        pfq::SeriesResult r = pfq::eval_pfq(pfq::dixon_series_params(cs), 1.0, opts.control());
        if (!r.trustworthy()) {
            std::cerr << "series oracle did not converge\n";
            return kCheckFailed;
        }
        oracle = r.value;
        terms = r.terms_used;
    }
    double residual = std::abs(closed - oracle) / std::max(1.0, std::abs(oracle));

    if (opts.format == "json") {
        nlohmann::ordered_json doc{{"closed_form", closed},
                                   {"oracle", oracle},
                                   {"residual", residual}};
        if (cs.j < 0)
            doc["symmetry_image"] = {{"i", effective.i}, {"j", effective.j}};
        std::cout << doc.dump(2) << "\n";
    } else if (opts.format == "csv") {
        std::cout << "closed_form,oracle,residual\n"
                  << format_value(closed) << "," << format_value(oracle) << ","
                  << format_value(residual) << "\n";
    } else {
        if (cs.j < 0)
            std::cout << "remapped by symmetry to (i=" << effective.i << ", j=" << effective.j
                      << ") with b and c swapped\n";
        std::cout << "closed_form = " << format_value(closed) << "\n"
                  << "oracle      = " << format_value(oracle)
                  << (terms ? " (" + std::to_string(terms) + " terms)" : "") << "\n"
                  << "residual    = " << format_value(residual) << "\n";
    }
    return residual <= opts.tol.value_or(1e-9) ? kOk : kCheckFailed;
}

struct TransformArgs {
    std::string case_id = "theorem";
    int i = 0, j = 0;
    std::string b = "0", d = "1", x = "0", y = "1";
    std::string a_list, h_list;
};

int run_transform(const TransformArgs& args, const GlobalOptions& opts) {
    const pfq::SeriesControl ctl = opts.control();
    const double d = parse_scalar(args.d);
    const double x = parse_scalar(args.x);

    if (args.case_id == "theorem") {
        pfq::TransformPoint pt{parse_scalar(args.b), d, args.i, args.j, x};
        auto pair = pfq::make_identity_pair(pfq::exton_lhs_theorem(pt, ctl),
                                            pfq::exton_rhs_theorem(pt, ctl));
        return finish_identity(pair, opts, 1e-8);
    }
    if (args.case_id == "general") {
        pfq::GeneralTransformSpec spec{parse_scalar_list(args.a_list),
                                       parse_scalar_list(args.h_list),
                                       d, x, parse_scalar(args.y)};
        auto pair = pfq::make_identity_pair(pfq::exton_general_lhs(spec, ctl),
                                            pfq::exton_general_rhs(spec, ctl));
        return finish_identity(pair, opts, 1e-8);
    }
    static const std::map<std::string, pfq::SpecialCase> special{
        {"E31", pfq::SpecialCase::E31}, {"E32", pfq::SpecialCase::E32},
        {"E33", pfq::SpecialCase::E33}, {"E34", pfq::SpecialCase::E34},
        {"E35", pfq::SpecialCase::E35}, {"E36", pfq::SpecialCase::E36},
        {"E37", pfq::SpecialCase::E37}};
    static const std::map<std::string, pfq::LimitingCase> limiting{
        {"E41", pfq::LimitingCase::E41}, {"E42", pfq::LimitingCase::E42},
        {"E43", pfq::LimitingCase::E43}, {"E44", pfq::LimitingCase::E44}};
    if (auto it = special.find(args.case_id); it != special.end())
        return finish_identity(pfq::special_case(it->second, parse_scalar(args.b), d, x, ctl),
                               opts, 1e-8);
    if (auto it = limiting.find(args.case_id); it != limiting.end())
        return finish_identity(pfq::limiting_case(it->second, d, x, ctl), opts, 1e-8);
    throw pfq::ConfigError("unknown case '" + args.case_id +
                           "' (theorem|general|E31..E37|E41..E44)");
}

struct VerifyArgs {
    std::string suite = "all";
    int samples = 50;
    std::string out;
};

std::vector<pfq::VerificationReport> run_suite(const std::string& suite, int samples,
                                               unsigned long seed) {
    using pfq::GridSpec;
    std::vector<pfq::VerificationReport> reports;
    auto with_seed = [seed](GridSpec spec) {
        spec.seed = seed;
        return spec;
    };

    bool known = false;
    if (suite == "tables" || suite == "all") {
        known = true;
        reports.push_back(pfq::validate_tables(samples, seed));
    }
    if (suite == "theorem" || suite == "all") {
        known = true;
        for (auto [i, j] : pfq::supported_cells())
            reports.push_back(pfq::run_grid(with_seed(pfq::default_theorem_grid(i, j))));
    }
    if (suite == "chain" || suite == "all") {
        known = true;
        for (auto [i, j] : pfq::supported_cells())
            reports.push_back(pfq::run_grid(with_seed(pfq::default_reduction_grid(i, j))));
    }
    if (suite == "general" || suite == "all") {
        known = true;
        reports.push_back(pfq::run_grid(with_seed(pfq::default_general_grid())));
    }
    if (suite == "special" || suite == "all") {
        known = true;
        for (auto c : {pfq::SpecialCase::E31, pfq::SpecialCase::E32, pfq::SpecialCase::E33,
                       pfq::SpecialCase::E34, pfq::SpecialCase::E35, pfq::SpecialCase::E36,
                       pfq::SpecialCase::E37})
            reports.push_back(pfq::run_grid(with_seed(pfq::default_special_grid(c))));
    }
    if (suite == "limiting" || suite == "all") {
        known = true;
        for (auto c : {pfq::LimitingCase::E41, pfq::LimitingCase::E42, pfq::LimitingCase::E43,
                       pfq::LimitingCase::E44})
            reports.push_back(pfq::run_grid(with_seed(pfq::default_limiting_grid(c))));
    }
    if (suite == "srivastava" || suite == "all") {
        known = true;
        reports.push_back(pfq::run_grid(with_seed(pfq::default_srivastava_grid())));
    }
    if (!known)
        throw pfq::ConfigError(
            "unknown suite '" + suite +
            "' (tables|theorem|chain|general|special|limiting|srivastava|all)");
    return reports;
}

int run_verify(const VerifyArgs& args, const GlobalOptions& opts) {
    auto reports = run_suite(args.suite, args.samples, opts.seed.value_or(20240915));
    std::string rendered = pfq::render_report(reports, opts.format);
    if (args.out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream f(args.out, std::ios::binary);
        if (!f) throw pfq::ConfigError("cannot open output file '" + args.out + "'");
        f << rendered;
    }
    long fails = 0;
    for (const auto& r : reports) fails += r.counts.fail;
    return fails == 0 ? kOk : kCheckFailed;
}

int run_dump_tables(const GlobalOptions& opts) {
    auto cells = pfq::coefficient_table_text();
    if (opts.format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& cell : cells) {
            nlohmann::ordered_json o{{"i", cell.i}, {"j", cell.j}};
            if (cell.A == nullptr) {
                o["supported"] = false;
            } else {
                o["supported"] = true;
                o["A"] = cell.A;
                o["B"] = cell.B;
                if (cell.note) o["correction"] = cell.note;
            }
            doc.push_back(std::move(o));
        }
        std::cout << doc.dump(2) << "\n";
    } else if (opts.format == "csv") {
        std::cout << "i,j,coefficient,polynomial\n";
        for (const auto& cell : cells) {
            std::cout << cell.i << "," << cell.j << ",A,\"" << (cell.A ? cell.A : "unsupported")
                      << "\"\n";
            std::cout << cell.i << "," << cell.j << ",B,\"" << (cell.B ? cell.B : "unsupported")
                      << "\"\n";
        }
    } else {
        for (const auto& cell : cells) {
            std::printf("cell (%+d,%d)\n", cell.i, cell.j);
            if (cell.A == nullptr) {
                std::printf("  unsupported\n");
                continue;
            }
            std::printf("  A = %s\n  B = %s\n", cell.A, cell.B);
            if (cell.note) std::printf("  correction: %s\n", cell.note);
        }
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized hypergeometric series, closed-form 3F2(1) sums, "
                 "quadratic transformations, and their numerical verification"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand

    GlobalOptions opts;
    app.add_option("--format", opts.format, "output format: human|json|csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    double tol_value = 0.0;
    auto* tol_opt = app.add_option("--tol", tol_value, "residual tolerance override");
    long max_terms_value = 0;
    auto* max_terms_opt =
        app.add_option("--max-terms", max_terms_value, "series term budget override");
    unsigned long seed_value = 0;
    auto* seed_opt = app.add_option("--seed", seed_value, "seed for randomized sweeps");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval-pfq", "sum a pFq series term by term");
    eval->add_option("--num", eval_args.num, "numerator parameters, comma separated")->required();
    eval->add_option("--den", eval_args.den, "denominator parameters, comma separated");
    eval->add_option("--z", eval_args.z, "series argument")->required();

    DixonArgs dixon_args;
    auto* dixon = app.add_subcommand("dixon", "closed-form 3F2(1) against the series oracle");
    dixon->add_option("--a", dixon_args.a)->required();
    dixon->add_option("--b", dixon_args.b)->required();
    dixon->add_option("--c", dixon_args.c)->required();
    dixon->add_option("--i", dixon_args.i)->required();
    dixon->add_option("--j", dixon_args.j)->required();

    TransformArgs tr_args;
    auto* transform = app.add_subcommand("transform", "quadratic-transformation identity checks");
    transform->add_option("--case", tr_args.case_id, "theorem|general|E31..E37|E41..E44");
    transform->add_option("--i", tr_args.i);
    transform->add_option("--j", tr_args.j);
    transform->add_option("--b", tr_args.b);
    transform->add_option("--d", tr_args.d);
    transform->add_option("--x", tr_args.x);
    transform->add_option("--y", tr_args.y);
    transform->add_option("--a-list", tr_args.a_list, "general case numerator sequence");
    transform->add_option("--h-list", tr_args.h_list, "general case denominator sequence");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->add_option("--suite", verify_args.suite,
                       "tables|theorem|chain|general|special|limiting|srivastava|all");
    verify->add_option("--samples", verify_args.samples, "samples per table cell");
    verify->add_option("--out", verify_args.out, "write the report to a file");

    auto* dump = app.add_subcommand("dump-tables", "list all coefficient polynomials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kUsage;
    }

    if (*tol_opt) {
        if (!(tol_value > 0.0)) {
            std::cerr << "--tol must be positive\n";
            return kUsage;
        }
        opts.tol = tol_value;
    }
    if (*max_terms_opt) {
        if (max_terms_value < 1) {
            std::cerr << "--max-terms must be at least 1\n";
            return kUsage;
        }
        opts.max_terms = max_terms_value;
    }
    if (*seed_opt) opts.seed = seed_value;

    try {
        if (eval->parsed()) return run_eval_pfq(eval_args, opts);
        if (dixon->parsed()) return run_dixon(dixon_args, opts);
        if (transform->parsed()) return run_transform(tr_args, opts);
        if (verify->parsed()) return run_verify(verify_args, opts);
        if (dump->parsed()) return run_dump_tables(opts);
    } catch (const pfq::UnsupportedPairError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupportedPair;
    } catch (const pfq::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPole;
    } catch (const pfq::IndeterminateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPole;
    } catch (const pfq::CoefficientPoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPole;
    } catch (const pfq::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const pfq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
