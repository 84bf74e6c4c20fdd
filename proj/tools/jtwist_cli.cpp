// Command-line front end: symbolic expansion of the twist family, star-product
// evaluation on plane-wave exponents, and the full verification matrix with
// text or JSON reports.
//
// Exit codes: 0 on success (and all identities passing), 1 when an identity
// fails or an evaluation leaves its admissible domain, 2 on usage errors.

#include "jtwist/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace jtwist;

std::vector<Rational> parse_rational_csv(const std::string& text, const char* flag) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw std::invalid_argument(std::string(flag) + ": empty component in \"" + text +
                                        "\"");
        out.push_back(parse_rational(item));
    }
    if (out.empty()) throw std::invalid_argument(std::string(flag) + ": no components");
    return out;
}

std::vector<double> to_double_vector(const std::vector<Rational>& v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

std::string join_rationals(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out;
}

std::string join_doubles(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(15);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os.str();
}

// Resolves an output file path: a relative path lands in JTWIST_OUTPUT_DIR
// when that is set, otherwise in the current directory.
std::filesystem::path resolve_output(const std::string& name) {
    std::filesystem::path p(name);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("JTWIST_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
    }
    return p;
}

// ---------------------------------------------------------------------------
// expand: canonical rendering of every structural element at one parameter.

struct ExpandOptions {
    std::string u;
    unsigned order = 4;
    unsigned dim = 2;
    std::optional<std::string> v;
};

int run_expand(const ExpandOptions& opt) {
    const Rational u = parse_rational(opt.u);
    if (opt.order < 1) throw std::invalid_argument("expand: order must be at least 1");
    if (opt.dim < 2) throw std::invalid_argument("expand: dim must be at least 2");
    const unsigned N = opt.order;
    const TwistFamily tf(u, N);

    std::cout << "parameter u = " << to_string(u) << ", truncation order N = " << N << "\n\n";
    std::cout << "F     = " << tf.twist().str() << "\n";
    std::cout << "F^-1  = " << tf.twist_inverse().str() << "\n";

    const Tensor2 logF = log_series(tf.twist());
    std::cout << "log F:\n";
    for (unsigned g = 1; g <= N; ++g)
        std::cout << "  grade " << g << ": " << logF.grade_part(g).str() << "\n";
    std::cout << "R     = " << r_matrix(tf).str() << "\n\n";

    const BorelElement E = BorelElement::gen_e(N), D = BorelElement::gen_d(N);
    std::cout << "Delta(E) = " << tf.coproduct(E).str() << "\n";
    std::cout << "Delta(D) = " << tf.coproduct(D).str() << "\n";
    std::cout << "S(E)     = " << tf.antipode(E).str() << "\n";
    std::cout << "S(D)     = " << tf.antipode(D).str() << "\n\n";

    const std::vector<Rational> v =
        opt.v ? parse_rational_csv(*opt.v, "--v") : axis_direction(opt.dim);
    const RealizationSpec spec(u, v);
    std::cout << "realization (dim " << spec.dim << ", v = (" << join_rationals(v) << ")):\n";
    const auto xhat = realize_xhat(spec, N), yhat = realize_yhat(spec, N);
    for (unsigned mu = 0; mu < spec.dim; ++mu)
        std::cout << "  xhat^" << mu << " = " << xhat[mu].str() << "\n";
    for (unsigned mu = 0; mu < spec.dim; ++mu)
        std::cout << "  yhat^" << mu << " = " << yhat[mu].str() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify: one suite (or all) over the parameter list.

struct VerifyOptions {
    std::string suite;
    std::string u_list;
    unsigned order = 4;
    unsigned dim = 2;
    std::optional<std::string> v;
    std::uint32_t seed = 20260816u;
    unsigned samples = 1000;
    std::optional<double> tol;
    std::string format = "text";
    std::optional<std::string> output;
};

SuiteConfig config_from(const VerifyOptions& opt) {
    SuiteConfig cfg;
    if (!opt.u_list.empty()) cfg.u_list = parse_rational_csv(opt.u_list, "--u");
    cfg.order = opt.order;
    cfg.dim = opt.dim;
    if (opt.v) cfg.v = parse_rational_csv(*opt.v, "--v");
    cfg.seed = opt.seed;
    cfg.samples = opt.samples;
    cfg.tol = opt.tol;
    return cfg;
}

void write_or_print(const std::string& text, const std::optional<std::string>& output) {
    if (!output) {
        std::cout << text;
        return;
    }
    const auto path = resolve_output(*output);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    out << text;
    std::cout << "wrote " << path.string() << "\n";
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format,
                 const std::optional<std::string>& output) {
    unsigned failed = 0;
    for (const auto& rep : reports) failed += rep.pass ? 0 : 1;

    if (format == "json") {
        write_or_print(reports_to_json(reports).dump(2) + "\n", output);
    } else {
        std::string text;
        for (const auto& rep : reports) text += rep.line() + "\n";
        text += std::to_string(reports.size()) + " checks, " + std::to_string(failed) +
                " failed\n";
        write_or_print(text, output);
    }
    return failed == 0 ? 0 : 1;
}

int run_verify(const VerifyOptions& opt) {
    if (opt.format != "text" && opt.format != "json")
        throw std::invalid_argument("verify: --format must be text or json");
    const SuiteConfig cfg = config_from(opt);
    const std::vector<VerificationReport> reports =
        opt.suite == "all" ? run_all(cfg) : run_suite(opt.suite, cfg);
    return emit_reports(reports, opt.format, opt.output);
}

// ---------------------------------------------------------------------------
// star: merge two plane-wave exponents.

struct StarOptions {
    std::string u = "0";
    std::string a = "1/10,0";
    std::string k;
    std::string q;
    std::string method = "closed";
    bool cross_check = false;
    double tol = 1e-12;
};

int run_star(const StarOptions& opt) {
    const Rational u = parse_rational(opt.u);
    const auto a = parse_rational_csv(opt.a, "--a");
    const auto k = parse_rational_csv(opt.k, "--k");
    const auto q = parse_rational_csv(opt.q, "--q");
    const MomentumContext<Rational> exact{a, u};
    const MomentumContext<double> approx{to_double_vector(a), to_double(u)};
    const auto kd = to_double_vector(k), qd = to_double_vector(q);

    if (opt.cross_check) {
        // Every available route in floating point, against the exact value.
        const auto pinned = star_plane_waves(exact, k, q, StarMethod::closed_form);
        std::cout << "closed    = " << join_rationals(pinned) << "\n";
        std::vector<std::pair<const char*, StarMethod>> routes{
            {"shift    ", StarMethod::shift_operator},
            {"algebroid", StarMethod::algebroid}};
        if (u == 0 || u == 1) routes.push_back({"normal   ", StarMethod::normal_ordered});
        double worst = 0;
        for (const auto& [label, method] : routes) {
            const auto got = star_plane_waves(approx, kd, qd, method);
            std::cout << label << " = " << join_doubles(got) << "\n";
            for (std::size_t i = 0; i < got.size(); ++i)
                worst = std::max(worst, std::abs(got[i] - to_double(pinned[i])));
        }
        std::ostringstream os;
        os.precision(3);
        os << worst;
        std::cout << "max deviation = " << os.str() << (worst < opt.tol ? " (ok)" : " (BAD)")
                  << "\n";
        return worst < opt.tol ? 0 : 1;
    }

    if (opt.method == "closed") {
        std::cout << join_rationals(star_plane_waves(exact, k, q, StarMethod::closed_form))
                  << "\n";
    } else if (opt.method == "normal") {
        std::cout << join_rationals(star_plane_waves(exact, k, q, StarMethod::normal_ordered))
                  << "\n";
    } else if (opt.method == "shift") {
        std::cout << join_doubles(star_plane_waves(approx, kd, qd, StarMethod::shift_operator))
                  << "\n";
    } else if (opt.method == "algebroid") {
        std::cout << join_doubles(star_plane_waves(approx, kd, qd, StarMethod::algebroid))
                  << "\n";
    } else {
        throw std::invalid_argument("star: --method must be closed, shift, normal, or algebroid");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// report: the whole matrix plus realization tables, written as JSON files.

int run_report(const VerifyOptions& opt, const std::optional<std::string>& dir) {
    const SuiteConfig cfg = config_from(opt);
    const auto reports = run_all(cfg);

    std::filesystem::path base;
    if (dir) base = *dir;
    else if (const char* env = std::getenv("JTWIST_OUTPUT_DIR")) base = env;
    else base = ".";
    std::filesystem::create_directories(base);

    const auto write_json = [&](const char* name, const nlohmann::json& j) {
        const auto path = base / name;
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file " + path.string());
        out << j.dump(2) << "\n";
        std::cout << "wrote " << path.string() << "\n";
    };
    write_json("verification.json", reports_to_json(reports));
    write_json("realizations.json", realization_tables(cfg));

    unsigned failed = 0;
    for (const auto& rep : reports) {
        if (!rep.pass) std::cout << rep.line() << "\n";
        failed += rep.pass ? 0 : 1;
    }
    std::cout << reports.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordanian twist family: expansion, star products, verification"};
    app.require_subcommand(1);

    ExpandOptions expand_opt;
    CLI::App* expand = app.add_subcommand("expand", "render the twist and its structure maps");
    expand->add_option("--u", expand_opt.u, "family parameter (rational)")->required();
    expand->add_option("--order", expand_opt.order, "truncation order N");
    expand->add_option("--dim", expand_opt.dim, "spacetime dimension for realizations");
    expand->add_option("--v", expand_opt.v, "direction vector (comma-separated rationals)");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "run one identity suite or all of them");
    verify->add_option("suite", verify_opt.suite, "suite name or \"all\"")->required();
    verify->add_option("--u", verify_opt.u_list, "parameter list (comma-separated rationals)");
    verify->add_option("--order", verify_opt.order, "truncation order N (at least 2)");
    verify->add_option("--dim", verify_opt.dim, "spacetime dimension");
    verify->add_option("--v", verify_opt.v, "direction vector; default folds axis and skew");
    verify->add_option("--seed", verify_opt.seed, "sampling seed");
    verify->add_option("--samples", verify_opt.samples, "sample count for random suites");
    verify->add_option("--tol", verify_opt.tol, "tolerance override for floating-point suites");
    verify->add_option("--format", verify_opt.format, "text or json");
    verify->add_option("--output", verify_opt.output, "write the report to this file");

    StarOptions star_opt;
    CLI::App* star = app.add_subcommand("star", "merge two plane-wave exponents");
    star->add_option("--u", star_opt.u, "family parameter (rational)");
    star->add_option("--a", star_opt.a, "deformation vector (comma-separated rationals)");
    star->add_option("--k", star_opt.k, "left exponent")->required();
    star->add_option("--q", star_opt.q, "right exponent")->required();
    star->add_option("--method", star_opt.method, "closed, shift, normal, or algebroid");
    star->add_flag("--cross-check", star_opt.cross_check, "compare every method");
    star->add_option("--tol", star_opt.tol, "cross-check tolerance");

    VerifyOptions report_opt;
    std::optional<std::string> report_dir;
    CLI::App* report = app.add_subcommand("report", "write the full JSON verification matrix");
    report->add_option("--u", report_opt.u_list, "parameter list (comma-separated rationals)");
    report->add_option("--order", report_opt.order, "truncation order N (at least 2)");
    report->add_option("--dim", report_opt.dim, "spacetime dimension");
    report->add_option("--seed", report_opt.seed, "sampling seed");
    report->add_option("--samples", report_opt.samples, "sample count for random suites");
    report->add_option("--output", report_dir, "output directory (default JTWIST_OUTPUT_DIR)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return run_expand(expand_opt);
        if (verify->parsed()) {
            if (verify_opt.suite != "all" && !is_suite_name(verify_opt.suite))
                throw std::invalid_argument("verify: unknown suite \"" + verify_opt.suite +
                                            "\" (see --help for the list)");
            return run_verify(verify_opt);
        }
        if (star->parsed()) return run_star(star_opt);
        return run_report(report_opt, report_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
