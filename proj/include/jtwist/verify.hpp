#pragma once

#include "momentum.hpp"
#include "report.hpp"
#include "twist.hpp"
#include "weyl.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jtwist {

// ---------------------------------------------------------------------------
// One knob set for the whole verification matrix.  The parameter list covers
// both degenerate endpoints, the self-dual midpoint, and one value on each
// side of the interval; the two direction vectors are deliberately
// non-parallel so no identity can hide behind a special alignment.

inline std::vector<Rational> default_parameter_list() {
    return {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(-1, 3)};
}

inline std::vector<Rational> axis_direction(unsigned dim) {
    std::vector<Rational> v(dim, Rational(0));
    v[0] = 1;
    return v;
}

inline std::vector<Rational> skew_direction(unsigned dim) {
    const std::vector<Rational> pool{Rational(1, 2), Rational(-1, 3), Rational(1, 4),
                                     Rational(-1, 5)};
    if (dim > pool.size())
        throw std::invalid_argument("skew_direction: no default direction beyond dimension 4");
    return {pool.begin(), pool.begin() + dim};
}

struct SuiteConfig {
    std::vector<Rational> u_list = default_parameter_list();
    unsigned order = 4;
    unsigned dim = 2;
    std::optional<std::vector<Rational>> v;  // fold axis + skew defaults when unset
    std::uint32_t seed = 20260816u;
    unsigned samples = 1000;
    std::optional<double> tol;  // per-suite pinned defaults when unset

    std::vector<std::vector<Rational>> directions() const {
        if (v) {
            if (v->size() != dim)
                throw std::invalid_argument("SuiteConfig: direction vector size " +
                                            std::to_string(v->size()) + " does not match dim " +
                                            std::to_string(dim));
            return {*v};
        }
        return {axis_direction(dim), skew_direction(dim)};
    }
};

// ---------------------------------------------------------------------------
// Suite registry.  Each name runs one identity family over the parameter
// list and yields one report per u; "all" concatenates every suite.

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "cocycle",   "normalization",   "coproduct",   "antipode", "rmatrix",
        "coboundary", "logexp",         "kappa-minkowski", "realization", "adx",
        "star-assoc", "ode",            "kinverse",    "algebroid"};
    return names;
}

inline bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

// Deterministic report order for text and JSON output: identity name first,
// then the parameter value (maps and suites may be evaluated in any order).
inline void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& x, const VerificationReport& y) {
                         if (x.identity != y.identity) return x.identity < y.identity;
                         return x.u < y.u;
                     });
}

inline std::vector<VerificationReport> run_suite(const std::string& name,
                                                 const SuiteConfig& cfg) {
    if (!is_suite_name(name))
        throw std::invalid_argument("run_suite: unknown suite \"" + name + "\"");
    if (cfg.order < 2)
        throw std::invalid_argument("run_suite: truncation order must be at least 2");
    if (name == "logexp" && cfg.order < 3)
        throw std::invalid_argument("run_suite: logexp compares three expansion grades and "
                                    "needs order at least 3");
    if (cfg.dim < 2) throw std::invalid_argument("run_suite: dimension must be at least 2");

    std::vector<VerificationReport> out;
    for (const Rational& u : cfg.u_list) {
        if (name == "star-assoc") {
            out.push_back(verify_associativity(u, cfg.seed, cfg.samples));
            continue;
        }
        if (name == "ode") {
            out.push_back(verify_shift_ode(u, cfg.tol.value_or(1e-6)));
            continue;
        }
        if (name == "kinverse") {
            out.push_back(verify_k_round_trip(u, cfg.tol.value_or(1e-12)));
            continue;
        }
        if (name == "algebroid") {
            out.push_back(verify_algebroid(u, cfg.tol.value_or(1e-12)));
            continue;
        }
        if (name == "kappa-minkowski") {
            out.push_back(run_check(name, u, cfg.order, [&](ResidualLog& log) {
                for (const auto& v : cfg.directions())
                    check_kappa_minkowski(RealizationSpec(u, v), cfg.order, log);
            }));
            continue;
        }
        if (name == "adx") {
            out.push_back(run_check(name, u, cfg.order, [&](ResidualLog& log) {
                for (const auto& v : cfg.directions())
                    check_adx_coproduct(RealizationSpec(u, v), cfg.order, log);
            }));
            continue;
        }

        const TwistFamily tf(u, cfg.order);
        if (name == "cocycle") out.push_back(verify_cocycle(tf));
        else if (name == "normalization") out.push_back(verify_normalization(tf));
        else if (name == "coproduct") out.push_back(verify_coproduct(tf));
        else if (name == "antipode") out.push_back(verify_antipode(tf));
        else if (name == "rmatrix") out.push_back(verify_r_matrix(tf));
        else if (name == "coboundary") out.push_back(verify_coboundary(tf));
        else if (name == "logexp") out.push_back(verify_log_expansion(tf));
        else {  // realization: reuse the twist built for this u
            out.push_back(run_check(name, u, cfg.order, [&](ResidualLog& log) {
                for (const auto& v : cfg.directions())
                    check_realization_routes(tf, RealizationSpec(u, v), log);
            }));
        }
    }
    sort_reports(out);
    return out;
}

inline std::vector<VerificationReport> run_all(const SuiteConfig& cfg) {
    std::vector<VerificationReport> out;
    for (const std::string& name : suite_names()) {
        auto part = run_suite(name, cfg);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    sort_reports(out);
    return out;
}

// ---------------------------------------------------------------------------
// JSON serialization of reports.  Kept out of report.hpp so the symbolic
// headers compile without the JSON dependency.

inline nlohmann::json report_to_json(const VerificationReport& rep) {
    return nlohmann::json{{"identity", rep.identity}, {"u", to_string(rep.u)},
                          {"order", rep.order},       {"pass", rep.pass},
                          {"residual", rep.residual}, {"ms", rep.ms}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport rep;
    rep.identity = j.at("identity").get<std::string>();
    rep.u = parse_rational(j.at("u").get<std::string>());
    rep.order = j.at("order").get<unsigned>();
    rep.pass = j.at("pass").get<bool>();
    rep.residual = j.at("residual").get<std::string>();
    rep.ms = j.at("ms").get<double>();
    return rep;
}

inline nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : reports) arr.push_back(report_to_json(rep));
    return arr;
}

// ---------------------------------------------------------------------------
// JSON dump of the coordinate realizations per (u, dim, direction): the
// canonically rendered components of x̂ and ŷ, ready for golden-file diffs.

inline nlohmann::json realization_tables(const SuiteConfig& cfg) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& u : cfg.u_list) {
        for (const auto& v : cfg.directions()) {
            const RealizationSpec spec(u, v);
            nlohmann::json entry;
            entry["u"] = to_string(u);
            entry["dim"] = cfg.dim;
            nlohmann::json dir = nlohmann::json::array();
            for (const auto& c : v) dir.push_back(to_string(c));
            entry["v"] = dir;
            nlohmann::json xs = nlohmann::json::array(), ys = nlohmann::json::array();
            for (const auto& e : realize_xhat(spec, cfg.order)) xs.push_back(e.str());
            for (const auto& e : realize_yhat(spec, cfg.order)) ys.push_back(e.str());
            entry["xhat"] = xs;
            entry["yhat"] = ys;
            arr.push_back(entry);
        }
    }
    return arr;
}

}  // namespace jtwist
