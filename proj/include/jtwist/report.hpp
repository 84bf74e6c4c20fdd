#pragma once

#include "rational.hpp"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace jtwist {

// One verified identity at one parameter value.  `residual` is the canonical
// rendering of the expected-zero element ("0" on pass) or, for numeric
// checks, the maximal absolute deviation.
struct VerificationReport {
    std::string identity;
    Rational u;
    unsigned order = 0;
    bool pass = false;
    std::string residual = "0";
    double ms = 0.0;

    std::string line() const {
        std::string out = pass ? "[PASS] " : "[FAIL] ";
        out += identity + " u=" + to_string(u) + " N=" + std::to_string(order);
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.1f ms)", ms);
        out += buf;
        if (!pass) out += "  residual: " + residual;
        return out;
    }
};

// Collects labeled expected-zero residuals; pass iff all parts vanish.
class ResidualLog {
  public:
    template <typename Elem>
    void expect_zero(const std::string& label, const Elem& diff) {
        if (diff.is_zero()) return;
        note(label, diff.str());
    }
    void expect(const std::string& label, bool ok, const std::string& detail) {
        if (!ok) note(label, detail);
    }
    void note(const std::string& label, const std::string& detail) {
        if (!text_.empty()) text_ += "; ";
        text_ += label + ": " + detail;
        failed_ = true;
    }
    bool pass() const { return !failed_; }
    std::string residual() const { return failed_ ? text_ : "0"; }

  private:
    bool failed_ = false;
    std::string text_;
};

// Runs `body(log)` under a wall-clock timer and packages the outcome.
template <typename Body>
VerificationReport run_check(std::string identity, const Rational& u, unsigned order, Body&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    ResidualLog log;
    body(log);
    const auto t1 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.identity = std::move(identity);
    rep.u = u;
    rep.order = order;
    rep.pass = log.pass();
    rep.residual = log.residual();
    rep.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

}  // namespace jtwist
