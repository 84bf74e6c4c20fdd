// Acceptance gate: one pass/fail line per criterion, exit 0 only if every
// criterion holds.  Each criterion names the identities it covers and the
// tolerances it pins; the symbolic ones demand exactly-zero residuals, the
// floating-point ones the stated bounds.

#include "jtwist/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace jtwist;

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Every report passing, with the exactly-zero residual the symbolic suites
// promise.  Failing reports are echoed so a red line is diagnosable.
bool exact_pass(const std::vector<VerificationReport>& reports) {
    bool ok = true;
    for (const auto& rep : reports) {
        if (!rep.pass || rep.residual != "0") {
            std::printf("    %s\n", rep.line().c_str());
            ok = false;
        }
    }
    return ok;
}

// Same, but floating-point suites only owe a pass within their tolerance.
bool all_pass(const std::vector<VerificationReport>& reports) {
    bool ok = true;
    for (const auto& rep : reports) {
        if (!rep.pass) {
            std::printf("    %s\n", rep.line().c_str());
            ok = false;
        }
    }
    return ok;
}

bool any_suite_fails(const TwistSigns& signs) {
    const TwistFamily tf(Rational(1, 2), 3, signs);
    for (const VerificationReport& rep :
         {verify_cocycle(tf), verify_normalization(tf), verify_coproduct(tf),
          verify_antipode(tf), verify_r_matrix(tf), verify_coboundary(tf),
          verify_log_expansion(tf)}) {
        if (!rep.pass) return true;
    }
    return false;
}

}  // namespace

int main() {
    const auto t_total = std::chrono::steady_clock::now();
    int failures = 0;
    const auto criterion = [&](int index, bool ok, const char* label) {
        std::printf("%s criterion %d: %s\n", ok ? "[PASS]" : "[FAIL]", index, label);
        if (!ok) ++failures;
    };

    SuiteConfig cfg;  // defaults: u ∈ {0, 1/2, 1, 2, -1/3}, N = 4, dim = 2

    // 1. Cocycle and normalization, exactly zero, within the time budget.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const bool ok =
            exact_pass(run_suite("cocycle", cfg)) && exact_pass(run_suite("normalization", cfg));
        const double secs = seconds_since(t0);
        if (secs >= 10.0) std::printf("    took %.1f s (budget 10 s)\n", secs);
        criterion(1, ok && secs < 10.0,
                  "cocycle and normalization residuals vanish exactly for all five u at N=4 "
                  "within 10 s");
    }

    // 2. Conjugated coproducts equal the closed-form expansions; the deformed
    //    coproduct is coassociative and counital.
    criterion(2, exact_pass(run_suite("coproduct", cfg)),
              "twisted coproducts match closed forms exactly, with coassociativity");

    // 3. Conjugated antipodes equal the closed forms, satisfy the Hopf axiom,
    //    and collapse to the displayed endpoint forms at u = 0 and u = 1.
    criterion(3, exact_pass(run_suite("antipode", cfg)),
              "twisted antipodes match closed forms, the Hopf axiom, and both endpoints");

    // 4. Triangularity: grade-1 part of R is the classical r for every u, and
    //    flip(R)·R is the identity through grade 4.
    criterion(4, exact_pass(run_suite("rmatrix", cfg)),
              "R has classical grade-1 part A⊗D - D⊗A and flip(R)R = 1⊗1");

    // 5. The family is the coboundary transform of its u = 0 member.
    criterion(5, exact_pass(run_suite("coboundary", cfg)),
              "coboundary relation against the u=0 twist holds exactly");

    // 6. One-exponent expansion grades 1-3 and the endpoint collapses.
    criterion(6, exact_pass(run_suite("logexp", cfg)),
              "log of the twist matches expansion grades 1-3 and both endpoint forms");

    // 7. Coordinate algebra: commutator closures and the three realization
    //    routes, in dimensions 2-4 with two non-parallel directions each.
    {
        bool ok = true;
        for (unsigned dim : {2u, 3u, 4u}) {
            SuiteConfig per_dim = cfg;
            per_dim.dim = dim;
            ok = exact_pass(run_suite("kappa-minkowski", per_dim)) && ok;
            ok = exact_pass(run_suite("realization", per_dim)) && ok;
        }
        criterion(7, ok,
                  "coordinate commutators and all realization routes agree exactly in dims 2-4");
    }

    // 8. Momentum calculus: exact rational laws on 1000 samples per u, the
    //    reparametrization round trips and factorization within 1e-12, the
    //    flow equation below 1e-6 at step 1e-4 with second-order convergence,
    //    and the transport bookkeeping within 1e-12.
    {
        bool ok = exact_pass(run_suite("star-assoc", cfg));
        ok = all_pass(run_suite("kinverse", cfg)) && ok;
        ok = all_pass(run_suite("ode", cfg)) && ok;
        ok = all_pass(run_suite("algebroid", cfg)) && ok;
        criterion(8, ok, "momentum addition laws, reparametrizations, flow, and transport hold");
    }

    // 9. Negative controls: each single sign flip in the twist assembly must
    //    trip at least one suite.
    {
        const bool ok = any_suite_fails({+1, -1, +1, +1}) && any_suite_fails({-1, +1, +1, +1}) &&
                        any_suite_fails({-1, -1, -1, +1}) && any_suite_fails({-1, -1, +1, -1});
        criterion(9, ok, "every single-site sign corruption of the twist is detected");
    }

    // Overall wall-time budget for the full default matrix.
    {
        const auto t0 = std::chrono::steady_clock::now();
        const bool ok = all_pass(run_all(cfg));
        const double secs = seconds_since(t0);
        std::printf("%s verify-all wall time: %.1f s (budget 120 s)\n",
                    ok && secs < 120.0 ? "[PASS]" : "[FAIL]", secs);
        if (!(ok && secs < 120.0)) ++failures;
    }

    std::printf("acceptance: %d criteria failed, total %.1f s\n", failures,
                seconds_since(t_total));
    return failures == 0 ? 0 : 1;
}
