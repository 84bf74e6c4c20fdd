#pragma once

#include "rational.hpp"
#include "report.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace jtwist {

// Deformation data for momentum-space evaluation: the vector a and the
// family parameter u, over exact rationals or doubles.
template <typename S>
struct MomentumContext {
    std::vector<S> a;
    S u;
};

namespace detail {

template <typename S>
S dot(const std::vector<S>& x, const std::vector<S>& y) {
    S r(0);
    for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
    return r;
}

inline std::string scalar_str(const Rational& v) { return to_string(v); }
inline std::string scalar_str(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

template <typename S>
void require_positive(const S& value, const char* factor, const char* fn) {
    if (!(value > S(0)))
        throw std::domain_error(std::string(fn) + ": factor " + factor + " = " +
                                scalar_str(value) + " is not positive");
}

template <typename S>
void require_same_dim(const MomentumContext<S>& ctx, const std::vector<S>& k, const char* fn) {
    if (k.size() != ctx.a.size())
        throw std::invalid_argument(std::string(fn) + ": dimension mismatch");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Deformed addition of wave exponents,
//   (k ⊕ q)_μ = [k_μ(1 + u(a·q)) + (1 − (1−u)(a·k)) q_μ] / [1 + u(1−u)(a·k)(a·q)],
// defined where all three parenthesized factors stay strictly positive.

template <typename S>
bool admissible_sum(const MomentumContext<S>& ctx, const std::vector<S>& k,
                    const std::vector<S>& q) {
    const S zk = detail::dot(ctx.a, k), zq = detail::dot(ctx.a, q);
    return S(1) + ctx.u * zq > S(0) && S(1) - (S(1) - ctx.u) * zk > S(0) &&
           S(1) + ctx.u * (S(1) - ctx.u) * zk * zq > S(0);
}

template <typename S>
std::vector<S> deformed_sum(const MomentumContext<S>& ctx, const std::vector<S>& k,
                            const std::vector<S>& q) {
    detail::require_same_dim(ctx, k, "deformed_sum");
    detail::require_same_dim(ctx, q, "deformed_sum");
    const S zk = detail::dot(ctx.a, k), zq = detail::dot(ctx.a, q);
    const S right = S(1) + ctx.u * zq;
    const S left = S(1) - (S(1) - ctx.u) * zk;
    const S den = S(1) + ctx.u * (S(1) - ctx.u) * zk * zq;
    detail::require_positive(right, "1+u(a·q)", "deformed_sum");
    detail::require_positive(left, "1-(1-u)(a·k)", "deformed_sum");
    detail::require_positive(den, "1+u(1-u)(a·k)(a·q)", "deformed_sum");
    std::vector<S> out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = (k[i] * right + left * q[i]) / den;
    return out;
}

// Inverse exponent S(k) = −k / (1 − (1−2u)(a·k)): the unique vector with
// k ⊕ S(k) = S(k) ⊕ k = 0.
template <typename S>
bool admissible_antipode(const MomentumContext<S>& ctx, const std::vector<S>& k) {
    return S(1) - (S(1) - S(2) * ctx.u) * detail::dot(ctx.a, k) > S(0);
}

template <typename S>
std::vector<S> momentum_antipode(const MomentumContext<S>& ctx, const std::vector<S>& k) {
    detail::require_same_dim(ctx, k, "momentum_antipode");
    const S den = S(1) - (S(1) - S(2) * ctx.u) * detail::dot(ctx.a, k);
    detail::require_positive(den, "1-(1-2u)(a·k)", "momentum_antipode");
    std::vector<S> out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = -k[i] / den;
    return out;
}

// ---------------------------------------------------------------------------
// Exponent reparametrizations.  K turns an additive label into a wave
// exponent; its inverse is logarithmic, with a series branch near a·k = 0
// where the closed form loses precision.

namespace detail {

constexpr double kSeriesThreshold = 1e-8;

}  // namespace detail

inline std::vector<double> k_map(const MomentumContext<double>& ctx, const std::vector<double>& k) {
    detail::require_same_dim(ctx, k, "k_map");
    const double z = detail::dot(ctx.a, k);
    const double den = (1.0 - ctx.u) * std::exp(z) + ctx.u;
    detail::require_positive(den, "(1-u)e^{a·k}+u", "k_map");
    // (e^z − 1)/z, continued through z = 0.
    const double growth =
        std::abs(z) < detail::kSeriesThreshold ? 1.0 + z / 2.0 + z * z / 6.0 : std::expm1(z) / z;
    std::vector<double> out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = k[i] * growth / den;
    return out;
}

inline std::vector<double> k_inverse(const MomentumContext<double>& ctx,
                                     const std::vector<double>& k) {
    detail::require_same_dim(ctx, k, "k_inverse");
    const double z = detail::dot(ctx.a, k);
    const double top = 1.0 + ctx.u * z;
    const double bottom = 1.0 - (1.0 - ctx.u) * z;
    detail::require_positive(top, "1+u(a·k)", "k_inverse");
    detail::require_positive(bottom, "1-(1-u)(a·k)", "k_inverse");
    double factor;
    if (std::abs(z) < detail::kSeriesThreshold) {
        // log((1+uz)/(1−(1−u)z))/z = Σ_j z^j ((−1)^j u^{j+1} + (1−u)^{j+1})/(j+1)
        factor = 0.0;
        double u_pow = ctx.u, v_pow = 1.0 - ctx.u, z_pow = 1.0;
        for (unsigned j = 0; j <= 6; ++j) {
            factor += z_pow * (((j % 2 == 0) ? u_pow : -u_pow) + v_pow) / (j + 1);
            u_pow *= ctx.u;
            v_pow *= 1.0 - ctx.u;
            z_pow *= z;
        }
    } else {
        factor = std::log(top / bottom) / z;
    }
    std::vector<double> out(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) out[i] = k[i] * factor;
    return out;
}

// Generalized shift of a wave exponent q along an additive label k:
// p_map(k, q) = K(k) ⊕ q.  It is the unique solution of
//   d/dλ p_map(λk, q) = (k_μ − (1−u)(a·k) p_μ)(1 + u(a·p)),  p_map(0, q) = q,
// which verify_shift_ode checks by central differences.
inline std::vector<double> p_map(const MomentumContext<double>& ctx, const std::vector<double>& k,
                                 const std::vector<double>& q) {
    return deformed_sum(ctx, k_map(ctx, k), q);
}

// ---------------------------------------------------------------------------
// Star product of plane waves: every method returns the exponent of the
// merged wave e^{ik·x} ★ e^{iq·x} and they must all agree.

enum class StarMethod {
    closed_form,     // the deformed addition k ⊕ q
    shift_operator,  // p_map(K⁻¹(k), q), floating point only
    normal_ordered,  // endpoint fold of the normal-ordered inverse twist (u ∈ {0,1})
    algebroid,       // explicit three-step shift bookkeeping, floating point only
};

namespace detail {

// At the endpoints the inverse twist is a single normal-ordered exponential
// and its action on a pair of plane waves folds to rational arithmetic:
// u = 0 rescales the right exponent by 1 − a·k, u = 1 the left one by 1 + a·q.
template <typename S>
std::vector<S> endpoint_fold(const MomentumContext<S>& ctx, const std::vector<S>& k,
                             const std::vector<S>& q) {
    if (ctx.u != S(0) && ctx.u != S(1))
        throw std::domain_error(
            "star_plane_waves: the normal-ordered method exists only at the endpoints u = 0 and "
            "u = 1");
    std::vector<S> out(k.size());
    if (ctx.u == S(0)) {
        const S scale = S(1) - dot(ctx.a, k);
        for (std::size_t i = 0; i < k.size(); ++i) out[i] = k[i] + scale * q[i];
    } else {
        const S scale = S(1) + dot(ctx.a, q);
        for (std::size_t i = 0; i < k.size(); ++i) out[i] = scale * k[i] + q[i];
    }
    return out;
}

}  // namespace detail

inline std::vector<Rational> star_plane_waves(const MomentumContext<Rational>& ctx,
                                              const std::vector<Rational>& k,
                                              const std::vector<Rational>& q,
                                              StarMethod method = StarMethod::closed_form) {
    detail::require_same_dim(ctx, k, "star_plane_waves");
    detail::require_same_dim(ctx, q, "star_plane_waves");
    switch (method) {
        case StarMethod::closed_form:
            return deformed_sum(ctx, k, q);
        case StarMethod::normal_ordered:
            return detail::endpoint_fold(ctx, k, q);
        default:
            throw std::invalid_argument(
                "star_plane_waves: this method needs a floating-point context");
    }
}

inline std::vector<double> star_plane_waves(const MomentumContext<double>& ctx,
                                            const std::vector<double>& k,
                                            const std::vector<double>& q,
                                            StarMethod method = StarMethod::closed_form) {
    detail::require_same_dim(ctx, k, "star_plane_waves");
    detail::require_same_dim(ctx, q, "star_plane_waves");
    switch (method) {
        case StarMethod::closed_form:
            return deformed_sum(ctx, k, q);
        case StarMethod::shift_operator:
            return p_map(ctx, k_inverse(ctx, k), q);
        case StarMethod::normal_ordered:
            return detail::endpoint_fold(ctx, k, q);
        case StarMethod::algebroid: {
            // Transport bookkeeping: start from the left exponent, shift the
            // right exponent along it, and add the displacement.
            const std::vector<double> transported = p_map(ctx, k_inverse(ctx, k), q);
            std::vector<double> out(k.size());
            for (std::size_t i = 0; i < k.size(); ++i)
                out[i] = k[i] + (transported[i] - k[i]);
            return out;
        }
    }
    throw std::invalid_argument("star_plane_waves: unknown method");
}

// ---------------------------------------------------------------------------
// Verification suites.

// Exact associativity (k ⊕ q) ⊕ r = k ⊕ (q ⊕ r), the two-sided unit, and the
// inverse laws k ⊕ S(k) = S(k) ⊕ k = 0, over random rational samples.
inline VerificationReport verify_associativity(const Rational& u, unsigned seed = 20260816u,
                                               unsigned samples = 1000) {
    return run_check("star-assoc", u, 0, [&](ResidualLog& log) {
        const MomentumContext<Rational> ctx{{Rational(1, 10), Rational(0)}, u};
        const std::vector<Rational> zero{Rational(0), Rational(0)};
        std::mt19937 rng(seed);
        std::uniform_int_distribution<long> num(-3, 3), den(1, 8);
        const auto sample = [&] {
            std::vector<Rational> v(2);
            for (auto& c : v) c = Rational(num(rng), den(rng));
            return v;
        };
        unsigned done = 0, skipped = 0, attempts = 0;
        bool associative = true, unital = true, invertible = true;
        std::string mismatch;
        while (done < samples) {
            if (++attempts > 50 * samples)
                throw std::logic_error("verify_associativity: sampling starved");
            const auto k = sample(), q = sample(), r = sample();
            if (!admissible_sum(ctx, k, q) || !admissible_sum(ctx, q, r) ||
                !admissible_sum(ctx, deformed_sum(ctx, k, q), r) ||
                !admissible_sum(ctx, k, deformed_sum(ctx, q, r)) ||
                !admissible_antipode(ctx, k)) {
                ++skipped;
                continue;
            }
            if (deformed_sum(ctx, deformed_sum(ctx, k, q), r) !=
                deformed_sum(ctx, k, deformed_sum(ctx, q, r))) {
                associative = false;
                mismatch = "triple a·k=" + to_string(detail::dot(ctx.a, k));
            }
            if (deformed_sum(ctx, k, zero) != k || deformed_sum(ctx, zero, q) != q)
                unital = false;
            const auto sk = momentum_antipode(ctx, k);
            if (deformed_sum(ctx, k, sk) != zero || deformed_sum(ctx, sk, k) != zero)
                invertible = false;
            ++done;
        }
        log.expect("associativity over " + std::to_string(done) + " samples", associative,
                   mismatch);
        log.expect("two-sided unit", unital, "0 is not neutral");
        log.expect("two-sided inverse", invertible, "k ⊕ S(k) ≠ 0");
        log.expect("inadmissible samples stay rare (" + std::to_string(skipped) + " of " +
                       std::to_string(attempts) + " attempts)",
                   10 * skipped <= attempts, "sampling region nearly empty");
    });
}

// K and K⁻¹ invert each other, and the deformed sum factors through them:
// k ⊕ q = p_map(K⁻¹(k), q).
inline VerificationReport verify_k_round_trip(const Rational& u, double tol = 1e-12) {
    return run_check("kinverse", u, 0, [&](ResidualLog& log) {
        const MomentumContext<double> ctx{{1.0, 0.0}, to_double(u)};
        const std::vector<std::vector<double>> grid{
            {-0.4, 0.3},  {0.2, -0.5},      {0.45, 0.1},
            {-0.2, -0.3}, {1e-9, -2e-9},    {0.0, 0.7}};
        const auto sup = [](const std::vector<double>& x, const std::vector<double>& y) {
            double m = 0;
            for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
            return m;
        };
        const auto inverse_domain = [&](const std::vector<double>& k) {
            const double z = detail::dot(ctx.a, k);
            return 1.0 + ctx.u * z > 0 && 1.0 - (1.0 - ctx.u) * z > 0;
        };
        for (const auto& k : grid) {
            if (!inverse_domain(k)) continue;
            const double back = sup(k_map(ctx, k_inverse(ctx, k)), k);
            log.expect("K∘K⁻¹ at a·k=" + detail::scalar_str(detail::dot(ctx.a, k)), back < tol,
                       detail::scalar_str(back));
            const double forth = sup(k_inverse(ctx, k_map(ctx, k)), k);
            log.expect("K⁻¹∘K at a·k=" + detail::scalar_str(detail::dot(ctx.a, k)), forth < tol,
                       detail::scalar_str(forth));
        }
        for (const auto& k : grid) {
            for (const auto& q : grid) {
                if (!inverse_domain(k) || !admissible_sum(ctx, k, q)) continue;
                const double gap =
                    sup(deformed_sum(ctx, k, q), p_map(ctx, k_inverse(ctx, k), q));
                log.expect("k⊕q = p_map(K⁻¹(k), q)", gap < tol, detail::scalar_str(gap));
            }
        }
    });
}

namespace detail {

// Central-difference residual of the flow equation for p_map at one λ:
//   | d/dλ p_map(λk, q) − (k_μ − (1−u)(a·k) p_μ)(1 + u(a·p)) |, sup over μ.
inline double ode_pointwise_residual(const MomentumContext<double>& ctx,
                                     const std::vector<double>& k, const std::vector<double>& q,
                                     double lambda, double h) {
    const auto scaled = [&](double t) {
        std::vector<double> v(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) v[i] = t * k[i];
        return v;
    };
    const auto plus = p_map(ctx, scaled(lambda + h), q);
    const auto minus = p_map(ctx, scaled(lambda - h), q);
    const auto at = p_map(ctx, scaled(lambda), q);
    const double zk = dot(ctx.a, k);
    const double zp = dot(ctx.a, at);
    double worst = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        const double lhs = (plus[i] - minus[i]) / (2 * h);
        const double rhs = (k[i] - (1.0 - ctx.u) * zk * at[i]) * (1.0 + ctx.u * zp);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace detail

// Maximal flow-equation residual of p_map along λ ∈ [0, 1] at the given
// central-difference step.  The λ = 0 point doubles as the slope check
// d/dλ p_map(λk, q)|₀ = (k_μ − (1−u)(a·k) q_μ)(1 + u(a·q)).
inline double verify_ode(const MomentumContext<double>& ctx, const std::vector<double>& k,
                         const std::vector<double>& q, double step) {
    detail::require_same_dim(ctx, k, "verify_ode");
    detail::require_same_dim(ctx, q, "verify_ode");
    double worst = 0;
    for (double lambda : {0.0, 0.25, 0.5, 0.75, 1.0})
        worst = std::max(worst, detail::ode_pointwise_residual(ctx, k, q, lambda, step));
    return worst;
}

// The shift operator solves its defining flow equation: central differences
// in λ of p_map(λk, q) against the closed right-hand side.
inline VerificationReport verify_shift_ode(const Rational& u, double tol = 1e-6) {
    return run_check("ode", u, 0, [&](ResidualLog& log) {
        // The sample keeps every denominator of the closed form well away
        // from zero across the parameter sweep, so the central-difference
        // truncation error stays at its nominal O(h²) size.
        const MomentumContext<double> ctx{{1.0, 0.0}, to_double(u)};
        const std::vector<double> k{0.3, 0.2}, q{0.2, -0.2};
        for (double lambda : {0.3, 0.7, 1.0}) {
            const double fine = detail::ode_pointwise_residual(ctx, k, q, lambda, 1e-4);
            const double coarse = detail::ode_pointwise_residual(ctx, k, q, lambda, 1e-3);
            log.expect("flow residual at λ=" + detail::scalar_str(lambda), fine < tol,
                       detail::scalar_str(fine));
            // Central differences converge at second order, so one decade in
            // the step buys about two decades in the residual; the ratio is
            // only meaningful while the coarse residual sits above the
            // floating-point noise floor.
            if (coarse > 1e-10)
                log.expect("second-order convergence at λ=" + detail::scalar_str(lambda),
                           coarse / fine > 25.0,
                           "ratio " + detail::scalar_str(coarse / fine));
        }
        const double swept = verify_ode(ctx, k, q, 1e-4);
        log.expect("sup over λ ∈ [0, 1] including the λ=0 slope", swept < tol,
                   detail::scalar_str(swept));
        // A zero label never moves: p_map(λ·0, q) = q for every λ, and the
        // right-hand side vanishes with k, so the residual is exactly zero.
        const double frozen = verify_ode(ctx, {0.0, 0.0}, q, 1e-4);
        log.expect("k = 0 flow is constant", frozen == 0.0, detail::scalar_str(frozen));
    });
}

namespace detail {

inline double sup_gap(const std::vector<double>& x, const std::vector<double>& y) {
    double m = 0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

// One (k, q) pair of the transport bookkeeping: the three-step route must
// land on the closed-form sum, and the transport of k = 0 must return q
// unchanged (the zero wave contributes no phase and no shift).
inline void check_transport_pair(const MomentumContext<double>& ctx, const std::vector<double>& k,
                                 const std::vector<double>& q, double tol, ResidualLog& log) {
    const std::vector<double> zero(k.size(), 0.0);
    const double gap0 = sup_gap(star_plane_waves(ctx, zero, q, StarMethod::algebroid), q);
    log.expect("transport by the zero wave", gap0 < 1e-14, scalar_str(gap0));
    if (!admissible_sum(ctx, k, q)) return;
    const double gap = sup_gap(star_plane_waves(ctx, k, q, StarMethod::algebroid),
                               star_plane_waves(ctx, k, q, StarMethod::closed_form));
    log.expect("transport bookkeeping equals the closed form", gap < tol, scalar_str(gap));
}

}  // namespace detail

// One (k, q) pair of the transport bookkeeping as a standalone report.
inline VerificationReport verify_algebroid_twist(const Rational& u, const std::vector<double>& a,
                                                 const std::vector<double>& k,
                                                 const std::vector<double>& q,
                                                 double tol = 1e-12) {
    return run_check("algebroid", u, 0, [&](ResidualLog& log) {
        const MomentumContext<double> ctx{a, to_double(u)};
        detail::require_same_dim(ctx, k, "verify_algebroid_twist");
        detail::require_same_dim(ctx, q, "verify_algebroid_twist");
        detail::check_transport_pair(ctx, k, q, tol, log);
    });
}

// The three-step transport bookkeeping lands on the deformed sum, and the
// transport of q = 0 is no shift at all.
inline VerificationReport verify_algebroid(const Rational& u, double tol = 1e-12) {
    return run_check("algebroid", u, 0, [&](ResidualLog& log) {
        const MomentumContext<double> ctx{{0.1, 0.0}, to_double(u)};
        const std::vector<std::vector<double>> grid{
            {1.0, 2.0}, {-1.5, 0.5}, {0.25, -2.0}, {2.0, 1.0}, {0.0, 0.0}};
        for (const auto& k : grid) {
            const double gap0 =
                detail::sup_gap(star_plane_waves(ctx, k, {0.0, 0.0}, StarMethod::algebroid), k);
            log.expect("transport of the zero wave", gap0 < 1e-14, detail::scalar_str(gap0));
            for (const auto& q : grid) detail::check_transport_pair(ctx, k, q, tol, log);
        }
    });
}

}  // namespace jtwist
