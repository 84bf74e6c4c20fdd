#pragma once

#include "report.hpp"
#include "series.hpp"
#include "tensor.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace jtwist {

// Sign sites of the twist assembly.  Each field multiplies one structural
// sign in the product form below; the defaults give the genuine family, and
// fault-injection tests flip exactly one site to confirm the verification
// suites notice.
struct TwistSigns {
    int pair_exponent = -1;       // exp(pair_exponent · u (DA⊗1 + 1⊗DA))
    int log_outer = -1;           // exp(log_outer · log(1 + log_inner·A) ⊗ D)
    int log_inner = +1;           //             … log(1 + log_inner·A) …
    int coproduct_exponent = +1;  // exp(coproduct_exponent · Δ0(u DA))
};

// One member of the interpolating twist family at a fixed parameter u and
// truncation order N.  The element and its inverse are assembled as products
// of three exponentials; the inverse reverses the factors and negates the
// exponents, so the pair multiplies to the identity for any sign choice
// (checked at construction).  The deformed coproduct is conjugation by the
// twist; the deformed antipode is conjugation by the folded element
// χ = μ∘(id ⊗ S0) applied to the twist.
class TwistFamily {
  public:
    TwistFamily(const Rational& u, unsigned order, const TwistSigns& signs = {})
        : u_(u), order_(order), twist_(order), inverse_(order), chi_(order), chi_inverse_(order) {
        if (order < 1) throw std::invalid_argument("TwistFamily: truncation order must be at least 1");
        const BorelElement A = BorelElement::gen_a(order);
        const BorelElement D = BorelElement::gen_d(order);
        const BorelElement one = BorelElement::unit(order);
        const BorelElement DA = D * A;
        const GaussianRational cu{u};
        const auto sgn = [](int s, const GaussianRational& c) { return s < 0 ? -c : c; };

        const Tensor2 pair_exp = (outer(DA, one) + outer(one, DA)) * sgn(signs.pair_exponent, cu);
        const BorelElement log_leg =
            log_series(one + (signs.log_inner < 0 ? -A : A)) * sgn(signs.log_outer, GaussianRational(1));
        const Tensor2 log_exp = outer(log_leg, D);
        const Tensor2 cop_exp = coproduct0(DA) * sgn(signs.coproduct_exponent, cu);

        twist_ = exp_series(pair_exp) * exp_series(log_exp) * exp_series(cop_exp);
        inverse_ = exp_series(-cop_exp) * exp_series(-log_exp) * exp_series(-pair_exp);

        const Tensor2 unit2 = Tensor2::unit(order);
        if (!(twist_ * inverse_ == unit2) || !(inverse_ * twist_ == unit2))
            throw std::logic_error("TwistFamily: product with the inverse is not the identity");

        chi_ = multiply_second_mapped(twist_, [&](const Mono& m) {
            return BorelElement::monomial(order, m, GaussianRational(1)).antipode0();
        });
        chi_inverse_ = invert(chi_);
    }

    const Rational& u() const { return u_; }
    unsigned order() const { return order_; }
    const Tensor2& twist() const { return twist_; }
    const Tensor2& twist_inverse() const { return inverse_; }
    const BorelElement& chi() const { return chi_; }
    const BorelElement& chi_inverse() const { return chi_inverse_; }

    // Deformed structure maps.  The counit is undeformed.
    Tensor2 coproduct(const BorelElement& g) const { return twist_ * coproduct0(g) * inverse_; }
    BorelElement antipode(const BorelElement& g) const { return chi_ * g.antipode0() * chi_inverse_; }

  private:
    Rational u_;
    unsigned order_;
    Tensor2 twist_, inverse_;
    BorelElement chi_, chi_inverse_;
};

// ---------------------------------------------------------------------------
// Closed-form deformed structure maps, expanded as geometric series at the
// requested truncation order.  "Momentum" covers any generator p with
// [A, p] = 0 and [p, D] = p (both A and E qualify); "dilation" is D itself.

inline Tensor2 closed_coproduct_momentum(const BorelElement& p, const Rational& u, unsigned N) {
    const BorelElement A = BorelElement::gen_a(N);
    const BorelElement one = BorelElement::unit(N);
    const GaussianRational cu{u}, cv{Rational(1) - u};
    const Tensor2 num = outer(p, one - A * cu) + outer(one + A * cv, p);
    const Tensor2 den = Tensor2::unit(N) + outer(A, A) * (cu * cv);
    return num * invert(den);
}

inline Tensor2 closed_coproduct_dilation(const Rational& u, unsigned N) {
    const BorelElement A = BorelElement::gen_a(N);
    const BorelElement D = BorelElement::gen_d(N);
    const BorelElement one = BorelElement::unit(N);
    const GaussianRational cu{u}, cv{Rational(1) - u};
    const Tensor2 sum = outer(D, invert(one - A * cu)) + outer(invert(one + A * cv), D);
    const Tensor2 den = Tensor2::unit(N) + outer(A, A) * (cu * cv);
    return sum * den;  // the scalar factor multiplies, it is not inverted here
}

inline BorelElement closed_antipode_momentum(const BorelElement& p, const Rational& u, unsigned N) {
    const BorelElement A = BorelElement::gen_a(N);
    const BorelElement one = BorelElement::unit(N);
    const GaussianRational cw{Rational(1) - 2 * u};
    return -p * invert(one + A * cw);
}

// The pure-A tail below is forced by the antipode axiom μ(S⊗id)Δ(D) = 0
// together with the closed coproduct above: substituting
// S(D) = -D - (1-u)AD + uDA + T(A) and solving gives
// T = -u(1-u)A²(1-uA)^{-1}.  It vanishes at both endpoints, matching the
// product forms -(1+A)D and -D(1-A).
inline BorelElement closed_antipode_dilation(const Rational& u, unsigned N) {
    const BorelElement A = BorelElement::gen_a(N);
    const BorelElement D = BorelElement::gen_d(N);
    const BorelElement one = BorelElement::unit(N);
    const GaussianRational cu{u}, cv{Rational(1) - u};
    const BorelElement tail = A * A * invert(one - A * cu) * (cu * cv);
    return -D - A * D * cv + D * A * cu - tail;
}

// ---------------------------------------------------------------------------
// Homomorphic extension of a generator assignment to PBW monomials, and the
// induced maps on tensor legs.  Used to state coassociativity of the
// deformed coproduct without assuming anything beyond multiplicativity.

template <typename Elem>
Elem hom_on_monomial(const Mono& mono, const Elem& img_a, const Elem& img_e, const Elem& img_d,
                     const Elem& unit) {
    Elem acc = unit;
    for (unsigned k = 0; k < mono.m; ++k) acc *= img_a;
    for (unsigned k = 0; k < mono.s; ++k) acc *= img_e;
    for (unsigned k = 0; k < mono.n; ++k) acc *= img_d;
    return acc;
}

struct CoproductImages {
    Tensor2 img_a, img_e, img_d;
};

inline CoproductImages deformed_images(const TwistFamily& tf) {
    const unsigned N = tf.order();
    return {tf.coproduct(BorelElement::gen_a(N)), tf.coproduct(BorelElement::gen_e(N)),
            tf.coproduct(BorelElement::gen_d(N))};
}

// (Δ ⊗ id) t and (id ⊗ Δ) t for the multiplicative map Δ given on generators.
inline Tensor3 coproduct_first_mapped(const Tensor2& t, const CoproductImages& images) {
    Tensor3 r(t.order());
    const Tensor2 unit2 = Tensor2::unit(t.order());
    for (const auto& [key, c] : t.terms()) {
        const Tensor2 split = hom_on_monomial(key[0], images.img_a, images.img_e, images.img_d, unit2);
        for (const auto& [skey, sc] : split.terms()) r.add_term({skey[0], skey[1], key[1]}, c * sc);
    }
    return r;
}
inline Tensor3 coproduct_second_mapped(const Tensor2& t, const CoproductImages& images) {
    Tensor3 r(t.order());
    const Tensor2 unit2 = Tensor2::unit(t.order());
    for (const auto& [key, c] : t.terms()) {
        const Tensor2 split = hom_on_monomial(key[1], images.img_a, images.img_e, images.img_d, unit2);
        for (const auto& [skey, sc] : split.terms()) r.add_term({key[0], skey[0], skey[1]}, c * sc);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Verification suites.  Each returns a timed report whose residual is the
// canonical rendering of whatever failed to vanish.

inline VerificationReport verify_cocycle(const TwistFamily& tf) {
    return run_check("cocycle", tf.u(), tf.order(), [&](ResidualLog& log) {
        const Tensor3 lhs = extend_right(tf.twist()) * coproduct0_first(tf.twist());
        const Tensor3 rhs = extend_left(tf.twist()) * coproduct0_second(tf.twist());
        log.expect_zero("(F⊗1)(Δ0⊗id)F - (1⊗F)(id⊗Δ0)F", lhs - rhs);
    });
}

inline VerificationReport verify_normalization(const TwistFamily& tf) {
    return run_check("normalization", tf.u(), tf.order(), [&](ResidualLog& log) {
        const BorelElement one = BorelElement::unit(tf.order());
        log.expect_zero("(ε⊗id)F - 1", counit_first(tf.twist()) - one);
        log.expect_zero("(id⊗ε)F - 1", counit_second(tf.twist()) - one);
    });
}

inline VerificationReport verify_coproduct(const TwistFamily& tf) {
    return run_check("coproduct", tf.u(), tf.order(), [&](ResidualLog& log) {
        const unsigned N = tf.order();
        const Rational& u = tf.u();
        const BorelElement A = BorelElement::gen_a(N);
        const BorelElement E = BorelElement::gen_e(N);
        const BorelElement D = BorelElement::gen_d(N);
        const CoproductImages img = deformed_images(tf);

        // Conjugation by the twist must reproduce the closed forms, for both
        // momentum-type generators and for the dilation.
        log.expect_zero("Δ(A) - closed form", img.img_a - closed_coproduct_momentum(A, u, N));
        log.expect_zero("Δ(E) - closed form", img.img_e - closed_coproduct_momentum(E, u, N));
        log.expect_zero("Δ(D) - closed form", img.img_d - closed_coproduct_dilation(u, N));

        // Coassociativity of the deformed coproduct on every generator.
        for (const auto& [name, delta] :
             {std::pair{"A", img.img_a}, std::pair{"E", img.img_e}, std::pair{"D", img.img_d}}) {
            const Tensor3 left = coproduct_first_mapped(delta, img);
            const Tensor3 right = coproduct_second_mapped(delta, img);
            log.expect_zero(std::string("(Δ⊗id)Δ - (id⊗Δ)Δ on ") + name, left - right);
        }

        // Counit axiom for the deformed coproduct (the counit is undeformed).
        for (const auto& [name, gen, delta] : {std::tuple{"A", A, img.img_a},
                                               std::tuple{"E", E, img.img_e},
                                               std::tuple{"D", D, img.img_d}}) {
            log.expect_zero(std::string("(ε⊗id)Δ - id on ") + name, counit_first(delta) - gen);
            log.expect_zero(std::string("(id⊗ε)Δ - id on ") + name, counit_second(delta) - gen);
        }

        // Endpoint reductions to the two simple one-sided forms.
        const BorelElement one = BorelElement::unit(N);
        if (u == 0) {
            log.expect_zero("u=0: Δ(E) - (E⊗1 + (1+A)⊗E)",
                            img.img_e - (outer(E, one) + outer(one + A, E)));
            log.expect_zero("u=0: Δ(D) - (D⊗1 + (1+A)^{-1}⊗D)",
                            img.img_d - (outer(D, one) + outer(invert(one + A), D)));
        }
        if (u == 1) {
            log.expect_zero("u=1: Δ(E) - (E⊗(1-A) + 1⊗E)",
                            img.img_e - (outer(E, one - A) + outer(one, E)));
            log.expect_zero("u=1: Δ(D) - (D⊗(1-A)^{-1} + 1⊗D)",
                            img.img_d - (outer(D, invert(one - A)) + outer(one, D)));
        }
    });
}

inline VerificationReport verify_antipode(const TwistFamily& tf) {
    return run_check("antipode", tf.u(), tf.order(), [&](ResidualLog& log) {
        const unsigned N = tf.order();
        const Rational& u = tf.u();
        const BorelElement A = BorelElement::gen_a(N);
        const BorelElement E = BorelElement::gen_e(N);
        const BorelElement D = BorelElement::gen_d(N);

        log.expect_zero("S(A) - closed form", tf.antipode(A) - closed_antipode_momentum(A, u, N));
        log.expect_zero("S(E) - closed form", tf.antipode(E) - closed_antipode_momentum(E, u, N));
        log.expect_zero("S(D) - closed form", tf.antipode(D) - closed_antipode_dilation(u, N));

        // Hopf antipode axiom μ(S⊗id)Δ(g) = ε(g)·1, and its mirror, on the
        // generators (all of which have vanishing counit).
        const auto map_s = [&](const Mono& m) {
            return tf.antipode(BorelElement::monomial(N, m, GaussianRational(1)));
        };
        for (const auto& [name, gen] : {std::pair{"A", A}, std::pair{"E", E}, std::pair{"D", D}}) {
            const Tensor2 delta = tf.coproduct(gen);
            log.expect_zero(std::string("μ(S⊗id)Δ on ") + name, multiply_first_mapped(delta, map_s));
            log.expect_zero(std::string("μ(id⊗S)Δ on ") + name, multiply_second_mapped(delta, map_s));
        }

        // Endpoint reductions to the product forms.
        const BorelElement one = BorelElement::unit(N);
        if (u == 0) {
            log.expect_zero("u=0: S(E) + E(1+A)^{-1}", tf.antipode(E) + E * invert(one + A));
            log.expect_zero("u=0: S(D) + (1+A)D", tf.antipode(D) + (one + A) * D);
        }
        if (u == 1) {
            log.expect_zero("u=1: S(E) + E(1-A)^{-1}", tf.antipode(E) + E * invert(one - A));
            log.expect_zero("u=1: S(D) + D(1-A)", tf.antipode(D) + D * (one - A));
        }
    });
}

// The triangular structure element R = τ(F) · F⁻¹ of the deformed algebra.
inline Tensor2 r_matrix(const TwistFamily& tf) {
    return flip(tf.twist()) * tf.twist_inverse();
}

inline VerificationReport verify_r_matrix(const TwistFamily& tf) {
    return run_check("rmatrix", tf.u(), tf.order(), [&](ResidualLog& log) {
        const unsigned N = tf.order();
        const BorelElement A = BorelElement::gen_a(N);
        const BorelElement D = BorelElement::gen_d(N);
        const Tensor2 R = r_matrix(tf);
        // The leading grade is the classical limit and is parameter-free.
        log.expect_zero("grade-1 of R minus (A⊗D - D⊗A)",
                        R.grade_part(1) - (outer(A, D) - outer(D, A)));
        log.expect_zero("τ(R)·R - 1⊗1", flip(R) * R - Tensor2::unit(N));
    });
}

inline VerificationReport verify_coboundary(const TwistFamily& tf) {
    return run_check("coboundary", tf.u(), tf.order(), [&](ResidualLog& log) {
        const unsigned N = tf.order();
        const BorelElement A = BorelElement::gen_a(N);
        const BorelElement D = BorelElement::gen_d(N);
        const BorelElement one = BorelElement::unit(N);
        const GaussianRational cu{tf.u()};
        // The whole family is the coboundary transform of its u = 0 member by
        // the group-like conjugator built from exp(u·DA).
        const BorelElement omega = exp_series(D * A * cu);
        const BorelElement omega_inv = exp_series(-(D * A * cu));
        const Tensor2 base = exp_series(-outer(log_series(one + A), D));
        const Tensor2 expected = outer(omega_inv, omega_inv) * base * coproduct0(omega);
        log.expect_zero("F - (ω^{-1}⊗ω^{-1}) F0 Δ0(ω)", tf.twist() - expected);
    });
}

inline VerificationReport verify_log_expansion(const TwistFamily& tf) {
    return run_check("logexp", tf.u(), tf.order(), [&](ResidualLog& log) {
        const unsigned N = tf.order();
        const Rational& u = tf.u();
        const BorelElement A = BorelElement::gen_a(N);
        const BorelElement D = BorelElement::gen_d(N);
        const BorelElement one = BorelElement::unit(N);
        const GaussianRational cu{u}, cv{Rational(1) - u};

        const Tensor2 logF = log_series(tf.twist());
        log.expect_zero("exp(log F) - F", exp_series(logF) - tf.twist());

        // Leading expansion grades of log F against the hand formulas.  The
        // two building blocks are uA on the right leg and (1-u)A on the left.
        const Tensor2 dua = outer(D, A * cu);        // D ⊗ uA
        const Tensor2 vad = outer(A * cv, D);        // (1-u)A ⊗ D
        const Tensor2 g1 = dua - vad;
        if (N >= 1) log.expect_zero("grade 1", logF.grade_part(1) - g1);

        const Tensor2 g2 = (dua + vad) * (outer(one, A * cu) + outer(A * cv, one)) *
                           GaussianRational(Rational(1, 2));
        if (N >= 2) log.expect_zero("grade 2", logF.grade_part(2) - g2);

        const GaussianRational third{Rational(1, 3)}, sixth{Rational(1, 6)};
        const Tensor2 uu = outer(one, A * A * (cu * cu));      // 1 ⊗ u²A²
        const Tensor2 vv = outer(A * A * (cv * cv), one);      // (1-u)²A² ⊗ 1
        const Tensor2 uv = outer(A * cv, A * cu);              // (1-u)A ⊗ uA
        const Tensor2 g3 = dua * (uu * third + uv * sixth - vv * sixth) -
                           vad * (vv * third + uv * sixth - uu * sixth);
        if (N >= 3) log.expect_zero("grade 3", logF.grade_part(3) - g3);

        // At the endpoints the product of exponentials collapses to a single
        // exponential with a pure-tensor exponent.
        if (u == 0)
            log.expect_zero("u=0: F - exp(-log(1+A)⊗D)",
                            tf.twist() - exp_series(-outer(log_series(one + A), D)));
        if (u == 1)
            log.expect_zero("u=1: F - exp(-D⊗log(1-A))",
                            tf.twist() - exp_series(-outer(D, log_series(one - A))));
    });
}

}  // namespace jtwist
