// Tour of the symbolic layer: build one member of the twist family, inspect
// its expansion, verify an identity, and realize the noncommutative
// coordinates it generates.  Compile against include/ only; everything is
// exact rational arithmetic at a fixed truncation order.

#include "jtwist/twist.hpp"
#include "jtwist/weyl.hpp"

#include <cstdio>

using namespace jtwist;

int main() {
    // Truncation order 3 keeps the printouts short; every operation below
    // works the same way at higher orders.
    const Rational u(1, 2);
    const unsigned N = 3;
    const TwistFamily tf(u, N);

    std::printf("twist at u = %s, truncated at grade %u\n", to_string(u).c_str(), N);
    std::printf("  F     = %s\n", tf.twist().str().c_str());
    std::printf("  F^-1  = %s\n\n", tf.twist_inverse().str().c_str());

    // The two-cocycle property is what makes the deformed coproduct
    // coassociative; verify_cocycle returns a structured report.
    const VerificationReport cocycle = verify_cocycle(tf);
    std::printf("%s\n\n", cocycle.line().c_str());

    // Conjugation by the twist deforms the coproduct of each generator; the
    // momentum-type generator E picks up A-dependent legs.
    const BorelElement E = BorelElement::gen_e(N);
    std::printf("  Delta(E) = %s\n", tf.coproduct(E).str().c_str());
    std::printf("  S(E)     = %s\n\n", tf.antipode(E).str().c_str());

    // The same parameter drives a coordinate realization: x̂ closes the
    // Lie-algebra-type commutation relations with structure vector a = h·v.
    const RealizationSpec spec(u, {Rational(1), Rational(0)});
    const auto xhat = realize_xhat(spec, N);
    for (unsigned mu = 0; mu < spec.dim; ++mu)
        std::printf("  xhat^%u = %s\n", mu, xhat[mu].str().c_str());

    // [x̂^0, x̂^1] = i(a^0 x̂^1 - a^1 x̂^0); with v = (1, 0) only the first
    // term survives.  The commutator is an exact polynomial identity.
    const WeylElement lhs = commutator(xhat[0], xhat[1]);
    const WeylElement rhs = xhat[1] * TruncPoly::h(N) * GaussianRational::i();
    std::printf("\n  [xhat^0, xhat^1] - i a^0 xhat^1 = %s\n",
                (lhs - rhs).str().c_str());
    return lhs == rhs ? 0 : 1;
}
