#pragma once

#include "gaussian.hpp"

#include <stdexcept>
#include <string>

namespace jtwist {

// Truncated exponential.  Requires a vanishing grade-0 part: then x^k has
// grade >= k and the series terminates at the truncation order.
template <typename Elem>
Elem exp_series(const Elem& x) {
    const Elem g0 = x.grade0();
    if (!g0.is_zero())
        throw std::domain_error("exp_series: argument has nonzero grade-0 part (" + g0.str() + ")");
    Elem acc = x.unit_like();
    Elem term = x.unit_like();
    for (unsigned k = 1; k <= x.order(); ++k) {
        term = (term * x) * GaussianRational(Rational(1, k));
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

// Truncated logarithm of 1 + y with y of positive grade.
template <typename Elem>
Elem log_series(const Elem& x) {
    const Elem g0 = x.grade0();
    if (!(g0 == x.unit_like()))
        throw std::domain_error("log_series: argument grade-0 part is not the unit (" + g0.str() + ")");
    const Elem y = x - x.unit_like();
    Elem acc = y;
    acc -= y;  // zero of the right shape
    Elem pw = x.unit_like();
    for (unsigned k = 1; k <= x.order(); ++k) {
        pw *= y;
        if (pw.is_zero()) break;
        acc += pw * GaussianRational(Rational(k % 2 == 1 ? 1 : -1, k));
    }
    return acc;
}

// Neumann-series inverse of 1 + y with y of positive grade:
// (1 + y)^-1 = sum_k (-y)^k, terminating at the truncation order.
template <typename Elem>
Elem invert(const Elem& x) {
    const Elem g0 = x.grade0();
    if (!(g0 == x.unit_like()))
        throw std::domain_error("invert: argument grade-0 part is not the unit (" + g0.str() + ")");
    const Elem y = x.unit_like() - x;  // note: (1 - y)^-1 = sum y^k
    Elem acc = x.unit_like();
    Elem pw = x.unit_like();
    for (unsigned k = 1; k <= x.order(); ++k) {
        pw *= y;
        if (pw.is_zero()) break;
        acc += pw;
    }
    return acc;
}

}  // namespace jtwist
