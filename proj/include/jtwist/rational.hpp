#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jtwist {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar; cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant the rest of the
// library relies on.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace detail {

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace detail

// Accepts "p", "p/q" (q > 0) and plain decimals like "0.25", with an optional
// leading sign.  Anything else is rejected.
inline Rational parse_rational(const std::string& text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("parse_rational: malformed literal \"" + text + "\"");
    };
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = (s[0] == '-');
        s.erase(0, 1);
    }
    if (s.empty()) return fail();

    Rational value;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
        Int q(den);
        if (q == 0) return fail();
        value = Rational(Int(num), q);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !detail::all_digits(whole)) ||
            (!frac.empty() && !detail::all_digits(frac)))
            return fail();
        Int scale = 1;
        for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
        value = Rational(Int(whole.empty() ? "0" : whole) * scale + Int(frac.empty() ? "0" : frac), scale);
    } else {
        if (!detail::all_digits(s)) return fail();
        value = Rational(Int(s));
    }
    return negative ? -value : value;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace jtwist
