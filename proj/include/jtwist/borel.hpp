#pragma once

#include "gaussian.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace jtwist {

namespace detail {

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e--) r *= base;
    return r;
}

}  // namespace detail

// PBW monomial A^m E^s D^n of the solvable algebra
//   [A, D] = A,   [E, D] = E,   [A, E] = 0.
// A carries deformation grade 1; E and D carry grade 0.
struct Mono {
    unsigned m = 0, s = 0, n = 0;

    bool is_unit() const { return m == 0 && s == 0 && n == 0; }
    unsigned total() const { return m + s + n; }

    friend bool operator==(const Mono& a, const Mono& b) { return a.m == b.m && a.s == b.s && a.n == b.n; }

    std::string str() const {
        if (is_unit()) return "1";
        std::string out;
        const auto put = [&](const char* g, unsigned e) {
            if (e == 0) return;
            if (!out.empty()) out += " ";
            out += g;
            if (e > 1) out += "^" + std::to_string(e);
        };
        put("A", m);
        put("E", s);
        put("D", n);
        return out;
    }
};

// Graded-lex order: total degree first, then (m, s, n) lexicographically.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        return std::make_tuple(a.total(), a.m, a.s, a.n) < std::make_tuple(b.total(), b.m, b.s, b.n);
    }
};

// Normal-ordered product of two PBW monomials.  The only nontrivial move is
// pulling D-powers through A- and E-powers:
//   D^b A^c E^f = A^c E^f (D - c - f)^b,
// which follows from D A = A (D - 1) and D E = E (D - 1) by induction.
inline std::vector<std::pair<Mono, GaussianRational>> mono_mul(const Mono& a, const Mono& b) {
    std::vector<std::pair<Mono, GaussianRational>> out;
    const unsigned shift = b.m + b.s;
    out.reserve(a.n + 1);
    for (unsigned j = 0; j <= a.n; ++j) {
        const Int scalar = detail::binomial(a.n, j) * detail::int_pow(Int(-static_cast<long>(shift)), a.n - j);
        if (scalar == 0) continue;
        out.push_back({Mono{a.m + b.m, a.s + b.s, j + b.n}, GaussianRational(Rational(scalar))});
    }
    return out;
}

// Element of the enveloping algebra truncated in A-degree: terms with
// A-degree beyond the order are discarded, i.e. we compute in U/(A^(N+1)).
class BorelElement {
  public:
    explicit BorelElement(unsigned order) : order_(order) {}

    static BorelElement unit(unsigned order) { return monomial(order, Mono{}, GaussianRational(1)); }
    static BorelElement gen_a(unsigned order) { return monomial(order, Mono{1, 0, 0}, GaussianRational(1)); }
    static BorelElement gen_e(unsigned order) { return monomial(order, Mono{0, 1, 0}, GaussianRational(1)); }
    static BorelElement gen_d(unsigned order) { return monomial(order, Mono{0, 0, 1}, GaussianRational(1)); }
    static BorelElement monomial(unsigned order, const Mono& mono, const GaussianRational& c) {
        BorelElement x(order);
        x.add_term(mono, c);
        return x;
    }

    unsigned order() const { return order_; }
    BorelElement unit_like() const { return unit(order_); }
    const std::map<Mono, GaussianRational, MonoLess>& terms() const { return terms_; }

    void add_term(const Mono& mono, const GaussianRational& c) {
        if (mono.m > order_ || c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(mono, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_unit() const { return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second.is_one(); }

    BorelElement grade_part(unsigned g) const {
        BorelElement r(order_);
        for (const auto& [mono, c] : terms_)
            if (mono.m == g) r.add_term(mono, c);
        return r;
    }
    BorelElement grade0() const { return grade_part(0); }

    BorelElement operator-() const {
        BorelElement r(order_);
        for (const auto& [mono, c] : terms_) r.add_term(mono, -c);
        return r;
    }
    friend BorelElement operator+(const BorelElement& a, const BorelElement& b) {
        check_orders(a, b, "add");
        BorelElement r = a;
        for (const auto& [mono, c] : b.terms_) r.add_term(mono, c);
        return r;
    }
    friend BorelElement operator-(const BorelElement& a, const BorelElement& b) { return a + (-b); }
    friend BorelElement operator*(const BorelElement& a, const BorelElement& b) {
        check_orders(a, b, "mul");
        BorelElement r(a.order_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.m + mb.m > a.order_) continue;
                const GaussianRational c = ca * cb;
                for (const auto& [mono, scalar] : mono_mul(ma, mb)) r.add_term(mono, c * scalar);
            }
        }
        return r;
    }
    friend BorelElement operator*(const BorelElement& a, const GaussianRational& s) {
        BorelElement r(a.order_);
        for (const auto& [mono, c] : a.terms_) r.add_term(mono, c * s);
        return r;
    }
    friend BorelElement operator*(const GaussianRational& s, const BorelElement& a) { return a * s; }

    BorelElement& operator+=(const BorelElement& o) { return *this = *this + o; }
    BorelElement& operator-=(const BorelElement& o) { return *this = *this - o; }
    BorelElement& operator*=(const BorelElement& o) { return *this = *this * o; }

    bool operator==(const BorelElement& o) const { return order_ == o.order_ && terms_ == o.terms_; }
    bool operator!=(const BorelElement& o) const { return !(*this == o); }

    // Counit: the generators are primitive, so only the unit monomial survives.
    GaussianRational counit() const {
        auto it = terms_.find(Mono{});
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    // Undeformed antipode, the antihomomorphism with S0(A) = -A, S0(E) = -E,
    // S0(D) = -D:  S0(A^m E^s D^n) = (-1)^(m+s+n) D^n E^s A^m, normal-ordered.
    BorelElement antipode0() const {
        BorelElement r(order_);
        for (const auto& [mono, c] : terms_) {
            const GaussianRational sign((mono.total() % 2 == 0) ? Rational(1) : Rational(-1));
            // D^n A^m E^s = A^m E^s (D - m - s)^n
            const unsigned shift = mono.m + mono.s;
            for (unsigned j = 0; j <= mono.n; ++j) {
                const Int scalar =
                    detail::binomial(mono.n, j) * detail::int_pow(Int(-static_cast<long>(shift)), mono.n - j);
                if (scalar == 0) continue;
                r.add_term(Mono{mono.m, mono.s, j}, c * sign * GaussianRational(Rational(scalar)));
            }
        }
        return r;
    }

    std::string str() const {
        std::string out;
        for (const auto& [mono, c] : terms_) append_term(out, c, mono.is_unit() ? "" : mono.str());
        return out.empty() ? "0" : out;
    }

  private:
    static void check_orders(const BorelElement& a, const BorelElement& b, const char* op) {
        if (a.order_ != b.order_)
            throw std::domain_error(std::string("BorelElement::") + op + ": truncation order mismatch (" +
                                    std::to_string(a.order_) + " vs " + std::to_string(b.order_) + ")");
    }

    unsigned order_;
    std::map<Mono, GaussianRational, MonoLess> terms_;
};

inline std::string to_string(const BorelElement& x) { return x.str(); }

inline BorelElement commutator(const BorelElement& a, const BorelElement& b) { return a * b - b * a; }

}  // namespace jtwist
