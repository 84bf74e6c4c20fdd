#pragma once

#include "borel.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

namespace jtwist {

template <std::size_t L>
struct TensorKeyLess {
    bool operator()(const std::array<Mono, L>& a, const std::array<Mono, L>& b) const {
        unsigned ga = 0, gb = 0;
        for (std::size_t i = 0; i < L; ++i) {
            ga += a[i].m;
            gb += b[i].m;
        }
        if (ga != gb) return ga < gb;
        MonoLess less;
        for (std::size_t i = 0; i < L; ++i) {
            if (less(a[i], b[i])) return true;
            if (less(b[i], a[i])) return false;
        }
        return false;
    }
};

// Element of the L-fold tensor power of the truncated enveloping algebra.
// The deformation grade of a term is the total A-degree across all legs and
// is what the truncation order bounds; leg products multiply independently.
template <std::size_t L>
class TensorElement {
    static_assert(L == 2 || L == 3, "tensor legs: only squares and cubes are needed");

  public:
    using Key = std::array<Mono, L>;

    explicit TensorElement(unsigned order) : order_(order) {}

    static TensorElement unit(unsigned order) {
        TensorElement t(order);
        t.add_term(Key{}, GaussianRational(1));
        return t;
    }

    unsigned order() const { return order_; }
    TensorElement unit_like() const { return unit(order_); }
    const std::map<Key, GaussianRational, TensorKeyLess<L>>& terms() const { return terms_; }

    static unsigned grade(const Key& key) {
        unsigned g = 0;
        for (const auto& mono : key) g += mono.m;
        return g;
    }

    void add_term(const Key& key, const GaussianRational& c) {
        if (grade(key) > order_ || c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }

    TensorElement grade_part(unsigned g) const {
        TensorElement r(order_);
        for (const auto& [key, c] : terms_)
            if (grade(key) == g) r.add_term(key, c);
        return r;
    }
    TensorElement grade0() const { return grade_part(0); }

    TensorElement operator-() const {
        TensorElement r(order_);
        for (const auto& [key, c] : terms_) r.add_term(key, -c);
        return r;
    }
    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        check_orders(a, b, "add");
        TensorElement r = a;
        for (const auto& [key, c] : b.terms_) r.add_term(key, c);
        return r;
    }
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) { return a + (-b); }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        check_orders(a, b, "mul");
        TensorElement r(a.order_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                if (grade(ka) + grade(kb) > a.order_) continue;
                std::array<std::vector<std::pair<Mono, GaussianRational>>, L> legs;
                for (std::size_t i = 0; i < L; ++i) legs[i] = mono_mul(ka[i], kb[i]);
                // expand the per-leg sums
                Key key{};
                GaussianRational base = ca * cb;
                expand_legs(r, legs, 0, key, base);
            }
        }
        return r;
    }
    friend TensorElement operator*(const TensorElement& a, const GaussianRational& s) {
        TensorElement r(a.order_);
        for (const auto& [key, c] : a.terms_) r.add_term(key, c * s);
        return r;
    }
    friend TensorElement operator*(const GaussianRational& s, const TensorElement& a) { return a * s; }

    TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }
    TensorElement& operator-=(const TensorElement& o) { return *this = *this - o; }
    TensorElement& operator*=(const TensorElement& o) { return *this = *this * o; }

    bool operator==(const TensorElement& o) const { return order_ == o.order_ && terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    std::string str() const {
        std::string out;
        for (const auto& [key, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < L; ++i) {
                if (i) mono += "⊗";  // ⊗
                mono += key[i].str();
            }
            const bool all_units = grade(key) == 0 && mono == unit_mono_string();
            append_term(out, c, all_units ? "" : mono);
        }
        return out.empty() ? "0" : out;
    }

  private:
    static std::string unit_mono_string() {
        std::string s = "1";
        for (std::size_t i = 1; i < L; ++i) s += "⊗1";
        return s;
    }
    static void expand_legs(TensorElement& out, const std::array<std::vector<std::pair<Mono, GaussianRational>>, L>& legs,
                            std::size_t i, Key& key, const GaussianRational& coef) {
        if (i == L) {
            out.add_term(key, coef);
            return;
        }
        for (const auto& [mono, scalar] : legs[i]) {
            key[i] = mono;
            expand_legs(out, legs, i + 1, key, coef * scalar);
        }
    }
    static void check_orders(const TensorElement& a, const TensorElement& b, const char* op) {
        if (a.order_ != b.order_)
            throw std::domain_error(std::string("TensorElement::") + op + ": truncation order mismatch (" +
                                    std::to_string(a.order_) + " vs " + std::to_string(b.order_) + ")");
    }

    unsigned order_;
    std::map<Key, GaussianRational, TensorKeyLess<L>> terms_;
};

using Tensor2 = TensorElement<2>;
using Tensor3 = TensorElement<3>;

template <std::size_t L>
inline std::string to_string(const TensorElement<L>& t) {
    return t.str();
}

// x ⊗ y as a pure tensor.
inline Tensor2 outer(const BorelElement& x, const BorelElement& y) {
    if (x.order() != y.order()) throw std::domain_error("outer: truncation order mismatch");
    Tensor2 r(x.order());
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) r.add_term({mx, my}, cx * cy);
    return r;
}

// Leg transposition τ(x ⊗ y) = y ⊗ x.
inline Tensor2 flip(const Tensor2& t) {
    Tensor2 r(t.order());
    for (const auto& [key, c] : t.terms()) r.add_term({key[1], key[0]}, c);
    return r;
}

// Undeformed coproduct: all three generators are primitive,
// Δ0(g) = g ⊗ 1 + 1 ⊗ g, extended as an algebra homomorphism.
inline Tensor2 coproduct0(const BorelElement& x) {
    const unsigned N = x.order();
    const auto primitive = [&](const Mono& g) {
        Tensor2 t(N);
        t.add_term({g, Mono{}}, GaussianRational(1));
        t.add_term({Mono{}, g}, GaussianRational(1));
        return t;
    };
    Tensor2 r(N);
    for (const auto& [mono, c] : x.terms()) {
        Tensor2 acc = Tensor2::unit(N);
        for (unsigned k = 0; k < mono.m; ++k) acc *= primitive(Mono{1, 0, 0});
        for (unsigned k = 0; k < mono.s; ++k) acc *= primitive(Mono{0, 1, 0});
        for (unsigned k = 0; k < mono.n; ++k) acc *= primitive(Mono{0, 0, 1});
        r += acc * c;
    }
    return r;
}

// F ⊗ 1 and 1 ⊗ F as elements of the tensor cube.
inline Tensor3 extend_right(const Tensor2& t) {
    Tensor3 r(t.order());
    for (const auto& [key, c] : t.terms()) r.add_term({key[0], key[1], Mono{}}, c);
    return r;
}
inline Tensor3 extend_left(const Tensor2& t) {
    Tensor3 r(t.order());
    for (const auto& [key, c] : t.terms()) r.add_term({Mono{}, key[0], key[1]}, c);
    return r;
}

// (Δ0 ⊗ id) and (id ⊗ Δ0) applied to a tensor square.
inline Tensor3 coproduct0_first(const Tensor2& t) {
    Tensor3 r(t.order());
    for (const auto& [key, c] : t.terms()) {
        const Tensor2 split = coproduct0(BorelElement::monomial(t.order(), key[0], GaussianRational(1)));
        for (const auto& [skey, sc] : split.terms()) r.add_term({skey[0], skey[1], key[1]}, c * sc);
    }
    return r;
}
inline Tensor3 coproduct0_second(const Tensor2& t) {
    Tensor3 r(t.order());
    for (const auto& [key, c] : t.terms()) {
        const Tensor2 split = coproduct0(BorelElement::monomial(t.order(), key[1], GaussianRational(1)));
        for (const auto& [skey, sc] : split.terms()) r.add_term({key[0], skey[0], skey[1]}, c * sc);
    }
    return r;
}

// (ε ⊗ id) and (id ⊗ ε): only terms whose stripped leg is the unit survive.
inline BorelElement counit_first(const Tensor2& t) {
    BorelElement r(t.order());
    for (const auto& [key, c] : t.terms())
        if (key[0].is_unit()) r.add_term(key[1], c);
    return r;
}
inline BorelElement counit_second(const Tensor2& t) {
    BorelElement r(t.order());
    for (const auto& [key, c] : t.terms())
        if (key[1].is_unit()) r.add_term(key[0], c);
    return r;
}

// μ ∘ (f ⊗ id): maps the first leg monomial through f (a Mono → BorelElement
// function, e.g. an antipode) and multiplies with the second leg.
template <typename F>
inline BorelElement multiply_first_mapped(const Tensor2& t, F&& map_first) {
    BorelElement r(t.order());
    for (const auto& [key, c] : t.terms()) {
        const BorelElement left = map_first(key[0]);
        r += (left * BorelElement::monomial(t.order(), key[1], GaussianRational(1))) * c;
    }
    return r;
}

// μ ∘ (id ⊗ f): maps the second leg monomial through f and multiplies the
// legs in tensor order (first leg on the left).
template <typename F>
inline BorelElement multiply_second_mapped(const Tensor2& t, F&& map_second) {
    BorelElement r(t.order());
    for (const auto& [key, c] : t.terms()) {
        const BorelElement right = map_second(key[1]);
        r += (BorelElement::monomial(t.order(), key[0], GaussianRational(1)) * right) * c;
    }
    return r;
}

// Multiplication map μ: x ⊗ y ↦ x·y.
inline BorelElement multiply_legs(const Tensor2& t) {
    BorelElement r(t.order());
    for (const auto& [key, c] : t.terms()) {
        if (key[0].m + key[1].m > t.order()) continue;
        for (const auto& [mono, scalar] : mono_mul(key[0], key[1])) r.add_term(mono, c * scalar);
    }
    return r;
}

}  // namespace jtwist
