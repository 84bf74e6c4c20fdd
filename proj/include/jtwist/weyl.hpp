#pragma once

#include "trunc_poly.hpp"
#include "twist.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jtwist {

// Exponent vectors for the coordinate and momentum blocks of a Weyl monomial.
using MultiIndex = std::vector<unsigned>;

namespace detail {

inline unsigned multi_total(const MultiIndex& m) {
    unsigned t = 0;
    for (unsigned e : m) t += e;
    return t;
}

inline MultiIndex multi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// γ(γ-1)⋯(γ-λ+1), the count of ordered ways λ derivatives hit x^γ.
inline Int falling_factorial(unsigned g, unsigned l) {
    Int r = 1;
    for (unsigned j = 0; j < l; ++j) r *= Int(g - j);
    return r;
}

inline GaussianRational minus_i_power(unsigned k) {
    switch (k % 4) {
        case 0: return GaussianRational(1);
        case 1: return -GaussianRational::i();
        case 2: return GaussianRational(-1);
        default: return GaussianRational::i();
    }
}

inline std::string multi_str(const MultiIndex& m, char letter) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += letter;
        out += std::to_string(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace detail

// One fixed deformation direction: a^μ = h·v^μ with v an exact rational
// vector of dimension ≥ 2 (so a·p and the individual p_μ stay independent).
struct RealizationSpec {
    RealizationSpec(Rational u_, std::vector<Rational> v_) : u(std::move(u_)), v(std::move(v_)) {
        if (v.size() < 2)
            throw std::invalid_argument("RealizationSpec: dimension must be at least 2");
        dim = static_cast<unsigned>(v.size());
    }
    Rational u;
    std::vector<Rational> v;
    unsigned dim;
};

// Element of the n-dimensional Weyl algebra with coefficients polynomial in
// the deformation scale h (truncated): a finite sum of normal-ordered
// monomials  c(h) · x^α p^β  with all coordinates left of all momenta.
// The product pushes momentum blocks past coordinate blocks with
// [p_μ, x^ν] = −i δ_μ^ν.
class WeylElement {
  public:
    using Key = std::pair<MultiIndex, MultiIndex>;

    WeylElement(unsigned dim, unsigned order) : dim_(dim), order_(order) {}

    static WeylElement unit(unsigned dim, unsigned order) {
        WeylElement r(dim, order);
        r.add_term(MultiIndex(dim), MultiIndex(dim), TruncPoly::constant(order, GaussianRational(1)));
        return r;
    }
    static WeylElement coordinate(unsigned dim, unsigned order, unsigned mu) {
        WeylElement r(dim, order);
        MultiIndex xs(dim);
        xs.at(mu) = 1;
        r.add_term(xs, MultiIndex(dim), TruncPoly::constant(order, GaussianRational(1)));
        return r;
    }
    static WeylElement momentum(unsigned dim, unsigned order, unsigned mu) {
        WeylElement r(dim, order);
        MultiIndex ps(dim);
        ps.at(mu) = 1;
        r.add_term(MultiIndex(dim), ps, TruncPoly::constant(order, GaussianRational(1)));
        return r;
    }
    static WeylElement scalar(unsigned dim, const TruncPoly& c) {
        WeylElement r(dim, c.order());
        r.add_term(MultiIndex(dim), MultiIndex(dim), c);
        return r;
    }

    unsigned dim() const { return dim_; }
    unsigned order() const { return order_; }
    const std::map<Key, TruncPoly>& terms() const { return terms_; }

    void add_term(const MultiIndex& xs, const MultiIndex& ps, const TruncPoly& c) {
        if (xs.size() != dim_ || ps.size() != dim_)
            throw std::domain_error("WeylElement: multi-index dimension mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find({xs, ps});
        if (it == terms_.end()) {
            terms_.emplace(Key{xs, ps}, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    bool is_zero() const { return terms_.empty(); }

    // True when no coordinate factor appears in any term.
    bool is_momentum_polynomial() const {
        for (const auto& [key, c] : terms_)
            if (detail::multi_total(key.first) != 0) return false;
        return true;
    }

    // Lowest h-degree present (order + 1 for the zero element); products can
    // only raise it, which the chain expansions use for pruning.
    unsigned min_h_degree() const {
        unsigned best = order_ + 1;
        for (const auto& [key, c] : terms_)
            for (unsigned g = 0; g < best; ++g)
                if (!c[g].is_zero()) {
                    best = g;
                    break;
                }
        return best;
    }

    WeylElement operator-() const {
        WeylElement r(dim_, order_);
        for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
        return r;
    }
    friend WeylElement operator+(const WeylElement& a, const WeylElement& b) {
        check_compatible(a, b, "add");
        WeylElement r = a;
        for (const auto& [key, c] : b.terms_) r.add_term(key.first, key.second, c);
        return r;
    }
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + (-b); }

    friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
        check_compatible(a, b, "mul");
        const unsigned dim = a.dim_;
        WeylElement r(dim, a.order_);
        for (const auto& [ka, ca] : a.terms_) {
            const MultiIndex& beta = ka.second;  // momentum block to push right
            for (const auto& [kb, cb] : b.terms_) {
                const MultiIndex& gamma = kb.first;  // coordinate block in the way
                const TruncPoly cab = ca * cb;
                // Iterate every componentwise contraction λ ≤ min(β, γ).
                MultiIndex lambda(dim);
                for (;;) {
                    Int ways = 1;
                    for (unsigned i = 0; i < dim; ++i)
                        ways *= detail::binomial(beta[i], lambda[i]) *
                                detail::falling_factorial(gamma[i], lambda[i]);
                    const unsigned total = detail::multi_total(lambda);
                    GaussianRational scale = detail::minus_i_power(total);
                    scale = scale * GaussianRational(Rational(ways));
                    MultiIndex xs(dim), ps(dim);
                    for (unsigned i = 0; i < dim; ++i) {
                        xs[i] = ka.first[i] + gamma[i] - lambda[i];
                        ps[i] = beta[i] - lambda[i] + kb.second[i];
                    }
                    r.add_term(xs, ps, cab * scale);
                    // Odometer step over 0 ≤ λ_i ≤ min(β_i, γ_i).
                    unsigned i = 0;
                    for (; i < dim; ++i) {
                        if (lambda[i] < std::min(beta[i], gamma[i])) {
                            ++lambda[i];
                            break;
                        }
                        lambda[i] = 0;
                    }
                    if (i == dim) break;
                }
            }
        }
        return r;
    }

    friend WeylElement operator*(const WeylElement& a, const TruncPoly& s) {
        WeylElement r(a.dim_, a.order_);
        for (const auto& [key, c] : a.terms_) r.add_term(key.first, key.second, c * s);
        return r;
    }
    friend WeylElement operator*(const WeylElement& a, const GaussianRational& s) {
        return a * TruncPoly::constant(a.order_, s);
    }

    WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }
    WeylElement& operator-=(const WeylElement& o) { return *this = *this - o; }
    WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }

    bool operator==(const WeylElement& o) const {
        return dim_ == o.dim_ && order_ == o.order_ && terms_ == o.terms_;
    }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [key, c] : terms_) {
            std::string mono = detail::multi_str(key.first, 'x');
            const std::string ps = detail::multi_str(key.second, 'p');
            if (!ps.empty()) mono += (mono.empty() ? "" : " ") + ps;
            if (c.is_constant()) {
                append_term(out, c[0], mono);
            } else {
                if (!out.empty()) out += " + ";
                out += '(' + c.str() + ')';
                if (!mono.empty()) out += ' ' + mono;
            }
        }
        return out;
    }

  private:
    static void check_compatible(const WeylElement& a, const WeylElement& b, const char* op) {
        if (a.dim_ != b.dim_)
            throw std::domain_error(std::string("WeylElement::") + op + ": dimension mismatch (" +
                                    std::to_string(a.dim_) + " vs " + std::to_string(b.dim_) + ")");
        if (a.order_ != b.order_)
            throw std::domain_error(std::string("WeylElement::") + op +
                                    ": truncation order mismatch (" + std::to_string(a.order_) +
                                    " vs " + std::to_string(b.order_) + ")");
    }

    unsigned dim_;
    unsigned order_;
    std::map<Key, TruncPoly> terms_;
};

inline WeylElement commutator(const WeylElement& a, const WeylElement& b) {
    return a * b - b * a;
}

inline WeylElement weyl_pow(const WeylElement& base, unsigned n) {
    WeylElement acc = WeylElement::unit(base.dim(), base.order());
    for (unsigned k = 0; k < n; ++k) acc *= base;
    return acc;
}

// ---------------------------------------------------------------------------
// Physics embeddings: D = i x·p, A = −a·p with a = h·v, and momentum
// combinations w·p used as images of the third abstract generator.

inline WeylElement realize_dilation(unsigned dim, unsigned order) {
    WeylElement r(dim, order);
    for (unsigned mu = 0; mu < dim; ++mu)
        r += WeylElement::coordinate(dim, order, mu) * WeylElement::momentum(dim, order, mu) *
             GaussianRational::i();
    return r;
}

inline WeylElement momentum_along(const std::vector<Rational>& w, unsigned order) {
    const unsigned dim = static_cast<unsigned>(w.size());
    WeylElement r(dim, order);
    for (unsigned mu = 0; mu < dim; ++mu)
        r += WeylElement::momentum(dim, order, mu) * GaussianRational(w[mu]);
    return r;
}

inline WeylElement realize_a(const RealizationSpec& s, unsigned order) {
    return momentum_along(s.v, order) * (-TruncPoly::h(order));
}

// Homomorphic image of an abstract PBW monomial A^m E^s D^n; the caller
// chooses the momentum combination standing in for E.
inline WeylElement realize_monomial(const Mono& mono, const RealizationSpec& s, unsigned order,
                                    const WeylElement& e_image) {
    WeylElement acc = weyl_pow(realize_a(s, order), mono.m);
    acc *= weyl_pow(e_image, mono.s);
    acc *= weyl_pow(realize_dilation(s.dim, order), mono.n);
    return acc;
}

// ---------------------------------------------------------------------------
// Closed-form noncommutative coordinates.

inline std::vector<WeylElement> realize_xhat(const RealizationSpec& s, unsigned order) {
    const WeylElement D = realize_dilation(s.dim, order);
    const WeylElement A = realize_a(s, order);
    const WeylElement one = WeylElement::unit(s.dim, order);
    const WeylElement right = one - A * GaussianRational{s.u};
    std::vector<WeylElement> out;
    for (unsigned mu = 0; mu < s.dim; ++mu) {
        const TruncPoly ia_mu =
            TruncPoly::h(order) *
            (GaussianRational::i() * GaussianRational((Rational(1) - s.u) * s.v[mu]));
        out.push_back((WeylElement::coordinate(s.dim, order, mu) + D * ia_mu) * right);
    }
    return out;
}

inline std::vector<WeylElement> realize_yhat(const RealizationSpec& s, unsigned order) {
    const WeylElement D = realize_dilation(s.dim, order);
    const WeylElement A = realize_a(s, order);
    const WeylElement one = WeylElement::unit(s.dim, order);
    const WeylElement right = one + A * GaussianRational{Rational(1) - s.u};
    std::vector<WeylElement> out;
    for (unsigned mu = 0; mu < s.dim; ++mu) {
        const TruncPoly ia_mu =
            TruncPoly::h(order) * (-GaussianRational::i() * GaussianRational(s.u * s.v[mu]));
        out.push_back((WeylElement::coordinate(s.dim, order, mu) + D * ia_mu) * right);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reconstruction of x̂ from the inverse twist:  x̂^μ = m[F⁻¹(▷⊗1)(x^μ⊗1)].
// The first tensor leg acts on x^μ (D▷x^μ = x^μ, A▷x^μ = i a^μ, and A² and
// higher annihilate it); the surviving second legs are realized as Weyl
// operators and multiplied on.

inline std::vector<WeylElement> extract_xhat_from_twist(const TwistFamily& tf,
                                                        const RealizationSpec& s) {
    const unsigned N = tf.order();
    if (N < 2)
        throw std::invalid_argument(
            "extract_xhat_from_twist: truncation order must be at least 2");
    const WeylElement zero(s.dim, N);
    std::vector<WeylElement> out;
    for (unsigned mu = 0; mu < s.dim; ++mu) {
        WeylElement acc = zero;
        for (const auto& [key, c] : tf.twist_inverse().terms()) {
            const Mono& first = key[0];
            if (first.s != 0 || key[1].s != 0)
                throw std::logic_error(
                    "extract_xhat_from_twist: unexpected E factor in a twist leg");
            WeylElement hit = zero;
            if (first.m == 0) {
                hit = WeylElement::coordinate(s.dim, N, mu);
            } else if (first.m == 1) {
                hit = WeylElement::scalar(
                    s.dim, TruncPoly::h(N) * (GaussianRational::i() * GaussianRational(s.v[mu])));
            } else {
                continue;  // A^m ▷ x^μ = 0 for m ≥ 2
            }
            acc += hit * realize_monomial(key[1], s, N, zero) * c;
        }
        out.push_back(acc);
    }
    return out;
}

// Reconstruction of x̂ from the deformed coproduct:
//   x̂^μ = x^μ + i x^α m[(Δ−Δ0)p_α (▷⊗1)(x^μ⊗1)],
// with p_α ▷ x^μ = −i δ_α^μ.  The mirrored route (legs transposed) produces
// the dual coordinates ŷ instead.
inline std::vector<WeylElement> extract_xhat_from_coproduct(const RealizationSpec& s, unsigned N,
                                                            bool mirrored = false) {
    if (N < 2)
        throw std::invalid_argument(
            "extract_xhat_from_coproduct: truncation order must be at least 2");
    const BorelElement E = BorelElement::gen_e(N);
    Tensor2 delta = closed_coproduct_momentum(E, s.u, N) - coproduct0(E);
    if (mirrored) delta = flip(delta);
    const WeylElement zero(s.dim, N);
    std::vector<WeylElement> out;
    for (unsigned mu = 0; mu < s.dim; ++mu) {
        WeylElement acc = WeylElement::coordinate(s.dim, N, mu);
        for (unsigned alpha = 0; alpha < s.dim; ++alpha) {
            const WeylElement p_alpha = WeylElement::momentum(s.dim, N, alpha);
            const WeylElement x_alpha = WeylElement::coordinate(s.dim, N, alpha);
            for (const auto& [key, c] : delta.terms()) {
                const Mono& first = key[0];
                if (first.n != 0 || key[1].n != 0)
                    throw std::logic_error(
                        "extract_xhat_from_coproduct: unexpected D factor in a momentum coproduct");
                WeylElement hit = zero;
                if (first.m == 0 && first.s == 0) {
                    hit = WeylElement::coordinate(s.dim, N, mu);
                } else if (first.m == 1 && first.s == 0) {
                    hit = WeylElement::scalar(
                        s.dim,
                        TruncPoly::h(N) * (GaussianRational::i() * GaussianRational(s.v[mu])));
                } else if (first.m == 0 && first.s == 1) {
                    if (alpha != mu) continue;
                    hit = WeylElement::scalar(s.dim,
                                              TruncPoly::constant(N, -GaussianRational::i()));
                } else {
                    continue;  // any further momentum factor annihilates x^μ
                }
                acc += x_alpha * hit * realize_monomial(key[1], s, N, p_alpha) *
                       (c * GaussianRational::i());
            }
        }
        out.push_back(acc);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor square of the commutative momentum-polynomial algebra, used for the
// adjoint-action route to the coproduct.

class MomentumTensor {
  public:
    using Key = std::pair<MultiIndex, MultiIndex>;

    MomentumTensor(unsigned dim, unsigned order) : dim_(dim), order_(order) {}

    void add_term(const MultiIndex& left, const MultiIndex& right, const TruncPoly& c) {
        if (c.is_zero()) return;
        auto it = terms_.find({left, right});
        if (it == terms_.end()) {
            terms_.emplace(Key{left, right}, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    // Outer product of two momentum polynomials given as x-free Weyl elements.
    void accumulate_outer(const WeylElement& left, const WeylElement& right,
                          const GaussianRational& scale) {
        for (const auto& [kl, cl] : left.terms())
            for (const auto& [kr, cr] : right.terms())
                add_term(kl.second, kr.second, cl * cr * scale);
    }

    const std::map<Key, TruncPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned order() const { return order_; }

    // Keeps only the h^g component of every coefficient.
    MomentumTensor h_grade_part(unsigned g) const {
        MomentumTensor r(dim_, order_);
        for (const auto& [key, c] : terms_) {
            if (c[g].is_zero()) continue;
            TruncPoly mono(order_);
            mono.set(g, c[g]);
            r.add_term(key.first, key.second, mono);
        }
        return r;
    }

    MomentumTensor operator-() const {
        MomentumTensor r(dim_, order_);
        for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
        return r;
    }
    friend MomentumTensor operator-(const MomentumTensor& a, const MomentumTensor& b) {
        MomentumTensor r = a;
        for (const auto& [key, c] : b.terms_) r.add_term(key.first, key.second, -c);
        return r;
    }
    bool operator==(const MomentumTensor& o) const {
        return dim_ == o.dim_ && order_ == o.order_ && terms_ == o.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [key, c] : terms_) {
            const std::string l = detail::multi_str(key.first, 'p');
            const std::string r = detail::multi_str(key.second, 'p');
            std::string mono = (l.empty() ? "1" : l) + "⊗" + (r.empty() ? "1" : r);
            if (c.is_constant()) {
                append_term(out, c[0], mono);
            } else {
                if (!out.empty()) out += " + ";
                out += '(' + c.str() + ") " + mono;
            }
        }
        return out;
    }

  private:
    unsigned dim_;
    unsigned order_;
    std::map<Key, TruncPoly> terms_;
};

// Momentum-space inverse map as an operator-valued series:
//   K⁻¹_α(p) = p_α Σ_j c_j (a·p)^j,   c_j = ((−1)^j u^{j+1} + (1−u)^{j+1})/(j+1),
// the Taylor coefficients of log((1+uz)/(1−(1−u)z))/z.
inline WeylElement k_inverse_operator(const RealizationSpec& s, unsigned order, unsigned alpha) {
    const WeylElement adotp = momentum_along(s.v, order) * TruncPoly::h(order);
    WeylElement series(s.dim, order);
    Rational u_pow = s.u;                 // u^{j+1}
    Rational v_pow = Rational(1) - s.u;   // (1−u)^{j+1}
    WeylElement z_pow = WeylElement::unit(s.dim, order);
    for (unsigned j = 0; j <= order; ++j) {
        const Rational c_j = (((j % 2 == 0) ? u_pow : -u_pow) + v_pow) / Rational(j + 1);
        series += z_pow * GaussianRational(c_j);
        z_pow *= adotp;
        u_pow *= s.u;
        v_pow *= Rational(1) - s.u;
    }
    return WeylElement::momentum(s.dim, order, alpha) * series;
}

// Coproduct of p_μ from the adjoint-action exponential
//   Δp_μ = e^{i K⁻¹_α(p) ⊗ ad_{x̂^α}} (1 ⊗ p_μ),
// where ad acts from the right: ad_{x̂^α}(f) = [f, x̂^α].  Chains terminate
// because every step either consumes a momentum factor or raises the
// h-degree; the depth cap is a safety net for that argument.
inline MomentumTensor coproduct_from_adx(const RealizationSpec& s, unsigned N, unsigned mu) {
    if (N < 2)
        throw std::invalid_argument("coproduct_from_adx: truncation order must be at least 2");
    const std::vector<WeylElement> xhat = realize_xhat(s, N);
    std::vector<WeylElement> kinv;
    for (unsigned alpha = 0; alpha < s.dim; ++alpha)
        kinv.push_back(k_inverse_operator(s, N, alpha) * GaussianRational::i());

    MomentumTensor out(s.dim, N);
    const unsigned depth_cap = 3 * N + 4;
    Rational factorial = 1;

    struct Frame {
        WeylElement left, right;
    };
    std::vector<Frame> current{
        {WeylElement::unit(s.dim, N), WeylElement::momentum(s.dim, N, mu)}};
    for (unsigned depth = 0; !current.empty(); ++depth) {
        if (depth > depth_cap)
            throw std::logic_error("coproduct_from_adx: adjoint chain failed to terminate");
        if (depth > 0) factorial *= Rational(depth);
        const GaussianRational weight{Rational(1) / factorial};
        std::vector<Frame> next;
        for (const Frame& f : current) {
            out.accumulate_outer(f.left, f.right, weight);
            for (unsigned alpha = 0; alpha < s.dim; ++alpha) {
                WeylElement stepped = commutator(f.right, xhat[alpha]);
                if (stepped.is_zero()) continue;
                if (!stepped.is_momentum_polynomial())
                    throw std::logic_error(
                        "coproduct_from_adx: adjoint step left the momentum subalgebra");
                WeylElement grown = f.left * kinv[alpha];
                if (grown.is_zero()) continue;
                if (grown.min_h_degree() + stepped.min_h_degree() > N) continue;
                next.push_back({std::move(grown), std::move(stepped)});
            }
        }
        current = std::move(next);
    }
    return out;
}

// The closed-form coproduct of a single momentum component, pushed into the
// momentum-polynomial tensor square (abstract A ↦ −h v·p, E ↦ p_μ).
inline MomentumTensor closed_coproduct_momentum_tensor(const RealizationSpec& s, unsigned N,
                                                       unsigned mu) {
    const Tensor2 delta = closed_coproduct_momentum(BorelElement::gen_e(N), s.u, N);
    const WeylElement p_mu = WeylElement::momentum(s.dim, N, mu);
    MomentumTensor out(s.dim, N);
    for (const auto& [key, c] : delta.terms()) {
        if (key[0].n != 0 || key[1].n != 0)
            throw std::logic_error(
                "closed_coproduct_momentum_tensor: unexpected D factor in a momentum coproduct");
        const WeylElement left = realize_monomial(key[0], s, N, p_mu);
        const WeylElement right = realize_monomial(key[1], s, N, p_mu);
        out.accumulate_outer(left, right, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normal-ordered endpoint twists acting on plane waves.  At u = 0 the
// inverse twist is :exp(A⊗D): and at u = 1 it is :exp(−D⊗A):; acting on
// e^{ik·x} ⊗ e^{iq·x} and multiplying produces a single plane wave whose
// exponent this returns.  The parameter t ∈ {0, 1} selects which leg carries
// the coordinate factors in the fold (the two bookkeepings must agree).

inline std::vector<Rational> normal_ordered_inverse_twist_action(const std::vector<Rational>& a,
                                                                 const std::vector<Rational>& k,
                                                                 const std::vector<Rational>& q,
                                                                 const Rational& u, int t) {
    if (a.size() != k.size() || a.size() != q.size())
        throw std::invalid_argument("normal_ordered_inverse_twist_action: dimension mismatch");
    if (u != 0 && u != 1)
        throw std::domain_error(
            "normal_ordered_inverse_twist_action: closed normal-ordered forms exist only at the "
            "endpoints u = 0 and u = 1");
    if (t != 0 && t != 1)
        throw std::invalid_argument("normal_ordered_inverse_twist_action: t must be 0 or 1");

    const auto dot = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational r = 0;
        for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
        return r;
    };

    std::vector<Rational> exponent(a.size());
    if (u == 0) {
        // :e^{A⊗D}: — every A acts on the left wave by −(a·k).
        const Rational c = -dot(a, k);
        if (t == 0) {
            // Coordinate factors stay on the right leg: :e^{cD}: ▷ e^{iq·x}
            // rescales the wave, e^{i(1+c)q·x}.
            for (std::size_t i = 0; i < a.size(); ++i)
                exponent[i] = k[i] + (Rational(1) + c) * q[i];
        } else {
            // Coordinate factors are carried by the left leg; each right-leg
            // momentum contributes its eigenvalue q_α to the merged exponent.
            for (std::size_t i = 0; i < a.size(); ++i) exponent[i] = k[i] + q[i] + c * q[i];
        }
    } else {
        // :e^{−D⊗A}: — every A acts on the right wave by −(a·q), so each
        // factor weighs (−1)·(−(a·q)) = a·q.
        const Rational c = dot(a, q);
        if (t == 1) {
            for (std::size_t i = 0; i < a.size(); ++i)
                exponent[i] = (Rational(1) + c) * k[i] + q[i];
        } else {
            for (std::size_t i = 0; i < a.size(); ++i) exponent[i] = k[i] + q[i] + c * k[i];
        }
    }
    return exponent;
}

// ---------------------------------------------------------------------------
// Verification bodies.  The labels carry the (dim, v) context so a driver
// can fold several specs into one report.

inline std::string spec_label(const RealizationSpec& s) {
    std::string out = "dim=" + std::to_string(s.dim) + " v=(";
    for (unsigned i = 0; i < s.dim; ++i) {
        if (i) out += ',';
        out += to_string(s.v[i]);
    }
    return out + ")";
}

// κ-Minkowski relations, their duals, mixing, and the momentum cross
// relation, as exact polynomial identities.
inline void check_kappa_minkowski(const RealizationSpec& s, unsigned order, ResidualLog& log) {
    const std::vector<WeylElement> xh = realize_xhat(s, order);
    const std::vector<WeylElement> yh = realize_yhat(s, order);
    const WeylElement A = realize_a(s, order);
    const WeylElement one = WeylElement::unit(s.dim, order);
    const std::string ctx = spec_label(s) + " ";
    const auto ia = [&](unsigned mu) {
        return TruncPoly::h(order) * (GaussianRational::i() * GaussianRational(s.v[mu]));
    };

    for (unsigned mu = 0; mu < s.dim; ++mu) {
        for (unsigned nu = 0; nu < s.dim; ++nu) {
            if (mu < nu) {
                log.expect_zero(ctx + "[x̂" + std::to_string(mu) + ",x̂" + std::to_string(nu) + "]",
                                commutator(xh[mu], xh[nu]) - (xh[nu] * ia(mu) - xh[mu] * ia(nu)));
                log.expect_zero(ctx + "[ŷ" + std::to_string(mu) + ",ŷ" + std::to_string(nu) + "]",
                                commutator(yh[mu], yh[nu]) + (yh[nu] * ia(mu) - yh[mu] * ia(nu)));
            }
            if (mu == nu)
                log.expect_zero(ctx + "[x̂" + std::to_string(mu) + ",x̂" + std::to_string(mu) + "]",
                                commutator(xh[mu], xh[mu]));
            log.expect_zero(ctx + "[x̂" + std::to_string(mu) + ",ŷ" + std::to_string(nu) + "]",
                            commutator(xh[mu], yh[nu]));
            const WeylElement p_mu = WeylElement::momentum(s.dim, order, mu);
            const WeylElement expected =
                (one * TruncPoly::constant(order, mu == nu ? -GaussianRational::i()
                                                           : GaussianRational(0)) +
                 p_mu * (TruncPoly::h(order) *
                         (GaussianRational::i() *
                          GaussianRational((Rational(1) - s.u) * s.v[nu])))) *
                (one - A * GaussianRational{s.u});
            log.expect_zero(ctx + "[p" + std::to_string(mu) + ",x̂" + std::to_string(nu) + "]",
                            commutator(p_mu, xh[nu]) - expected);
        }
    }
}

// Route agreement: twist extraction, coproduct extraction, the mirrored
// (dual) route, and the x^γ φ_γ^μ(p) form must all reproduce the closed
// realizations.
inline void check_realization_routes(const TwistFamily& tf, const RealizationSpec& s,
                                     ResidualLog& log) {
    if (tf.u() != s.u)
        throw std::invalid_argument(
            "check_realization_routes: twist and realization use different parameters");
    const unsigned N = tf.order();
    const std::vector<WeylElement> xh = realize_xhat(s, N);
    const std::vector<WeylElement> yh = realize_yhat(s, N);
    const std::vector<WeylElement> from_twist = extract_xhat_from_twist(tf, s);
    const std::vector<WeylElement> from_cop = extract_xhat_from_coproduct(s, N);
    const std::vector<WeylElement> from_cop_mirror = extract_xhat_from_coproduct(s, N, true);
    const std::string ctx = spec_label(s) + " ";

    // x^γ φ_γ^μ(p) with φ_γ^μ(p) = (δ_γ^μ − (1−u) a^μ p_γ)(1 + u (a·p)).
    const WeylElement adotp = momentum_along(s.v, N) * TruncPoly::h(N);
    const WeylElement phi_right =
        WeylElement::unit(s.dim, N) + adotp * GaussianRational{s.u};
    for (unsigned mu = 0; mu < s.dim; ++mu) {
        WeylElement phi_form(s.dim, N);
        for (unsigned gamma = 0; gamma < s.dim; ++gamma) {
            WeylElement phi = WeylElement::momentum(s.dim, N, gamma) *
                              (TruncPoly::h(N) * (-GaussianRational((Rational(1) - s.u) * s.v[mu])));
            if (gamma == mu) phi += WeylElement::unit(s.dim, N);
            phi_form += WeylElement::coordinate(s.dim, N, gamma) * (phi * phi_right);
        }
        const std::string mus = std::to_string(mu);
        log.expect_zero(ctx + "twist route x̂" + mus, from_twist[mu] - xh[mu]);
        log.expect_zero(ctx + "coproduct route x̂" + mus, from_cop[mu] - xh[mu]);
        log.expect_zero(ctx + "mirrored coproduct route ŷ" + mus, from_cop_mirror[mu] - yh[mu]);
        log.expect_zero(ctx + "coordinate-function form x̂" + mus, phi_form - xh[mu]);
    }

    // Endpoint closed forms.
    const WeylElement D = realize_dilation(s.dim, N);
    const WeylElement A = realize_a(s, N);
    const WeylElement one = WeylElement::unit(s.dim, N);
    for (unsigned mu = 0; mu < s.dim; ++mu) {
        const WeylElement x_mu = WeylElement::coordinate(s.dim, N, mu);
        const TruncPoly ia_mu = TruncPoly::h(N) * (GaussianRational::i() * GaussianRational(s.v[mu]));
        const std::string mus = std::to_string(mu);
        if (s.u == 0) {
            log.expect_zero(ctx + "u=0: x̂" + mus + " - (x + iaD)", xh[mu] - (x_mu + D * ia_mu));
            log.expect_zero(ctx + "u=0: ŷ" + mus + " - x(1+A)", yh[mu] - x_mu * (one + A));
        }
        if (s.u == 1) {
            log.expect_zero(ctx + "u=1: x̂" + mus + " - x(1-A)", xh[mu] - x_mu * (one - A));
            log.expect_zero(ctx + "u=1: ŷ" + mus + " - (x - iaD)", yh[mu] - (x_mu - D * ia_mu));
        }
    }
}

inline void check_adx_coproduct(const RealizationSpec& s, unsigned N, ResidualLog& log) {
    for (unsigned mu = 0; mu < s.dim; ++mu) {
        const MomentumTensor via_adx = coproduct_from_adx(s, N, mu);
        const MomentumTensor closed = closed_coproduct_momentum_tensor(s, N, mu);
        log.expect_zero(spec_label(s) + " adjoint-action Δp" + std::to_string(mu),
                        via_adx - closed);
    }
}

inline VerificationReport verify_kappa_minkowski(const RealizationSpec& s, unsigned order) {
    return run_check("kappa-minkowski", s.u, order,
                     [&](ResidualLog& log) { check_kappa_minkowski(s, order, log); });
}

inline VerificationReport verify_realization(const TwistFamily& tf, const RealizationSpec& s) {
    return run_check("realization", s.u, tf.order(),
                     [&](ResidualLog& log) { check_realization_routes(tf, s, log); });
}

inline VerificationReport verify_adx(const RealizationSpec& s, unsigned order) {
    return run_check("adx", s.u, order,
                     [&](ResidualLog& log) { check_adx_coproduct(s, order, log); });
}

}  // namespace jtwist
