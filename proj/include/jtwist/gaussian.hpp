#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace jtwist {

// Exact element of Q(i).  Both parts are cpp_rationals, so every value is
// automatically in lowest terms; equality is structural.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long n) : re_(n) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational conj() const { return {re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }

    GaussianRational inv() const {
        if (is_zero()) throw std::domain_error("GaussianRational::inv: division by zero");
        const Rational n = re_ * re_ + im_ * im_;
        return {re_ / n, -im_ / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    bool operator==(const GaussianRational& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    // Canonical rendering: "0", "5/4", "-2", "i", "-3/2i", "1/2+1/3i", "2-i".
    std::string str() const {
        if (is_zero()) return "0";
        if (im_ == 0) return to_string(re_);
        std::string imag = imag_str(im_);
        if (re_ == 0) return imag;
        return to_string(re_) + (im_ > 0 ? "+" : "-") + imag_str(abs(im_));
    }

    // Parses the rendering above: a rational, "ri", or "p/q+r/si" (either sign).
    static GaussianRational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("GaussianRational::parse: empty literal");
        if (text.back() != 'i') return {parse_rational(text)};
        std::string body = text.substr(0, text.size() - 1);
        // Search for a '+'/'-' separating the real part; position 0 is the
        // sign of the leading term, not a separator.
        for (std::size_t j = 1; j < body.size(); ++j) {
            if (body[j] == '+' || body[j] == '-')
                return {parse_rational(body.substr(0, j)), parse_imag(body.substr(j))};
        }
        return {Rational(0), parse_imag(body)};
    }

  private:
    static std::string imag_str(const Rational& b) {
        if (b == 1) return "i";
        if (b == -1) return "-i";
        return to_string(b) + "i";
    }
    static Rational parse_imag(const std::string& s) {
        if (s.empty() || s == "+") return Rational(1);
        if (s == "-") return Rational(-1);
        return parse_rational(s);
    }

    Rational re_{0}, im_{0};
};

inline std::string to_string(const GaussianRational& z) { return z.str(); }

// Shared term renderer: appends "coef mono" to a running sum, folding real
// signs into the " + " / " - " joiner, suppressing unit coefficients in front
// of a nonempty monomial, and parenthesizing genuinely complex coefficients.
inline void append_term(std::string& out, const GaussianRational& coef, const std::string& mono) {
    if (coef.is_zero()) return;
    const bool first = out.empty();
    GaussianRational c = coef;
    if (c.is_real()) {
        const bool neg = c.re() < 0;
        if (neg) c = -c;
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mono.empty())
            out += c.str();
        else
            out += (c.is_one() ? mono : c.str() + " " + mono);
    } else {
        if (!first) out += " + ";
        out += "(" + c.str() + ")";
        if (!mono.empty()) out += " " + mono;
    }
}

}  // namespace jtwist
