#pragma once

#include "gaussian.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jtwist {

// Polynomial in the deformation parameter h, truncated at a fixed order:
// arithmetic silently discards every power beyond h^order, which realizes
// computing modulo h^(order+1).  Binary operations require equal orders.
class TruncPoly {
  public:
    explicit TruncPoly(unsigned order) : order_(order), c_(order + 1) {}

    static TruncPoly constant(unsigned order, GaussianRational v) {
        TruncPoly p(order);
        p.c_[0] = std::move(v);
        return p;
    }
    // The indeterminate itself; at order 0 it truncates to zero.
    static TruncPoly h(unsigned order) {
        TruncPoly p(order);
        if (order >= 1) p.c_[1] = GaussianRational(1);
        return p;
    }

    unsigned order() const { return order_; }
    const GaussianRational& operator[](unsigned k) const {
        if (k > order_) throw std::domain_error("TruncPoly: coefficient index beyond order");
        return c_[k];
    }
    void set(unsigned k, GaussianRational v) {
        if (k > order_) throw std::domain_error("TruncPoly::set: index beyond order");
        c_[k] = std::move(v);
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_constant() const {
        for (unsigned k = 1; k <= order_; ++k)
            if (!c_[k].is_zero()) return false;
        return true;
    }

    TruncPoly operator-() const {
        TruncPoly r(order_);
        for (unsigned k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
        return r;
    }
    friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
        check_orders(a, b, "add");
        TruncPoly r(a.order_);
        for (unsigned k = 0; k <= a.order_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) { return a + (-b); }
    friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
        check_orders(a, b, "mul");
        TruncPoly r(a.order_);
        for (unsigned i = 0; i <= a.order_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (unsigned j = 0; i + j <= a.order_; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend TruncPoly operator*(const TruncPoly& a, const GaussianRational& s) {
        TruncPoly r(a.order_);
        for (unsigned k = 0; k <= a.order_; ++k) r.c_[k] = a.c_[k] * s;
        return r;
    }
    friend TruncPoly operator*(const GaussianRational& s, const TruncPoly& a) { return a * s; }

    TruncPoly& operator+=(const TruncPoly& o) { return *this = *this + o; }
    TruncPoly& operator-=(const TruncPoly& o) { return *this = *this - o; }
    TruncPoly& operator*=(const TruncPoly& o) { return *this = *this * o; }

    // Multiplicative inverse mod h^(order+1); needs an invertible constant term.
    TruncPoly inv() const {
        if (c_[0].is_zero())
            throw std::domain_error("TruncPoly::inv: constant term is zero, series is not invertible");
        TruncPoly r(order_);
        r.c_[0] = c_[0].inv();
        for (unsigned k = 1; k <= order_; ++k) {
            GaussianRational acc;
            for (unsigned j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -(r.c_[0] * acc);
        }
        return r;
    }
    friend TruncPoly operator/(const TruncPoly& a, const TruncPoly& b) { return a * b.inv(); }

    // Re-truncation to a lower (or equal) order.
    TruncPoly truncate(unsigned new_order) const {
        TruncPoly r(new_order);
        for (unsigned k = 0; k <= new_order && k <= order_; ++k) r.c_[k] = c_[k];
        return r;
    }

    bool operator==(const TruncPoly& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const TruncPoly& o) const { return !(*this == o); }

    // "1 - 1/2 h + (1/3+i) h^2"; zero renders as "0".
    std::string str() const {
        std::string out;
        for (unsigned k = 0; k <= order_; ++k) {
            const std::string mono = k == 0 ? "" : (k == 1 ? "h" : "h^" + std::to_string(k));
            append_term(out, c_[k], mono);
        }
        return out.empty() ? "0" : out;
    }

  private:
    static void check_orders(const TruncPoly& a, const TruncPoly& b, const char* op) {
        if (a.order_ != b.order_)
            throw std::domain_error(std::string("TruncPoly::") + op + ": truncation order mismatch (" +
                                    std::to_string(a.order_) + " vs " + std::to_string(b.order_) + ")");
    }

    unsigned order_;
    std::vector<GaussianRational> c_;
};

inline std::string to_string(const TruncPoly& p) { return p.str(); }

}  // namespace jtwist
