#pragma once

#include <cmath>
#include <compare>
#include <optional>
#include <string>

#include "wrapkit/errors.hpp"
#include "wrapkit/rational.hpp"

namespace wrapkit {

/**
 * QuadExt: an exact value a + c*sqrt(d) with rational a, c and a squarefree
 * integer radicand d. Rational values are stored with c = 0, d = 0. All
 * arithmetic, signs and floors are decided by exact rational case analysis;
 * no floating point enters any predicate.
 *
 * Arithmetic between two values with different nonzero radicands is a hard
 * error: one run of the system lives inside a single quadratic field.
 */
class QuadExt {
public:
    QuadExt() : a_(0), c_(0), d_(0) {}
    QuadExt(int v) : a_(v), c_(0), d_(0) {}
    QuadExt(const Int& v) : a_(v), c_(0), d_(0) {}
    QuadExt(const Rational& v) : a_(v), c_(0), d_(0) {}

    // a + c*sqrt(D) for arbitrary nonnegative D; the radicand is reduced to
    // squarefree form, so e.g. make(0, 1, 8) yields 2*sqrt(2) and
    // make(0, 1, 9) yields the rational 3.
    static QuadExt make(const Rational& a, const Rational& c, const Int& D) {
        if (D.sign() < 0) throw Error("QuadExt: negative radicand");
        if (c == 0 || D == 0) return QuadExt(a);
        auto [s, f] = squarefree_decompose(D);
        if (f == 1) return QuadExt(a + c * Rational(s));
        QuadExt x;
        x.a_ = a;
        x.c_ = c * Rational(s);
        x.d_ = f;
        return x;
    }

    static QuadExt sqrt_of(const Int& D) { return make(0, 1, D); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return c_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return c_ == 0; }
    bool is_zero() const { return a_ == 0 && c_ == 0; }

    // Requires is_rational().
    const Rational& as_rational() const {
        if (!is_rational()) throw Error("QuadExt: not a rational value");
        return a_;
    }

    QuadExt conjugate() const {
        QuadExt x = *this;
        x.c_ = -x.c_;
        return x;
    }

    Rational norm() const { return a_ * a_ - c_ * c_ * Rational(d_); }
    Rational trace() const { return 2 * a_; }

    // Exact sign of a + c*sqrt(d), by comparing a^2 against c^2*d.
    int sign() const {
        int sa = rat_sign(a_), sc = rat_sign(c_);
        if (sc == 0) return sa;
        if (sa == 0) return sc;
        if (sa == sc) return sa;
        // Opposite signs: |a| vs |c|*sqrt(d) decides.
        int cmp = rat_sign(a_ * a_ - c_ * c_ * Rational(d_));
        return cmp == 0 ? 0 : cmp * sa;
    }

    QuadExt operator-() const {
        QuadExt x = *this;
        x.a_ = -x.a_;
        x.c_ = -x.c_;
        return x;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        Int d = common_radicand(x, y);
        return reduced(x.a_ + y.a_, x.c_ + y.c_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        Int d = common_radicand(x, y);
        return reduced(x.a_ - y.a_, x.c_ - y.c_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Int d = common_radicand(x, y);
        return reduced(x.a_ * y.a_ + x.c_ * y.c_ * Rational(d),
                       x.a_ * y.c_ + x.c_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw DivisionByZero("QuadExt: division by zero");
        Int d = common_radicand(x, y);
        if (y.is_rational()) return reduced(x.a_ / y.a_, x.c_ / y.a_, d);
        // Multiply by the conjugate; the norm of an irrational value is a
        // nonzero rational (d is squarefree, so sqrt(d) is irrational).
        Rational n = y.norm();
        QuadExt num = x * y.conjugate();
        return reduced(num.a_ / n, num.c_ / n, d);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Value order; throws for incompatible radicands like any arithmetic.
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // The unique integer k with k <= value < k+1. A double estimate seeds the
    // search; exact sign tests finish it.
    Int floor() const {
        if (is_rational()) return rat_floor(a_);
        Int k(static_cast<long long>(std::floor(to_double())));
        // Gallop to bracket, then tighten one side at a time.
        Int step = 1;
        while ((*this - QuadExt(k)).sign() < 0) { k -= step; step *= 2; }
        step = 1;
        while ((*this - QuadExt(k + 1)).sign() >= 0) { k += step; step *= 2; }
        while ((*this - QuadExt(k)).sign() < 0) --k;
        return k;
    }

    double to_double() const {
        double v = rat_double(a_);
        if (c_ != 0) v += rat_double(c_) * std::sqrt(d_.convert_to<double>());
        return v;
    }

    // Exact serialization: "a_num/a_den + c_num/c_den*sqrt(d)", with the
    // radical term omitted for rational values.
    std::string str() const {
        if (is_rational()) return rat_string(a_);
        return rat_string(a_) + " + " + rat_string(c_) + "*sqrt(" + d_.str() + ")";
    }

    // Compact form for report lines.
    std::string pretty() const {
        if (is_rational()) return rat_pretty(a_);
        std::string s = rat_pretty(a_);
        Rational c = c_;
        s += c.sign() < 0 ? " - " : " + ";
        if (c.sign() < 0) c = -c;
        if (c != 1) s += rat_pretty(c) + "*";
        return s + "sqrt(" + d_.str() + ")";
    }

private:
    static QuadExt reduced(Rational a, Rational c, const Int& d) {
        QuadExt x;
        x.a_ = std::move(a);
        if (c == 0) {
            x.c_ = 0;
            x.d_ = 0;
        } else {
            x.c_ = std::move(c);
            x.d_ = d;
        }
        return x;
    }

    static Int common_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.c_ == 0) return y.d_;
        if (y.c_ == 0) return x.d_;
        if (x.d_ != y.d_)
            throw IncompatibleRadicands("QuadExt: sqrt(" + x.d_.str() +
                                        ") vs sqrt(" + y.d_.str() + ")");
        return x.d_;
    }

    Rational a_, c_;
    Int d_;
};

inline int sign(const QuadExt& x) { return x.sign(); }
inline QuadExt conjugate(const QuadExt& x) { return x.conjugate(); }
inline Int qx_floor(const QuadExt& x) { return x.floor(); }

// c*sqrt(D) in canonical form (rational when D is a perfect square).
inline QuadExt normalize_radical(const Rational& c, const Int& D) {
    return QuadExt::make(0, c, D);
}

inline QuadExt operator*(const Rational& q, const QuadExt& x) { return QuadExt(q) * x; }
inline QuadExt operator*(const QuadExt& x, const Rational& q) { return x * QuadExt(q); }

}  // namespace wrapkit
