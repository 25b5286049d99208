#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

#include "qtoric/errors.hpp"

namespace qtoric {

using Rational = mpq_class;
using Int = mpz_class;

inline bool is_square_free(long m) {
    if (m < 1) return false;
    for (long p = 2; p * p <= m; ++p)
        if (m % (p * p) == 0) return false;
    return true;
}

/// Element a + b*sqrt(m) of the real quadratic field Q(sqrt(m)), m square-free.
/// m == 1 is the rational case; canonical form then has b == 0.
/// All comparisons and arithmetic are exact.
class FieldScalar {
public:
    FieldScalar() : m_(1) {}
    FieldScalar(int v) : a_(v), m_(1) {}
    FieldScalar(long v) : a_(v), m_(1) {}
    FieldScalar(const Rational& a) : a_(a), m_(1) { a_.canonicalize(); }
    FieldScalar(const Rational& a, const Rational& b, long m) : a_(a), b_(b), m_(m) {
        if (!is_square_free(m_))
            throw NonSquareFreeDiscriminant("discriminant " + std::to_string(m) +
                                            " is not a square-free positive integer");
        a_.canonicalize();
        b_.canonicalize();
        normalize();
    }

    static FieldScalar sqrt_of(long m) { return FieldScalar(Rational(0), Rational(1), m); }

    const Rational& rat_part() const { return a_; }
    const Rational& irr_part() const { return b_; }
    long disc() const { return m_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Exact sign of a + b*sqrt(m): compare a^2 and b^2*m when the parts disagree.
    int sign() const {
        int sa = sgn(a_);
        int sb = sgn(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: |a| vs |b|*sqrt(m)
        Rational a2 = a_ * a_;
        Rational b2m = b_ * b_ * m_;
        int c = cmp(a2, b2m);
        if (c == 0) return 0;  // cannot happen for m square-free > 1 and b != 0
        return c > 0 ? sa : sb;
    }

    FieldScalar operator-() const { return FieldScalar(-a_, -b_, m_, tag{}); }

    friend FieldScalar operator+(const FieldScalar& x, const FieldScalar& y) {
        long m = merge_disc(x, y);
        return FieldScalar(x.a_ + y.a_, x.b_ + y.b_, m, tag{});
    }
    friend FieldScalar operator-(const FieldScalar& x, const FieldScalar& y) {
        long m = merge_disc(x, y);
        return FieldScalar(x.a_ - y.a_, x.b_ - y.b_, m, tag{});
    }
    friend FieldScalar operator*(const FieldScalar& x, const FieldScalar& y) {
        long m = merge_disc(x, y);
        return FieldScalar(x.a_ * y.a_ + x.b_ * y.b_ * m, x.a_ * y.b_ + x.b_ * y.a_, m, tag{});
    }
    friend FieldScalar operator/(const FieldScalar& x, const FieldScalar& y) {
        if (y.is_zero()) throw DivisionByZero("field division by zero");
        long m = merge_disc(x, y);
        // 1/(a+b*sqrt(m)) = (a-b*sqrt(m)) / (a^2 - b^2*m)
        Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * m;
        FieldScalar conj(y.a_ / norm, -y.b_ / norm, m, tag{});
        return x * conj;
    }

    FieldScalar& operator+=(const FieldScalar& y) { return *this = *this + y; }
    FieldScalar& operator-=(const FieldScalar& y) { return *this = *this - y; }
    FieldScalar& operator*=(const FieldScalar& y) { return *this = *this * y; }
    FieldScalar& operator/=(const FieldScalar& y) { return *this = *this / y; }

    friend bool operator==(const FieldScalar& x, const FieldScalar& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.m_ != y.m_) return false;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const FieldScalar& x, const FieldScalar& y) { return !(x == y); }
    friend bool operator<(const FieldScalar& x, const FieldScalar& y) { return (x - y).sign() < 0; }
    friend bool operator>(const FieldScalar& x, const FieldScalar& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const FieldScalar& x, const FieldScalar& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const FieldScalar& x, const FieldScalar& y) { return (x - y).sign() >= 0; }

    double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(double(m_)); }

    std::string str() const {
        if (b_ == 0) return a_.get_str();
        std::string s;
        if (a_ != 0) s += a_.get_str() + (b_ > 0 ? " + " : " - ");
        else if (b_ < 0) s += "-";
        Rational babs = abs(b_);
        if (babs != 1) s += babs.get_str() + "*";
        s += "sqrt(" + std::to_string(m_) + ")";
        return s;
    }

private:
    struct tag {};
    FieldScalar(Rational a, Rational b, long m, tag) : a_(std::move(a)), b_(std::move(b)), m_(m) {
        a_.canonicalize();
        b_.canonicalize();
        normalize();
    }

    void normalize() {
        if (m_ == 1) {
            a_ += b_;
            b_ = 0;
        }
        if (b_ == 0) m_ = 1;
    }

    // A pure rational is compatible with any discriminant.
    static long merge_disc(const FieldScalar& x, const FieldScalar& y) {
        if (x.b_ == 0) return y.m_;
        if (y.b_ == 0) return x.m_;
        if (x.m_ != y.m_)
            throw DiscriminantMismatch("cannot combine sqrt(" + std::to_string(x.m_) +
                                       ") with sqrt(" + std::to_string(y.m_) + ")");
        return x.m_;
    }

    Rational a_;
    Rational b_;
    long m_;
};

inline FieldScalar abs(const FieldScalar& x) { return x.sign() < 0 ? -x : x; }

}  // namespace qtoric
