#pragma once

#include <cmath>
#include <string>

#include "frb/base.hpp"

namespace frb {

// Element a + b*sqrt(q) of the real quadratic extension Q(sqrt(q)), exact.
//
// q == 0 encodes a plain rational (b must be 0); arithmetic freely mixes
// rationals with any one fixed radicand but rejects two distinct radicands.
// If q is a perfect square the root is folded into the rational part, so a
// normalized value with b != 0 always lies outside Q and sign tests below
// are exact.
struct QuadExt {
    Rational a;
    Rational b;
    long q = 0;

    QuadExt() = default;
    QuadExt(Rational rat) : a(std::move(rat)) {}
    QuadExt(long n) : a(n) {}
    QuadExt(Rational a_, Rational b_, long q_) : a(std::move(a_)), b(std::move(b_)), q(q_) {
        if (q < 0) throw std::invalid_argument("negative radicand");
        normalize();
    }

    static long isqrt_if_square(long q) {
        long s = static_cast<long>(std::lround(std::sqrt(static_cast<double>(q))));
        for (long c = s - 1; c <= s + 1; ++c)
            if (c >= 0 && c * c == q) return c;
        return -1;
    }

    void normalize() {
        if (q > 0) {
            long s = isqrt_if_square(q);
            if (s >= 0) {
                a += b * s;
                b = 0;
            }
        }
        if (b == 0) q = 0;
    }

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    // -1, 0, +1; exact (compares a^2 with q b^2 when the parts disagree).
    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational d = a * a - b * b * q;
        int sd = sgn(d);
        return sd == 0 ? 0 : (sd > 0 ? sa : sb);
    }

    double to_double() const {
        return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(q));
    }

    std::string str() const {
        if (b == 0) return a.get_str();
        Rational mag = b < 0 ? Rational(-b) : b;
        std::string root = mag.get_str() + "*sqrt(" + std::to_string(q) + ")";
        if (a == 0) return (b < 0 ? "-" : "") + root;
        return a.get_str() + (b < 0 ? " - " : " + ") + root;
    }

    friend long joint_radicand(const QuadExt& x, const QuadExt& y) {
        if (x.q == y.q) return x.q;
        if (x.q == 0) return y.q;
        if (y.q == 0) return x.q;
        throw std::invalid_argument("radicand mismatch: " + std::to_string(x.q) + " vs " +
                                    std::to_string(y.q));
    }

    QuadExt& operator+=(const QuadExt& o) {
        q = joint_radicand(*this, o);
        a += o.a;
        b += o.b;
        if (b == 0) q = 0;
        return *this;
    }
    QuadExt& operator-=(const QuadExt& o) {
        q = joint_radicand(*this, o);
        a -= o.a;
        b -= o.b;
        if (b == 0) q = 0;
        return *this;
    }
    QuadExt& operator*=(const QuadExt& o) {
        long nq = joint_radicand(*this, o);
        Rational na = a * o.a + b * o.b * nq;
        Rational nb = a * o.b + b * o.a;
        a = std::move(na);
        b = std::move(nb);
        q = nq;
        if (b == 0) q = 0;
        return *this;
    }

    QuadExt inverse() const {
        if (is_zero()) throw std::invalid_argument("division by zero");
        if (b == 0) return QuadExt(1 / a);
        Rational n = a * a - b * b * q;  // nonzero: sqrt(q) irrational after normalize()
        return QuadExt(a / n, -b / n, q);
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a, -x.b, x.q); }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        // normalized values: b == 0 forces q == 0, so componentwise is exact
        return x.q == y.q && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
    friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

  private:
    static int sgn(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }
};

// q^(k/2) exactly: rational for even k, (rational)*sqrt(q) for odd k.
inline QuadExt half_power(long q, long k) {
    if (q <= 0) throw std::invalid_argument("half_power needs a positive radicand");
    if (k % 2 == 0) return QuadExt(pow_rational(Rational(q), k / 2));
    long j = (k - 1) / 2;  // k = 2j+1, also for negative odd k
    return QuadExt(0, pow_rational(Rational(q), j), q);
}

}  // namespace frb
