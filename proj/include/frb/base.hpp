#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frb {

// Arbitrary-precision scalars. mpq_class is kept canonical by GMP itself:
// lowest terms, positive denominator, 0 = 0/1.
using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown when a computation would exceed a configured materialization cap.
struct resource_cap_error : std::runtime_error {
    explicit resource_cap_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    x.canonicalize();
    return x;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline double to_double(const Rational& x) { return x.get_d(); }

inline Rational pow_rational(const Rational& base, long e) {
    Rational out = 1;
    Rational b = base;
    long k = e;
    if (k < 0) {
        if (b == 0) throw std::invalid_argument("0 to a negative power");
        b = 1 / b;
        k = -k;
    }
    while (k > 0) {
        if (k & 1) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

inline BigInt pow_bigint(long base, long e) {
    if (e < 0) throw std::invalid_argument("negative exponent for integer power");
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return out;
}

}  // namespace frb
