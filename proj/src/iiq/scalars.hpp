#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace iiq {

// Exact scalars. Elements of Q are arbitrary-precision rationals; elements of
// F_p are stored as rationals with denominator 1 and numerator in [0, p).
using Scalar = mpq_class;

struct Field {
    enum class Kind { rational, prime };

    Kind kind = Kind::rational;
    unsigned long p = 0;

    static Field rationals() { return Field{}; }
    static Field prime(unsigned long p);

    bool is_prime_field() const { return kind == Kind::prime; }
    unsigned long characteristic() const { return kind == Kind::prime ? p : 0; }

    bool operator==(const Field& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    // Brings an arbitrary rational into canonical form for this field.
    // Over F_p the denominator is inverted mod p; a denominator divisible by p
    // is a precondition error.
    Scalar reduce(const Scalar& x) const;
    Scalar from_long(long v) const { return reduce(Scalar(v)); }

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    std::string to_string() const { return is_prime_field() ? "F" + std::to_string(p) : "Q"; }
};

inline bool is_zero(const Scalar& a) { return sgn(a) == 0; }

std::string scalar_to_string(const Scalar& a);
Scalar parse_scalar(const Field& f, const std::string& token);

bool is_prime_u64(unsigned long n);

// Total order used for canonical tie-breaking (not field structure).
inline int scalar_cmp(const Scalar& a, const Scalar& b) { return cmp(a, b); }

}  // namespace iiq
