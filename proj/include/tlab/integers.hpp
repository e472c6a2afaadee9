#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace tlab {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int abs_int(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// p-adic valuation of a nonzero integer.
long ord_p(const Int& n, const Int& p);

/// p-adic valuation of a nonzero rational.
long ord_p(const Rat& r, const Int& p);

/// Removes all factors of p from n; returns (cofactor, exponent).
std::pair<Int, long> remove_factor(const Int& n, const Int& p);

/// log|n| for n != 0, accurate to double precision regardless of size.
double log_abs(const Int& n);
double log_abs(const Rat& r);

/// Number of bits of |n| (0 for n = 0).
inline std::size_t bit_length(const Int& n) {
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

Int isqrt(const Int& n);

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& text);

}  // namespace tlab
