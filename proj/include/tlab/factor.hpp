#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tlab/integers.hpp"

namespace tlab {

/// Ordered prime factorization: primes strictly increasing, exponents >= 1.
struct PrimeFactorization {
    std::vector<std::pair<Int, unsigned>> factors;

    Int recompose() const;
    bool divides_into(const Int& n) const;
};

/// A factorization that may carry an unsplit composite part. `remnant` is 1
/// when the factorization is complete; otherwise it is a composite cofactor
/// (coprime to every listed prime) that resisted the splitting budget.
struct PartialFactorization {
    PrimeFactorization factored;
    Int remnant = 1;

    bool complete() const { return remnant == 1; }
    Int recompose() const { return factored.recompose() * remnant; }
};

const std::vector<uint32_t>& small_primes();  // all primes below 10^6

bool is_probable_prime(const Int& n);

/// Complete factorization of n >= 1 (empty for n = 1). Trial division by the
/// small-prime table, then Brent's rho on what remains. Throws if a cofactor
/// resists splitting within a generous internal budget; use factor_bounded
/// where incomplete results are acceptable.
PrimeFactorization factor(const Int& n);

/// Factorization with an explicit effort budget (rho iterations per split
/// attempt). Never throws on hard cofactors: they end up in `remnant`.
PartialFactorization factor_bounded(const Int& n, uint64_t rho_budget = 1u << 22);

/// Divides out every power of each given prime. Returns the exponents used
/// (aligned with `primes`) and the remaining cofactor.
std::pair<std::vector<long>, Int> strip_primes(const Int& n,
                                               const std::vector<Int>& primes);

/// phi(n), d(n), omega(n), mu(n) computed from factor(n).
struct ArithFunctions {
    Int phi;
    Int divisor_count;
    unsigned omega;
    int mobius;
};
ArithFunctions arith_functions(const Int& n);

uint64_t euler_phi_u64(uint64_t n);
uint64_t divisor_count_u64(uint64_t n);
int mobius_u64(uint64_t n);
std::vector<uint64_t> divisors_u64(uint64_t n);
std::vector<uint64_t> prime_divisors_u64(uint64_t n);

/// Multiplicative order of a mod p (p prime, p does not divide a).
uint64_t multiplicative_order(const Int& a, uint64_t p);

}  // namespace tlab
