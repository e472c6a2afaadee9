#pragma once

#include <cstdint>
#include <vector>

#include "tlab/algebraic.hpp"
#include "tlab/factor.hpp"
#include "tlab/place.hpp"

namespace tlab::mulgroup {

struct CollisionWitness {
    Int prime;
    long witness_degree;  // deg gcd(f_alpha mod p, Phi_n mod p) >= 1
};

/// Integrality verdict for zeta_n relative to alpha. Collision primes that
/// resisted factorization are carried as a composite cofactor: they are
/// provably collisions outside S, just not individually named.
struct SIntegralityVerdict {
    unsigned long n = 0;
    std::vector<CollisionWitness> collisions;
    Int unfactored_cofactor = 1;
    bool integral = false;
};

/// Scan the roots of unity zeta_n, n in [n_min, n_max], for S-integrality
/// relative to alpha. Requires h(alpha) > 0.
std::vector<SIntegralityVerdict> s_integral_scan(const AlgebraicNumber& alpha,
                                                 const PlaceSet& S,
                                                 unsigned long n_min,
                                                 unsigned long n_max,
                                                 uint64_t rho_budget = 1u << 22);

/// The place-by-place decomposition of A_n for rational alpha: archimedean
/// part log(arch_magnitude), finite part -e log p per prime. The product
/// formula makes the total exactly zero; `total_exactly_zero` records the
/// exact rational identity |arch_magnitude| = prod p^e * prod bundle^e.
struct PlaceDecomposition {
    unsigned long n = 0;
    Rat arch_magnitude;                            // contribution log(arch_magnitude)
    std::vector<std::pair<Int, long>> finite_ords; // prime p -> e, contribution -e log p
    std::vector<std::pair<Int, long>> composite_bundles;  // unfactored collision mass
    bool total_exactly_zero = false;
};

PlaceDecomposition place_decomposition(const Rat& alpha, unsigned long n,
                                       uint64_t rho_budget = 1u << 22);

/// One term of the local-average series (FGG1-style): value(n) =
/// (1/phi(n)) log |Phi_n(alpha)|_v against the limit max(0, log|alpha|_v).
struct LocalAverageEntry {
    unsigned long n;
    Real value;
    Real limit_target;
    bool exact_match;  // finite places: value == target as exact ord identity
};

std::vector<LocalAverageEntry> local_average_series(const Rat& alpha, const Place& v,
                                                    const std::vector<unsigned long>& ns);

struct MahlerReport {
    IntPolynomial F;
    Real mahler;                          // m(F)
    std::vector<Int> delta;               // |Delta_n|, n = 1.. in order of ns
    std::vector<unsigned long> ns;
    std::vector<Real> normalized;         // (1/n) log Delta_n
};

/// Everest-Ward sequence Delta_n = |Res(F, x^n - 1)| for n = 1..n_max.
/// F must be monic irreducible, not x and not cyclotomic.
MahlerReport everest_ward(const IntPolynomial& F, unsigned long n_max);

/// All m <= m_max with |Res(f_alpha, Phi_m)| = 1 (Silverman's unit scan).
/// alpha must be an algebraic integer and no root of unity.
std::vector<unsigned long> cyclotomic_unit_scan(const AlgebraicNumber& alpha,
                                                unsigned long m_max);

/// One member of Example B's small-point family f_n(x) = x^(2^n)(x-2) - 1.
struct SmallPointFamily {
    unsigned long n = 0;
    IntPolynomial f;
    Int unit_at_0;       // |f(0)|, must be 1
    Int unit_at_2;       // |f(2)|, must be 1
    Real height;         // h(beta_n) = m(f)/deg f
    // How irreducibility was certified: "mod-p" carries the witness prime,
    // "unverified" is reported for degrees past the certification cap.
    std::string certificate;
};

std::vector<SmallPointFamily> small_point_family(unsigned long n_max);

}  // namespace tlab::mulgroup
