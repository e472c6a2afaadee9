#pragma once

#include <cstdint>
#include <vector>

#include "tlab/algebraic.hpp"
#include "tlab/mp_real.hpp"

namespace tlab::circle {

/// Count integers in a half-open interval lying in a coprime congruence
/// class: #{a in (c,d] : gcd(a,N)=1, a = b (mod Q)}. Q = 1 means no
/// congruence condition.
struct CountQuery {
    uint64_t N = 1;
    uint64_t Q = 1;
    Int b = 0;
    Real c, d;
};

struct CountResult {
    Int count;
    Real main_term;  // phi(N)/(N phi(Q)) * (d - c)
    Real error;      // count - main_term
    uint64_t divisor_bound;  // d(N), the proven error bound
};

CountResult coprime_progression_count(const CountQuery& q);

/// Half-open arc (theta1, theta2] with 0 < theta2 - theta1 <= 2 pi.
struct ArcInterval {
    Real theta1, theta2;
    Real measure() const { return (theta2 - theta1) / (2 * mp_pi()); }
};

struct DiscrepancyReport {
    unsigned long n = 0;
    ArcInterval arc;
    Int count;
    Real expected;  // mu(I) phi(n)
    Real error;     // count - expected
    uint64_t bound; // d(n)
};

/// Exact counts of primitive n-th roots of unity in each arc, with the
/// Lemma-2 error bound attached.
std::vector<DiscrepancyReport> arc_discrepancy(unsigned long n,
                                               const std::vector<ArcInterval>& arcs);

struct GapEntry {
    uint64_t N;
    Real gap;
};

struct GapReport {
    Real theta0;
    std::vector<GapEntry> entries;
    Real fitted_C;  // max over N of log(1/g(N)) / max(1, log N)
};

/// Minimal angular distance from arg(alpha) to the N-th roots of unity,
/// N = 1..N_max. alpha must have every archimedean absolute value 1 and
/// must not be a root of unity.
GapReport baker_gap_scan(const AlgebraicNumber& alpha, uint64_t N_max);

struct JensenReport {
    Real integral;
    Real target;      // max(0, log|alpha|)
    Real difference;
    bool converged = true;
    unsigned long points = 0;
};

/// Trapezoid quadrature of (1/2pi) int log|e^{i theta} - alpha| d theta with
/// dyadic refinement toward arg(alpha) when |alpha| = 1.
JensenReport jensen_check(const AlgebraicNumber& alpha, unsigned long quad_points);

/// The three-part decomposition of (1/phi(n)) sum log|zeta - alpha| over
/// primitive n-th roots: continuous part, Baker-controlled central window,
/// and the annular window, each with its proven envelope.
struct SplitSumReport {
    unsigned long n = 0;
    Real eps;
    unsigned long window_count = 0;  // D = ceil(phi(n)^(1/2))
    Real total;                      // numeric sum / phi(n)
    Real total_exact;                // resultant route (minpoly degree <= 2)
    bool exact_available = false;
    Real part_weak;     // continuous g part; reference value eps/pi
    Real part_central;  // |Delta| <= eps/D
    Real part_annular;  // eps/D < |Delta| <= eps
    long central_terms = 0;
    long annular_terms = 0;
    bool within_envelopes = false;  // weak < eps, central < eps, annular < 4 eps, total < 6 eps
};

SplitSumReport split_sum_diagnostics(const AlgebraicNumber& alpha, unsigned long n,
                                     const Real& eps);

}  // namespace tlab::circle
