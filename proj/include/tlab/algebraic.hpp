#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tlab/int_polynomial.hpp"
#include "tlab/mp_real.hpp"

namespace tlab {

/// One root approximation with an a-posteriori error radius: the disk
/// |z - value| <= radius contains exactly one root of the (squarefree part
/// of the) input, of the stated multiplicity in the input itself.
struct CertifiedRoot {
    Cplx value;
    Real radius;
    int multiplicity = 1;
};

struct RootFindingError : std::runtime_error {
    std::vector<CertifiedRoot> partial;
    explicit RootFindingError(const std::string& what,
                              std::vector<CertifiedRoot> got)
        : std::runtime_error(what), partial(std::move(got)) {}
};

/// All complex roots of f with multiplicity, each within tol of a true root,
/// ordered by (real, imaginary). Aberth-Ehrlich iteration with deterministic
/// seeds, certified by disjoint Newton-quotient disks.
std::vector<CertifiedRoot> complex_roots(const IntPolynomial& f, const Real& tol);

/// log Mahler measure: log|lc(f)| + sum over roots outside the unit circle.
Real mahler_measure(const IntPolynomial& f);

/// An algebraic number: primitive integer minimal polynomial plus the index
/// of one certified root (the chosen embedding). Irreducibility of the
/// minimal polynomial is the caller's responsibility at construction.
class AlgebraicNumber {
  public:
    static AlgebraicNumber from_rational(const Rat& r);
    /// Chooses the root of `minpoly` closest to `near`.
    static AlgebraicNumber from_minpoly(const IntPolynomial& minpoly,
                                        const Cplx& near);
    /// For real-rooted intent: picks the unique real root if there is exactly
    /// one, else throws.
    static AlgebraicNumber from_minpoly_real_root(const IntPolynomial& minpoly);

    const IntPolynomial& minpoly() const { return minpoly_; }
    long degree() const { return minpoly_.degree(); }
    const CertifiedRoot& embedding() const { return roots_[root_index_]; }
    const std::vector<CertifiedRoot>& conjugates() const { return roots_; }

    bool is_rational() const { return degree() == 1; }
    Rat as_rational() const;
    bool is_zero() const;
    bool is_algebraic_integer() const { return abs_int(minpoly_.leading_coeff()) == 1; }
    /// m such that this is a primitive m-th root of unity, if any.
    std::optional<unsigned long> root_of_unity_order() const;

  private:
    AlgebraicNumber(IntPolynomial minpoly, std::vector<CertifiedRoot> roots,
                    size_t index)
        : minpoly_(std::move(minpoly)), roots_(std::move(roots)), root_index_(index) {}
    IntPolynomial minpoly_;
    std::vector<CertifiedRoot> roots_;
    size_t root_index_;
};

/// Absolute Weil height. Exactly 0 iff the input is a root of unity
/// (detected through the minimal polynomial); otherwise the Mahler-measure
/// formula over certified roots. Throws on 0.
Real naive_height(const AlgebraicNumber& alpha);

}  // namespace tlab
