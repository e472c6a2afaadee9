#pragma once

#include <optional>
#include <vector>

#include "tlab/factor.hpp"
#include "tlab/int_polynomial.hpp"
#include "tlab/integers.hpp"

namespace tlab::ell {

enum class Reduction { good, split_multiplicative, nonsplit_multiplicative, additive };

struct ReductionAt {
    Int p;
    Reduction type;
    long ord_disc;  // ord_p(Delta)
};

class CurvePoint;

/// Integral Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// with the derived quantities precomputed.
class WeierstrassCurve {
  public:
    WeierstrassCurve(Int a1, Int a2, Int a3, Int a4, Int a6);

    Int a1, a2, a3, a4, a6;
    Int b2, b4, b6, b8;
    Int c4, c6, disc;
    Rat j;

    /// Reduction type at every prime dividing the discriminant.
    const std::vector<ReductionAt>& bad_reduction() const { return bad_; }
    Reduction reduction_at(const Int& p) const;

    /// True when no prime admits the u-rescaling p^4 | c4, p^6 | c6
    /// (with the degenerate c4 = 0 case checked through c6 and Delta).
    bool minimality_check_passes() const { return minimal_; }

    bool is_on_curve(const Rat& x, const Rat& y) const;

    CurvePoint add(const CurvePoint& P, const CurvePoint& Q) const;
    CurvePoint negate(const CurvePoint& P) const;
    CurvePoint multiply(const CurvePoint& P, long m) const;

    /// 4x^3 + b2 x^2 + 2 b4 x + b6 (the square of psi_2).
    IntPolynomial two_torsion_poly() const;

  private:
    std::vector<ReductionAt> bad_;
    bool minimal_ = true;
};

class CurvePoint {
  public:
    CurvePoint() : infinity_(true) {}  // O
    CurvePoint(Rat x, Rat y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint origin() { return CurvePoint(); }
    bool is_infinity() const { return infinity_; }
    const Rat& x() const;
    const Rat& y() const;

    bool operator==(const CurvePoint& o) const;

  private:
    bool infinity_;
    Rat x_, y_;
};

/// Curve from `a1 a2 a3 a4 a6` (the external text format).
WeierstrassCurve curve_from_string(const std::string& text);

/// psi_N x-part and the primitive factor f_N whose roots are the
/// x-coordinates of points of exact order N.
struct DivisionPolynomialSet {
    unsigned long N = 0;
    IntPolynomial psi_x_part;  // psi_N for odd N, psi_N / psi_2 for even N >= 4, psi_2^2 for N = 2
    IntPolynomial f;           // primitive factor
};

DivisionPolynomialSet division_polynomials(const WeierstrassCurve& E, unsigned long N);

/// Expected degree of f_N for N >= 3: (N^2 prod_{p|N} (1 - 1/p^2)) / 2.
unsigned long exact_order_pair_count(unsigned long N);

struct TorsionPoint {
    CurvePoint point;
    unsigned long order;
};

/// The full rational torsion subgroup, orders verified by scalar
/// multiplication reaching O.
std::vector<TorsionPoint> rational_torsion(const WeierstrassCurve& E);

}  // namespace tlab::ell
