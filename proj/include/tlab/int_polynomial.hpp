#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tlab/integers.hpp"

namespace tlab {

/// Dense polynomial over Z, coefficients lowest degree first, kept in
/// canonical form (no trailing zero unless the zero polynomial).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> coeffs_low_first)
        : coeffs_(coeffs_low_first) {
        trim();
    }
    explicit IntPolynomial(std::vector<Int> coeffs_low_first)
        : coeffs_(std::move(coeffs_low_first)) {
        trim();
    }
    static IntPolynomial constant(const Int& c) { return IntPolynomial({c}); }
    static IntPolynomial monomial(const Int& c, size_t degree);
    /// x^n - 1
    static IntPolynomial xn_minus_1(unsigned long n);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Int& leading_coeff() const;
    const Int& coeff(size_t i) const;  // 0 beyond the degree
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const IntPolynomial& o) const = default;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& c) const;

    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;
    /// Homogenized evaluation b^deg * f(a/b), an exact integer.
    Int evaluate_hom(const Int& a, const Int& b) const;

    IntPolynomial derivative() const;
    IntPolynomial compose_power(unsigned long k) const;  // f(x^k)
    IntPolynomial shift(const Int& c) const;             // f(x+c)
    IntPolynomial reverse() const;                       // x^deg * f(1/x)

    /// Content (gcd of coefficients, carrying the sign of the leading
    /// coefficient) and primitive part.
    Int content() const;
    IntPolynomial primitive_part() const;

    /// Exact division; throws if the division leaves a remainder.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;
    IntPolynomial divide_exact(const Int& c) const;

    /// Pseudo remainder: lc(divisor)^(deg f - deg divisor + 1) * f mod divisor.
    IntPolynomial pseudo_remainder(const IntPolynomial& divisor) const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Resultant by the subresultant PRS. Sign convention
/// Res(f, g) = lc(g)^deg(f) * prod_{f(b)=0} g(b) ... = (-1)^(deg f * deg g) Res(g, f).
/// Throws on a zero input.
Int resultant(const IntPolynomial& f, const IntPolynomial& g);

/// gcd in Z[x], primitive with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g);

IntPolynomial squarefree_part(const IntPolynomial& f);

/// n-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned long n);

/// If f equals some cyclotomic polynomial Phi_m, returns m.
std::optional<unsigned long> cyclotomic_index(const IntPolynomial& f);

}  // namespace tlab
