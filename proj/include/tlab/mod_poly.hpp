#pragma once

#include <vector>

#include "tlab/int_polynomial.hpp"
#include "tlab/integers.hpp"

namespace tlab {

/// Dense polynomial over F_p, coefficients normalized into [0, p).
class ModPoly {
  public:
    ModPoly() = default;
    explicit ModPoly(Int p) : p_(std::move(p)) {}
    ModPoly(Int p, std::vector<Int> coeffs);
    static ModPoly reduce(const IntPolynomial& f, const Int& p);
    static ModPoly x(const Int& p) { return ModPoly(p, {Int(0), Int(1)}); }

    const Int& modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Int& coeff(size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly operator*(const Int& s) const;

    ModPoly monic() const;
    Int evaluate(const Int& x) const;
    ModPoly derivative() const;

    void divmod(const ModPoly& divisor, ModPoly& quotient, ModPoly& remainder) const;
    ModPoly rem(const ModPoly& divisor) const;
    ModPoly quot(const ModPoly& divisor) const;

    IntPolynomial lift_symmetric() const;  // coefficients in (-p/2, p/2]

  private:
    void trim();
    Int p_;
    std::vector<Int> c_;
};

/// Monic gcd over F_p.
ModPoly mod_gcd(const ModPoly& a, const ModPoly& b);

/// base^e mod f over F_p.
ModPoly mod_powmod(const ModPoly& base, const Int& e, const ModPoly& f);

/// Rabin's irreducibility test over F_p.
bool irreducible_mod_p(const IntPolynomial& f, const Int& p);

/// deg gcd(f mod p, g mod p) after coefficient-wise reduction.
long common_factor_degree_mod_p(const IntPolynomial& f, const IntPolynomial& g,
                                const Int& p);

}  // namespace tlab
