#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>

#include "tlab/integers.hpp"

namespace tlab {

/// 50-decimal-digit working precision; tightest tolerance in any contract is
/// 1e-30, so this leaves ~20 guard digits.
using Real = boost::multiprecision::cpp_bin_float_50;
using Cplx = boost::multiprecision::cpp_complex_50;

inline Real mp_pi() { return boost::math::constants::pi<Real>(); }

Real to_real(const Int& n);
Real to_real(const Rat& r);

/// log|n| at working precision, n != 0.
Real log_abs_mp(const Int& n);
Real log_abs_mp(const Rat& r);

inline double dbl(const Real& x) { return static_cast<double>(x); }
inline std::complex<double> dbl(const Cplx& z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// Reduce x into (-period/2, period/2].
Real reduce_mod(const Real& x, const Real& period);

}  // namespace tlab
