#include "tlab/mp_real.hpp"

#include <stdexcept>

namespace tlab {

Real to_real(const Int& n) {
    // Exact binary decomposition; avoids decimal round trips.
    if (n == 0) return Real(0);
    bool neg = n < 0;
    Int m = abs_int(n);
    Real acc = 0;
    Real scale = 1;
    // peel 63-bit limbs from the low end
    Int base = Int(1) << 63;
    while (m != 0) {
        Int lo = m % base;
        acc += Real(lo.get_ui()) * scale;
        // get_ui is safe: lo < 2^63
        m /= base;
        scale *= Real("9223372036854775808");  // 2^63
    }
    return neg ? -acc : acc;
}

Real to_real(const Rat& r) {
    return to_real(Int(r.get_num())) / to_real(Int(r.get_den()));
}

Real log_abs_mp(const Int& n) {
    if (n == 0) throw std::invalid_argument("log_abs_mp: zero");
    return log(abs(to_real(n)));
}

Real log_abs_mp(const Rat& r) {
    return log_abs_mp(Int(r.get_num())) - log_abs_mp(Int(r.get_den()));
}

Real reduce_mod(const Real& x, const Real& period) {
    Real y = x - period * floor(x / period);
    if (y > period / 2) y -= period;
    return y;
}

}  // namespace tlab
