#include "tlab/integers.hpp"

#include <cmath>
#include <stdexcept>

namespace tlab {

long ord_p(const Int& n, const Int& p) {
    if (n == 0) throw std::invalid_argument("ord_p: zero argument");
    Int cof;
    return static_cast<long>(
        mpz_remove(cof.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long ord_p(const Rat& r, const Int& p) {
    if (r == 0) throw std::invalid_argument("ord_p: zero argument");
    return ord_p(Int(r.get_num()), p) - ord_p(Int(r.get_den()), p);
}

std::pair<Int, long> remove_factor(const Int& n, const Int& p) {
    Int cof;
    long e = static_cast<long>(
        mpz_remove(cof.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    return {cof, e};
}

double log_abs(const Int& n) {
    if (n == 0) throw std::invalid_argument("log_abs: zero argument");
    long exp2 = 0;
    double m = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * M_LN2;
}

double log_abs(const Rat& r) {
    return log_abs(Int(r.get_num())) - log_abs(Int(r.get_den()));
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Rat rat_from_string(const std::string& text) {
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    r.canonicalize();
    return r;
}

}  // namespace tlab
