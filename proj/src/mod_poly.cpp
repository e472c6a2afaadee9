#include "tlab/mod_poly.hpp"

#include <stdexcept>

#include "tlab/factor.hpp"

namespace tlab {

namespace {
const Int kZero = 0;

Int mod_inverse(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not invertible");
    return r;
}

Int mod_norm(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}
}  // namespace

ModPoly::ModPoly(Int p, std::vector<Int> coeffs) : p_(std::move(p)), c_(std::move(coeffs)) {
    for (auto& x : c_) x = mod_norm(x, p_);
    trim();
}

ModPoly ModPoly::reduce(const IntPolynomial& f, const Int& p) {
    return ModPoly(p, f.coeffs());
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& ModPoly::coeff(size_t i) const { return i < c_.size() ? c_[i] : kZero; }

ModPoly ModPoly::operator+(const ModPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
    if (is_zero() || o.is_zero()) return ModPoly(p_);
    std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::operator*(const Int& s) const {
    std::vector<Int> v(c_);
    for (auto& x : v) x *= s;
    return ModPoly(p_, std::move(v));
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    return *this * mod_inverse(c_.back(), p_);
}

Int ModPoly::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (acc * x + *it) % p_;
    return mod_norm(acc, p_);
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return ModPoly(p_);
    std::vector<Int> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * Int(static_cast<unsigned long>(i));
    return ModPoly(p_, std::move(v));
}

void ModPoly::divmod(const ModPoly& divisor, ModPoly& quotient, ModPoly& remainder) const {
    if (divisor.is_zero()) throw std::invalid_argument("ModPoly: division by zero");
    if (is_zero() || degree() < divisor.degree()) {
        quotient = ModPoly(p_);
        remainder = *this;
        return;
    }
    Int inv = mod_inverse(divisor.c_.back(), p_);
    const size_t m = divisor.c_.size();
    std::vector<Int> r(c_);
    std::vector<Int> q(c_.size() - m + 1, Int(0));
    for (size_t k = q.size(); k-- > 0;) {
        Int qq = mod_norm(mod_norm(r[k + m - 1], p_) * inv, p_);
        q[k] = qq;
        if (qq != 0)
            for (size_t i = 0; i + 1 < m; ++i) r[k + i] -= qq * divisor.c_[i];
        r[k + m - 1] = 0;
    }
    r.resize(m - 1);
    quotient = ModPoly(p_, std::move(q));
    remainder = ModPoly(p_, std::move(r));
}

ModPoly ModPoly::rem(const ModPoly& divisor) const {
    ModPoly q, r;
    divmod(divisor, q, r);
    return r;
}

ModPoly ModPoly::quot(const ModPoly& divisor) const {
    ModPoly q, r;
    divmod(divisor, q, r);
    return q;
}

IntPolynomial ModPoly::lift_symmetric() const {
    std::vector<Int> v(c_);
    Int half = p_ / 2;
    for (auto& x : v)
        if (x > half) x -= p_;
    return IntPolynomial(std::move(v));
}

ModPoly mod_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = x.rem(y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ModPoly mod_powmod(const ModPoly& base, const Int& e, const ModPoly& f) {
    ModPoly acc(f.modulus(), {Int(1)});
    ModPoly b = base.rem(f);
    for (long i = static_cast<long>(bit_length(e)) - 1; i >= 0; --i) {
        acc = (acc * acc).rem(f);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            acc = (acc * b).rem(f);
    }
    return acc;
}

bool irreducible_mod_p(const IntPolynomial& f, const Int& p) {
    ModPoly g = ModPoly::reduce(f, p);
    if (g.degree() != f.degree()) return false;  // leading coefficient collapsed
    long d = g.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    g = g.monic();
    ModPoly xp = ModPoly::x(p);
    // Rabin: x^(p^d) == x mod g, and gcd(x^(p^(d/q)) - x, g) = 1 for prime q | d.
    ModPoly t = xp;
    std::vector<ModPoly> powers;  // x^(p^i) for i = 1..d
    for (long i = 0; i < d; ++i) {
        t = mod_powmod(t, p, g);
        powers.push_back(t);
    }
    if (!(powers[static_cast<size_t>(d - 1)] == xp.rem(g))) return false;
    for (uint64_t q : prime_divisors_u64(static_cast<uint64_t>(d))) {
        long i = d / static_cast<long>(q);
        ModPoly diff = powers[static_cast<size_t>(i - 1)] - xp;
        if (mod_gcd(diff, g).degree() != 0) return false;
    }
    return true;
}

long common_factor_degree_mod_p(const IntPolynomial& f, const IntPolynomial& g,
                                const Int& p) {
    ModPoly a = ModPoly::reduce(f, p);
    ModPoly b = ModPoly::reduce(g, p);
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("common_factor_degree_mod_p: zero reduction");
    return mod_gcd(a, b).degree();
}

}  // namespace tlab
