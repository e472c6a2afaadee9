#include "tlab/int_polynomial.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "tlab/factor.hpp"

namespace tlab {

namespace {
const Int kZero = 0;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(const Int& c, size_t degree) {
    std::vector<Int> v(degree + 1, Int(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::xn_minus_1(unsigned long n) {
    std::vector<Int> v(n + 1, Int(0));
    v[0] = -1;
    v[n] = 1;
    return IntPolynomial(std::move(v));
}

const Int& IntPolynomial::leading_coeff() const {
    if (is_zero()) throw std::invalid_argument("leading_coeff of zero polynomial");
    return coeffs_.back();
}

const Int& IntPolynomial::coeff(size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> v(coeffs_);
    for (auto& c : v) c = -c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
    if (c == 0) return {};
    std::vector<Int> v(coeffs_);
    for (auto& x : v) x *= c;
    return IntPolynomial(std::move(v));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Int IntPolynomial::evaluate_hom(const Int& a, const Int& b) const {
    if (is_zero()) return 0;
    // sum c_i a^i b^(d-i): Horner in a with a running power of b
    Int acc = 0, bpow = 1;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * a + coeffs_[i] * bpow;
        if (i > 0) bpow *= b;
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Int> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Int(static_cast<unsigned long>(i));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::compose_power(unsigned long k) const {
    if (is_zero() || k == 0) return k == 0 ? IntPolynomial({evaluate(Int(1))}) : IntPolynomial{};
    std::vector<Int> v((coeffs_.size() - 1) * k + 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shift(const Int& c) const {
    // Horner: f(x+c) = (...((a_d (x+c) + a_{d-1})(x+c) + ...)
    IntPolynomial acc;
    IntPolynomial lin({c, Int(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * lin + IntPolynomial({*it});
    return acc;
}

IntPolynomial IntPolynomial::reverse() const {
    std::vector<Int> v(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(v));
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    if (!is_zero() && leading_coeff() < 0) g = -g;
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    return divide_exact(content());
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < divisor.degree())
        throw std::invalid_argument("divide_exact: divisor degree too large");
    std::vector<Int> rem(coeffs_);
    std::vector<Int> quo(coeffs_.size() - divisor.coeffs_.size() + 1, Int(0));
    const auto& d = divisor.coeffs_;
    for (size_t k = quo.size(); k-- > 0;) {
        Int& lead = rem[k + d.size() - 1];
        if (lead == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(),
                    d.back().get_mpz_t());
        if (r != 0) throw std::invalid_argument("divide_exact: inexact division");
        quo[k] = q;
        for (size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::invalid_argument("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(quo));
}

IntPolynomial IntPolynomial::divide_exact(const Int& c) const {
    if (c == 0) throw std::invalid_argument("division by zero");
    std::vector<Int> v(coeffs_);
    for (auto& x : v) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (r != 0) throw std::invalid_argument("divide_exact: inexact division");
        x = q;
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::pseudo_remainder(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("pseudo_remainder by zero");
    if (is_zero() || degree() < divisor.degree()) {
        // lc^ (delta+1) f, with delta+1 = max(deg f - deg divisor + 1, 0)
        return *this;
    }
    IntPolynomial r = *this;
    const Int& d = divisor.leading_coeff();
    long e = degree() - divisor.degree() + 1;
    while (!r.is_zero() && r.degree() >= divisor.degree()) {
        size_t sh = static_cast<size_t>(r.degree() - divisor.degree());
        IntPolynomial t = divisor * r.leading_coeff();
        std::vector<Int> shifted(sh, Int(0));
        shifted.insert(shifted.end(), t.coeffs_.begin(), t.coeffs_.end());
        r = r * d - IntPolynomial(std::move(shifted));
        --e;
    }
    if (e > 0) r = r * pow_int(d, static_cast<unsigned long>(e));
    return r;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs_int(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("undefined resultant");
    IntPolynomial a = f, b = g;
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (b.degree() == 0)
        return Int(sign) * pow_int(b.leading_coeff(),
                                   static_cast<unsigned long>(a.degree()));
    // Pull out contents: Res(ca A, cb B) = ca^deg B cb^deg A Res(A, B).
    Int ca = a.content(), cb = b.content();
    a = a.divide_exact(ca);
    b = b.divide_exact(cb);
    Int scale = pow_int(ca, static_cast<unsigned long>(b.degree())) *
                pow_int(cb, static_cast<unsigned long>(a.degree()));
    Int gg = 1, hh = 1;
    while (true) {
        long da = a.degree(), db = b.degree();
        long delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        IntPolynomial r = a.pseudo_remainder(b);
        if (r.is_zero()) return 0;
        a = b;
        b = r.divide_exact(gg * pow_int(hh, static_cast<unsigned long>(delta)));
        gg = a.leading_coeff();
        if (delta > 0) {
            // h <- g^delta / h^(delta-1)
            Int num = pow_int(gg, static_cast<unsigned long>(delta));
            Int den = pow_int(hh, static_cast<unsigned long>(delta - 1));
            Int q, rr;
            mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(),
                        den.get_mpz_t());
            if (rr != 0) throw std::logic_error("subresultant h-update inexact");
            hh = q;
        }
        if (b.degree() == 0) {
            long d = a.degree();
            // res(pp) = lc(b)^deg a / h^(deg a - 1)
            Int num = pow_int(b.leading_coeff(), static_cast<unsigned long>(d));
            Int den = pow_int(hh, static_cast<unsigned long>(d - 1));
            Int q, rr;
            mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(),
                        den.get_mpz_t());
            if (rr != 0) throw std::logic_error("subresultant final step inexact");
            return Int(sign) * scale * q;
        }
    }
}

IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero()) return g.is_zero() ? g : g.primitive_part();
    if (g.is_zero()) return f.primitive_part();
    IntPolynomial a = f.primitive_part(), b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    Int cg = gcd(f.content(), g.content());
    while (!b.is_zero()) {
        IntPolynomial r = a.pseudo_remainder(b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.leading_coeff() < 0) a = -a;
    return a * abs_int(cg);
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
    if (f.is_zero() || f.degree() == 0) return f;
    auto g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) return f.primitive_part();
    // f/g is primitive up to content
    return f.primitive_part().divide_exact(g).primitive_part();
}

IntPolynomial cyclotomic(unsigned long n) {
    if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
    // Phi_n(x) = Phi_rad(n)(x^(n/rad)); for squarefree m with primes p_1..p_k,
    // iterate f <- f(x^p)/f(x).
    uint64_t rad = 1;
    auto ps = prime_divisors_u64(n);
    for (auto p : ps) rad *= p;
    IntPolynomial f({-1, 1});  // x - 1
    for (auto p : ps)
        f = f.compose_power(static_cast<unsigned long>(p)).divide_exact(f);
    return f.compose_power(static_cast<unsigned long>(n / rad));
}

std::optional<unsigned long> cyclotomic_index(const IntPolynomial& f) {
    if (f.is_zero() || f.degree() < 1) return std::nullopt;
    if (f.leading_coeff() != 1) return std::nullopt;
    if (f.coeff(0) != 1 && f.coeff(0) != -1) return std::nullopt;
    auto d = static_cast<uint64_t>(f.degree());
    if (d > 1 && d % 2 == 1) return std::nullopt;  // phi(m) is even for m >= 3
    // phi(m) >= sqrt(m/2), so phi(m) = d forces m <= 2 d^2 + 1.
    uint64_t bound = 2 * d * d + 1;
    std::vector<uint32_t> phi(bound + 1);
    for (uint32_t i = 0; i <= bound; ++i) phi[i] = i;
    for (uint64_t p = 2; p <= bound; ++p) {
        if (phi[p] != p) continue;  // p composite already touched
        for (uint64_t j = p; j <= bound; j += p) phi[j] -= phi[j] / p;
    }
    for (uint64_t m = 1; m <= bound; ++m) {
        if (phi[m] != d) continue;
        if (f == cyclotomic(static_cast<unsigned long>(m))) return m;
    }
    return std::nullopt;
}

}  // namespace tlab
