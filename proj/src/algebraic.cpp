#include "tlab/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "tlab/factor.hpp"

namespace tlab {

namespace {

/// Yun's algorithm: squarefree factors with their multiplicities.
std::vector<std::pair<IntPolynomial, int>> yun_squarefree(const IntPolynomial& f) {
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial a = f.primitive_part();
    if (a.degree() < 1) return out;
    IntPolynomial g = poly_gcd(a, a.derivative()).primitive_part();
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    IntPolynomial b = a.divide_exact(g);
    IntPolynomial c = a.derivative().divide_exact(g);
    IntPolynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        IntPolynomial ai = poly_gcd(b, d).primitive_part();
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = b.divide_exact(ai);
        c = d.divide_exact(ai);
        d = c - b.derivative();
    }
    return out;
}

std::vector<std::complex<double>> coeffs_to_double(const IntPolynomial& f) {
    // Uniform power-of-two scaling keeps the roots unchanged and every
    // coefficient within double range.
    long maxbits = 0;
    for (const auto& c : f.coeffs())
        maxbits = std::max(maxbits, static_cast<long>(bit_length(c)));
    long shift = maxbits > 900 ? maxbits - 900 : 0;
    std::vector<std::complex<double>> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Int s;
        mpz_tdiv_q_2exp(s.get_mpz_t(), c.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        out.emplace_back(mpz_get_d(s.get_mpz_t()), 0.0);
    }
    return out;
}

template <typename C, typename S>
C horner(const std::vector<S>& coeffs, const C& z) {
    C acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + C(*it);
    return acc;
}

template <typename S>
std::vector<S> derivative_coeffs(const std::vector<S>& c) {
    std::vector<S> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * S(static_cast<double>(i)));
    return d;
}

double fujiwara_radius(const std::vector<std::complex<double>>& c) {
    const size_t n = c.size() - 1;
    double lead = std::abs(c[n]);
    double r = 0;
    for (size_t i = 0; i < n; ++i) {
        if (c[i] == std::complex<double>(0)) continue;
        double t = std::pow(std::abs(c[i]) / lead, 1.0 / double(n - i));
        r = std::max(r, t);
    }
    return 2 * r + 1e-6;
}

// Aberth-Ehrlich over double from deterministic seeds. Returns false on
// non-convergence.
bool aberth_double(const std::vector<std::complex<double>>& cf,
                   std::vector<std::complex<double>>& z) {
    const size_t n = cf.size() - 1;
    auto dcf = derivative_coeffs(cf);
    double R = fujiwara_radius(cf);
    z.resize(n);
    for (size_t k = 0; k < n; ++k) {
        double th = 2 * M_PI * (double(k) + 0.35) / double(n);
        double rk = R * (0.6 + 0.05 * double(k % 7));
        z[k] = {rk * std::cos(th), rk * std::sin(th)};
    }
    for (int sweep = 0; sweep < 400; ++sweep) {
        double worst = 0;
        for (size_t k = 0; k < n; ++k) {
            auto fz = horner(cf, z[k]);
            auto dfz = horner(dcf, z[k]);
            if (std::abs(fz) == 0) continue;
            if (std::abs(dfz) == 0) {
                z[k] += std::complex<double>(1e-3, 1.3e-3);
                worst = 1;
                continue;
            }
            auto nk = fz / dfz;
            std::complex<double> s = 0;
            for (size_t j = 0; j < n; ++j)
                if (j != k) s += 1.0 / (z[k] - z[j]);
            auto den = 1.0 - nk * s;
            auto w = std::abs(den) == 0 ? nk : nk / den;
            z[k] -= w;
            if (!std::isfinite(z[k].real()) || !std::isfinite(z[k].imag()))
                return false;
            worst = std::max(worst, std::abs(w));
        }
        if (worst < 1e-13 * (1 + R)) return true;
    }
    return false;
}

// Full multiprecision Aberth, used as a fallback.
bool aberth_mp(const std::vector<Real>& cf, std::vector<Cplx>& z) {
    const size_t n = cf.size() - 1;
    auto dcf = derivative_coeffs(cf);
    if (z.size() != n) {
        z.resize(n);
        Real R = 2;
        for (size_t k = 0; k < n; ++k) {
            Real th = 2 * mp_pi() * (Real(static_cast<unsigned>(k)) + Real("0.35")) /
                      Real(static_cast<unsigned>(n));
            z[k] = Cplx(R * cos(th), R * sin(th));
        }
    }
    const Real eps("1e-46");
    for (int sweep = 0; sweep < 500; ++sweep) {
        Real worst = 0;
        for (size_t k = 0; k < n; ++k) {
            Cplx fz = horner(cf, z[k]);
            Cplx dfz = horner(dcf, z[k]);
            if (fz == Cplx(0)) continue;
            if (dfz == Cplx(0)) {
                z[k] += Cplx(Real("1e-3"), Real("1.3e-3"));
                worst = 1;
                continue;
            }
            Cplx nk = fz / dfz;
            Cplx s(0);
            for (size_t j = 0; j < n; ++j)
                if (j != k) s += Cplx(1) / (z[k] - z[j]);
            Cplx den = Cplx(1) - nk * s;
            Cplx w = den == Cplx(0) ? nk : nk / den;
            z[k] -= w;
            Real rel = abs(w) / (1 + abs(z[k]));
            if (rel > worst) worst = rel;
        }
        if (worst < eps) return true;
    }
    return false;
}

void newton_polish(const std::vector<Real>& cf, const std::vector<Real>& dcf,
                   Cplx& z) {
    const Real eps("1e-46");
    for (int i = 0; i < 60; ++i) {
        Cplx fz = horner(cf, z);
        if (fz == Cplx(0)) return;
        Cplx dfz = horner(dcf, z);
        if (dfz == Cplx(0)) return;
        Cplx step = fz / dfz;
        z -= step;
        if (abs(step) < eps * (1 + abs(z))) return;
    }
}

struct Certified {
    std::vector<CertifiedRoot> roots;
    bool ok = false;
};

Certified certify(const std::vector<Real>& cf, const std::vector<Real>& dcf,
                  const std::vector<Cplx>& z, const Real& tol, int mult) {
    Certified out;
    const auto n = static_cast<unsigned>(cf.size() - 1);
    for (const auto& zk : z) {
        Cplx fz = horner(cf, zk);
        Cplx dfz = horner(dcf, zk);
        if (dfz == Cplx(0) && fz != Cplx(0)) return out;
        Real r = dfz == Cplx(0) ? Real(0) : Real(n) * abs(fz) / abs(dfz);
        if (!(r < tol)) return out;
        out.roots.push_back({zk, r, mult});
    }
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            if (!(abs(z[i] - z[j]) > out.roots[i].radius + out.roots[j].radius))
                return out;
    out.ok = true;
    return out;
}

std::vector<CertifiedRoot> roots_of_squarefree(const IntPolynomial& g,
                                               const Real& tol, int mult) {
    const long n = g.degree();
    if (n == 1) {
        // exact rational root
        Rat r = make_rat(-g.coeff(0), g.coeff(1));
        return {{Cplx(to_real(r), Real(0)), Real(0), mult}};
    }
    std::vector<Real> cf;
    for (const auto& c : g.coeffs()) cf.push_back(to_real(c));
    auto dcf = derivative_coeffs(cf);

    auto cd = coeffs_to_double(g);
    std::vector<std::complex<double>> zd;
    std::vector<Cplx> z;
    if (aberth_double(cd, zd)) {
        z.reserve(zd.size());
        for (auto& w : zd) z.emplace_back(Real(w.real()), Real(w.imag()));
        for (auto& w : z) newton_polish(cf, dcf, w);
        auto cert = certify(cf, dcf, z, tol, mult);
        if (cert.ok) return cert.roots;
    }
    z.clear();
    if (aberth_mp(cf, z)) {
        for (auto& w : z) newton_polish(cf, dcf, w);
        auto cert = certify(cf, dcf, z, tol, mult);
        if (cert.ok) return cert.roots;
        throw RootFindingError("complex_roots: certification failed", cert.roots);
    }
    throw RootFindingError("complex_roots: iteration cap reached", {});
}

}  // namespace

std::vector<CertifiedRoot> complex_roots(const IntPolynomial& f, const Real& tol) {
    if (f.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
    if (tol <= 0) throw std::invalid_argument("complex_roots: tol must be positive");
    std::vector<CertifiedRoot> out;
    if (f.degree() == 0) return out;

    // peel off x^k
    size_t k = 0;
    while (f.coeff(k) == 0) ++k;
    if (k > 0) out.push_back({Cplx(0), Real(0), static_cast<int>(k)});
    std::vector<Int> rest(f.coeffs().begin() + static_cast<long>(k), f.coeffs().end());
    IntPolynomial h{std::move(rest)};
    if (h.degree() >= 1) {
        for (const auto& [g, mult] : yun_squarefree(h)) {
            auto part = roots_of_squarefree(g, tol, mult);
            out.insert(out.end(), part.begin(), part.end());
        }
    }
    std::sort(out.begin(), out.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

Real mahler_measure(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
    Real m = log(abs(to_real(f.leading_coeff())));
    if (f.degree() == 0) return m;
    for (const auto& r : complex_roots(f, Real("1e-35"))) {
        Real a = abs(r.value);
        if (a > 1) m += Real(r.multiplicity) * log(a);
    }
    return m;
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& r) {
    IntPolynomial mp({Int(-r.get_num()), Int(r.get_den())});
    std::vector<CertifiedRoot> roots{{Cplx(to_real(r), Real(0)), Real(0), 1}};
    return AlgebraicNumber(std::move(mp), std::move(roots), 0);
}

AlgebraicNumber AlgebraicNumber::from_minpoly(const IntPolynomial& minpoly,
                                              const Cplx& near) {
    if (minpoly.degree() < 1)
        throw std::invalid_argument("AlgebraicNumber: constant minimal polynomial");
    auto roots = complex_roots(minpoly, Real("1e-40"));
    size_t best = 0;
    Real bestd = abs(roots[0].value - near);
    for (size_t i = 1; i < roots.size(); ++i) {
        Real d = abs(roots[i].value - near);
        if (d < bestd) {
            bestd = d;
            best = i;
        }
    }
    return AlgebraicNumber(minpoly.primitive_part(), std::move(roots), best);
}

AlgebraicNumber AlgebraicNumber::from_minpoly_real_root(const IntPolynomial& minpoly) {
    auto roots = complex_roots(minpoly, Real("1e-40"));
    std::optional<size_t> found;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (abs(roots[i].value.imag()) <= roots[i].radius) {
            if (found) throw std::invalid_argument("minpoly has several real roots");
            found = i;
        }
    }
    if (!found) throw std::invalid_argument("minpoly has no real root");
    return AlgebraicNumber(minpoly.primitive_part(), std::move(roots), *found);
}

Rat AlgebraicNumber::as_rational() const {
    if (!is_rational()) throw std::logic_error("as_rational on irrational number");
    return make_rat(-minpoly_.coeff(0), minpoly_.coeff(1));
}

bool AlgebraicNumber::is_zero() const {
    return is_rational() && minpoly_.coeff(0) == 0;
}

std::optional<unsigned long> AlgebraicNumber::root_of_unity_order() const {
    if (!is_algebraic_integer()) return std::nullopt;
    return cyclotomic_index(minpoly_);
}

Real naive_height(const AlgebraicNumber& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("naive_height of zero");
    if (alpha.root_of_unity_order()) return Real(0);
    return mahler_measure(alpha.minpoly()) / Real(static_cast<long>(alpha.degree()));
}

}  // namespace tlab
