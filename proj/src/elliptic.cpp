#include "tlab/elliptic.hpp"

#include <sstream>
#include <stdexcept>

#include "tlab/mod_poly.hpp"

namespace tlab::ell {

namespace {

Int mod_norm(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

// Singular point of the reduced curve mod p (assumes p | Delta).
std::pair<Int, Int> singular_point_mod_p(const WeierstrassCurve& E, const Int& p) {
    auto on = [&](const Int& x, const Int& y) {
        Int f = y * y + E.a1 * x * y + E.a3 * y - x * x * x - E.a2 * x * x -
                E.a4 * x - E.a6;
        Int fx = E.a1 * y - 3 * x * x - 2 * E.a2 * x - E.a4;
        Int fy = 2 * y + E.a1 * x + E.a3;
        return f % p == 0 && fx % p == 0 && fy % p == 0;
    };
    if (p <= 3) {
        for (Int x = 0; x < p; ++x)
            for (Int y = 0; y < p; ++y)
                if (on(x, y)) return {x, y};
        throw std::logic_error("singular point not found at small p");
    }
    // complete the square: eta^2 = g(x)/4 with g = 4x^3+b2x^2+2b4x+b6;
    // the node is the double root of g mod p.
    ModPoly g = ModPoly::reduce(E.two_torsion_poly(), p);
    ModPoly d = mod_gcd(g, g.derivative());
    if (d.degree() != 1)
        throw std::logic_error("multiplicative reduction expected a unique double root");
    Int x0 = mod_norm(-d.coeff(0) * [&] {
        Int inv;
        mpz_invert(inv.get_mpz_t(), d.coeff(1).get_mpz_t(), p.get_mpz_t());
        return inv;
    }(), p);
    Int inv2;
    mpz_invert(inv2.get_mpz_t(), Int(2).get_mpz_t(), p.get_mpz_t());
    Int y0 = mod_norm(-(E.a1 * x0 + E.a3) * inv2, p);
    if (!on(x0, y0)) throw std::logic_error("singular point reconstruction failed");
    return {x0, y0};
}

// Number of roots of T^2 + a1 T - (3 x0 + a2) over F_p decides split/nonsplit.
bool tangents_split(const WeierstrassCurve& E, const Int& p, const Int& x0) {
    Int c = mod_norm(3 * x0 + E.a2, p);
    if (p == 2) {
        int roots = 0;
        for (Int t = 0; t < 2; ++t)
            if ((t * t + E.a1 * t - c) % 2 == 0) ++roots;
        return roots == 2;
    }
    Int discq = mod_norm(E.a1 * E.a1 + 4 * c, p);
    if (discq == 0) throw std::logic_error("node expected distinct tangents");
    return mpz_legendre(discq.get_mpz_t(), p.get_mpz_t()) == 1;
}

}  // namespace

WeierstrassCurve::WeierstrassCurve(Int a1_, Int a2_, Int a3_, Int a4_, Int a6_)
    : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)),
      a6(std::move(a6_)) {
    b2 = a1 * a1 + 4 * a2;
    b4 = 2 * a4 + a1 * a3;
    b6 = a3 * a3 + 4 * a6;
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    c4 = b2 * b2 - 24 * b4;
    c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (disc == 0) throw std::invalid_argument("singular curve");
    if (4 * b8 != b2 * b6 - b4 * b4 || 1728 * disc != c4 * c4 * c4 - c6 * c6)
        throw std::logic_error("b/c invariant identities failed");
    j = make_rat(c4 * c4 * c4, disc);

    for (const auto& [p, e] : factor(abs_int(disc)).factors) {
        ReductionAt r;
        r.p = p;
        r.ord_disc = static_cast<long>(e);
        if (c4 % p != 0) {
            auto [x0, y0] = singular_point_mod_p(*this, p);
            (void)y0;
            r.type = tangents_split(*this, p, x0) ? Reduction::split_multiplicative
                                                  : Reduction::nonsplit_multiplicative;
        } else {
            r.type = Reduction::additive;
        }
        bad_.push_back(std::move(r));

        bool cand;
        if (c4 != 0)
            cand = ord_p(c4, p) >= 4 && (c6 == 0 || ord_p(c6, p) >= 6);
        else
            cand = (c6 == 0 || ord_p(c6, p) >= 6) && ord_p(disc, p) >= 12;
        if (cand && ord_p(disc, p) >= 12) minimal_ = false;
    }
}

Reduction WeierstrassCurve::reduction_at(const Int& p) const {
    for (const auto& r : bad_)
        if (r.p == p) return r.type;
    return Reduction::good;
}

bool WeierstrassCurve::is_on_curve(const Rat& x, const Rat& y) const {
    Rat lhs = y * y + Rat(a1) * x * y + Rat(a3) * y;
    Rat rhs = x * x * x + Rat(a2) * x * x + Rat(a4) * x + Rat(a6);
    return lhs == rhs;
}

const Rat& CurvePoint::x() const {
    if (infinity_) throw std::logic_error("x() of the point at infinity");
    return x_;
}

const Rat& CurvePoint::y() const {
    if (infinity_) throw std::logic_error("y() of the point at infinity");
    return y_;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (infinity_ || o.infinity_) return infinity_ == o.infinity_;
    return x_ == o.x_ && y_ == o.y_;
}

CurvePoint WeierstrassCurve::negate(const CurvePoint& P) const {
    if (P.is_infinity()) return P;
    return {P.x(), -P.y() - Rat(a1) * P.x() - Rat(a3)};
}

CurvePoint WeierstrassCurve::add(const CurvePoint& P, const CurvePoint& Q) const {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (!is_on_curve(P.x(), P.y()) || !is_on_curve(Q.x(), Q.y()))
        throw std::invalid_argument("point not on curve");
    const Rat &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    Rat lambda;
    if (x1 == x2) {
        if (y1 + y2 + Rat(a1) * x2 + Rat(a3) == 0) return CurvePoint::origin();
        Rat num = 3 * x1 * x1 + 2 * Rat(a2) * x1 + Rat(a4) - Rat(a1) * y1;
        Rat den = 2 * y1 + Rat(a1) * x1 + Rat(a3);
        lambda = num / den;
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    Rat x3 = lambda * lambda + Rat(a1) * lambda - Rat(a2) - x1 - x2;
    Rat y3 = lambda * (x1 - x3) - y1 - Rat(a1) * x3 - Rat(a3);
    x3.canonicalize();
    y3.canonicalize();
    return {x3, y3};
}

CurvePoint WeierstrassCurve::multiply(const CurvePoint& P, long m) const {
    if (m == 0 || P.is_infinity()) return CurvePoint::origin();
    CurvePoint base = m > 0 ? P : negate(P);
    unsigned long k = static_cast<unsigned long>(m > 0 ? m : -m);
    CurvePoint acc = CurvePoint::origin();
    while (k > 0) {
        if (k & 1) acc = add(acc, base);
        k >>= 1;
        if (k) base = add(base, base);
    }
    return acc;
}

IntPolynomial WeierstrassCurve::two_torsion_poly() const {
    return IntPolynomial({b6, 2 * b4, b2, Int(4)});
}

WeierstrassCurve curve_from_string(const std::string& text) {
    std::istringstream is(text);
    std::vector<Int> a;
    std::string tok;
    while (is >> tok) a.emplace_back(tok);
    if (a.size() != 5)
        throw std::invalid_argument("curve descriptor needs `a1 a2 a3 a4 a6`");
    return {a[0], a[1], a[2], a[3], a[4]};
}

namespace {

// psi_n as poly(x) * B^(0 or 1) with B^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
struct Psi {
    IntPolynomial poly;
    int b = 0;
};

struct PsiTable {
    std::vector<Psi> t;
    IntPolynomial B2;

    Psi mul(const Psi& u, const Psi& v) const {
        Psi r;
        r.poly = u.poly * v.poly;
        r.b = u.b + v.b;
        while (r.b >= 2) {
            r.poly = r.poly * B2;
            r.b -= 2;
        }
        return r;
    }
    Psi sub(const Psi& u, const Psi& v) const {
        if (u.b != v.b) throw std::logic_error("psi parity mismatch");
        return {u.poly - v.poly, u.b};
    }
};

Psi psi_at(PsiTable& tab, size_t n);

void ensure(PsiTable& tab, size_t n) {
    while (tab.t.size() <= n) {
        size_t k = tab.t.size();
        size_t m = k / 2;
        if (k % 2 == 1) {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            Psi a = tab.mul(psi_at(tab, m + 2), tab.mul(psi_at(tab, m), tab.mul(psi_at(tab, m), psi_at(tab, m))));
            Psi b = tab.mul(psi_at(tab, m - 1), tab.mul(psi_at(tab, m + 1), tab.mul(psi_at(tab, m + 1), psi_at(tab, m + 1))));
            tab.t.push_back(tab.sub(a, b));
        } else {
            // psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / psi_2
            Psi a = tab.mul(psi_at(tab, m + 2), tab.mul(psi_at(tab, m - 1), psi_at(tab, m - 1)));
            Psi b = tab.mul(psi_at(tab, m - 2), tab.mul(psi_at(tab, m + 1), psi_at(tab, m + 1)));
            Psi s = tab.mul(psi_at(tab, m), tab.sub(a, b));
            // divide by psi_2 = B
            if (s.b == 1) {
                s.b = 0;
            } else {
                s.poly = s.poly.divide_exact(tab.B2);
                s.b = 1;
            }
            tab.t.push_back(std::move(s));
        }
    }
}

Psi psi_at(PsiTable& tab, size_t n) {
    ensure(tab, n);
    return tab.t[n];
}

}  // namespace

unsigned long exact_order_pair_count(unsigned long N) {
    Int num = Int(static_cast<unsigned long>(N)) * Int(static_cast<unsigned long>(N));
    for (uint64_t p : prime_divisors_u64(N)) {
        num /= Int(static_cast<unsigned long>(p * p));
        num *= Int(static_cast<unsigned long>(p * p - 1));
    }
    Int half = num / 2;
    if (half * 2 != num) throw std::logic_error("pair count not even");
    return mpz_get_ui(half.get_mpz_t());
}

DivisionPolynomialSet division_polynomials(const WeierstrassCurve& E, unsigned long N) {
    if (N < 1 || N > 64)
        throw std::invalid_argument("division_polynomials: N in [1, 64] supported");
    PsiTable tab;
    tab.B2 = E.two_torsion_poly();
    const Int& b2 = E.b2;
    const Int& b4 = E.b4;
    const Int& b6 = E.b6;
    const Int& b8 = E.b8;
    tab.t.push_back({IntPolynomial{}, 0});           // psi_0 = 0
    tab.t.push_back({IntPolynomial({1}), 0});        // psi_1
    tab.t.push_back({IntPolynomial({1}), 1});        // psi_2 = B
    tab.t.push_back({IntPolynomial({b8, 3 * b6, 3 * b4, b2, Int(3)}), 0});
    tab.t.push_back({IntPolynomial({b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8,
                                    10 * b6, 5 * b4, b2, Int(2)}),
                     1});  // psi_4 = B * (...)

    DivisionPolynomialSet out;
    out.N = N;
    if (N == 1) {
        out.psi_x_part = IntPolynomial({1});
        out.f = IntPolynomial({1});
        return out;
    }
    if (N == 2) {
        out.psi_x_part = tab.B2;
        out.f = tab.B2;
        return out;
    }
    Psi psiN = psi_at(tab, N);
    out.psi_x_part = psiN.poly;
    IntPolynomial f = psiN.poly;
    for (unsigned long d = 3; d < N; ++d)
        if (N % d == 0) f = f.divide_exact(division_polynomials(E, d).f);
    out.f = f;
    if (out.f.degree() != static_cast<long>(exact_order_pair_count(N)))
        throw std::logic_error("division polynomial degree check failed");
    return out;
}

std::vector<TorsionPoint> rational_torsion(const WeierstrassCurve& E) {
    // Work on w^2 = u^3 + b2 u^2 + 8 b4 u + 16 b6, u = 4x, w = 4(2y + a1 x + a3):
    // every torsion point of E maps to an integral point here (Cassels), and
    // Lutz-Nagell style w = 0 or w^2 | disc applies. A 2^6 margin keeps the
    // candidate set a superset regardless of normalization details.
    IntPolynomial cubic({16 * E.b6, 8 * E.b4, E.b2, Int(1)});
    Int disc_cubic = abs_int(resultant(cubic, cubic.derivative()));
    Int bound = disc_cubic * 64;

    std::vector<Int> w_candidates{0};
    // enumerate w with w^2 | bound
    Int w = 1;
    for (; w * w <= bound; ++w)
        if (bound % (w * w) == 0) w_candidates.push_back(w);

    auto lift = [&](const Int& u, const Int& ww) -> std::optional<CurvePoint> {
        Rat x = make_rat(u, 4);
        Rat Y = make_rat(ww, 4);
        Rat y = (Y - Rat(E.a1) * x - Rat(E.a3)) / 2;
        if (!E.is_on_curve(x, y)) return std::nullopt;
        return CurvePoint(x, y);
    };

    std::vector<TorsionPoint> found{{CurvePoint::origin(), 1}};
    auto consider = [&](const CurvePoint& P) {
        for (const auto& t : found)
            if (t.point == P) return;
        CurvePoint acc = P;
        unsigned long order = 1;
        while (!acc.is_infinity() && order <= 100) {
            acc = E.add(acc, P);
            ++order;
        }
        if (!acc.is_infinity()) return;  // not torsion
        found.push_back({P, order});
    };

    for (const Int& ww : w_candidates) {
        // integer roots of cubic(u) = ww^2
        IntPolynomial shifted = cubic - IntPolynomial({ww * ww});
        Int c0 = shifted.coeff(0);
        std::vector<Int> roots;
        if (c0 == 0) roots.push_back(0);
        Int lim = abs_int(c0);
        for (Int u = 1; u * u * u <= lim * 8 + 8; ++u) {
            if (c0 != 0 && c0 % u != 0) continue;
            if (shifted.evaluate(u) == 0) roots.push_back(u);
            if (shifted.evaluate(-u) == 0) roots.push_back(-u);
        }
        for (const Int& u : roots) {
            for (int sign = -1; sign <= 1; sign += 2) {
                auto P = lift(u, sign * ww);
                if (P) consider(*P);
                if (ww == 0) break;
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const TorsionPoint& a, const TorsionPoint& b) {
        if (a.order != b.order) return a.order < b.order;
        if (a.point.is_infinity() != b.point.is_infinity()) return a.point.is_infinity();
        if (a.point.is_infinity()) return false;
        if (a.point.x() != b.point.x()) return a.point.x() < b.point.x();
        return a.point.y() < b.point.y();
    });
    return found;
}

}  // namespace tlab::ell
