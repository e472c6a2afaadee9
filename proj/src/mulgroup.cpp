#include "tlab/mulgroup.hpp"

#include <stdexcept>

#include "tlab/mod_poly.hpp"

namespace tlab::mulgroup {

namespace {

void require_positive_height(const AlgebraicNumber& alpha) {
    if (alpha.is_zero() || alpha.root_of_unity_order())
        throw std::invalid_argument("hypothesis of Theorem 1 violated: h(alpha) = 0");
}

}  // namespace

std::vector<SIntegralityVerdict> s_integral_scan(const AlgebraicNumber& alpha,
                                                 const PlaceSet& S,
                                                 unsigned long n_min,
                                                 unsigned long n_max,
                                                 uint64_t rho_budget) {
    require_positive_height(alpha);
    const IntPolynomial& f = alpha.minpoly();
    std::vector<Int> lead_primes;
    for (const auto& [p, e] : factor(abs_int(f.leading_coeff())).factors)
        lead_primes.push_back(p);

    std::vector<SIntegralityVerdict> out;
    for (unsigned long n = n_min; n <= n_max; ++n) {
        IntPolynomial phi = cyclotomic(n);
        SIntegralityVerdict v;
        v.n = n;
        Int res = abs_int(resultant(f, phi));
        // f irreducible and not cyclotomic, so res >= 1
        bool outside_collision = false;

        // Primes of S and of lc(f): collision decided by the gcd witness.
        std::vector<Int> tested;
        for (const Int& p : S.finite_primes()) tested.push_back(p);
        for (const Int& p : lead_primes)
            if (!S.contains(p)) tested.push_back(p);
        for (const Int& p : tested) {
            long d = common_factor_degree_mod_p(f, phi, p);
            if (d > 0) {
                v.collisions.push_back({p, d});
                if (!S.contains(p)) outside_collision = true;
            }
        }

        // Everything else dividing the resultant collides: p | Res and
        // p coprime to lc(f) force a common factor mod p.
        auto [exps, cof] = strip_primes(res, [&] {
            std::vector<Int> all(S.finite_primes());
            all.insert(all.end(), lead_primes.begin(), lead_primes.end());
            return all;
        }());
        (void)exps;
        if (cof > 1) {
            outside_collision = true;
            auto pf = factor_bounded(cof, rho_budget);
            for (const auto& [p, e] : pf.factored.factors) {
                long d = common_factor_degree_mod_p(f, phi, p);
                v.collisions.push_back({p, d});
            }
            v.unfactored_cofactor = pf.remnant;
        }
        v.integral = !outside_collision;
        std::sort(v.collisions.begin(), v.collisions.end(),
                  [](const CollisionWitness& a, const CollisionWitness& b) {
                      return a.prime < b.prime;
                  });
        out.push_back(std::move(v));
    }
    return out;
}

PlaceDecomposition place_decomposition(const Rat& alpha, unsigned long n,
                                       uint64_t rho_budget) {
    if (alpha == 0 || alpha == 1 || alpha == -1)
        throw std::invalid_argument("place_decomposition: alpha must avoid {0, +1, -1}");
    Int a = alpha.get_num(), b = alpha.get_den();
    IntPolynomial phi = cyclotomic(n);
    unsigned long deg = static_cast<unsigned long>(phi.degree());
    Int value = phi.evaluate_hom(a, b);  // b^phi(n) * Phi_n(alpha)
    if (value == 0)
        throw std::invalid_argument("place_decomposition: alpha is a root of unity");
    Int bpow = pow_int(b, deg);

    PlaceDecomposition out;
    out.n = n;
    out.arch_magnitude = make_rat(abs_int(value), abs_int(bpow));

    // prime support of value and b
    auto pf_v = factor_bounded(abs_int(value), rho_budget);
    auto pf_b = factor(abs_int(b));  // denominators stay small at desk scale
    std::vector<std::pair<Int, long>> ords;
    for (const auto& [p, e] : pf_v.factored.factors) ords.emplace_back(p, long(e));
    for (const auto& [p, e] : pf_b.factors) {
        bool seen = false;
        for (auto& [q, o] : ords)
            if (q == p) {
                seen = true;
                break;
            }
        long drop = -long(e) * long(deg);
        if (!seen) ords.emplace_back(p, drop);
        else
            for (auto& [q, o] : ords)
                if (q == p) o += drop;
    }
    std::sort(ords.begin(), ords.end());
    out.finite_ords = std::move(ords);
    if (pf_v.remnant != 1) out.composite_bundles.emplace_back(pf_v.remnant, 1);

    // Exact product-formula check: |value|/b^deg == prod p^e * prod bundles.
    Rat recombined(1);
    for (const auto& [p, e] : out.finite_ords) {
        if (e >= 0)
            recombined *= Rat(pow_int(p, static_cast<unsigned long>(e)));
        else
            recombined /= Rat(pow_int(p, static_cast<unsigned long>(-e)));
    }
    for (const auto& [c, e] : out.composite_bundles)
        recombined *= Rat(pow_int(c, static_cast<unsigned long>(e)));
    recombined.canonicalize();
    out.total_exactly_zero = (recombined == out.arch_magnitude);
    return out;
}

std::vector<LocalAverageEntry> local_average_series(const Rat& alpha, const Place& v,
                                                    const std::vector<unsigned long>& ns) {
    if (alpha == 0)
        throw std::invalid_argument("local_average_series: alpha must be nonzero");
    {
        AlgebraicNumber a = AlgebraicNumber::from_rational(alpha);
        if (a.root_of_unity_order())
            throw std::invalid_argument("local_average_series: alpha is a root of unity");
    }
    Int a = alpha.get_num(), b = alpha.get_den();
    std::vector<LocalAverageEntry> out;
    for (unsigned long n : ns) {
        IntPolynomial phi = cyclotomic(n);
        auto deg = static_cast<unsigned long>(phi.degree());
        Int value = phi.evaluate_hom(a, b);
        LocalAverageEntry e;
        e.n = n;
        if (v.archimedean) {
            e.value = (log_abs_mp(value) - Real(deg) * log_abs_mp(b)) / Real(deg);
            Real la = log_abs_mp(alpha);
            e.limit_target = la > 0 ? la : Real(0);
            e.exact_match = false;
        } else {
            const Int& p = v.prime;
            long ordv = ord_p(value, p) - long(deg) * ord_p(b, p);
            long target_ord = std::max(0L, -ord_p(alpha, p));
            Real logp = log_abs_mp(p);
            e.value = Real(-ordv) * logp / Real(deg);
            e.limit_target = Real(target_ord) * logp;
            e.exact_match = (-ordv == long(deg) * target_ord);
        }
        out.push_back(std::move(e));
    }
    return out;
}

MahlerReport everest_ward(const IntPolynomial& F, unsigned long n_max) {
    if (F.is_zero() || F.degree() < 1 || F.leading_coeff() != 1)
        throw std::invalid_argument("everest_ward: F must be monic of positive degree");
    if (F == IntPolynomial({0, 1}) || cyclotomic_index(F))
        throw std::invalid_argument("excluded by hypothesis: F is x or cyclotomic");
    MahlerReport rep;
    rep.F = F;
    rep.mahler = mahler_measure(F);
    for (unsigned long n = 1; n <= n_max; ++n) {
        Int d = abs_int(resultant(F, IntPolynomial::xn_minus_1(n)));
        rep.ns.push_back(n);
        rep.normalized.push_back(log_abs_mp(d) / Real(n));
        rep.delta.push_back(std::move(d));
    }
    return rep;
}

std::vector<unsigned long> cyclotomic_unit_scan(const AlgebraicNumber& alpha,
                                                unsigned long m_max) {
    if (!alpha.is_algebraic_integer())
        throw std::invalid_argument(
            "cyclotomic_unit_scan: unit question requires an algebraic integer");
    require_positive_height(alpha);
    std::vector<unsigned long> out;
    for (unsigned long m = 1; m <= m_max; ++m)
        if (abs_int(resultant(alpha.minpoly(), cyclotomic(m))) == 1) out.push_back(m);
    return out;
}

std::vector<SmallPointFamily> small_point_family(unsigned long n_max) {
    n_max = std::min<unsigned long>(n_max, 10);
    std::vector<SmallPointFamily> out;
    for (unsigned long n = 1; n <= n_max; ++n) {
        unsigned long deg2 = 1ul << n;  // 2^n
        std::vector<Int> c(deg2 + 2, Int(0));
        c[0] = -1;
        c[deg2] = -2;
        c[deg2 + 1] = 1;
        SmallPointFamily m;
        m.n = n;
        m.f = IntPolynomial(std::move(c));
        m.unit_at_0 = abs_int(m.f.evaluate(Int(0)));
        m.unit_at_2 = abs_int(m.f.evaluate(Int(2)));
        m.height = mahler_measure(m.f) / Real(static_cast<unsigned long>(m.f.degree()));
        m.certificate = "unverified";
        if (deg2 + 1 <= 40) {
            for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
                if (irreducible_mod_p(m.f, Int(p))) {
                    m.certificate = "irreducible mod " + std::to_string(p);
                    break;
                }
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace tlab::mulgroup
