#include "tlab/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tlab {

Int PrimeFactorization::recompose() const {
    Int n = 1;
    for (const auto& [p, e] : factors) n *= pow_int(p, e);
    return n;
}

bool PrimeFactorization::divides_into(const Int& n) const {
    return n % recompose() == 0;
}

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> table = [] {
        const uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<uint32_t> primes;
        for (uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return primes;
    }();
    return table;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

namespace {

// Brent's cycle-finding variant of Pollard rho with deterministic restarts.
// Returns a nontrivial factor of composite n, or nullopt if the iteration
// budget runs out.
std::optional<Int> brent_rho(const Int& n, uint64_t budget) {
    if (n % 2 == 0) return Int(2);
    for (Int c = 1; c <= 20; ++c) {
        Int y = 2, g = 1, q = 1, x, ys;
        uint64_t r = 1, spent = 0;
        const uint64_t batch = 128;
        while (g == 1 && spent < budget) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
            uint64_t k = 0;
            while (k < r && g == 1 && spent < budget) {
                ys = y;
                uint64_t steps = std::min(batch, r - k);
                for (uint64_t i = 0; i < steps; ++i) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    q = q * abs_int(d) % n;
                }
                spent += steps;
                g = gcd(q, n);
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one multiplication at a time.
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs_int(x - ys), n);
            }
        }
        if (g != 1 && g != n) return g;
    }
    return std::nullopt;
}

void split_into(const Int& n, uint64_t budget,
                std::map<Int, unsigned>& primes, Int& remnant) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes[n] += 1;
        return;
    }
    // Perfect powers first: rho behaves poorly on p^2.
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= bit_length(n); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                for (unsigned long i = 0; i < k; ++i)
                    split_into(root, budget, primes, remnant);
                return;
            }
        }
    }
    auto d = brent_rho(n, budget);
    if (!d) {
        remnant *= n;
        return;
    }
    split_into(*d, budget, primes, remnant);
    split_into(n / *d, budget, primes, remnant);
}

PartialFactorization factor_core(const Int& n, uint64_t rho_budget) {
    if (n < 1) throw std::invalid_argument("factor: argument must be >= 1");
    PartialFactorization out;
    if (n == 1) return out;
    Int m = n;
    std::map<Int, unsigned> primes;
    for (uint32_t p : small_primes()) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            primes[Int(p)] += 1;
        }
        if (m == 1) break;
    }
    if (m > 1) split_into(m, rho_budget, primes, out.remnant);
    for (auto& [p, e] : primes) out.factored.factors.emplace_back(p, e);
    return out;
}

}  // namespace

PrimeFactorization factor(const Int& n) {
    auto pf = factor_core(n, uint64_t(1) << 26);
    if (!pf.complete())
        throw std::runtime_error("factor: cofactor resisted splitting: " +
                                 pf.remnant.get_str());
    return pf.factored;
}

PartialFactorization factor_bounded(const Int& n, uint64_t rho_budget) {
    return factor_core(n, rho_budget);
}

std::pair<std::vector<long>, Int> strip_primes(const Int& n,
                                               const std::vector<Int>& primes) {
    Int m = n;
    std::vector<long> exps;
    exps.reserve(primes.size());
    for (const Int& p : primes) {
        auto [cof, e] = remove_factor(m, p);
        m = cof;
        exps.push_back(e);
    }
    return {exps, m};
}

ArithFunctions arith_functions(const Int& n) {
    auto pf = factor(n);
    ArithFunctions f{1, 1, 0, 1};
    f.omega = static_cast<unsigned>(pf.factors.size());
    bool squarefree = true;
    for (const auto& [p, e] : pf.factors) {
        f.phi *= pow_int(p, e - 1) * (p - 1);
        f.divisor_count *= e + 1;
        if (e > 1) squarefree = false;
    }
    f.mobius = !squarefree ? 0 : (f.omega % 2 == 0 ? 1 : -1);
    return f;
}

uint64_t euler_phi_u64(uint64_t n) {
    return mpz_get_ui(arith_functions(Int(static_cast<unsigned long>(n))).phi.get_mpz_t());
}

uint64_t divisor_count_u64(uint64_t n) {
    return mpz_get_ui(
        arith_functions(Int(static_cast<unsigned long>(n))).divisor_count.get_mpz_t());
}

int mobius_u64(uint64_t n) {
    return arith_functions(Int(static_cast<unsigned long>(n))).mobius;
}

std::vector<uint64_t> divisors_u64(uint64_t n) {
    auto pf = factor(Int(static_cast<unsigned long>(n)));
    std::vector<uint64_t> divs{1};
    for (const auto& [p, e] : pf.factors) {
        uint64_t pu = mpz_get_ui(p.get_mpz_t());
        size_t base = divs.size();
        uint64_t pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= pu;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<uint64_t> prime_divisors_u64(uint64_t n) {
    auto pf = factor(Int(static_cast<unsigned long>(n)));
    std::vector<uint64_t> ps;
    for (const auto& [p, e] : pf.factors) ps.push_back(mpz_get_ui(p.get_mpz_t()));
    return ps;
}

uint64_t multiplicative_order(const Int& a, uint64_t p) {
    Int pz(static_cast<unsigned long>(p));
    if (gcd(a, pz) != 1)
        throw std::invalid_argument("multiplicative_order: a not a unit mod p");
    uint64_t order = p - 1;
    for (uint64_t q : prime_divisors_u64(p - 1)) {
        while (order % q == 0) {
            Int r;
            Int e(static_cast<unsigned long>(order / q));
            mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
            if (r == 1)
                order /= q;
            else
                break;
        }
    }
    return order;
}

}  // namespace tlab
