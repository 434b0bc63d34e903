#include "solzeta/factor.hpp"

#include <algorithm>
#include <map>

#include "solzeta/exact.hpp"

namespace solzeta {

BigInt Factorization::recompose() const {
    BigInt n = cofactor;
    for (const auto& [p, e] : factors) n *= int_pow(p, e);
    return n;
}

namespace {

// Brent's cycle-finding variant of Pollard rho. Deterministic: the
// polynomial increment starts at 1 and is bumped on failure, so results
// are reproducible run to run. Returns a nontrivial factor or 0 when the
// iteration budget is exhausted.
BigInt brent_rho(const BigInt& n, unsigned long& budget) {
    for (BigInt c(1); budget > 0; ++c) {
        BigInt x(2), y(2), d(1);
        BigInt ys, q(1);
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            unsigned long k = 0;
            while (k < r && d == 1 && budget > 0) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                    --budget;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time; bounded so a degenerate cycle
            // cannot spin forever
            d = 1;
            for (unsigned long i = 0; i < (1u << 20) && d == 1; ++i) {
                ys = (ys * ys + c) % n;
                BigInt diff = abs(x - ys);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n && d != 1) return d;
        // cycle degenerated for this c; retry with the next increment
    }
    return 0;
}

void factor_rec(const BigInt& n, std::map<BigInt, unsigned>& out, BigInt& leftover,
                unsigned long& budget) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        factor_rec(root, out, leftover, budget);
        factor_rec(root, out, leftover, budget);
        return;
    }
    BigInt d = brent_rho(n, budget);
    if (d == 0) {
        leftover *= n;
        return;
    }
    factor_rec(d, out, leftover, budget);
    factor_rec(BigInt(n / d), out, leftover, budget);
}

}  // namespace

Factorization factorize(const BigInt& n, const FactorOptions& opt) {
    if (n < 1) throw std::domain_error("factorize: input must be >= 1");
    Factorization result;
    if (n == 1) return result;

    std::map<BigInt, unsigned> found;
    BigInt m = n;
    unsigned long cnt = static_cast<unsigned long>(mpz_remove(
        m.get_mpz_t(), m.get_mpz_t(), BigInt(2).get_mpz_t()));
    if (cnt) found[2] = static_cast<unsigned>(cnt);
    for (unsigned long p = 3; p <= opt.trial_limit && m > 1; p += 2) {
        if (p * p > m && m > 1) {
            // remaining part is prime
            found[m] += 1;
            m = 1;
            break;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            BigInt bp(p);
            cnt = static_cast<unsigned long>(
                mpz_remove(m.get_mpz_t(), m.get_mpz_t(), bp.get_mpz_t()));
            found[bp] = static_cast<unsigned>(cnt);
        }
    }
    if (m > 1) {
        BigInt leftover(1);
        unsigned long budget = opt.rho_budget;
        factor_rec(m, found, leftover, budget);
        if (leftover != 1) {
            result.cofactor = leftover;
            result.complete = false;
        }
    }
    result.factors.assign(found.begin(), found.end());
    return result;
}

}  // namespace solzeta
