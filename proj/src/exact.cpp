#include "solzeta/exact.hpp"

#include <algorithm>
#include <sstream>

#include "solzeta/factor.hpp"

namespace solzeta {

BigRat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    BigRat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

PrimeSet::PrimeSet(std::vector<BigInt> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (const BigInt& p : primes_)
        if (!is_probable_prime(p))
            throw std::domain_error("PrimeSet: " + p.get_str() + " is not prime");
}

PrimeSet::PrimeSet(std::initializer_list<long> primes) : PrimeSet([&] {
    std::vector<BigInt> v;
    for (long p : primes) v.emplace_back(p);
    return v;
}()) {}

PrimeSet PrimeSet::parse(const std::string& comma_separated) {
    std::vector<BigInt> v;
    std::stringstream ss(comma_separated);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        BigInt p;
        if (mpz_set_str(p.get_mpz_t(), tok.c_str(), 10) != 0)
            throw std::invalid_argument("bad prime literal: " + tok);
        v.push_back(std::move(p));
    }
    return PrimeSet(std::move(v));
}

bool PrimeSet::contains(const BigInt& p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::united_with(const PrimeSet& other) const {
    std::vector<BigInt> v = primes_;
    v.insert(v.end(), other.primes_.begin(), other.primes_.end());
    return PrimeSet(std::move(v));
}

std::string PrimeSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i) s += ",";
        s += primes_[i].get_str();
    }
    return s + "}";
}

long ord_p(const BigRat& x, const BigInt& p) {
    if (!is_probable_prime(p)) throw std::domain_error("ord_p: modulus is not prime");
    if (x == 0) throw std::domain_error("ord_p: zero input");
    BigInt tmp;
    long vnum = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), mpq_numref(x.get_mpq_t()), p.get_mpz_t()));
    long vden = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), mpq_denref(x.get_mpq_t()), p.get_mpz_t()));
    return vnum - vden;
}

BigRat abs_p(const BigRat& x, const BigInt& p) {
    if (!is_probable_prime(p)) throw std::domain_error("abs_p: modulus is not prime");
    if (x == 0) return BigRat(0);
    long e = ord_p(x, p);
    if (e >= 0) return make_rat(1, int_pow(p, static_cast<unsigned long>(e)));
    return BigRat(int_pow(p, static_cast<unsigned long>(-e)));
}

BigRat abs_S(const BigRat& x, const PrimeSet& S) {
    if (x == 0) throw std::domain_error("abs_S: zero input");
    BigRat prod(1);
    for (const BigInt& p : S) prod *= abs_p(x, p);
    return prod;
}

bool product_formula_check(const BigRat& x) {
    if (x == 0) throw std::domain_error("product_formula_check: zero input");
    BigInt num = abs(BigInt(x.get_num()));
    BigInt den = x.get_den();
    BigRat prod = abs(x);
    for (const BigInt& n : {num, den}) {
        Factorization f = factorize(n);
        if (!f.complete)
            throw resource_error("product_formula_check: incomplete factorization of " + n.get_str());
        for (const auto& [p, e] : f.factors) prod *= abs_p(x, p);
    }
    return prod == 1;
}

namespace {

// Residue of r modulo p^k (denominator inverted mod p^k).
BigInt residue_mod(const BigRat& r, const BigInt& pk) {
    BigInt num = r.get_num() % pk;
    if (num < 0) num += pk;
    BigInt deninv;
    if (mpz_invert(deninv.get_mpz_t(), BigInt(r.get_den()).get_mpz_t(), pk.get_mpz_t()) == 0)
        throw std::domain_error("residue_mod: denominator not invertible");
    return BigInt(num * deninv % pk);
}

}  // namespace

BigInt multiplicative_order(const BigRat& r, const BigInt& p) {
    if (!is_probable_prime(p)) throw std::domain_error("multiplicative_order: modulus is not prime");
    if (r == 0 || ord_p(r, p) != 0)
        throw std::domain_error("multiplicative_order: |r|_p != 1");
    BigInt a = residue_mod(r, p);
    BigInt group = p - 1;
    Factorization f = factorize(group);
    if (!f.complete)
        throw resource_error("multiplicative_order: cannot factor p-1 for p=" + p.get_str());
    BigInt m = group;
    BigInt pw;
    for (const auto& [q, e] : f.factors) {
        for (unsigned i = 0; i < e; ++i) {
            BigInt cand = m / q;
            if (cand * q != m) break;
            mpz_powm(pw.get_mpz_t(), a.get_mpz_t(), cand.get_mpz_t(), p.get_mpz_t());
            if (pw != 1) break;
            m = cand;
        }
    }
    return m;
}

long ord_p_pow_minus_one(const BigRat& r, const BigInt& e, const BigInt& p) {
    if (e < 1) throw std::domain_error("ord_p_pow_minus_one: exponent < 1");
    if (r == 0 || ord_p(r, p) != 0)
        throw std::domain_error("ord_p_pow_minus_one: |r|_p != 1");
    // Work mod p^K; r^e - 1 has some finite valuation v, recovered exactly
    // once K > v.
    unsigned long K = 64;
    constexpr unsigned long kMaxDigits = 1u << 20;
    while (true) {
        BigInt pk = int_pow(p, K);
        BigInt x = residue_mod(r, pk);
        BigInt xe;
        mpz_powm(xe.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), pk.get_mpz_t());
        BigInt t = xe - 1;
        if (t < 0) t += pk;
        if (t != 0) {
            BigInt unit;
            long v = static_cast<long>(mpz_remove(unit.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t()));
            if (static_cast<unsigned long>(v) < K) return v;
        }
        if (K >= kMaxDigits)
            throw resource_error("ord_p_pow_minus_one: precision ceiling reached");
        K *= 2;
    }
}

}  // namespace solzeta
