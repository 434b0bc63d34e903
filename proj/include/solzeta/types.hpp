#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace solzeta {

// Exact scalars. BigRat is always canonical: lowest terms, positive
// denominator, zero stored as 0/1 (mpq_class maintains this through
// arithmetic once canonicalized).
using BigInt = mpz_class;
using BigRat = mpq_class;

// Budget exhausted (factorization iteration cap, big-power size cap,
// Hensel precision ceiling). Distinct from domain errors: the input is
// legal, the computation was refused.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Signals a bug, not bad input.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

inline BigRat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// Parses "a" or "a/b" with optional sign. Throws std::invalid_argument.
BigRat rat_from_string(const std::string& s);

inline std::string rat_to_string(const BigRat& q) { return q.get_str(); }

inline std::string int_to_string(const BigInt& n) { return n.get_str(); }

// p^e for e >= 0.
inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// q^e for integer e (negative exponents give 1/q^|e|).
inline BigRat rat_pow(const BigRat& base, long e) {
    if (e >= 0) {
        BigRat r;
        mpq_class b(base);
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), static_cast<unsigned long>(e));
        return r;
    }
    if (base == 0) throw std::domain_error("rat_pow: 0 to negative power");
    BigRat inv = 1 / base;
    return rat_pow(inv, -e);
}

}  // namespace solzeta
