#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "solzeta/types.hpp"

namespace solzeta {

bool is_probable_prime(const BigInt& n);

/// Sorted, duplicate-free set of rational primes. Construction rejects
/// composites and anything below 2.
class PrimeSet {
public:
    PrimeSet() = default;
    explicit PrimeSet(std::vector<BigInt> primes);
    PrimeSet(std::initializer_list<long> primes);

    static PrimeSet parse(const std::string& comma_separated);

    bool contains(const BigInt& p) const;
    bool empty() const { return primes_.size() == 0; }
    std::size_t size() const { return primes_.size(); }
    auto begin() const { return primes_.begin(); }
    auto end() const { return primes_.end(); }
    const std::vector<BigInt>& values() const { return primes_; }

    PrimeSet united_with(const PrimeSet& other) const;
    std::string to_string() const;

private:
    std::vector<BigInt> primes_;
};

// p-adic valuation of x, negative on denominators. x != 0, p prime.
long ord_p(const BigRat& x, const BigInt& p);

// |x|_p = p^(-ord_p(x)) as an exact rational; |0|_p = 0 by convention.
BigRat abs_p(const BigRat& x, const BigInt& p);

// Product of |x|_p over p in S; empty product is 1. x != 0.
BigRat abs_S(const BigRat& x, const PrimeSet& S);

// Checks |x| * prod_{p | num*den} |x|_p == 1 exactly. Needs a full
// factorization of numerator and denominator, so huge rough inputs can
// raise resource_error.
bool product_formula_check(const BigRat& x);

// Least m >= 1 with r^m == 1 in the residue field at p. Requires |r|_p = 1.
BigInt multiplicative_order(const BigRat& r, const BigInt& p);

// ord_p(r^e - 1) computed modulo p^K with K grown on demand; never forms
// r^e. Requires |r|_p = 1 and e >= 1.
long ord_p_pow_minus_one(const BigRat& r, const BigInt& e, const BigInt& p);

}  // namespace solzeta
