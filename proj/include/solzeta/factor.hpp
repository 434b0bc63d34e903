#pragma once

#include <cstdint>
#include <vector>

#include "solzeta/types.hpp"

namespace solzeta {

struct FactorOptions {
    unsigned long trial_limit = 1'000'000;  // trial division bound
    unsigned long rho_budget = 20'000'000;  // total Brent-rho iterations
};

struct Factorization {
    // (prime, exponent), primes strictly increasing.
    std::vector<std::pair<BigInt, unsigned>> factors;
    // 1 when complete; otherwise the composite part the budget left behind.
    BigInt cofactor = 1;
    bool complete = true;

    BigInt recompose() const;
};

// Exact factorization of n >= 1. Trial division, then deterministic
// Brent-rho on what remains. Never wrong: if the budget runs out the
// result says so and carries the unfactored cofactor.
Factorization factorize(const BigInt& n, const FactorOptions& opt = {});

}  // namespace solzeta
