#pragma once

#include <string>
#include <vector>

#include "solzeta/exact.hpp"
#include "solzeta/types.hpp"

namespace solzeta {

/// Per-place constants for evaluating |xi^n - 1|_v in O(log n):
///
///   |xi^n - 1|_v = 1                   if m does not divide n,
///                = exceptional[j]      if m | n and j = ord_p(n) <= D,
///                = C * |n|_p^rho       if m | n and ord_p(n) > D.
///
/// rho is the exponent of |n|_p in the stable regime: 1 at rational
/// places, the local degree at places of a quadratic field (1 split,
/// 2 inert, 2 ramified).
struct PlaceKernel {
    BigInt p;
    BigInt m;                        // multiplicative order in the residue field
    unsigned D = 0;
    BigRat C;
    unsigned rho = 1;
    std::vector<BigRat> exceptional;  // indexed by ord_p(n), size D+1
    std::string label;

    // |xi^n - 1|_v for n >= 1 via the three-case formula.
    BigRat eval(const BigInt& n) const;
};

// Exact kernel constants for a rational r at a prime p with |r|_p = 1.
// D is found as the least D >= 0 whose |.|_v step under n -> pn equals
// |p|_p exactly; the evaluation lemma guarantees one exists (cap 64).
PlaceKernel compute_kernel_rational(const BigRat& r, const BigInt& p);

// eval via a PlaceKernel, spelled as a free function to mirror the
// kernel/oracle pair.
inline BigRat eval_abs_fast(const PlaceKernel& k, const BigInt& n) { return k.eval(n); }

// Independent oracle: forms r^n - 1 as an exact rational and takes
// |.|_p directly. Refuses exponents that would blow the big-integer
// budget (resource_error).
BigRat eval_abs_direct(const BigRat& r, const BigInt& p, const BigInt& n);

}  // namespace solzeta
