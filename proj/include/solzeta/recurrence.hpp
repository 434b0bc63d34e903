#pragma once

#include <optional>
#include <string>
#include <vector>

#include "solzeta/orbit.hpp"

namespace solzeta {

// Integer-coefficient polynomial in ascending powers of z.
using IntPoly = std::vector<BigInt>;

std::string poly_to_string(const IntPoly& p);

// Power-series expansion of num/den to coefficients 0..N (den[0] != 0).
std::vector<BigRat> expand_ratfunc(const IntPoly& num, const IntPoly& den, long N);

struct RationalWitness {
    IntPoly zeta_num, zeta_den;  // zeta = (1 - bz)/(1 - az)
    IntPoly f_num, f_den;        // F = (a-b)z / ((1-az)(1-bz))
};

/// Verdict of the rationality dichotomy: F_S is rational exactly when no
/// p in S has |r|_p = 1 (finite mode) / T is empty (cofinite mode).
struct Classification {
    bool rational = false;
    std::optional<RationalWitness> witness;        // rational case only
    std::vector<BigInt> irrationality_witnesses;   // the primes with |r|_p = 1
};

Classification classify(const SolenoidSpec& spec);

struct RecurrenceResult {
    bool found = false;
    long order = 0;
    std::vector<BigRat> coefficients;  // s_n = sum_i c_i s_{n-i}
    long prefix_length = 0;
    long max_order_searched = 0;
    long fit_window = 0;  // terms used for solving; the rest were held out
};

/// Minimal-order linear recurrence over Q satisfied by the entire prefix,
/// or found=false. Exact rational linear algebra, no tolerances anywhere.
/// When the prefix is long enough, the last 32 terms are held out of the
/// solve and only used for validation. Requires
/// prefix_length >= 2*max_order + 8.
RecurrenceResult min_recurrence(const SeriesPrefix& prefix, long max_order);

struct RigidIndexCheck {
    BigInt n_e;
    BigRat kernel_factor;             // |r^{n(e)} - 1|_{S'}
    std::vector<BigInt> multipliers;  // sampled k coprime to n(e)
    bool factor_stable = false;       // factor at k*n(e) equals factor at n(e) for all k
};

struct RigidIndicesReport {
    BigInt q;
    BigInt base;  // prod_{p in S'} m_p p^{D_p}
    std::vector<RigidIndexCheck> checks;
    bool all_stable = false;
    bool f_values_distinct = false;  // full counts f(n(e)) pairwise distinct across e
};

/// The rigid indices n(e) = q^e prod_{p in S'} m_p p^(D_p): the kernel
/// factor is invariant under n(e) -> k n(e) for k coprime to n(e), while
/// the full counts still separate. q must be a prime outside S' and
/// coprime to every m_p.
RigidIndicesReport rigid_indices(const SolenoidSpec& spec, const BigInt& q, unsigned e_max,
                                 unsigned samples_per_index = 10);

}  // namespace solzeta
