#pragma once

#include <string>
#include <vector>

#include "solzeta/kernel.hpp"
#include "solzeta/quadratic.hpp"

namespace solzeta {

/// Coefficient prefix of a power series, exact rationals. `start` is the
/// index of coeffs[0]: 1 for point-count series, 0 for zeta expansions.
struct SeriesPrefix {
    long start = 1;
    std::vector<BigRat> coeffs;

    long length() const { return static_cast<long>(coeffs.size()); }
    long last_index() const { return start + length() - 1; }
    const BigRat& at(long n) const {
        if (n < start || n > last_index())
            throw std::out_of_range("SeriesPrefix::at: index out of range");
        return coeffs[static_cast<std::size_t>(n - start)];
    }
};

/// One-dimensional solenoid automorphism: multiplication by r on the dual,
/// with either a finite prime set S or a finite complement T (cofinite
/// mode, where the count is |r^n - 1|_T^{-1}). r is normalized so that
/// r = a/b with a > |b| >= 1, inverting r when needed (the zeta function
/// is insensitive to inversion).
class SolenoidSpec {
public:
    enum class Mode { finite, cofinite };

    static SolenoidSpec finite(const BigRat& r, PrimeSet S);
    static SolenoidSpec cofinite(const BigRat& r, PrimeSet T);

    Mode mode() const { return mode_; }
    const BigRat& r() const { return r_; }
    bool inverted() const { return inverted_; }
    const PrimeSet& primes() const { return primes_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    // finite mode: {p in S : |r|_p = 1}; cofinite mode: T itself.
    const PrimeSet& s_prime() const { return s_prime_; }
    const std::vector<PlaceKernel>& kernels() const { return kernels_; }

    std::string to_string() const;

private:
    SolenoidSpec(Mode mode, const BigRat& r, PrimeSet primes);

    Mode mode_;
    BigRat r_;
    bool inverted_ = false;
    PrimeSet primes_;
    BigInt a_, b_;
    PrimeSet s_prime_;
    std::vector<PlaceKernel> kernels_;
};

/// Quadratic (cat-map family) system: a real quadratic unit xi with no
/// conjugate on the unit circle, counted at the infinite places together
/// with a finite list of finite places.
class CatmapSpec {
public:
    CatmapSpec(QuadElem xi, std::vector<QuadPlace> places);

    // xi = (t + sqrt(t^2 - 4 nu))/2 with integral trace t and norm nu = +-1;
    // the places are all places of Q(xi) above the given rational primes.
    static CatmapSpec from_trace_norm(const BigInt& trace, const BigInt& norm,
                                      const std::vector<BigInt>& s_rational_primes);

    const QuadElem& xi() const { return xi_; }
    const QuadField& field() const { return xi_.field; }
    const std::vector<QuadPlace>& places() const { return places_; }
    const std::vector<PlaceKernel>& kernels() const { return kernels_; }
    const BigInt& trace() const { return trace_; }
    const BigInt& norm() const { return norm_; }

    std::string to_string() const;

private:
    QuadElem xi_;
    std::vector<QuadPlace> places_;
    std::vector<PlaceKernel> kernels_;
    BigInt trace_, norm_;
};

// Product of kernel evaluations at n (the |r^n - 1|_{S'} factor in finite
// mode, |r^n - 1|_T in cofinite mode).
BigRat local_factor(const SolenoidSpec& spec, const BigInt& n);

// Number of points fixed by the n-th iterate; always a positive integer.
BigInt f_value(const SolenoidSpec& spec, const BigInt& n);

SeriesPrefix f_prefix(const SolenoidSpec& spec, long N);

// Tr(xi^n) by the integer recurrence t_n = t*t_{n-1} - nu*t_{n-2}.
BigInt catmap_trace(const CatmapSpec& spec, const BigInt& n);

// F(n) = |N(xi^n - 1)| * prod_{v in S} |xi^n - 1|_v.
BigInt catmap_f(const CatmapSpec& spec, const BigInt& n);

SeriesPrefix catmap_prefix(const CatmapSpec& spec, long N);

// Exact zeta Taylor coefficients from a point-count prefix via
// m*zeta_m = sum_{k=1..m} f(k) zeta_{m-k}, zeta_0 = 1.
SeriesPrefix zeta_coeffs(const SeriesPrefix& fp);

// Coefficientwise check of F(z) = z zeta'(z)/zeta(z), i.e.
// n*zeta_n = sum_{k=1..n} f(k) zeta_{n-k} for every index covered by both
// prefixes. Implemented as an independent convolution, not by rerunning
// zeta_coeffs.
bool zeta_genfun_identity_check(const SeriesPrefix& fp, const SeriesPrefix& zp);

struct GrowthRate {
    std::string kind;
    bool radius_rational = false;
    BigRat radius;                // exact when radius_rational
    std::string radius_decimal;
    std::string entropy_decimal;  // log(1/radius), the topological entropy
    std::string description;
};

GrowthRate growth_rate(const SolenoidSpec& spec, unsigned precision_bits = 256);
GrowthRate growth_rate(const CatmapSpec& spec, unsigned precision_bits = 256);

// C n^rho f(n) for n = 1..N with C = prod C_v^{-1}, rho = sum rho_v, where
// f(n) is the product of kernel evaluations. Every entry must come out a
// positive integer; anything else signals a kernel bug (invariant_error).
std::vector<BigInt> derivative_trick_transform(const SeriesPrefix& fp,
                                               const std::vector<PlaceKernel>& kernels);

}  // namespace solzeta
