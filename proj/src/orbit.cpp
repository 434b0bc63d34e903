#include "solzeta/orbit.hpp"

#include <mpfr.h>

#include "solzeta/real.hpp"

namespace solzeta {

SolenoidSpec::SolenoidSpec(Mode mode, const BigRat& r, PrimeSet primes)
    : mode_(mode), r_(r), primes_(std::move(primes)) {
    if (r_ == 0 || r_ == 1 || r_ == -1)
        throw std::domain_error("SolenoidSpec: r must differ from 0 and +-1");
    BigInt num = r_.get_num(), den = r_.get_den();
    if (abs(num) < den) {
        r_ = 1 / r_;
        inverted_ = true;
        num = r_.get_num();
        den = r_.get_den();
    }
    // write r = a/b with a > |b| >= 1 (sign carried by b)
    if (num < 0) {
        a_ = -num;
        b_ = -den;
    } else {
        a_ = num;
        b_ = den;
    }

    if (mode_ == Mode::cofinite) {
        for (const BigInt& p : primes_)
            if (ord_p(r_, p) != 0)
                throw std::domain_error("SolenoidSpec: cofinite mode needs |r|_p = 1 on T, fails at p=" +
                                        p.get_str());
        s_prime_ = primes_;
    } else {
        std::vector<BigInt> sp;
        for (const BigInt& p : primes_)
            if (ord_p(r_, p) == 0) sp.push_back(p);
        s_prime_ = PrimeSet(std::move(sp));
    }
    for (const BigInt& p : s_prime_) kernels_.push_back(compute_kernel_rational(r_, p));
}

SolenoidSpec SolenoidSpec::finite(const BigRat& r, PrimeSet S) {
    return SolenoidSpec(Mode::finite, r, std::move(S));
}

SolenoidSpec SolenoidSpec::cofinite(const BigRat& r, PrimeSet T) {
    return SolenoidSpec(Mode::cofinite, r, std::move(T));
}

std::string SolenoidSpec::to_string() const {
    std::string s = "r=" + r_.get_str();
    s += mode_ == Mode::finite ? " S=" : " T=";
    return s + primes_.to_string();
}

BigRat local_factor(const SolenoidSpec& spec, const BigInt& n) {
    BigRat prod(1);
    for (const PlaceKernel& k : spec.kernels()) prod *= k.eval(n);
    return prod;
}

namespace {

void check_pow_budget(const BigInt& base, const BigInt& n, const char* where) {
    std::size_t bits = mpz_sizeinbase(base.get_mpz_t(), 2);
    if (!n.fits_ulong_p() || bits * n.get_ui() > (std::size_t{1} << 25))
        throw resource_error(std::string(where) + ": exponent exceeds big-integer budget");
}

BigInt rat_to_int(const BigRat& q, const char* where) {
    if (q.get_den() != 1)
        throw invariant_error(std::string(where) + ": expected an integer, got " + q.get_str());
    return q.get_num();
}

}  // namespace

BigInt f_value(const SolenoidSpec& spec, const BigInt& n) {
    if (n < 1) throw std::domain_error("f_value: n must be >= 1");
    if (spec.mode() == SolenoidSpec::Mode::cofinite) {
        BigRat f = 1 / local_factor(spec, n);
        BigInt v = rat_to_int(f, "f_value(cofinite)");
        if (v < 1) throw invariant_error("f_value: nonpositive count");
        return v;
    }
    check_pow_budget(spec.a(), n, "f_value");
    unsigned long e = n.get_ui();
    BigInt an = int_pow(spec.a(), e), bn = int_pow(spec.b(), e);
    BigRat f = BigRat(an - bn) * local_factor(spec, n);
    BigInt v = rat_to_int(f, "f_value(finite)");
    if (v < 1) throw invariant_error("f_value: nonpositive count");
    return v;
}

SeriesPrefix f_prefix(const SolenoidSpec& spec, long N) {
    if (N < 1) throw std::domain_error("f_prefix: N must be >= 1");
    SeriesPrefix fp;
    fp.start = 1;
    fp.coeffs.reserve(static_cast<std::size_t>(N));
    if (spec.mode() == SolenoidSpec::Mode::finite) {
        check_pow_budget(spec.a(), BigInt(N), "f_prefix");
        BigInt an(1), bn(1);
        for (long n = 1; n <= N; ++n) {
            an *= spec.a();
            bn *= spec.b();
            BigRat f = BigRat(an - bn) * local_factor(spec, BigInt(n));
            fp.coeffs.emplace_back(rat_to_int(f, "f_prefix"));
        }
    } else {
        for (long n = 1; n <= N; ++n)
            fp.coeffs.emplace_back(f_value(spec, BigInt(n)));
    }
    return fp;
}

CatmapSpec::CatmapSpec(QuadElem xi, std::vector<QuadPlace> places)
    : xi_(std::move(xi)), places_(std::move(places)) {
    BigRat nu = xi_.norm(), tr = xi_.trace();
    if (nu.get_den() != 1 || tr.get_den() != 1)
        throw std::domain_error("CatmapSpec: xi must be an algebraic integer");
    if (nu != 1 && nu != -1) throw std::domain_error("CatmapSpec: xi must be a unit");
    if (xi_.is_rational()) throw std::domain_error("CatmapSpec: xi must be a quadratic irrational");
    trace_ = tr.get_num();
    norm_ = nu.get_num();
    for (const QuadPlace& v : places_) {
        if (!(v.field == xi_.field)) throw std::domain_error("CatmapSpec: place/field mismatch");
        if (ord_v(v, xi_) != 0)
            throw std::domain_error("CatmapSpec: |xi|_v != 1 at " + v.to_string());
        kernels_.push_back(compute_kernel_quad(xi_, v));
    }
}

CatmapSpec CatmapSpec::from_trace_norm(const BigInt& trace, const BigInt& norm,
                                       const std::vector<BigInt>& s_rational_primes) {
    if (norm != 1 && norm != -1) throw std::domain_error("CatmapSpec: norm must be +-1");
    BigInt disc = trace * trace - 4 * norm;
    if (disc <= 0) throw std::domain_error("CatmapSpec: complex conjugate pair rejected");
    if (mpz_perfect_square_p(disc.get_mpz_t()))
        throw std::domain_error("CatmapSpec: xi is rational");
    // disc = mult^2 * d with d squarefree
    Factorization f = factorize(disc);
    if (!f.complete) throw resource_error("CatmapSpec: cannot extract squarefree part");
    BigInt d(1), mult(1);
    for (const auto& [p, e] : f.factors) {
        if (e % 2 == 1) d *= p;
        mult *= int_pow(p, e / 2);
    }
    QuadField F(d);
    // xi = (trace + mult*sqrt(d))/2 in coordinates over (1, omega)
    BigRat a, b;
    if (F.c1 == 1) {
        a = make_rat(trace - mult, 2);
        b = BigRat(mult);
    } else {
        a = make_rat(trace, 2);
        b = make_rat(mult, 2);
    }
    QuadElem xi(F, a, b);
    std::vector<QuadPlace> places;
    PrimeSet ps{[&] {
        std::vector<BigInt> v(s_rational_primes.begin(), s_rational_primes.end());
        return PrimeSet(std::move(v));
    }()};
    for (const BigInt& p : ps)
        for (QuadPlace& v : places_above(F, p)) places.push_back(std::move(v));
    return CatmapSpec(std::move(xi), std::move(places));
}

std::string CatmapSpec::to_string() const {
    std::string s = "xi: trace=" + trace_.get_str() + " norm=" + norm_.get_str() + " in Q(sqrt" +
                    field().d.get_str() + "), places=[";
    for (std::size_t i = 0; i < places_.size(); ++i) {
        if (i) s += "; ";
        s += places_[i].to_string();
    }
    return s + "]";
}

BigInt catmap_trace(const CatmapSpec& spec, const BigInt& n) {
    if (n < 0) throw std::domain_error("catmap_trace: n must be >= 0");
    if (!n.fits_ulong_p() || n.get_ui() > (1ul << 21))
        throw resource_error("catmap_trace: exponent exceeds budget");
    BigInt t0(2), t1(spec.trace());
    if (n == 0) return t0;
    for (unsigned long i = 1; i < n.get_ui(); ++i) {
        BigInt t2 = spec.trace() * t1 - spec.norm() * t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

BigInt catmap_f(const CatmapSpec& spec, const BigInt& n) {
    if (n < 1) throw std::domain_error("catmap_f: n must be >= 1");
    // product over infinite places: |N(xi^n - 1)| = |nu^n - t_n + 1|
    BigInt arch = abs((spec.norm() == 1 ? BigInt(1) : BigInt(n % 2 == 0 ? 1 : -1)) -
                      catmap_trace(spec, n) + 1);
    BigRat f(arch);
    for (const PlaceKernel& k : spec.kernels()) f *= k.eval(n);
    BigInt v = rat_to_int(f, "catmap_f");
    if (v < 1) throw invariant_error("catmap_f: nonpositive count");
    return v;
}

SeriesPrefix catmap_prefix(const CatmapSpec& spec, long N) {
    if (N < 1) throw std::domain_error("catmap_prefix: N must be >= 1");
    SeriesPrefix fp;
    fp.start = 1;
    fp.coeffs.reserve(static_cast<std::size_t>(N));
    BigInt t0(2), t1(spec.trace()), nu_n(1);
    for (long n = 1; n <= N; ++n) {
        nu_n *= spec.norm();
        BigInt arch = abs(nu_n - t1 + 1);
        BigRat f(arch);
        for (const PlaceKernel& k : spec.kernels()) f *= k.eval(BigInt(n));
        fp.coeffs.emplace_back(rat_to_int(f, "catmap_prefix"));
        BigInt t2 = spec.trace() * t1 - spec.norm() * t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return fp;
}

SeriesPrefix zeta_coeffs(const SeriesPrefix& fp) {
    if (fp.start != 1) throw std::domain_error("zeta_coeffs: prefix must start at n=1");
    SeriesPrefix zp;
    zp.start = 0;
    long N = fp.length();
    zp.coeffs.reserve(static_cast<std::size_t>(N) + 1);
    zp.coeffs.emplace_back(1);
    for (long m = 1; m <= N; ++m) {
        BigRat acc(0);
        for (long k = 1; k <= m; ++k) acc += fp.at(k) * zp.coeffs[static_cast<std::size_t>(m - k)];
        zp.coeffs.emplace_back(acc / m);
    }
    return zp;
}

bool zeta_genfun_identity_check(const SeriesPrefix& fp, const SeriesPrefix& zp) {
    if (fp.start != 1 || zp.start != 0)
        throw std::domain_error("zeta_genfun_identity_check: index bases must be 1 and 0");
    if (zp.length() != fp.length() + 1)
        throw std::domain_error("zeta_genfun_identity_check: length mismatch");
    long N = fp.length();
    for (long n = 1; n <= N; ++n) {
        BigRat lhs = BigRat(n) * zp.at(n);
        BigRat rhs(0);
        for (long k = 1; k <= n; ++k) rhs += fp.at(k) * zp.at(n - k);
        if (lhs != rhs) return false;
    }
    return true;
}

GrowthRate growth_rate(const SolenoidSpec& spec, unsigned precision_bits) {
    GrowthRate g;
    if (spec.mode() == SolenoidSpec::Mode::cofinite) {
        g.kind = "cofinite-solenoid";
        g.radius_rational = true;
        g.radius = 1;
        g.radius_decimal = "1";
        Real zero = Real::from_long(0, precision_bits);
        g.entropy_decimal = zero.to_decimal();
        g.description = "polynomial growth, radius 1, entropy 0";
        return g;
    }
    g.kind = "finite-solenoid";
    g.radius_rational = true;
    g.radius = make_rat(1, spec.a());
    g.radius_decimal = g.radius.get_str();
    Real la = Real::from_rat(BigRat(spec.a()), precision_bits);
    mpfr_log(la.get(), la.get(), MPFR_RNDN);
    g.entropy_decimal = la.to_decimal();
    g.description = "radius 1/a with a = " + spec.a().get_str() + ", entropy log(a)";
    return g;
}

GrowthRate growth_rate(const CatmapSpec& spec, unsigned precision_bits) {
    GrowthRate g;
    g.kind = "catmap";
    g.radius_rational = false;
    // dominant root (|t| + sqrt(t^2 - 4 nu))/2; every finite place in the
    // spec has |xi|_v = 1, so only the archimedean factor contributes
    BigInt disc_int = spec.trace() * spec.trace() - 4 * spec.norm();
    Real disc = Real::from_rat(BigRat(disc_int), precision_bits);
    mpfr_sqrt(disc.get(), disc.get(), MPFR_RNDN);
    Real t = Real::from_rat(BigRat(abs(spec.trace())), precision_bits);
    mpfr_add(t.get(), t.get(), disc.get(), MPFR_RNDN);
    mpfr_div_ui(t.get(), t.get(), 2, MPFR_RNDN);  // t = dominant |root|
    Real radius = Real::from_long(1, precision_bits);
    mpfr_div(radius.get(), radius.get(), t.get(), MPFR_RNDN);
    g.radius_decimal = radius.to_decimal();
    mpfr_log(t.get(), t.get(), MPFR_RNDN);
    g.entropy_decimal = t.to_decimal();
    g.description = "radius 2/(|t|+sqrt(t^2-4nu)) with t=" + spec.trace().get_str() +
                    ", nu=" + spec.norm().get_str() + "; entropy is log of the dominant root";
    return g;
}

std::vector<BigInt> derivative_trick_transform(const SeriesPrefix& fp,
                                               const std::vector<PlaceKernel>& kernels) {
    if (fp.start != 1) throw std::domain_error("derivative_trick_transform: prefix must start at 1");
    BigRat C(1);
    unsigned long rho = 0;
    for (const PlaceKernel& k : kernels) {
        C /= k.C;
        rho += k.rho;
    }
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(fp.length()));
    for (long n = 1; n <= fp.length(); ++n) {
        BigInt npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n), rho);
        BigRat t = C * BigRat(npow) * fp.at(n);
        if (t.get_den() != 1 || t <= 0)
            throw invariant_error("derivative_trick_transform: C n^rho f(n) = " + t.get_str() +
                                  " is not a positive integer at n=" + std::to_string(n));
        out.push_back(t.get_num());
    }
    return out;
}

}  // namespace solzeta
