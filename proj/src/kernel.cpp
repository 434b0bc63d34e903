#include "solzeta/kernel.hpp"

namespace solzeta {

BigRat PlaceKernel::eval(const BigInt& n) const {
    if (n < 1) throw std::domain_error("PlaceKernel::eval: n must be >= 1");
    if (n % m != 0) return BigRat(1);
    BigInt unit;
    unsigned long j = static_cast<unsigned long>(
        mpz_remove(unit.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    if (j <= D) return exceptional[j];
    // C * |n|_p^rho = C / p^(j*rho)
    return BigRat(C / BigRat(int_pow(p, j * rho)));
}

PlaceKernel compute_kernel_rational(const BigRat& r, const BigInt& p) {
    if (r == 1 || r == -1)
        throw std::domain_error("compute_kernel_rational: r must not be a root of unity");
    if (r == 0 || ord_p(r, p) != 0)
        throw std::domain_error("compute_kernel_rational: |r|_p != 1");

    PlaceKernel k;
    k.p = p;
    k.m = multiplicative_order(r, p);
    k.rho = 1;
    k.label = "p=" + p.get_str();

    // v_j = ord_p(r^(m p^j) - 1); D is the least j whose step to j+1 is
    // exactly 1, after which every step is (cap guards against bugs, the
    // lemma guarantees termination).
    constexpr unsigned kCap = 64;
    std::vector<long> v;
    v.push_back(ord_p_pow_minus_one(r, k.m, p));
    unsigned D = 0;
    for (;; ++D) {
        if (D >= kCap)
            throw invariant_error("compute_kernel_rational: D search exceeded cap");
        BigInt e = k.m * int_pow(p, D + 1);
        v.push_back(ord_p_pow_minus_one(r, e, p));
        if (v[D + 1] == v[D] + 1) break;
    }
    k.D = D;
    k.C = rat_pow(BigRat(p), static_cast<long>(D) - v[D]);
    for (unsigned j = 0; j <= D; ++j)
        k.exceptional.push_back(rat_pow(BigRat(p), -v[j]));
    return k;
}

BigRat eval_abs_direct(const BigRat& r, const BigInt& p, const BigInt& n) {
    if (n < 1) throw std::domain_error("eval_abs_direct: n must be >= 1");
    if (r == 0 || ord_p(r, p) != 0)
        throw std::domain_error("eval_abs_direct: |r|_p != 1");
    std::size_t bits = std::max(mpz_sizeinbase(mpq_numref(r.get_mpq_t()), 2),
                                mpz_sizeinbase(mpq_denref(r.get_mpq_t()), 2));
    if (!n.fits_ulong_p() || bits * n.get_ui() > (std::size_t{1} << 25))
        throw resource_error("eval_abs_direct: exponent exceeds big-integer budget");
    BigRat x = rat_pow(r, static_cast<long>(n.get_ui())) - 1;
    return abs_p(x, p);
}

}  // namespace solzeta
