#include "solzeta/quadratic.hpp"

#include <array>
#include <functional>

#include "solzeta/factor.hpp"

namespace solzeta {

QuadField::QuadField(const BigInt& d_) : d(d_) {
    if (d < 2) throw std::domain_error("QuadField: d must be > 1");
    Factorization f = factorize(d);
    if (!f.complete) throw resource_error("QuadField: cannot verify d squarefree");
    for (const auto& [p, e] : f.factors)
        if (e > 1) throw std::domain_error("QuadField: d must be squarefree");
    if (d % 4 == 1) {
        disc = d;
        c1 = 1;
        c0 = (d - 1) / 4;
    } else {
        disc = 4 * d;
        c1 = 0;
        c0 = d;
    }
}

QuadElem QuadElem::operator+(const QuadElem& o) const {
    if (!(field == o.field)) throw std::domain_error("QuadElem: field mismatch");
    return {field, a + o.a, b + o.b};
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    if (!(field == o.field)) throw std::domain_error("QuadElem: field mismatch");
    return {field, a - o.a, b - o.b};
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    if (!(field == o.field)) throw std::domain_error("QuadElem: field mismatch");
    // (a1 + b1 w)(a2 + b2 w), w^2 = c1 w + c0
    BigRat bb = b * o.b;
    return {field, a * o.a + BigRat(field.c0) * bb,
            a * o.b + b * o.a + BigRat(field.c1) * bb};
}

QuadElem QuadElem::conj() const {
    // the conjugate root of x^2 - c1 x - c0 is c1 - w
    return {field, a + BigRat(field.c1) * b, -b};
}

BigRat QuadElem::trace() const { return 2 * a + BigRat(field.c1) * b; }

BigRat QuadElem::norm() const {
    // (a + b w)(a + b(c1 - w)) = a^2 + c1 a b - c0 b^2
    return a * a + BigRat(field.c1) * a * b - BigRat(field.c0) * b * b;
}

QuadElem QuadElem::pow(const BigInt& e) const {
    if (e < 0) throw std::domain_error("QuadElem::pow: negative exponent");
    QuadElem result(field, BigRat(1), BigRat(0));
    QuadElem base = *this;
    std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base;
        if (i + 1 < nbits) base = base * base;
    }
    return result;
}

std::string QuadElem::to_string() const {
    return "(" + a.get_str() + ") + (" + b.get_str() + ")*w[d=" + field.d.get_str() + "]";
}

std::string QuadPlace::to_string() const {
    const char* k = kind == PlaceKind::split ? "split" : kind == PlaceKind::inert ? "inert" : "ramified";
    std::string s = "Q(sqrt" + field.d.get_str() + ") v|" + p.get_str() + " " + k;
    if (kind == PlaceKind::split) s += root_index == 0 ? "-1" : "-2";
    return s;
}

namespace {

BigInt mod_pos(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

BigInt powm(const BigInt& base, const BigInt& e, const BigInt& m) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt invert(const BigInt& x, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("invert: not invertible");
    return r;
}

// Tonelli-Shanks square root mod an odd prime; a must be a nonzero QR.
BigInt sqrt_mod_p(const BigInt& a0, const BigInt& p) {
    BigInt a = mod_pos(a0, p);
    if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
    BigInt Q = p - 1;
    unsigned long S = 0;
    while (Q % 2 == 0) {
        Q /= 2;
        ++S;
    }
    BigInt z(2);
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    BigInt M(S), c = powm(z, Q, p), t = powm(a, Q, p), R = powm(a, (Q + 1) / 2, p);
    while (t != 1) {
        BigInt tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        BigInt b = c;
        for (BigInt j = 0; j < M - i - 1; ++j) b = b * b % p;
        M = i;
        c = b * b % p;
        t = t * c % p;
        R = R * b % p;
    }
    return R;
}

BigInt poly_eval(const QuadField& F, const BigInt& x, const BigInt& mod) {
    // x^2 - c1 x - c0 mod `mod`
    return mod_pos(x * x - F.c1 * x - F.c0, mod);
}

// One Newton step: root mod p^K -> root mod p^(2K).
BigInt newton_step(const QuadField& F, const BigInt& w, const BigInt& p2k) {
    BigInt g = poly_eval(F, w, p2k);
    BigInt gp = mod_pos(2 * w - F.c1, p2k);
    return mod_pos(w - g * invert(gp, p2k), p2k);
}

constexpr unsigned kLiftCeiling = 4096;

// (u, v, t): x = (u + v*omega)/t with integer u, v and t >= 1.
struct IntCoords {
    BigInt u, v, t;
};

IntCoords int_coords(const QuadElem& x) {
    BigInt t = lcm(BigInt(x.a.get_den()), BigInt(x.b.get_den()));
    return {BigInt(x.a.get_num() * (t / x.a.get_den())),
            BigInt(x.b.get_num() * (t / x.b.get_den())), t};
}

// ord_p of (u + v * w_true) given its residue A mod p^prec; requires the
// true ord to be < prec, signalled by returning -1 otherwise.
long ord_of_residue(const BigInt& A, const BigInt& p, unsigned long prec) {
    if (A == 0) return -1;
    BigInt unit;
    unsigned long o = static_cast<unsigned long>(
        mpz_remove(unit.get_mpz_t(), A.get_mpz_t(), p.get_mpz_t()));
    return o < prec ? static_cast<long>(o) : -1;
}

long split_ord(const QuadPlace& v, const QuadElem& x) {
    IntCoords ic = int_coords(x);
    BigInt tp = ic.t;
    BigInt unit;
    unsigned long s = static_cast<unsigned long>(
        mpz_remove(tp.get_mpz_t(), tp.get_mpz_t(), v.p.get_mpz_t()));
    for (unsigned K = 32;; K *= 2) {
        if (K > kLiftCeiling)
            throw resource_error("split_ord: lift precision ceiling reached");
        unsigned long prec = K + s;
        BigInt pk = int_pow(v.p, prec);
        BigInt w = lift_root(v, static_cast<unsigned>(prec));
        BigInt A = mod_pos(ic.u + ic.v * w, pk);
        long o = ord_of_residue(A, v.p, prec);
        if (o >= 0) return o - static_cast<long>(s);
    }
}

// Unit residue of x mod p^K at a split place (requires ord_v(x) = 0).
BigInt split_unit_residue(const QuadPlace& v, const QuadElem& x, unsigned K) {
    IntCoords ic = int_coords(x);
    BigInt tp = ic.t;
    unsigned long s = static_cast<unsigned long>(
        mpz_remove(tp.get_mpz_t(), tp.get_mpz_t(), v.p.get_mpz_t()));
    unsigned long prec = K + s;
    BigInt pk = int_pow(v.p, prec);
    BigInt w = lift_root(v, static_cast<unsigned>(prec));
    BigInt A = mod_pos(ic.u + ic.v * w, pk);
    long o = ord_of_residue(A, v.p, prec);
    if (o != static_cast<long>(s))
        throw std::domain_error("split_unit_residue: |x|_v != 1");
    BigInt pK = int_pow(v.p, K);
    A /= int_pow(v.p, s);
    return mod_pos(A * invert(tp, pK), pK);
}

// Multiplicative order of a unit given the group order and a power
// oracle; used for F_p and F_{p^2} alike.
BigInt order_from_group(const BigInt& group,
                        const std::function<bool(const BigInt&)>& pow_is_one) {
    Factorization f = factorize(group);
    if (!f.complete) throw resource_error("order_from_group: cannot factor group order");
    BigInt m = group;
    for (const auto& [q, e] : f.factors) {
        for (unsigned i = 0; i < e; ++i) {
            BigInt cand = m / q;
            if (cand * q != m) break;
            if (!pow_is_one(cand)) break;
            m = cand;
        }
    }
    return m;
}

// F_{p^2} = F_p[w]/(w^2 - c1 w - c0) element as a coordinate pair.
struct Fp2 {
    BigInt x, y;
};

Fp2 fp2_mul(const QuadField& F, const Fp2& A, const Fp2& B, const BigInt& p) {
    BigInt yy = A.y * B.y % p;
    return {mod_pos(A.x * B.x + F.c0 * yy, p),
            mod_pos(A.x * B.y + A.y * B.x + F.c1 * yy, p)};
}

Fp2 fp2_pow(const QuadField& F, Fp2 base, const BigInt& e, const BigInt& p) {
    Fp2 r{BigInt(1), BigInt(0)};
    std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp2_mul(F, r, base, p);
        if (i + 1 < nbits) base = fp2_mul(F, base, base, p);
    }
    return r;
}

BigInt rat_residue(const BigRat& q, const BigInt& pk) {
    BigInt num = mod_pos(q.get_num(), pk);
    return mod_pos(num * invert(q.get_den(), pk), pk);
}

// Tr(xi^k) mod p^K via the matrix power of [[T, -N],[1, 0]].
BigInt trace_pow_mod(const BigRat& T, const BigRat& N, const BigInt& k, const BigInt& pk) {
    BigInt t = rat_residue(T, pk), nu = rat_residue(N, pk);
    // 2x2 matrix power
    std::array<BigInt, 4> M{t, mod_pos(-nu, pk), BigInt(1), BigInt(0)};
    std::array<BigInt, 4> R{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
    auto mul = [&pk](const std::array<BigInt, 4>& A, const std::array<BigInt, 4>& B) {
        return std::array<BigInt, 4>{
            mod_pos(A[0] * B[0] + A[1] * B[2], pk), mod_pos(A[0] * B[1] + A[1] * B[3], pk),
            mod_pos(A[2] * B[0] + A[3] * B[2], pk), mod_pos(A[2] * B[1] + A[3] * B[3], pk)};
    };
    std::size_t nbits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (k == 0) return mod_pos(BigInt(2), pk);
    std::array<BigInt, 4> P = M;
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(k.get_mpz_t(), i)) R = mul(R, P);
        if (i + 1 < nbits) P = mul(P, P);
    }
    // M^k (t_1, t_0)^T = (t_{k+1}, t_k)^T, so t_k is the second row
    return mod_pos(R[2] * t + R[3] * 2, pk);
}

// ord_p(N(xi^k - 1)) computed mod p^K with K grown on demand.
long norm_ord_pow_minus_one(const QuadElem& xi, const BigInt& k, const BigInt& p) {
    BigRat T = xi.trace(), N = xi.norm();
    for (unsigned long K = 64;; K *= 2) {
        if (K > (1u << 20))
            throw resource_error("norm_ord_pow_minus_one: precision ceiling reached");
        BigInt pk = int_pow(p, K);
        // N(xi^k - 1) = N(xi)^k - Tr(xi^k) + 1
        BigInt nu = rat_residue(N, pk);
        BigInt val = mod_pos(powm(nu, k, pk) - trace_pow_mod(T, N, k, pk) + 1, pk);
        long o = ord_of_residue(val, p, K);
        if (o >= 0) return o;
    }
}

// ord_p(y^k - 1 mod p^K) at a split place, K grown on demand.
long split_ord_pow_minus_one(const QuadPlace& v, const QuadElem& xi, const BigInt& k) {
    for (unsigned K = 32;; K *= 2) {
        if (K > kLiftCeiling)
            throw resource_error("split_ord_pow_minus_one: lift precision ceiling reached");
        BigInt pk = int_pow(v.p, K);
        BigInt y = split_unit_residue(v, xi, K);
        BigInt val = mod_pos(powm(y, k, pk) - 1, pk);
        long o = ord_of_residue(val, v.p, K);
        if (o >= 0) return o;
    }
}

}  // namespace

std::vector<QuadPlace> places_above(const QuadField& F, const BigInt& p) {
    if (!is_probable_prime(p)) throw std::domain_error("places_above: p is not prime");
    std::vector<QuadPlace> out;
    if (F.disc % p == 0) {
        QuadPlace v{F, p, PlaceKind::ramified, 1, 2};
        if (p == 2) {
            v.omega_root = poly_eval(F, 0, p) == 0 ? 0 : 1;
        } else {
            v.omega_root = mod_pos(F.c1 * invert(BigInt(2), p), p);
        }
        if (poly_eval(F, v.omega_root, p) != 0)
            throw invariant_error("places_above: ramified root failed");
        v.root_digits = 1;
        out.push_back(std::move(v));
        return out;
    }
    bool splits;
    if (p == 2) {
        splits = F.d % 8 == 1;  // 2 nmid disc forces d = 1 mod 4
    } else {
        splits = mpz_legendre(F.d.get_mpz_t(), p.get_mpz_t()) == 1;
    }
    if (!splits) {
        out.push_back(QuadPlace{F, p, PlaceKind::inert, 2, 1});
        return out;
    }
    // two simple roots of x^2 - c1 x - c0 mod p, lifted to 32 digits
    BigInt r0, r1;
    if (p == 2) {
        r0 = 0;
        r1 = 1;
        if (poly_eval(F, r0, p) != 0 || poly_eval(F, r1, p) != 0)
            throw invariant_error("places_above: expected both roots mod 2");
    } else {
        BigInt s = sqrt_mod_p(F.d, p);
        if (F.c1 == 1) {
            r0 = mod_pos((1 + s) * invert(BigInt(2), p), p);
        } else {
            r0 = s;
        }
        r1 = mod_pos(F.c1 - r0, p);
        if (r0 > r1) std::swap(r0, r1);
    }
    unsigned digits = 1;
    BigInt pk = p;
    while (digits < 32) {
        pk = pk * pk;
        r0 = newton_step(F, r0, pk);
        r1 = newton_step(F, r1, pk);
        digits *= 2;
    }
    out.push_back(QuadPlace{F, p, PlaceKind::split, 1, 1, 0, r0, digits});
    out.push_back(QuadPlace{F, p, PlaceKind::split, 1, 1, 1, r1, digits});
    return out;
}

BigInt lift_root(const QuadPlace& v, unsigned digits) {
    if (v.kind != PlaceKind::split)
        throw std::domain_error("lift_root: not a split place");
    if (digits > kLiftCeiling)
        throw resource_error("lift_root: precision ceiling (4096 digits) reached");
    BigInt w = v.omega_root;
    unsigned cur = v.root_digits;
    BigInt pk = int_pow(v.p, cur);
    while (cur < digits) {
        cur *= 2;
        pk = pk * pk;
        w = newton_step(v.field, w, pk);
    }
    return mod_pos(w, int_pow(v.p, digits));
}

long ord_v(const QuadPlace& v, const QuadElem& x) {
    if (!(x.field == v.field)) throw std::domain_error("ord_v: field mismatch");
    if (x.a == 0 && x.b == 0) throw std::domain_error("ord_v: zero element");
    switch (v.kind) {
        case PlaceKind::split:
            return split_ord(v, x);
        case PlaceKind::inert: {
            long o = ord_p(x.norm(), v.p);
            if (o % 2 != 0) throw invariant_error("ord_v: odd norm valuation at inert place");
            return o / 2;
        }
        case PlaceKind::ramified:
            return ord_p(x.norm(), v.p);
    }
    throw std::logic_error("unreachable");
}

BigRat abs_v(const QuadPlace& v, const QuadElem& x) {
    if (x.a == 0 && x.b == 0) return BigRat(0);
    long o = ord_v(v, x);
    return rat_pow(BigRat(v.p), -static_cast<long>(v.residue_degree) * o);
}

PlaceKernel compute_kernel_quad(const QuadElem& xi, const QuadPlace& v) {
    if (xi.b == 0 && (xi.a == 1 || xi.a == -1))
        throw std::domain_error("compute_kernel_quad: xi must not be a root of unity");
    if ((xi.a == 0 && xi.b == 0) || ord_v(v, xi) != 0)
        throw std::domain_error("compute_kernel_quad: |xi|_v != 1");
    const BigInt& p = v.p;

    PlaceKernel k;
    k.p = p;
    k.rho = v.local_degree();
    k.label = v.to_string();

    // multiplicative order of the residue of xi
    switch (v.kind) {
        case PlaceKind::split: {
            BigInt y = split_unit_residue(v, xi, 1);
            k.m = order_from_group(p - 1, [&](const BigInt& e) { return powm(y, e, p) == 1; });
            break;
        }
        case PlaceKind::ramified: {
            if (xi.a.get_den() % p == 0 || xi.b.get_den() % p == 0)
                throw resource_error(
                    "compute_kernel_quad: non p-integral coordinates at a ramified place");
            BigInt y = mod_pos(rat_residue(xi.a, p) + rat_residue(xi.b, p) * v.omega_root, p);
            if (y == 0) throw invariant_error("compute_kernel_quad: unit with zero residue");
            k.m = order_from_group(p - 1, [&](const BigInt& e) { return powm(y, e, p) == 1; });
            break;
        }
        case PlaceKind::inert: {
            Fp2 y{rat_residue(xi.a, p), rat_residue(xi.b, p)};
            k.m = order_from_group(p * p - 1, [&](const BigInt& e) {
                Fp2 r = fp2_pow(v.field, y, e, p);
                return r.x == 1 && r.y == 0;
            });
            break;
        }
    }

    auto ord_at = [&](const BigInt& exponent) {
        return v.kind == PlaceKind::split ? split_ord_pow_minus_one(v, xi, exponent)
                                          : norm_ord_pow_minus_one(xi, exponent, p);
    };

    // w_j = -log_p |xi^(m p^j) - 1|_v; the stable step is the local degree.
    const long step = static_cast<long>(k.rho);
    constexpr unsigned kCap = 64;
    std::vector<long> w;
    w.push_back(ord_at(k.m));
    unsigned D = 0;
    for (;; ++D) {
        if (D >= kCap) throw invariant_error("compute_kernel_quad: D search exceeded cap");
        w.push_back(ord_at(k.m * int_pow(p, D + 1)));
        if (w[D + 1] == w[D] + step) break;
    }
    k.D = D;
    k.C = rat_pow(BigRat(p), step * static_cast<long>(D) - w[D]);
    for (unsigned j = 0; j <= D; ++j) k.exceptional.push_back(rat_pow(BigRat(p), -w[j]));
    return k;
}

}  // namespace solzeta
