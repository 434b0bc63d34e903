#pragma once

#include <string>
#include <vector>

#include "solzeta/kernel.hpp"
#include "solzeta/types.hpp"

namespace solzeta {

/// Real quadratic field Q(sqrt(d)), d squarefree > 1. Elements are
/// coordinates over (1, omega) with omega = (1+sqrt(d))/2 when d = 1 mod 4
/// and omega = sqrt(d) otherwise, so integral elements have integral
/// coordinates. omega satisfies omega^2 = c1*omega + c0.
struct QuadField {
    BigInt d;
    BigInt disc;
    BigInt c1, c0;  // minimal polynomial x^2 - c1 x - c0 of omega

    explicit QuadField(const BigInt& d_);
    bool operator==(const QuadField& o) const { return d == o.d; }
};

struct QuadElem {
    QuadField field;
    BigRat a, b;  // a + b*omega

    QuadElem(QuadField f, BigRat a_, BigRat b_)
        : field(std::move(f)), a(std::move(a_)), b(std::move(b_)) {}

    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }

    QuadElem conj() const;
    BigRat trace() const;
    BigRat norm() const;
    QuadElem pow(const BigInt& e) const;  // e >= 0

    bool is_rational() const { return b == 0; }
    std::string to_string() const;
};

enum class PlaceKind { split, inert, ramified };

/// A finite place of a real quadratic field. Immutable; for split places
/// the stored root lift is a starting point, precision grows through
/// lift_root without mutating the place.
struct QuadPlace {
    QuadField field;
    BigInt p;
    PlaceKind kind;
    unsigned residue_degree;  // f: 1 split/ramified, 2 inert
    unsigned ram_index;       // e: 2 ramified, 1 otherwise
    int root_index = 0;       // split: 0 or 1, selects the Hensel branch
    BigInt omega_root;        // split: omega image mod p^root_digits; ramified: mod p
    unsigned root_digits = 0;

    // exponent of |n|_p in the kernel's stable regime (local degree e*f)
    unsigned local_degree() const { return residue_degree * ram_index; }
    std::string to_string() const;
};

// One ramified place if p | disc, a split pair if disc is a nonzero
// square mod p, one inert place otherwise. Split roots are Hensel-lifted
// to 32 p-adic digits.
std::vector<QuadPlace> places_above(const QuadField& F, const BigInt& p);

// Root of omega's minimal polynomial mod p^digits on v's branch
// (split places only). Newton doubling from the stored lift; the spec'd
// ceiling is 4096 digits (resource_error beyond).
BigInt lift_root(const QuadPlace& v, unsigned digits);

// ord_v(x) in uniformizer units, exact; x != 0.
long ord_v(const QuadPlace& v, const QuadElem& x);

// Normalized absolute value |x|_v = (residue field size)^(-ord_v(x)),
// the normalization that makes the Artin product formula hold. |0|_v = 0.
BigRat abs_v(const QuadPlace& v, const QuadElem& x);

// Kernel constants for |xi^n - 1|_v, |xi|_v = 1 required. The order m_v
// lives in the residue field (size p or p^2); valuations of xi^k - 1 are
// computed modulo p^K via the trace recurrence (inert/ramified) or the
// Hensel root image (split), raising K on demand.
PlaceKernel compute_kernel_quad(const QuadElem& xi, const QuadPlace& v);

// Same contract as eval_abs_fast; quadratic kernels share PlaceKernel.
inline BigRat quad_eval_abs(const PlaceKernel& k, const BigInt& n) { return k.eval(n); }

}  // namespace solzeta
