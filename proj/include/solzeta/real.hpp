#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "solzeta/types.hpp"

namespace solzeta {

/// RAII wrapper over a single mpfr_t at a fixed precision. Heavy lifting
/// stays in plain mpfr calls on get(); this only owns storage and
/// formatting.
class Real {
public:
    explicit Real(unsigned precision_bits) : prec_(precision_bits) {
        mpfr_init2(x_, static_cast<mpfr_prec_t>(precision_bits));
        mpfr_set_zero(x_, 1);
    }
    Real(const Real& o) : prec_(o.prec_) {
        mpfr_init2(x_, static_cast<mpfr_prec_t>(prec_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(x_, static_cast<mpfr_prec_t>(prec_));
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, static_cast<mpfr_prec_t>(o.prec_));
            prec_ = o.prec_;
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(x_, o.x_);
        std::swap(prec_, o.prec_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }
    unsigned precision() const { return prec_; }

    static Real from_rat(const BigRat& q, unsigned precision_bits) {
        Real r(precision_bits);
        mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real from_long(long v, unsigned precision_bits) {
        Real r(precision_bits);
        mpfr_set_si(r.x_, v, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Deterministic scientific-notation decimal carrying the full
    // precision of the value; identical inputs print identically.
    std::string to_decimal() const;

private:
    mpfr_t x_;
    unsigned prec_;
};

}  // namespace solzeta
