#include "solzeta/real.hpp"

#include <cstdlib>

namespace solzeta {

std::string Real::to_decimal() const {
    if (mpfr_zero_p(x_)) return "0";
    if (mpfr_nan_p(x_)) return "nan";
    if (mpfr_inf_p(x_)) return mpfr_sgn(x_) > 0 ? "inf" : "-inf";
    // ceil(prec * log10(2)) + 2 digits pins the value
    std::size_t digits = static_cast<std::size_t>(prec_ * 0.30103) + 3;
    mpfr_exp_t exp = 0;
    char* raw = mpfr_get_str(nullptr, &exp, 10, digits, x_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    // strip trailing zeros but keep at least one digit
    std::size_t last = mant.find_last_not_of('0');
    mant.erase(last + 1);
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    // mpfr's exponent is for 0.mant; shift to d.ddd form
    out += "e" + std::to_string(exp - 1);
    return out;
}

}  // namespace solzeta
