#include "pslet/real.hpp"

#include <cstdlib>
#include <cstring>

namespace pslet {

std::string Real::str(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(sig_digits), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    bool neg = false;
    if (!digits.empty() && digits[0] == '-') {
        neg = true;
        digits.erase(0, 1);
    }

    // mpfr convention: value = 0.digits * 10^exp10
    std::string out;
    if (exp10 > 0 && exp10 <= sig_digits + 3) {
        if (static_cast<size_t>(exp10) >= digits.size()) {
            out = digits + std::string(static_cast<size_t>(exp10) - digits.size(), '0');
        } else {
            out = digits.substr(0, static_cast<size_t>(exp10)) + "." +
                  digits.substr(static_cast<size_t>(exp10));
        }
    } else if (exp10 <= 0 && exp10 > -6) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    // strip trailing zeros in the fraction
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        size_t last = out.find_last_not_of('0');
        if (out[last] == '.') last--;
        out.erase(last + 1);
    }
    return neg ? "-" + out : out;
}

}  // namespace pslet
