#ifndef PSLET_REAL_HPP
#define PSLET_REAL_HPP

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace pslet {

/// Working precision for the multiple-precision kernel.
struct Precision {
    long mantissa_bits = 192;
};

/// Multiple-precision real number (MPFR backed, round-to-nearest).
///
/// Every value carries its own precision; binary operations produce a
/// result at the larger of the two operand precisions, so precision
/// propagates through a computation without global state.
class Real {
  public:
    static constexpr long kMinBits = 53;

    Real() { mpfr_init2(v_, kMinBits); mpfr_set_zero(v_, 1); }
    explicit Real(Precision p) { mpfr_init2(v_, clamp(p.mantissa_bits)); mpfr_set_zero(v_, 1); }
    Real(double x, Precision p = {}) {
        mpfr_init2(v_, clamp(p.mantissa_bits));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(long x, Precision p = {}) {
        mpfr_init2(v_, clamp(p.mantissa_bits));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    Real(int x, Precision p = {}) : Real(static_cast<long>(x), p) {}
    /// Parses a decimal literal at the requested precision.
    Real(const std::string& s, Precision p = {}) {
        mpfr_init2(v_, clamp(p.mantissa_bits));
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }

    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, kMinBits);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Decimal string with the given number of significant digits.
    std::string str(int sig_digits = 20) const;

    /// Same value rounded to another precision.
    Real to_prec(Precision p) const {
        Real r(p);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend Real operator+(const Real& a, const Real& b) {
        Real r = make(a, b);
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r = make(a, b);
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r = make(a, b);
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r = make(a, b);
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a) {
        Real r = make(a, a);
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend Real operator*(const Real& a, long b) {
        Real r = make(a, a);
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) {
        Real r = make(a, a);
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, long b) {
        Real r = make(a, a);
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, long b) {
        Real r = make(a, a);
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    friend Real sqrt(const Real& a) {
        Real r = make(a, a);
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real abs(const Real& a) {
        Real r = make(a, a);
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    /// a^n for integer n (n may be negative if a != 0).
    friend Real pow_int(const Real& a, long n) {
        Real r = make(a, a);
        mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }
    /// k! at the precision of the template value.
    static Real factorial(unsigned long k, Precision p) {
        Real r(p);
        mpfr_fac_ui(r.raw(), k, MPFR_RNDN);
        return r;
    }
    /// 2^e at the given precision, e may be negative.
    static Real pow2(long e, Precision p) {
        Real r(p);
        mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
        return r;
    }

  private:
    static long clamp(long bits) { return bits < kMinBits ? kMinBits : bits; }
    static Real make(const Real& a, const Real& b) {
        Precision p{a.prec() > b.prec() ? a.prec() : b.prec()};
        return Real(p);
    }
    mpfr_t v_;
};

}  // namespace pslet

#endif
