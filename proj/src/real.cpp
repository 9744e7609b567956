#include "dwell/real.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dwell {

namespace {
int g_default_digits = 100;
constexpr int kMinDigits = 30;

void check_digits(int digits) {
    if (digits < kMinDigits)
        throw std::invalid_argument("Real: precision must be at least 30 decimal digits");
}
}  // namespace

mpfr_prec_t Real::bits_for(int digits) {
    // 3.33 bits per decimal digit plus guard bits so that decimal
    // round-trips at `digits` significant digits are exact.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

int Real::default_digits() { return g_default_digits; }

void Real::set_default_digits(int digits) {
    check_digits(digits);
    g_default_digits = digits;
}

Real::Real() : digits_(g_default_digits) {
    mpfr_init2(x_, bits_for(digits_));
    mpfr_set_zero(x_, 1);
}

Real::Real(int digits, mpfr_prec_t) : digits_(digits) {
    mpfr_init2(x_, bits_for(digits_));
}

Real::Real(long value, int digits) : digits_(digits) {
    check_digits(digits);
    mpfr_init2(x_, bits_for(digits_));
    mpfr_set_si(x_, value, MPFR_RNDN);
}

Real::Real(int value, int digits) : Real(static_cast<long>(value), digits) {}

Real::Real(double value, int digits) : digits_(digits) {
    check_digits(digits);
    mpfr_init2(x_, bits_for(digits_));
    mpfr_set_d(x_, value, MPFR_RNDN);
}

Real::Real(const Real& other) : digits_(other.digits_) {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
    x_[0] = other.x_[0];
    mpfr_init2(other.x_, MPFR_PREC_MIN);  // leave a valid husk for the dtor
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(x_, mpfr_get_prec(other.x_));
        mpfr_set(x_, other.x_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(x_, other.x_);
        digits_ = other.digits_;
    }
    return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::from_string(std::string_view text, int digits) {
    check_digits(digits);
    Real r(digits, mpfr_prec_t{0});
    std::string s(text);
    if (s.empty() || mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real: cannot parse '" + s + "' as a decimal number");
    return r;
}

bool Real::is_zero() const { return mpfr_zero_p(x_) != 0; }
bool Real::is_negative() const { return mpfr_sgn(x_) < 0; }
int Real::sign() const {
    int s = mpfr_sgn(x_);
    return (s > 0) - (s < 0);
}

double Real::to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

long Real::to_long() const {
    if (!mpfr_integer_p(x_) || !mpfr_fits_slong_p(x_, MPFR_RNDN))
        throw std::domain_error("Real: value is not an exact machine integer");
    return mpfr_get_si(x_, MPFR_RNDN);
}

std::string Real::str() const { return str(digits_); }

std::string Real::str(int significant) const {
    if (significant < 1) significant = 1;
    if (significant > digits_) significant = digits_;
    if (mpfr_zero_p(x_)) return "0";
    if (!mpfr_number_p(x_)) return mpfr_nan_p(x_) ? "nan" : (mpfr_sgn(x_) > 0 ? "inf" : "-inf");

    mpfr_exp_t e;
    char* buf = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), x_, MPFR_RNDN);
    std::string mant(buf);
    mpfr_free_str(buf);

    bool neg = false;
    if (!mant.empty() && mant[0] == '-') {
        neg = true;
        mant.erase(0, 1);
    }
    // value = 0.mant * 10^e ; trim trailing zeros but keep one digit
    size_t last = mant.find_last_not_of('0');
    mant.erase(last + 1);
    if (mant.empty()) mant = "0";

    std::string out;
    long exp = static_cast<long>(e);
    long len = static_cast<long>(mant.size());
    if (exp >= -4 && exp <= significant + 4) {
        if (exp <= 0) {
            out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
        } else if (exp >= len) {
            out = mant + std::string(static_cast<size_t>(exp - len), '0');
        } else {
            out = mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
        }
    } else {
        out = mant.substr(0, 1);
        if (len > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(exp - 1);
    }
    return neg ? "-" + out : out;
}

Real Real::operator-() const {
    Real r(digits_, mpfr_prec_t{0});
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

namespace {
inline int max_digits(const Real& a, const Real& b) {
    return a.digits() > b.digits() ? a.digits() : b.digits();
}
}  // namespace

#define DWELL_REAL_BINOP(opname, mpfr_fn)                         \
    Real operator opname(const Real& a, const Real& b) {          \
        Real r(max_digits(a, b), mpfr_prec_t{0});                 \
        mpfr_fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);            \
        return r;                                                 \
    }

DWELL_REAL_BINOP(+, mpfr_add)
DWELL_REAL_BINOP(-, mpfr_sub)
DWELL_REAL_BINOP(*, mpfr_mul)
DWELL_REAL_BINOP(/, mpfr_div)
#undef DWELL_REAL_BINOP

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

void Real::add_product(const Real& a, const Real& b) {
    mpfr_fma(x_, a.x_, b.x_, x_, MPFR_RNDN);
}

#define DWELL_REAL_FN(name, mpfr_fn)              \
    Real name(const Real& x) {                    \
        Real r(x);                                \
        mpfr_fn(r.raw(), x.raw(), MPFR_RNDN);     \
        return r;                                 \
    }

DWELL_REAL_FN(sqrt, mpfr_sqrt)
DWELL_REAL_FN(abs, mpfr_abs)
DWELL_REAL_FN(exp, mpfr_exp)
DWELL_REAL_FN(log, mpfr_log)
DWELL_REAL_FN(sinh, mpfr_sinh)
DWELL_REAL_FN(cosh, mpfr_cosh)
DWELL_REAL_FN(tanh, mpfr_tanh)
DWELL_REAL_FN(acosh, mpfr_acosh)
#undef DWELL_REAL_FN

Real floor(const Real& x) {
    Real r(x);
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real pow(const Real& base, long e) {
    Real r(base);
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    return r;
}

Real pow(const Real& base, const Real& e) {
    Real r(base.digits() > e.digits() ? base : e);
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

Real sech(const Real& x) { return Real(1L, x.digits()) / cosh(x); }

Real pi(int digits) {
    Real r(0L, digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real pow10(long e, int digits) {
    Real r(0L, digits);
    mpfr_ui_pow_ui(r.raw(), 10u, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace dwell
