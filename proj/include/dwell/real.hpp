#ifndef DWELL_REAL_HPP
#define DWELL_REAL_HPP

#include <mpfr.h>

#include <string>
#include <string_view>

namespace dwell {

/// Arbitrary-precision real number. Precision is tracked in decimal digits
/// (never below 30); any binary operation is carried out at the larger of
/// the two operand precisions. Backed by MPFR with round-to-nearest.
class Real {
public:
    Real();
    explicit Real(long value, int digits = default_digits());
    explicit Real(int value, int digits = default_digits());
    explicit Real(double value, int digits = default_digits());

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    /// Parse a decimal string ("-12.34", "1.5e-8", ...). Throws
    /// std::invalid_argument on malformed input.
    static Real from_string(std::string_view text, int digits = default_digits());

    /// Process-wide default precision for newly constructed values.
    static int default_digits();
    static void set_default_digits(int digits);

    int digits() const { return digits_; }

    /// Decimal serialization carrying the full precision of the value:
    /// sign, integer part, '.', fraction, optional 'e' exponent. Trailing
    /// zeros of the fraction are trimmed; re-parsing reproduces the string.
    std::string str() const;
    /// Same format limited to `significant` digits.
    std::string str(int significant) const;

    double to_double() const;
    long to_long() const;  // value must be an exact small integer

    bool is_zero() const;
    bool is_negative() const;
    int sign() const;  // -1, 0, +1

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);

    /// this += a*b, fused. Hot-loop helper for series products.
    void add_product(const Real& a, const Real& b);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend Real operator+(const Real& a, long b) { return a + Real(b, a.digits_); }
    friend Real operator+(long a, const Real& b) { return Real(a, b.digits_) + b; }
    friend Real operator-(const Real& a, long b) { return a - Real(b, a.digits_); }
    friend Real operator-(long a, const Real& b) { return Real(a, b.digits_) - b; }
    friend Real operator*(const Real& a, long b) { return a * Real(b, a.digits_); }
    friend Real operator*(long a, const Real& b) { return Real(a, b.digits_) * b; }
    friend Real operator/(const Real& a, long b) { return a / Real(b, a.digits_); }
    friend Real operator/(long a, const Real& b) { return Real(a, b.digits_) / b; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) >= 0; }
    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) == 0; }

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }

    friend Real sqrt(const Real& x);
    friend Real abs(const Real& x);
    friend Real exp(const Real& x);
    friend Real log(const Real& x);
    friend Real sinh(const Real& x);
    friend Real cosh(const Real& x);
    friend Real tanh(const Real& x);
    friend Real acosh(const Real& x);
    friend Real floor(const Real& x);
    friend Real pow(const Real& base, long e);
    friend Real pow(const Real& base, const Real& e);

private:
    static mpfr_prec_t bits_for(int digits);
    Real(int digits, mpfr_prec_t /*tag*/);  // uninitialized-value ctor, internal

    mpfr_t x_;
    int digits_;
};

Real sqrt(const Real& x);
Real abs(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real acosh(const Real& x);
Real floor(const Real& x);
Real pow(const Real& base, long e);
Real pow(const Real& base, const Real& e);

/// sech(x) = 1/cosh(x)
Real sech(const Real& x);

Real pi(int digits = Real::default_digits());

inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }

/// 10^e at the given precision.
Real pow10(long e, int digits = Real::default_digits());

}  // namespace dwell

#endif
