#pragma once

// Thin value-semantic wrapper over an MPFR float.
//
// Every freshly computed value takes the thread's current working precision,
// which is set with PrecisionScope. Copies keep the precision of their source,
// so a value computed under a raised precision survives being returned to an
// enclosing scope; the next arithmetic operation rounds it back down.

#include <mpfr.h>

#include <compare>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace genbell {

/// Current working precision of the calling thread, in bits.
mpfr_prec_t working_precision();

/// Sets the working precision for the lifetime of the object and restores
/// the previous value on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real();
  Real(int v);  // NOLINT(google-explicit-constructor)
  Real(long v);  // NOLINT(google-explicit-constructor)
  Real(unsigned v);  // NOLINT(google-explicit-constructor)
  Real(unsigned long v);  // NOLINT(google-explicit-constructor)
  explicit Real(double v);
  explicit Real(const mpz_class& v);
  explicit Real(const mpq_class& v);
  static Real from_string(std::string_view text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double() const;
  long double to_long_double() const;
  /// Nearest integer (ties away from zero).
  mpz_class round_to_integer() const;
  /// Scientific-notation decimal string with `digits` significant digits
  /// (0 selects enough digits to round-trip the current precision).
  std::string to_string(int digits = 0) const;
  /// Base-2 exponent e such that |x| in [2^(e-1), 2^e); 0 for zero.
  long exponent() const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  struct Uninitialized {};
  Real(Uninitialized, mpfr_prec_t bits);

  mpfr_t value_;

  friend Real make_uninitialized(mpfr_prec_t bits);
};

/// Fresh value at the working precision with unspecified contents; used as
/// an output operand for raw mpfr_* calls.
Real make_uninitialized(mpfr_prec_t bits = working_precision());

std::ostream& operator<<(std::ostream& os, const Real& x);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real gamma(const Real& x);
Real lgamma(const Real& x);  // log|Gamma(x)|
Real ldexp(const Real& x, long e);
Real floor(const Real& x);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

Real const_pi();
Real const_e();
/// 2^(-working_precision), the unit roundoff scale.
Real epsilon();

/// Complex number over Real, just enough arithmetic for amplitudes and
/// matrix elements.
struct Complex {
  Real re;
  Real im;

  Complex() = default;
  Complex(Real r, Real i = Real()) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  Complex(double r, double i) : re(r), im(i) {}

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }  // squared magnitude
  Real abs() const;

  Complex& operator+=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex exp(const Complex& z);
/// Principal branch, arg in (-pi, pi].
Complex log(const Complex& z);
Complex pow(const Complex& z, long exponent);

}  // namespace genbell
