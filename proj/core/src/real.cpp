#include "genbell/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace genbell {
namespace {

thread_local mpfr_prec_t g_working_precision = 256;

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

template <class Op>
Real unary(const Real& x, Op op) {
  Real out = make_uninitialized();
  op(out.get(), x.get(), kRound);
  return out;
}

}  // namespace

mpfr_prec_t working_precision() { return g_working_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_working_precision) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw std::invalid_argument("PrecisionScope: precision out of range");
  }
  g_working_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_working_precision = saved_; }

Real::Real(Uninitialized, mpfr_prec_t bits) { mpfr_init2(value_, bits); }

Real make_uninitialized(mpfr_prec_t bits) { return Real(Real::Uninitialized{}, bits); }

Real::Real() : Real(Uninitialized{}, g_working_precision) { mpfr_set_zero(value_, 1); }

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) : Real(Uninitialized{}, g_working_precision) { mpfr_set_si(value_, v, kRound); }

Real::Real(unsigned v) : Real(static_cast<unsigned long>(v)) {}

Real::Real(unsigned long v) : Real(Uninitialized{}, g_working_precision) {
  mpfr_set_ui(value_, v, kRound);
}

Real::Real(double v) : Real(Uninitialized{}, g_working_precision) { mpfr_set_d(value_, v, kRound); }

Real::Real(const mpz_class& v) : Real(Uninitialized{}, g_working_precision) {
  mpfr_set_z(value_, v.get_mpz_t(), kRound);
}

Real::Real(const mpq_class& v) : Real(Uninitialized{}, g_working_precision) {
  mpfr_set_q(value_, v.get_mpq_t(), kRound);
}

Real Real::from_string(std::string_view text) {
  Real out = make_uninitialized();
  std::string owned(text);
  if (mpfr_set_str(out.value_, owned.c_str(), 10, kRound) != 0) {
    throw std::invalid_argument("Real::from_string: not a number: " + owned);
  }
  return out;
}

Real::Real(const Real& other) : Real(Uninitialized{}, other.precision()) {
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept : Real(Uninitialized{}, mpfr_get_prec(other.value_)) {
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

double Real::to_double() const { return mpfr_get_d(value_, kRound); }

long double Real::to_long_double() const { return mpfr_get_ld(value_, kRound); }

mpz_class Real::round_to_integer() const {
  if (!is_finite()) throw std::domain_error("Real::round_to_integer: not finite");
  Real rounded = make_uninitialized(precision());
  mpfr_round(rounded.value_, value_);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), rounded.value_, kRound);
  return out;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  if (digits <= 0) digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

long Real::exponent() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(value_)); }

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real out = make_uninitialized();
  mpfr_add(out.get(), a.get(), b.get(), kRound);
  return out;
}

Real operator-(const Real& a, const Real& b) {
  Real out = make_uninitialized();
  mpfr_sub(out.get(), a.get(), b.get(), kRound);
  return out;
}

Real operator*(const Real& a, const Real& b) {
  Real out = make_uninitialized();
  mpfr_mul(out.get(), a.get(), b.get(), kRound);
  return out;
}

Real operator/(const Real& a, const Real& b) {
  Real out = make_uninitialized();
  mpfr_div(out.get(), a.get(), b.get(), kRound);
  return out;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.get(), b.get())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.get(), b.get());
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real cbrt(const Real& x) { return unary(x, mpfr_cbrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log2(const Real& x) { return unary(x, mpfr_log2); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real gamma(const Real& x) { return unary(x, mpfr_gamma); }

Real lgamma(const Real& x) {
  Real out = make_uninitialized();
  int sign = 0;
  mpfr_lgamma(out.get(), &sign, x.get(), kRound);
  return out;
}

Real pow(const Real& base, const Real& exponent) {
  Real out = make_uninitialized();
  mpfr_pow(out.get(), base.get(), exponent.get(), kRound);
  return out;
}

Real pow(const Real& base, long exponent) {
  Real out = make_uninitialized();
  mpfr_pow_si(out.get(), base.get(), exponent, kRound);
  return out;
}

Real atan2(const Real& y, const Real& x) {
  Real out = make_uninitialized();
  mpfr_atan2(out.get(), y.get(), x.get(), kRound);
  return out;
}

Real ldexp(const Real& x, long e) {
  Real out = make_uninitialized();
  mpfr_mul_2si(out.get(), x.get(), e, kRound);
  return out;
}

Real floor(const Real& x) {
  Real out = make_uninitialized();
  mpfr_floor(out.get(), x.get());
  return out;
}

Real max(const Real& a, const Real& b) { return a < b ? Real(b) : Real(a); }
Real min(const Real& a, const Real& b) { return b < a ? Real(b) : Real(a); }

Real const_pi() {
  Real out = make_uninitialized();
  mpfr_const_pi(out.get(), kRound);
  return out;
}

Real const_e() { return exp(Real(1)); }

Real epsilon() { return ldexp(Real(1), -static_cast<long>(working_precision())); }

Real Complex::abs() const { return sqrt(norm()); }

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) { return *this = *this * rhs; }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }

Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.norm();
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }

Complex exp(const Complex& z) {
  const Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {log(z.abs()), atan2(z.im, z.re)}; }

Complex pow(const Complex& z, long exponent) {
  Complex result(Real(1), Real(0));
  Complex base = z;
  bool invert = exponent < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  if (invert) result = Complex(Real(1), Real(0)) / result;
  return result;
}

}  // namespace genbell
