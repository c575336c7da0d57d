#pragma once

// Multiprecision scalar types shared by every module.
//
// Real is a variable-precision MPFR float; the precision of newly created
// values follows the process-wide default installed by PrecisionScope.
// Complex is a plain (re, im) pair over Real with principal-branch
// elementary functions.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace mocklab {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

/// pi at the current default precision.
Real pi();

/// 2^e as a Real (e may be negative).
Real pow2(long e);

/// Parses a decimal literal ("1e-40", "0.25") at the current precision.
Real real_from_string(const std::string& s);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(double r, double i = 0.0) : re(r), im(i) {}  // NOLINT(google-explicit-constructor)

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& s);
  Complex& operator/=(const Real& s);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator*(Complex a, const Real& s);
Complex operator*(const Real& s, Complex a);
Complex operator/(Complex a, const Real& s);
Complex operator-(const Complex& a);
bool operator==(const Complex& a, const Complex& b);

inline Complex i_unit() { return {Real(0), Real(1)}; }

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);   // in (-pi, pi]
Complex conj(const Complex& z);

Complex exp(const Complex& z);
Complex log(const Complex& z);   // principal branch
Complex sqrt(const Complex& z);  // principal branch, Re >= 0
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
Complex tanh(const Complex& z);

/// z^n by binary powering; exact single-valued integer power.
Complex pow_int(Complex z, long long n);

/// e^{i*phi}
Complex expi(const Real& phi);

std::ostream& operator<<(std::ostream& os, const Complex& z);

/// Exact rational with 64-bit parts, always normalized (den > 0, gcd 1).
/// Used for exponents such as (14+15(2k+1))^2/120 where exactness matters.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] Real to_real() const;
  [[nodiscard]] std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return {-a.num_, a.den_}; }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Decimal rendering with a fixed number of significant digits.
std::string to_decimal(const Real& x, unsigned digits);

}  // namespace mocklab
