#include "mocklab/arith.hpp"

#include "mocklab/errors.hpp"

#include <mpfr.h>

#include <numeric>
#include <ostream>
#include <sstream>

namespace mocklab {

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real pow2(long e) {
  Real r(1);
  mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
  return r;
}

Real real_from_string(const std::string& s) {
  Real r;
  if (mpfr_set_str(r.backend().data(), s.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (boost::multiprecision::abs(o.re) >= boost::multiprecision::abs(o.im)) {
    Real ratio = o.im / o.re;
    Real den = o.re + o.im * ratio;
    Real r = (re + im * ratio) / den;
    im = (im - re * ratio) / den;
    re = std::move(r);
  } else {
    Real ratio = o.re / o.im;
    Real den = o.re * ratio + o.im;
    Real r = (re * ratio + im) / den;
    im = (im * ratio - re) / den;
    re = std::move(r);
  }
  return *this;
}

Complex& Complex::operator*=(const Real& s) {
  re *= s;
  im *= s;
  return *this;
}

Complex& Complex::operator/=(const Real& s) {
  re /= s;
  im /= s;
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator*(Complex a, const Real& s) { return a *= s; }
Complex operator*(const Real& s, Complex a) { return a *= s; }
Complex operator/(Complex a, const Real& s) { return a /= s; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Real abs(const Complex& z) {
  Real r;
  mpfr_hypot(r.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) { return boost::multiprecision::atan2(z.im, z.re); }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Complex expi(const Real& phi) {
  Real s;
  Real c;
  mpfr_sin_cos(s.backend().data(), c.backend().data(), phi.backend().data(), MPFR_RNDN);
  return {c, s};
}

Complex exp(const Complex& z) {
  Complex u = expi(z.im);
  return u * boost::multiprecision::exp(z.re);
}

Complex log(const Complex& z) {
  if (z.re == 0 && z.im == 0) {
    throw DomainError("log(0)");
  }
  return {boost::multiprecision::log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (z.re == 0 && z.im == 0) {
    return {};
  }
  Real m = abs(z);
  // Principal root: Re >= 0, computed without cancellation.
  Real t = boost::multiprecision::sqrt((m + boost::multiprecision::abs(z.re)) / 2);
  if (z.re >= 0) {
    return {t, z.im / (2 * t)};
  }
  Real im = z.im >= 0 ? t : Real(-t);
  return {boost::multiprecision::abs(z.im) / (2 * t), im};
}

Complex sin(const Complex& z) {
  Complex u = expi(z.re);
  return {u.im * boost::multiprecision::cosh(z.im), u.re * boost::multiprecision::sinh(z.im)};
}

Complex cos(const Complex& z) {
  Complex u = expi(z.re);
  return {u.re * boost::multiprecision::cosh(z.im), -u.im * boost::multiprecision::sinh(z.im)};
}

Complex sinh(const Complex& z) {
  Complex u = expi(z.im);
  return {boost::multiprecision::sinh(z.re) * u.re, boost::multiprecision::cosh(z.re) * u.im};
}

Complex cosh(const Complex& z) {
  Complex u = expi(z.im);
  return {boost::multiprecision::cosh(z.re) * u.re, boost::multiprecision::sinh(z.re) * u.im};
}

Complex tanh(const Complex& z) { return sinh(z) / cosh(z); }

Complex pow_int(Complex z, long long n) {
  if (n < 0) {
    return Complex(1) / pow_int(std::move(z), -n);
  }
  Complex acc(1);
  while (n > 0) {
    if (n & 1) {
      acc *= z;
    }
    n >>= 1;
    if (n > 0) {
      z *= z;
    }
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << '(' << z.re << ", " << z.im << ')';
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Real Rational::to_real() const { return Real(num_) / Real(den_); }

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }

std::string to_decimal(const Real& x, unsigned digits) {
  std::ostringstream os;
  os.precision(static_cast<std::streamsize>(digits > 0 ? digits - 1 : 0));
  os << std::scientific << x;
  return os.str();
}

}  // namespace mocklab
