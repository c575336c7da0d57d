#pragma once

#include "mocklab/arith.hpp"
#include "mocklab/precision.hpp"

#include <array>

namespace mocklab {

using Vec2 = std::array<Complex, 2>;

struct Mat2 {
  std::array<std::array<Complex, 2>, 2> m;

  static Mat2 identity() { return {{{{Complex(1), Complex(0)}, {Complex(0), Complex(1)}}}}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
      }
    }
    return r;
  }
  friend Vec2 operator*(const Mat2& a, const Vec2& v) {
    return {a.m[0][0] * v[0] + a.m[0][1] * v[1], a.m[1][0] * v[0] + a.m[1][1] * v[1]};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        r.m[i][j] = a.m[i][j] - b.m[i][j];
      }
    }
    return r;
  }
  friend Mat2 operator*(const Complex& s, const Mat2& a) {
    Mat2 r;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        r.m[i][j] = s * a.m[i][j];
      }
    }
    return r;
  }

  [[nodiscard]] Complex det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  [[nodiscard]] Complex trace() const { return m[0][0] + m[1][1]; }
  /// Largest entry modulus.
  [[nodiscard]] Real max_abs() const;
  [[nodiscard]] Mat2 pow(unsigned n) const;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator*(const Complex& s, const Vec2& v) { return {s * v[0], s * v[1]}; }
/// Euclidean norm.
Real norm2(const Vec2& v);

/// M = (2/sqrt5) [[sin(pi/5), sin(2pi/5)], [sin(2pi/5), -sin(pi/5)]].
Mat2 mixing_matrix(const PrecisionContext& ctx);
/// D = diag(e^{-pi i/10}, e^{-9 pi i/10}).
Mat2 phase_matrix(const PrecisionContext& ctx);

}  // namespace mocklab
