#pragma once

#include <array>
#include <cmath>

namespace eyefit {

// 2/3-vectors and 3x3 matrices templated on the scalar so the same geometry
// code runs on plain doubles and on forward-mode dual numbers.

template <class S>
struct Vec2T {
  S x{};
  S y{};
};

template <class S>
struct Vec3T {
  S x{};
  S y{};
  S z{};
};

using Vec2 = Vec2T<double>;
using Vec3 = Vec3T<double>;

template <class S>
inline Vec2T<S> operator+(const Vec2T<S>& a, const Vec2T<S>& b) {
  return {a.x + b.x, a.y + b.y};
}

template <class S>
inline Vec2T<S> operator-(const Vec2T<S>& a, const Vec2T<S>& b) {
  return {a.x - b.x, a.y - b.y};
}

template <class S>
inline Vec3T<S> operator+(const Vec3T<S>& a, const Vec3T<S>& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

template <class S>
inline Vec3T<S> operator-(const Vec3T<S>& a, const Vec3T<S>& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}

template <class S>
inline Vec3T<S> operator*(const S& s, const Vec3T<S>& v) {
  return {s * v.x, s * v.y, s * v.z};
}

template <class S>
inline Vec3T<S> operator-(const Vec3T<S>& v) {
  return {-v.x, -v.y, -v.z};
}

template <class S>
inline S dot(const Vec2T<S>& a, const Vec2T<S>& b) {
  return a.x * b.x + a.y * b.y;
}

template <class S>
inline S dot(const Vec3T<S>& a, const Vec3T<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
inline S norm(const Vec2T<S>& v) {
  using std::sqrt;
  return sqrt(dot(v, v));
}

template <class S>
inline S norm(const Vec3T<S>& v) {
  using std::sqrt;
  return sqrt(dot(v, v));
}

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

// Row-major 3x3 matrix.
template <class S>
struct Mat3T {
  std::array<S, 9> m{};

  static Mat3T identity() {
    Mat3T r;
    r.m = {S(1), S(0), S(0), S(0), S(1), S(0), S(0), S(0), S(1)};
    return r;
  }

  S& operator()(int row, int col) { return m[static_cast<std::size_t>(row * 3 + col)]; }
  const S& operator()(int row, int col) const {
    return m[static_cast<std::size_t>(row * 3 + col)];
  }
};

using Mat3 = Mat3T<double>;

template <class S>
inline Vec3T<S> operator*(const Mat3T<S>& a, const Vec3T<S>& v) {
  return {a.m[0] * v.x + a.m[1] * v.y + a.m[2] * v.z,
          a.m[3] * v.x + a.m[4] * v.y + a.m[5] * v.z,
          a.m[6] * v.x + a.m[7] * v.y + a.m[8] * v.z};
}

template <class S>
inline Mat3T<S> operator*(const Mat3T<S>& a, const Mat3T<S>& b) {
  Mat3T<S> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    }
  }
  return r;
}

template <class S>
inline Mat3T<S> transpose(const Mat3T<S>& a) {
  Mat3T<S> r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r(i, j) = a(j, i);
    }
  }
  return r;
}

template <class S>
inline S determinant(const Mat3T<S>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace eyefit
