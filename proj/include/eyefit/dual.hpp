#pragma once

#include <array>
#include <cmath>

namespace eyefit {

// Forward-mode dual number with a fixed number of derivative slots.
//
// The value field is computed with exactly the same expressions as a plain
// double evaluation, so instantiating shared geometry/loss templates with
// Dual<N> yields values bit-identical to the double instantiation.
template <int N>
struct Dual {
  double v = 0.0;
  std::array<double, N> d{};

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: constants lift implicitly

  static Dual seeded(double value, int slot) {
    Dual r(value);
    r.d[static_cast<std::size_t>(slot)] = 1.0;
    return r;
  }
};

template <int N>
inline Dual<N> operator+(const Dual<N>& a, const Dual<N>& b) {
  Dual<N> r(a.v + b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

template <int N>
inline Dual<N> operator-(const Dual<N>& a, const Dual<N>& b) {
  Dual<N> r(a.v - b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

template <int N>
inline Dual<N> operator-(const Dual<N>& a) {
  Dual<N> r(-a.v);
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  return r;
}

template <int N>
inline Dual<N> operator*(const Dual<N>& a, const Dual<N>& b) {
  Dual<N> r(a.v * b.v);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}

template <int N>
inline Dual<N> operator/(const Dual<N>& a, const Dual<N>& b) {
  Dual<N> r(a.v / b.v);
  const double inv_b2 = 1.0 / (b.v * b.v);
  for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) * inv_b2;
  return r;
}

template <int N>
inline Dual<N> operator+(const Dual<N>& a, double c) {
  Dual<N> r = a;
  r.v = a.v + c;
  return r;
}
template <int N>
inline Dual<N> operator+(double c, const Dual<N>& a) {
  return a + c;
}

template <int N>
inline Dual<N> operator-(const Dual<N>& a, double c) {
  Dual<N> r = a;
  r.v = a.v - c;
  return r;
}
template <int N>
inline Dual<N> operator-(double c, const Dual<N>& a) {
  Dual<N> r(c - a.v);
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  return r;
}

template <int N>
inline Dual<N> operator*(const Dual<N>& a, double c) {
  Dual<N> r(a.v * c);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * c;
  return r;
}
template <int N>
inline Dual<N> operator*(double c, const Dual<N>& a) {
  Dual<N> r(c * a.v);
  for (int i = 0; i < N; ++i) r.d[i] = c * a.d[i];
  return r;
}

template <int N>
inline Dual<N> operator/(const Dual<N>& a, double c) {
  Dual<N> r(a.v / c);
  for (int i = 0; i < N; ++i) r.d[i] = a.d[i] / c;
  return r;
}
template <int N>
inline Dual<N> operator/(double c, const Dual<N>& a) {
  Dual<N> r(c / a.v);
  const double s = -c / (a.v * a.v);
  for (int i = 0; i < N; ++i) r.d[i] = s * a.d[i];
  return r;
}

// Subgradient convention: the derivative of sqrt at exactly 0 is taken as 0,
// so nearest-neighbor distances of coincident points stay finite.
template <int N>
inline Dual<N> sqrt(const Dual<N>& a) {
  using std::sqrt;
  Dual<N> r(sqrt(a.v));
  if (r.v > 0.0) {
    const double s = 0.5 / r.v;
    for (int i = 0; i < N; ++i) r.d[i] = s * a.d[i];
  }
  return r;
}

template <int N>
inline Dual<N> sin(const Dual<N>& a) {
  using std::cos;
  using std::sin;
  Dual<N> r(sin(a.v));
  const double c = cos(a.v);
  for (int i = 0; i < N; ++i) r.d[i] = c * a.d[i];
  return r;
}

template <int N>
inline Dual<N> cos(const Dual<N>& a) {
  using std::cos;
  using std::sin;
  Dual<N> r(cos(a.v));
  const double s = -sin(a.v);
  for (int i = 0; i < N; ++i) r.d[i] = s * a.d[i];
  return r;
}

template <int N>
inline bool operator<(const Dual<N>& a, const Dual<N>& b) {
  return a.v < b.v;
}
template <int N>
inline bool operator<(const Dual<N>& a, double b) {
  return a.v < b;
}
template <int N>
inline bool operator>(const Dual<N>& a, double b) {
  return a.v > b;
}
template <int N>
inline bool operator<=(const Dual<N>& a, double b) {
  return a.v <= b;
}
template <int N>
inline bool operator>=(const Dual<N>& a, double b) {
  return a.v >= b;
}

inline double scalar_value(double x) { return x; }

template <int N>
inline double scalar_value(const Dual<N>& x) {
  return x.v;
}

}  // namespace eyefit
