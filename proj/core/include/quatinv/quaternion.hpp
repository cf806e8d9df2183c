#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>

namespace quatinv {

using Complex = std::complex<double>;

/// Real quaternion w + x i + y j + z k.
///
/// Multiplication is the Hamilton product (i j = k, j k = i, k i = j, and
/// i^2 = j^2 = k^2 = -1), so it does not commute.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_ = 0.0, double y_ = 0.0, double z_ = 0.0)
      : w{w_}, x{x_}, y{y_}, z{z_} {}

  /// q = c1 + c2 j with c1 = w + x i and c2 = y + z i.
  static constexpr Quaternion from_pair(Complex c1, Complex c2) {
    return {c1.real(), c1.imag(), c2.real(), c2.imag()};
  }
  constexpr Complex first() const { return {w, x}; }
  constexpr Complex second() const { return {y, z}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm2()); }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr bool is_pure() const { return w == 0.0; }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

constexpr Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

inline double abs(const Quaternion& q) { return q.abs(); }
constexpr Quaternion conj(const Quaternion& q) { return q.conj(); }

/// q^{-1} = conj(q) / |q|^2. Division by zero yields inf/nan components.
constexpr Quaternion inverse(const Quaternion& q) { return q.conj() * (1.0 / q.norm2()); }

/// Unit quaternion along q, or 1 when q is zero.
inline Quaternion unit_or_one(const Quaternion& q) {
  const double a = q.abs();
  return a == 0.0 ? Quaternion{1.0} : q * (1.0 / a);
}

namespace units {
inline constexpr Quaternion one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion k{0.0, 0.0, 0.0, 1.0};
}  // namespace units

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatinv
