#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace tensegrid {

// Plain-value access that also works for autodiff scalars (overloaded there).
inline double value_of(double x) { return x; }

/// Minimal fixed-size 3-vector, templated on the scalar type so the same
/// dynamics code runs on doubles (simulation) and tape scalars (training).
template <class S>
struct Vec3 {
  S x{}, y{}, z{};

  Vec3() = default;
  Vec3(S x_, S y_, S z_) : x(x_), y(y_), z(z_) {}

  S& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const S& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(const S& s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(const S& s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x = x + o.x; y = y + o.y; z = z + o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x = x - o.x; y = y - o.y; z = z - o.z; return *this; }

  friend Vec3 operator*(const S& s, const Vec3& v) { return v * s; }
};

using Vec3d = Vec3<double>;

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class S>
S norm_squared(const Vec3<S>& v) { return dot(v, v); }

template <class S>
S norm(const Vec3<S>& v) {
  using std::sqrt;
  return sqrt(dot(v, v));
}

template <class S>
Vec3<S> normalized(const Vec3<S>& v) { return v / norm(v); }

inline Vec3d to_double(const Vec3d& v) { return v; }

/// Row-major 3x3 matrix.
template <class S>
struct Mat3 {
  std::array<S, 9> m{};

  S& operator()(int r, int c) { return m[3 * r + c]; }
  const S& operator()(int r, int c) const { return m[3 * r + c]; }

  static Mat3 identity() {
    Mat3 out;
    out(0, 0) = S(1.0); out(1, 1) = S(1.0); out(2, 2) = S(1.0);
    return out;
  }
  static Mat3 diagonal(const S& a, const S& b, const S& c) {
    Mat3 out;
    out(0, 0) = a; out(1, 1) = b; out(2, 2) = c;
    return out;
  }
  /// Skew-symmetric cross-product matrix [v x].
  static Mat3 skew(const Vec3<S>& v) {
    Mat3 out;
    out(0, 1) = -v.z; out(0, 2) = v.y;
    out(1, 0) = v.z;  out(1, 2) = -v.x;
    out(2, 0) = -v.y; out(2, 1) = v.x;
    return out;
  }
  static Mat3 outer(const Vec3<S>& a, const Vec3<S>& b) {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out(r, c) = a[r] * b[c];
    return out;
  }

  Mat3 transposed() const {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) out(r, c) = (*this)(c, r);
    return out;
  }

  Vec3<S> operator*(const Vec3<S>& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 out;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        out(r, c) = (*this)(r, 0) * o(0, c) + (*this)(r, 1) * o(1, c) +
                    (*this)(r, 2) * o(2, c);
      }
    return out;
  }
  Mat3 operator*(const S& s) const {
    Mat3 out;
    for (int i = 0; i < 9; ++i) out.m[i] = m[i] * s;
    return out;
  }
  Mat3 operator+(const Mat3& o) const {
    Mat3 out;
    for (int i = 0; i < 9; ++i) out.m[i] = m[i] + o.m[i];
    return out;
  }
  Mat3 operator-() const {
    Mat3 out;
    for (int i = 0; i < 9; ++i) out.m[i] = -m[i];
    return out;
  }
};

using Mat3d = Mat3<double>;

/// Unit quaternion (w, x, y, z) for rod orientation.
template <class S>
struct Quat {
  S w{1.0}, x{}, y{}, z{};

  Quat() = default;
  Quat(S w_, S x_, S y_, S z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quat identity() { return {S(1.0), S(0.0), S(0.0), S(0.0)}; }

  /// Rotation taking unit vector `from` to unit vector `to` (double inputs;
  /// used only for constructing initial poses).
  static Quat<double> between(const Vec3d& from, const Vec3d& to);

  static Quat from_axis_angle(const Vec3d& axis, double angle) {
    const double h = 0.5 * angle;
    const Vec3d a = normalized(axis);
    return {S(std::cos(h)), S(a.x * std::sin(h)), S(a.y * std::sin(h)),
            S(a.z * std::sin(h))};
  }

  Quat operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  S norm() const {
    using std::sqrt;
    return sqrt(w * w + x * x + y * y + z * z);
  }

  Quat normalized() const {
    const S n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  /// Rotation matrix of the (assumed unit) quaternion.
  Mat3<S> to_matrix() const {
    Mat3<S> r;
    const S two(2.0);
    r(0, 0) = S(1.0) - two * (y * y + z * z);
    r(0, 1) = two * (x * y - w * z);
    r(0, 2) = two * (x * z + w * y);
    r(1, 0) = two * (x * y + w * z);
    r(1, 1) = S(1.0) - two * (x * x + z * z);
    r(1, 2) = two * (y * z - w * x);
    r(2, 0) = two * (x * z - w * y);
    r(2, 1) = two * (y * z + w * x);
    r(2, 2) = S(1.0) - two * (x * x + y * y);
    return r;
  }

  Vec3<S> rotate(const Vec3<S>& v) const { return to_matrix() * v; }

  /// First-order update by world-frame angular velocity, renormalized.
  Quat integrated(const Vec3<S>& omega_world, const S& dt) const {
    const Quat omega_q(S(0.0), omega_world.x, omega_world.y, omega_world.z);
    const Quat dq = omega_q * (*this);
    const S half_dt = dt * S(0.5);
    Quat out(w + half_dt * dq.w, x + half_dt * dq.x, y + half_dt * dq.y,
             z + half_dt * dq.z);
    return out.normalized();
  }
};

template <>
inline Quat<double> Quat<double>::between(const Vec3d& from, const Vec3d& to) {
  const Vec3d f = normalized(from);
  const Vec3d t = normalized(to);
  const double c = dot(f, t);
  if (c > 1.0 - 1e-14) return Quat<double>::identity();
  if (c < -1.0 + 1e-14) {
    // antiparallel: rotate pi about any axis orthogonal to `from`
    Vec3d axis = cross(f, Vec3d{1.0, 0.0, 0.0});
    if (norm_squared(axis) < 1e-12) axis = cross(f, Vec3d{0.0, 1.0, 0.0});
    return Quat<double>::from_axis_angle(axis, M_PI);
  }
  const Vec3d axis = cross(f, t);
  const double s = std::sqrt((1.0 + c) * 2.0);
  return Quat<double>(0.5 * s, axis.x / s, axis.y / s, axis.z / s).normalized();
}

using Quatd = Quat<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Vec3d& v) {
  return is_finite(v.x) && is_finite(v.y) && is_finite(v.z);
}
inline bool is_finite(const Quatd& q) {
  return is_finite(q.w) && is_finite(q.x) && is_finite(q.y) && is_finite(q.z);
}

}  // namespace tensegrid
