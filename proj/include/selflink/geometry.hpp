#pragma once

// Exact rational geometry for closed polygonal curves in R^3.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "selflink/error.hpp"
#include "selflink/ring.hpp"

namespace selflink {

using Rational = boost::multiprecision::cpp_rational;

inline Rational parse_rational(std::string_view text) {
  text = detail::trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_bigint(text));
  BigInt num = detail::parse_bigint(detail::trim(text.substr(0, slash)));
  auto den_text = detail::trim(text.substr(slash + 1));
  if (!den_text.empty() && den_text[0] == '-') throw InputError("negative denominator in '" + std::string(text) + "'");
  BigInt den = detail::parse_bigint(den_text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline std::string format_rational(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

struct Point3 {
  Rational x, y, z;

  friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(const Rational& s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Point3&, const Point3&) = default;
};

inline Rational dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline bool is_zero(const Point3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }

/// A closed polygonal curve: the segment from the last point back to the
/// first is implicit.
using Polyline = std::vector<Point3>;

inline void check_polyline(const Polyline& c) {
  if (c.size() < 3) throw InputError("a closed polyline needs at least 3 points");
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == c[(k + 1) % c.size()])
      throw InputError("consecutive polyline points coincide at index " + std::to_string(k));
  }
}

/// Closed segments [p0,p1] and [q0,q1] share a point.
inline bool segments_meet(const Point3& p0, const Point3& p1, const Point3& q0, const Point3& q1) {
  const Point3 r = p1 - p0;
  const Point3 s = q1 - q0;
  const Point3 w = q0 - p0;
  const Point3 n = cross(r, s);
  if (!is_zero(n)) {
    if (dot(w, n) != 0) return false;  // skew
    const Rational nn = dot(n, n);
    const Rational t = dot(cross(w, s), n) / nn;
    const Rational u = dot(cross(w, r), n) / nn;
    return t >= 0 && t <= 1 && u >= 0 && u <= 1;
  }
  if (!is_zero(cross(w, r))) return false;  // parallel, distinct lines
  // Collinear: compare parameter intervals along r.
  const Rational rr = dot(r, r);
  Rational a = dot(w, r) / rr;
  Rational b = dot(q1 - p0, r) / rr;
  if (a > b) std::swap(a, b);
  return b >= 0 && a <= 1;
}

inline bool curves_meet(const Polyline& c1, const Polyline& c2) {
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const Point3& p0 = c1[i];
    const Point3& p1 = c1[(i + 1) % c1.size()];
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (segments_meet(p0, p1, c2[j], c2[(j + 1) % c2.size()])) return true;
    }
  }
  return false;
}

/// No two segments meet except consecutive ones at their shared vertex.
inline bool is_simple(const Polyline& c) {
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point3& a0 = c[i];
    const Point3& a1 = c[(i + 1) % m];
    for (std::size_t j = i + 1; j < m; ++j) {
      const Point3& b0 = c[j];
      const Point3& b1 = c[(j + 1) % m];
      const bool next = j == i + 1;
      const bool wrap = i == 0 && j == m - 1;
      if (next || wrap) {
        // Adjacent: they share exactly one vertex unless they fold back.
        const Point3 shared = next ? a1 : a0;
        const Point3 from_a = (next ? a0 : a1) - shared;
        const Point3 from_b = (next ? b1 : b0) - shared;
        if (is_zero(cross(from_a, from_b)) && dot(from_a, from_b) > 0) return false;
        continue;
      }
      if (segments_meet(a0, a1, b0, b1)) return false;
    }
  }
  return true;
}

/// A 3x3 rational matrix, row-major.
using Matrix3 = std::array<std::array<Rational, 3>, 3>;

inline Point3 apply(const Matrix3& m, const Point3& p) {
  return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z, m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
          m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
}

inline Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return out;
}

inline Matrix3 identity3() {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

/// Exact rotation about coordinate `axis` (0=x, 1=y, 2=z) with cos = a/c,
/// sin = b/c for a Pythagorean triple a^2 + b^2 = c^2.
inline Matrix3 pythagorean_rotation(int axis, long a, long b, long c) {
  const Rational co(a, c), si(b, c);
  Matrix3 m = identity3();
  const int i = (axis + 1) % 3, j = (axis + 2) % 3;
  m[i][i] = co;
  m[i][j] = -si;
  m[j][i] = si;
  m[j][j] = co;
  return m;
}

inline Polyline transform(const Polyline& c, const Matrix3& m, const Point3& shift = {}) {
  Polyline out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(apply(m, p) + shift);
  return out;
}

}  // namespace selflink
