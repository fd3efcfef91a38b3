#pragma once

// Shared test geometry and ring fixtures.

#include <algorithm>
#include <ostream>
#include <vector>

#include "selflink/geometry.hpp"
#include "selflink/ring.hpp"

namespace selflink {

// Readable gtest failure output.
inline void PrintTo(const RingElement& x, std::ostream* os) { *os << x.to_string(); }

}  // namespace selflink

namespace fixtures {

using namespace selflink;

inline Point3 pt(long x, long y, long z) { return Point3{Rational(x), Rational(y), Rational(z)}; }
inline Point3 ptq(Rational x, Rational y, Rational z) { return Point3{x, y, z}; }

/// Square of half-width 2 in the plane z = 0, counterclockwise seen from +z.
inline Polyline square_xy(long cx = 0, long cy = 0, long cz = 0) {
  return {pt(cx - 2, cy - 2, cz), pt(cx + 2, cy - 2, cz), pt(cx + 2, cy + 2, cz), pt(cx - 2, cy + 2, cz)};
}

/**
 * Square in the plane y = 0 centred at (2, 0, 0). Its edge x = 0 passes
 * upward (+z) through the interior of square_xy(); its edge x = 4 passes
 * downward outside it. So it meets the disc bounded by square_xy() once,
 * positively.
 */
inline Polyline square_xz_threading() { return {pt(0, 0, -2), pt(0, 0, 2), pt(4, 0, 2), pt(4, 0, -2)}; }

/// A regular-ish octagon approximating the unit circle (scaled by 5).
inline Polyline octagon_xy(long cx = 0, long cy = 0, long cz = 0) {
  return {pt(cx + 5, cy + 0, cz),  pt(cx + 4, cy + 4, cz),  pt(cx + 0, cy + 5, cz),  pt(cx - 4, cy + 4, cz),
          pt(cx - 5, cy + 0, cz),  pt(cx - 4, cy - 4, cz),  pt(cx + 0, cy - 5, cz),  pt(cx + 4, cy - 4, cz)};
}

inline Polyline reversed(Polyline c) {
  std::reverse(c.begin(), c.end());
  return c;
}

/// The loop traversed twice from its first point.
inline Polyline doubled(const Polyline& c) {
  Polyline out = c;
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

/// Inserts the midpoint of every segment.
inline Polyline subdivided(const Polyline& c) {
  Polyline out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    out.push_back(c[k]);
    out.push_back(Rational(1, 2) * (c[k] + c[(k + 1) % c.size()]));
  }
  return out;
}

inline std::vector<Ring> all_ring_kinds() {
  return {Ring::integers(), Ring::modular(7), Ring::modular(2), Ring::polynomials({"x", "y"})};
}

}  // namespace fixtures
