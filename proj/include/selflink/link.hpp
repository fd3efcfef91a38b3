#pragma once

/**
 * @file link.hpp
 * @brief Polygonal links in R^3, pairwise linking numbers, linking matrices
 * and the self-linking weight lk_n = Phi_n(a), where a is the edge vector of
 * pairwise linking numbers.
 *
 * Linking numbers are counted in the projection to the xy-plane (viewed from
 * +z): lk(c1, c2) is the sum of the signs of the crossings where c1 passes
 * over c2. A crossing is positive when (over direction, under direction) is
 * a positively oriented basis of the plane. If the projection is not generic
 * both curves are rotated by a fixed schedule of exact rational rotations and
 * the count is retried.
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "selflink/complete_graph.hpp"
#include "selflink/error.hpp"
#include "selflink/forested_form.hpp"
#include "selflink/geometry.hpp"
#include "selflink/ring.hpp"

namespace selflink {

namespace detail {

inline Rational cross2(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

/// Signed count of c1-over-c2 crossings, or nullopt if the projection to the
/// xy-plane is not generic for this pair.
inline std::optional<long> count_over_crossings(const Polyline& c1, const Polyline& c2) {
  long total = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const Point3& a = c1[i];
    const Point3& b = c1[(i + 1) % c1.size()];
    const Rational rx = b.x - a.x, ry = b.y - a.y;
    if (rx == 0 && ry == 0) return std::nullopt;  // vertical segment
    for (std::size_t j = 0; j < c2.size(); ++j) {
      const Point3& c = c2[j];
      const Point3& d = c2[(j + 1) % c2.size()];
      const Rational sx = d.x - c.x, sy = d.y - c.y;
      if (sx == 0 && sy == 0) return std::nullopt;
      const Rational wx = c.x - a.x, wy = c.y - a.y;
      const Rational denom = cross2(rx, ry, sx, sy);
      if (denom == 0) {
        if (cross2(wx, wy, rx, ry) != 0) continue;  // parallel lines
        // Collinear projections: degenerate if the intervals touch.
        const Rational rr = rx * rx + ry * ry;
        Rational lo = (wx * rx + wy * ry) / rr;
        Rational hi = ((d.x - a.x) * rx + (d.y - a.y) * ry) / rr;
        if (lo > hi) std::swap(lo, hi);
        if (hi >= 0 && lo <= 1) return std::nullopt;
        continue;
      }
      const Rational t = cross2(wx, wy, sx, sy) / denom;
      const Rational u = cross2(wx, wy, rx, ry) / denom;
      if (t < 0 || t > 1 || u < 0 || u > 1) continue;
      if (t == 0 || t == 1 || u == 0 || u == 1) return std::nullopt;  // crossing at a vertex
      const Rational z1 = a.z + t * (b.z - a.z);
      const Rational z2 = c.z + u * (d.z - c.z);
      if (z1 == z2) throw InvariantError("curves meet at a projected crossing");
      if (z1 > z2) total += denom > 0 ? 1 : -1;
    }
  }
  return total;
}

/// Rotation tried at `attempt` (attempt 0 is the identity).
inline Matrix3 perturbation(std::size_t attempt) {
  static constexpr std::array<std::array<long, 3>, 8> kTriples{{{3, 4, 5},
                                                                {5, 12, 13},
                                                                {8, 15, 17},
                                                                {7, 24, 25},
                                                                {20, 21, 29},
                                                                {12, 35, 37},
                                                                {9, 40, 41},
                                                                {28, 45, 53}}};
  if (attempt == 0) return identity3();
  const auto& tx = kTriples[attempt % 8];
  const auto& ty = kTriples[(attempt + 3) % 8];
  const auto& tz = kTriples[(attempt + 5) % 8];
  return multiply(pythagorean_rotation(2, tz[0], tz[1], tz[2]),
                  multiply(pythagorean_rotation(1, ty[0], ty[1], ty[2]),
                           pythagorean_rotation(0, tx[0], tx[1], tx[2])));
}

}  // namespace detail

/// Number of projections tried before giving up.
inline constexpr std::size_t kMaxProjectionAttempts = 24;

/**
 * Linking number of two disjoint closed polylines. The curves need not be
 * simple; a loop traversed twice is allowed.
 */
inline long linking_number(const Polyline& c1, const Polyline& c2) {
  check_polyline(c1);
  check_polyline(c2);
  if (curves_meet(c1, c2)) throw PreconditionError("linking number: the curves intersect");
  for (std::size_t attempt = 0; attempt < kMaxProjectionAttempts; ++attempt) {
    const Matrix3 rot = detail::perturbation(attempt);
    const auto count = attempt == 0 ? detail::count_over_crossings(c1, c2)
                                    : detail::count_over_crossings(transform(c1, rot), transform(c2, rot));
    if (count) return *count;
  }
  throw PreconditionError("linking number: no generic projection after " +
                          std::to_string(kMaxProjectionAttempts) + " attempts");
}

/// n closed polygonal curves that are simple and pairwise disjoint.
class PolylineLink {
 public:
  explicit PolylineLink(std::vector<Polyline> components) : components_(std::move(components)) {
    if (components_.empty()) throw InputError("a link needs at least one component");
    if (components_.size() > kMaxVertices)
      throw PreconditionError("a link may have at most " + std::to_string(kMaxVertices) + " components");
    for (std::size_t i = 0; i < components_.size(); ++i) {
      check_polyline(components_[i]);
      if (!is_simple(components_[i])) throw InputError("component " + std::to_string(i) + " self-intersects");
      for (std::size_t j = 0; j < i; ++j) {
        if (curves_meet(components_[i], components_[j]))
          throw InputError("components " + std::to_string(j) + " and " + std::to_string(i) + " intersect");
      }
    }
  }

  std::size_t size() const { return components_.size(); }
  const Polyline& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Polyline>& components() const { return components_; }

 private:
  std::vector<Polyline> components_;
};

/// Symmetric n x n matrix of pairwise linking numbers over a ring. The
/// diagonal carries no meaning and is stored as zero.
class LinkingMatrix {
 public:
  LinkingMatrix(Ring ring, std::vector<std::vector<RingElement>> entries)
      : ring_(std::move(ring)), entries_(std::move(entries)) {
    const std::size_t n = entries_.size();
    if (n < 1 || n > kMaxVertices)
      throw PreconditionError("linking matrix size must be in [1, " + std::to_string(kMaxVertices) + "]");
    for (std::size_t i = 0; i < n; ++i) {
      if (entries_[i].size() != n) throw InputError("linking matrix is not square");
      for (const auto& x : entries_[i])
        if (!(x.ring() == ring_)) throw PreconditionError("linking matrix entry from a foreign ring");
    }
    for (std::size_t i = 0; i < n; ++i) {
      entries_[i][i] = ring_.zero();
      for (std::size_t j = 0; j < i; ++j) {
        if (!(entries_[i][j] == entries_[j][i]))
          throw InputError("linking matrix is not symmetric at (" + std::to_string(j) + "," + std::to_string(i) + ")");
      }
    }
  }

  static LinkingMatrix zero(Ring ring, std::size_t n) {
    return LinkingMatrix(ring, std::vector<std::vector<RingElement>>(n, std::vector<RingElement>(n, ring.zero())));
  }

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return entries_.size(); }
  const RingElement& at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
  const std::vector<std::vector<RingElement>>& entries() const { return entries_; }

  /// Sets entries (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, const RingElement& value) {
    if (i == j || i >= size() || j >= size()) throw PreconditionError("linking matrix index out of range");
    if (!(value.ring() == ring_)) throw PreconditionError("linking matrix entry from a foreign ring");
    entries_[i][j] = value;
    entries_[j][i] = value;
  }

  /// The edge vector sum over {i,j} of m[i][j] . {i,j} on K_n.
  EdgeVector to_edge_vector() const {
    CompleteGraph g(static_cast<unsigned>(size()));
    EdgeVector a = EdgeVector::zero(g, ring_);
    for (const Edge& e : g.edges()) a.set(e, entries_[e.lo][e.hi]);
    return a;
  }

  static LinkingMatrix from_edge_vector(const EdgeVector& a) {
    const unsigned n = a.graph().vertex_count();
    LinkingMatrix m = zero(a.ring(), n);
    for (const Edge& e : a.graph().edges()) m.set(e.lo, e.hi, a[e]);
    return m;
  }

  /// Simultaneous row/column relabelling: entry (i,j) moves to (sigma[i], sigma[j]).
  LinkingMatrix permuted(std::span<const Vertex> sigma) const {
    return from_edge_vector(permute(to_edge_vector(), sigma));
  }

  friend bool operator==(const LinkingMatrix& a, const LinkingMatrix& b) {
    return a.ring_ == b.ring_ && a.entries_ == b.entries_;
  }

 private:
  Ring ring_;
  std::vector<std::vector<RingElement>> entries_;
};

inline LinkingMatrix linking_matrix(const PolylineLink& link, const Ring& ring) {
  LinkingMatrix m = LinkingMatrix::zero(ring, link.size());
  for (std::size_t i = 0; i < link.size(); ++i)
    for (std::size_t j = i + 1; j < link.size(); ++j)
      m.set(i, j, ring.from_integer(linking_number(link[i], link[j])));
  return m;
}

/// lk_n = Phi_n of the linking edge vector. 1 for a single component.
inline RingElement self_linking_weight(const LinkingMatrix& m, Evaluator ev = Evaluator::Determinant) {
  return forested_form(m.to_edge_vector(), ev);
}

}  // namespace selflink
