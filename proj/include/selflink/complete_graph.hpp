#pragma once

/**
 * @file complete_graph.hpp
 * @brief The complete graph K_n, edge vectors (the free module A_n) and edge
 * contraction K_{n+1} -> K_n with its induced pushforward on edge vectors.
 *
 * Vertices are 0 .. n-1. Edges are unordered pairs {lo, hi}, lo < hi, indexed
 * lexicographically: {0,1}, {0,2}, ..., {0,n-1}, {1,2}, ...
 */

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "selflink/error.hpp"
#include "selflink/ring.hpp"

namespace selflink {

using Vertex = unsigned;

/// Largest supported vertex count for graphs and edge vectors.
inline constexpr unsigned kMaxVertices = 12;

struct Edge {
  Vertex lo = 0;
  Vertex hi = 1;

  /// Builds {a, b} in normalized order. Throws on loops.
  static Edge between(Vertex a, Vertex b) {
    if (a == b) throw PreconditionError("an edge needs two distinct vertices");
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  bool touches(Vertex v) const { return lo == v || hi == v; }
  Vertex other(Vertex v) const { return v == lo ? hi : lo; }

  std::string to_string() const { return "{" + std::to_string(lo) + "," + std::to_string(hi) + "}"; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class CompleteGraph {
 public:
  explicit CompleteGraph(unsigned n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw PreconditionError("complete graph size must be in [1, " + std::to_string(kMaxVertices) +
                              "], got " + std::to_string(n));
  }

  unsigned vertex_count() const { return n_; }
  std::size_t edge_count() const { return std::size_t{n_} * (n_ - 1) / 2; }

  bool contains(const Edge& e) const { return e.lo < e.hi && e.hi < n_; }

  void check_edge(const Edge& e) const {
    if (!contains(e))
      throw PreconditionError("edge " + e.to_string() + " is not an edge of K_" + std::to_string(n_));
  }

  std::size_t index_of(const Edge& e) const {
    check_edge(e);
    return std::size_t{e.lo} * (2 * n_ - e.lo - 1) / 2 + (e.hi - e.lo - 1);
  }

  Edge edge_at(std::size_t index) const {
    for (Vertex lo = 0; lo + 1 < n_; ++lo) {
      std::size_t row = n_ - 1 - lo;
      if (index < row) return Edge{lo, static_cast<Vertex>(lo + 1 + index)};
      index -= row;
    }
    throw PreconditionError("edge index out of range");
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex j = i + 1; j < n_; ++j) out.push_back(Edge{i, j});
    return out;
  }

  friend bool operator==(const CompleteGraph&, const CompleteGraph&) = default;

 private:
  unsigned n_;
};

/**
 * An element sum_e a_e . e of the free module A_n, stored densely in
 * lexicographic edge order.
 */
class EdgeVector {
 public:
  static EdgeVector zero(CompleteGraph graph, Ring ring) {
    std::vector<RingElement> coefficients(graph.edge_count(), ring.zero());
    return EdgeVector(graph, std::move(ring), std::move(coefficients));
  }

  /// The generator 1_e.
  static EdgeVector unit(CompleteGraph graph, Ring ring, const Edge& e) {
    EdgeVector out = zero(graph, std::move(ring));
    out.set(e, out.ring_.one());
    return out;
  }

  EdgeVector(CompleteGraph graph, Ring ring, std::vector<RingElement> coefficients)
      : graph_(graph), ring_(std::move(ring)), coefficients_(std::move(coefficients)) {
    if (coefficients_.size() != graph_.edge_count())
      throw PreconditionError("edge vector needs " + std::to_string(graph_.edge_count()) +
                              " coefficients, got " + std::to_string(coefficients_.size()));
    for (const auto& c : coefficients_) {
      if (!(c.ring() == ring_)) throw PreconditionError("edge vector coefficient from a foreign ring");
    }
  }

  const CompleteGraph& graph() const { return graph_; }
  const Ring& ring() const { return ring_; }
  std::span<const RingElement> coefficients() const { return coefficients_; }

  const RingElement& operator[](const Edge& e) const { return coefficients_[graph_.index_of(e)]; }

  void set(const Edge& e, RingElement value) {
    if (!(value.ring() == ring_)) throw PreconditionError("coefficient from a foreign ring");
    coefficients_[graph_.index_of(e)] = std::move(value);
  }

  bool is_zero() const {
    for (const auto& c : coefficients_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend EdgeVector operator+(const EdgeVector& a, const EdgeVector& b) {
    check_compatible(a, b);
    EdgeVector out = a;
    for (std::size_t k = 0; k < out.coefficients_.size(); ++k) out.coefficients_[k] += b.coefficients_[k];
    return out;
  }

  friend EdgeVector operator*(const RingElement& scalar, const EdgeVector& a) {
    if (!(scalar.ring() == a.ring_)) throw PreconditionError("scalar from a foreign ring");
    EdgeVector out = a;
    for (auto& c : out.coefficients_) c = scalar * c;
    return out;
  }

  friend bool operator==(const EdgeVector& a, const EdgeVector& b) {
    return a.graph_ == b.graph_ && a.ring_ == b.ring_ && a.coefficients_ == b.coefficients_;
  }

 private:
  static void check_compatible(const EdgeVector& a, const EdgeVector& b) {
    if (!(a.graph_ == b.graph_)) throw PreconditionError("edge vectors live on different graphs");
    if (!(a.ring_ == b.ring_)) throw PreconditionError("edge vectors live over different rings");
  }

  CompleteGraph graph_;
  Ring ring_;
  std::vector<RingElement> coefficients_;
};

/**
 * Relabels vertices by `sigma` (vertex v goes to sigma[v]): the coefficient of
 * {i, j} moves to {sigma[i], sigma[j]}.
 */
inline EdgeVector permute(const EdgeVector& a, std::span<const Vertex> sigma) {
  const auto& g = a.graph();
  if (sigma.size() != g.vertex_count()) throw PreconditionError("permutation has wrong length");
  std::vector<bool> seen(sigma.size(), false);
  for (Vertex v : sigma) {
    if (v >= sigma.size() || seen[v]) throw PreconditionError("not a permutation");
    seen[v] = true;
  }
  EdgeVector out = EdgeVector::zero(g, a.ring());
  for (const Edge& e : g.edges()) out.set(Edge::between(sigma[e.lo], sigma[e.hi]), a[e]);
  return out;
}

/// Image marker for the contracted edge itself.
struct Collapsed {
  friend bool operator==(const Collapsed&, const Collapsed&) = default;
};

using EdgeImage = std::variant<Collapsed, Edge>;

/**
 * The quotient map c_e : K_{n+1} -> K_n collapsing one edge.
 *
 * Labelling: both endpoints of the contracted edge go to its lower endpoint
 * (the special vertex s_e), vertices above the upper endpoint shift down by
 * one, all others keep their label.
 */
class ContractionMap {
 public:
  ContractionMap(unsigned source_vertices, const Edge& contracted)
      : source_(check_source(source_vertices)), target_(source_vertices - 1), contracted_(contracted) {
    source_.check_edge(contracted);
    vertex_map_.resize(source_vertices);
    for (Vertex v = 0; v < source_vertices; ++v) {
      if (v == contracted.hi)
        vertex_map_[v] = contracted.lo;
      else if (v > contracted.hi)
        vertex_map_[v] = v - 1;
      else
        vertex_map_[v] = v;
    }
  }

  const CompleteGraph& source() const { return source_; }
  const CompleteGraph& target() const { return target_; }
  const Edge& contracted_edge() const { return contracted_; }
  std::span<const Vertex> vertex_map() const { return vertex_map_; }
  Vertex special_vertex() const { return contracted_.lo; }

  Vertex image(Vertex v) const {
    if (v >= vertex_map_.size()) throw PreconditionError("vertex out of range");
    return vertex_map_[v];
  }

  EdgeImage image(const Edge& e) const {
    source_.check_edge(e);
    if (e == contracted_) return Collapsed{};
    return Edge::between(vertex_map_[e.lo], vertex_map_[e.hi]);
  }

  /// Source edges mapping onto `f`; one or two of them.
  std::vector<Edge> preimage(const Edge& f) const {
    target_.check_edge(f);
    std::vector<Edge> out;
    for (const Edge& e : source_.edges()) {
      auto img = image(e);
      if (const Edge* g = std::get_if<Edge>(&img); g && *g == f) out.push_back(e);
    }
    return out;
  }

 private:
  static CompleteGraph check_source(unsigned n) {
    if (n < 2) throw PreconditionError("contraction needs a source graph with at least 2 vertices");
    return CompleteGraph(n);
  }

  CompleteGraph source_;
  CompleteGraph target_;
  Edge contracted_;
  std::vector<Vertex> vertex_map_;
};

inline ContractionMap build_contraction(unsigned source_vertices, const Edge& contracted) {
  return ContractionMap(source_vertices, contracted);
}

inline EdgeImage contract_edge_image(const ContractionMap& c, const Edge& e) { return c.image(e); }

/// (c_e)_* : A_{n+1} -> A_n. The contracted edge's coefficient is dropped.
inline EdgeVector pushforward(const ContractionMap& c, const EdgeVector& a) {
  if (!(a.graph() == c.source()))
    throw PreconditionError("pushforward: vector lives on K_" + std::to_string(a.graph().vertex_count()) +
                            ", contraction starts from K_" + std::to_string(c.source().vertex_count()));
  EdgeVector out = EdgeVector::zero(c.target(), a.ring());
  for (const Edge& e : c.source().edges()) {
    auto img = c.image(e);
    if (const Edge* f = std::get_if<Edge>(&img)) out.set(*f, out[*f] + a[e]);
  }
  return out;
}

}  // namespace selflink
