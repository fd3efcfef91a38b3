#pragma once

/**
 * @file spanning_trees.hpp
 * @brief Spanning trees of K_n: Pruefer enumeration, valences, and the
 * correspondence between trees of K_{n+1} through an edge e and trees of K_n
 * induced by contracting e.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "selflink/complete_graph.hpp"
#include "selflink/error.hpp"

namespace selflink {

/// Largest n accepted by the tree enumerator (9^7 trees).
inline constexpr unsigned kMaxTreeVertices = 9;

class SpanningTree {
 public:
  /// Validates that `edges` form a spanning tree of `graph`.
  static SpanningTree from_edges(CompleteGraph graph, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    std::string why;
    if (!valid(graph, edges, why)) throw PreconditionError("not a spanning tree of K_" +
                                                           std::to_string(graph.vertex_count()) + ": " + why);
    return SpanningTree(graph, std::move(edges));
  }

  const CompleteGraph& graph() const { return graph_; }
  unsigned vertex_count() const { return graph_.vertex_count(); }
  std::span<const Edge> edges() const { return edges_; }

  bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  unsigned valence(Vertex v) const {
    if (v >= graph_.vertex_count()) throw PreconditionError("vertex out of range");
    return static_cast<unsigned>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < edges_.size(); ++k) out += (k ? "," : "") + edges_[k].to_string();
    return out + "]";
  }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend auto operator<=>(const SpanningTree& a, const SpanningTree& b) {
    if (auto c = a.graph_.vertex_count() <=> b.graph_.vertex_count(); c != 0) return c;
    return a.edges_ <=> b.edges_;
  }

 private:
  template <typename Visitor>
  friend void for_each_tree(unsigned n, Visitor&& visit);

  SpanningTree(CompleteGraph graph, std::vector<Edge> sorted_edges)
      : graph_(graph), edges_(std::move(sorted_edges)) {}

  // Union-find: n-1 edges with no cycle span all n vertices.
  static bool valid(const CompleteGraph& graph, const std::vector<Edge>& edges, std::string& why) {
    const unsigned n = graph.vertex_count();
    if (edges.size() + 1 != n) {
      why = "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size());
      return false;
    }
    std::vector<unsigned> parent(n);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const Edge& e : edges) {
      if (!graph.contains(e)) {
        why = "edge " + e.to_string() + " out of range";
        return false;
      }
      unsigned a = find(e.lo), b = find(e.hi);
      if (a == b) {
        why = "cycle through " + e.to_string();
        return false;
      }
      parent[a] = b;
    }
    return true;
  }

  CompleteGraph graph_;
  std::vector<Edge> edges_;
};

inline void check_tree_bounds(unsigned n) {
  if (n < 1 || n > kMaxTreeVertices)
    throw PreconditionError("tree enumeration needs 1 <= n <= " + std::to_string(kMaxTreeVertices) +
                            ", got " + std::to_string(n));
}

/// Number of spanning trees of K_n, n^(n-2), with the value 1 for n = 1.
inline std::uint64_t cayley_count(unsigned n) {
  if (n <= 2) return 1;
  std::uint64_t out = 1;
  for (unsigned k = 0; k + 2 < n; ++k) out *= n;
  return out;
}

/**
 * Calls `visit(const SpanningTree&)` for every spanning tree of K_n, in the
 * order of their Pruefer sequences enumerated lexicographically.
 */
template <typename Visitor>
void for_each_tree(unsigned n, Visitor&& visit) {
  check_tree_bounds(n);
  const CompleteGraph graph(n);
  if (n == 1) {
    visit(SpanningTree(graph, {}));
    return;
  }
  if (n == 2) {
    visit(SpanningTree(graph, {Edge{0, 1}}));
    return;
  }
  std::vector<Vertex> code(n - 2, 0);
  std::vector<unsigned> degree(n);
  std::vector<Edge> edges;
  while (true) {
    // Decode.
    std::fill(degree.begin(), degree.end(), 1u);
    for (Vertex x : code) ++degree[x];
    edges.clear();
    for (Vertex x : code) {
      Vertex leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back(Edge::between(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    Vertex u = 0;
    while (degree[u] != 1) ++u;
    Vertex w = u + 1;
    while (degree[w] != 1) ++w;
    edges.push_back(Edge{u, w});
    std::sort(edges.begin(), edges.end());
    visit(SpanningTree(graph, edges));

    // Advance the odometer; the last position varies fastest.
    std::size_t k = code.size();
    while (k > 0 && code[k - 1] == n - 1) code[--k] = 0;
    if (k == 0) return;
    ++code[k - 1];
  }
}

inline std::vector<SpanningTree> enumerate_trees(unsigned n) {
  check_tree_bounds(n);
  std::vector<SpanningTree> out;
  out.reserve(cayley_count(n));
  for_each_tree(n, [&](const SpanningTree& t) { out.push_back(t); });
  return out;
}

/// The trees of K_n containing `e`, in enumeration order.
inline std::vector<SpanningTree> trees_through_edge(unsigned n, const Edge& e) {
  check_tree_bounds(n);
  if (n < 2) throw PreconditionError("K_1 has no edges");
  CompleteGraph(n).check_edge(e);
  std::vector<SpanningTree> out;
  for_each_tree(n, [&](const SpanningTree& t) {
    if (t.contains(e)) out.push_back(t);
  });
  return out;
}

inline unsigned valence(const SpanningTree& t, Vertex v) { return t.valence(v); }

/// Relabels the vertices of `t` by `sigma`.
inline SpanningTree permute(const SpanningTree& t, std::span<const Vertex> sigma) {
  if (sigma.size() != t.vertex_count()) throw PreconditionError("permutation has wrong length");
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) {
    if (e.hi >= sigma.size() || sigma[e.lo] >= sigma.size() || sigma[e.hi] >= sigma.size())
      throw PreconditionError("not a permutation");
    edges.push_back(Edge::between(sigma[e.lo], sigma[e.hi]));
  }
  return SpanningTree::from_edges(t.graph(), std::move(edges));
}

/// c_e(T) for a tree T of K_{n+1} containing the contracted edge e.
inline SpanningTree contract_tree(const ContractionMap& c, const SpanningTree& t) {
  if (!(t.graph() == c.source())) throw PreconditionError("tree does not live on the contraction's source graph");
  if (!t.contains(c.contracted_edge()))
    throw PreconditionError("tree " + t.to_string() + " does not contain contracted edge " +
                            c.contracted_edge().to_string());
  std::vector<Edge> image;
  for (const Edge& e : t.edges()) {
    auto img = c.image(e);
    if (const Edge* f = std::get_if<Edge>(&img)) image.push_back(*f);
  }
  try {
    return SpanningTree::from_edges(c.target(), std::move(image));
  } catch (const PreconditionError& err) {
    throw InvariantError(std::string("contracted tree is not a spanning tree: ") + err.what());
  }
}

/**
 * All trees T' of K_{n+1} containing the contracted edge with c_e(T') = t.
 * There are 2^valence(t, s_e) of them: each tree edge at the special vertex
 * has two preimages, every other tree edge has one.
 */
inline std::vector<SpanningTree> tree_fiber(const ContractionMap& c, const SpanningTree& t) {
  if (!(t.graph() == c.target())) throw PreconditionError("tree does not live on the contraction's target graph");
  std::vector<std::vector<Edge>> choices;
  for (const Edge& f : t.edges()) choices.push_back(c.preimage(f));

  std::vector<SpanningTree> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<Edge> edges{c.contracted_edge()};
    for (std::size_t k = 0; k < choices.size(); ++k) edges.push_back(choices[k][pick[k]]);
    try {
      out.push_back(SpanningTree::from_edges(c.source(), std::move(edges)));
    } catch (const PreconditionError& err) {
      throw InvariantError(std::string("fiber element is not a spanning tree: ") + err.what());
    }
    std::size_t k = 0;
    while (k < pick.size() && pick[k] + 1 == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
    ++pick[k];
  }
  return out;
}

}  // namespace selflink
