#pragma once

/**
 * @file forested_form.hpp
 * @brief The forested form Phi_n(a) = sum over spanning trees T of K_n of the
 * product of a_e over the edges of T.
 *
 * Two evaluators:
 *  - TreeSum enumerates the n^(n-2) trees (n <= 9);
 *  - Determinant takes the principal minor of the weighted Laplacian
 *    (off-diagonal -a_ij, diagonal sum_j a_ij) with vertex 0 removed
 *    (n <= 12). This is the weighted matrix-tree theorem.
 */

#include <string>
#include <string_view>
#include <vector>

#include "selflink/complete_graph.hpp"
#include "selflink/determinant.hpp"
#include "selflink/error.hpp"
#include "selflink/ring.hpp"
#include "selflink/spanning_trees.hpp"

namespace selflink {

enum class Evaluator { TreeSum, Determinant };

inline std::string_view evaluator_name(Evaluator ev) {
  return ev == Evaluator::TreeSum ? "treesum" : "det";
}

inline Evaluator parse_evaluator(std::string_view name) {
  if (name == "treesum") return Evaluator::TreeSum;
  if (name == "det") return Evaluator::Determinant;
  throw InputError("unknown evaluator '" + std::string(name) + "' (expected treesum or det)");
}

/// T_*(a): product of the coefficients of a on the edges of t. 1 for K_1.
inline RingElement tree_monomial(const SpanningTree& t, const EdgeVector& a) {
  if (!(t.graph() == a.graph())) throw PreconditionError("tree and edge vector live on different graphs");
  RingElement product = a.ring().one();
  for (const Edge& e : t.edges()) {
    const RingElement& c = a[e];
    if (c.is_zero()) return a.ring().zero();
    product *= c;
  }
  return product;
}

inline RingElement forested_form_treesum(const EdgeVector& a) {
  const unsigned n = a.graph().vertex_count();
  if (n > kMaxTreeVertices)
    throw PreconditionError("tree-sum evaluator supports n <= " + std::to_string(kMaxTreeVertices) +
                            ", got " + std::to_string(n));
  RingElement sum = a.ring().zero();
  for_each_tree(n, [&](const SpanningTree& t) { sum += tree_monomial(t, a); });
  return sum;
}

/// Weighted Laplacian of K_n with row and column 0 removed.
inline std::vector<std::vector<RingElement>> reduced_laplacian(const EdgeVector& a) {
  const unsigned n = a.graph().vertex_count();
  const Ring& ring = a.ring();
  std::vector<std::vector<RingElement>> m(n - 1, std::vector<RingElement>(n - 1, ring.zero()));
  for (const Edge& e : a.graph().edges()) {
    const RingElement& w = a[e];
    if (w.is_zero()) continue;
    if (e.lo > 0) m[e.lo - 1][e.lo - 1] += w;
    m[e.hi - 1][e.hi - 1] += w;
    if (e.lo > 0) {
      m[e.lo - 1][e.hi - 1] -= w;
      m[e.hi - 1][e.lo - 1] -= w;
    }
  }
  return m;
}

inline RingElement forested_form_determinant(const EdgeVector& a) {
  const Ring& ring = a.ring();
  return determinant(reduced_laplacian(a), ring.zero(), ring.one());
}

inline RingElement forested_form(const EdgeVector& a, Evaluator ev = Evaluator::Determinant) {
  return ev == Evaluator::TreeSum ? forested_form_treesum(a) : forested_form_determinant(a);
}

struct ForestedEvaluation {
  EdgeVector input;
  RingElement value;
  Evaluator evaluator;
};

inline ForestedEvaluation evaluate_forested(const EdgeVector& a, Evaluator ev) {
  return ForestedEvaluation{a, forested_form(a, ev), ev};
}

struct IdentityCheck {
  RingElement lhs;
  RingElement rhs;
  bool holds;
};

/**
 * Both sides of the contraction identity
 *   Phi_{n+1}(a + 1_e) - Phi_{n+1}(a) = Phi_n((c_e)_* a)
 * for a on K_{n+1}.
 */
inline IdentityCheck contraction_identity_check(const EdgeVector& a, const Edge& e0,
                                                Evaluator ev = Evaluator::TreeSum) {
  const unsigned source = a.graph().vertex_count();
  if (source < 2) throw PreconditionError("contraction identity needs n+1 >= 2");
  ContractionMap c(source, e0);
  EdgeVector shifted = a + EdgeVector::unit(a.graph(), a.ring(), e0);
  RingElement lhs = forested_form(shifted, ev) - forested_form(a, ev);
  RingElement rhs = forested_form(pushforward(c, a), ev);
  bool holds = lhs == rhs;
  return IdentityCheck{std::move(lhs), std::move(rhs), holds};
}

}  // namespace selflink
