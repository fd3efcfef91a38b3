#pragma once

// Seeded generators shared by the scenario generator and the test suites.
// Draws are reduced with `%` instead of std::uniform_int_distribution so the
// streams are identical across standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "selflink/complete_graph.hpp"
#include "selflink/ring.hpp"

namespace selflink {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline bool coin(Rng& rng, unsigned one_in = 2) { return rng() % one_in == 0; }

/**
 * A small random element: integers in [-3, 3]; any residue; or a polynomial
 * with at most two terms, each multilinear with coefficient in [-2, 2].
 */
inline RingElement random_element(Rng& rng, const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return ring.from_integer(uniform_int(rng, -3, 3));
    case RingKind::Modular: {
      BigInt raw = BigInt(rng()) * BigInt(rng());
      return ring.from_integer(raw % ring.modulus());
    }
    case RingKind::Polynomial: {
      RingElement out = ring.zero();
      const auto terms = uniform_int(rng, 0, 2);
      for (std::int64_t t = 0; t < terms; ++t) {
        RingElement mono = ring.from_integer(uniform_int(rng, -2, 2));
        for (const auto& name : ring.variables())
          if (coin(rng)) mono *= ring.variable(name);
        out += mono;
      }
      return out;
    }
  }
  return ring.zero();
}

inline EdgeVector random_edge_vector(Rng& rng, const CompleteGraph& graph, const Ring& ring) {
  std::vector<RingElement> coefficients;
  coefficients.reserve(graph.edge_count());
  for (std::size_t k = 0; k < graph.edge_count(); ++k) coefficients.push_back(random_element(rng, ring));
  return EdgeVector(graph, ring, std::move(coefficients));
}

/// Fisher-Yates shuffle of 0..n-1.
inline std::vector<Vertex> random_permutation(Rng& rng, unsigned n) {
  std::vector<Vertex> sigma(n);
  for (Vertex v = 0; v < n; ++v) sigma[v] = v;
  for (unsigned k = n; k > 1; --k) std::swap(sigma[k - 1], sigma[static_cast<std::size_t>(uniform_int(rng, 0, k - 1))]);
  return sigma;
}

}  // namespace selflink
