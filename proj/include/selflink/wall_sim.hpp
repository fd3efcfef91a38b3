#pragma once

/**
 * @file wall_sim.hpp
 * @brief Combinatorial wall-crossing simulator.
 *
 * A population holds signed configurations, each an unordered collection of
 * n disc boundaries with class labels and a linking matrix. Its total weight
 * is the sum of sign * lk_n(matrix). Each configuration is stored once, so no
 * 1/n! factor appears and rings without inverses of n! work unchanged.
 *
 * A wall event moves the linking number of components (i, j) of a target
 * configuration by delta = +-1. At the same wall the configuration obtained
 * by fusing i and j (classes merged, matrix pushed forward along the
 * contraction of {i, j}) crosses the boundary with incidence -1 relative to
 * the target. Its signed contribution is therefore -sign(target) * delta: it
 * is inserted with that sign, or annihilates an existing copy carrying the
 * opposite sign. The total weight is then unchanged by the contraction
 * identity for forested forms.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "selflink/complete_graph.hpp"
#include "selflink/error.hpp"
#include "selflink/forested_form.hpp"
#include "selflink/geometry.hpp"
#include "selflink/link.hpp"
#include "selflink/random.hpp"
#include "selflink/ring.hpp"

namespace selflink {

inline constexpr unsigned kMaxScenarioComponents = 6;
inline constexpr std::size_t kMaxScenarioEvents = 32;
inline constexpr std::size_t kMaxScenarioInitial = 16;

struct Configuration {
  std::string id;
  std::vector<std::string> classes;  // one opaque class label per component
  LinkingMatrix matrix;
  int sign = 1;

  std::size_t size() const { return classes.size(); }

  void validate(const Ring& ring) const {
    if (id.empty()) throw InputError("configuration id must be nonempty");
    if (classes.empty()) throw InputError("configuration " + id + " has no components");
    if (classes.size() != matrix.size())
      throw InputError("configuration " + id + ": " + std::to_string(classes.size()) + " classes but a " +
                       std::to_string(matrix.size()) + "x" + std::to_string(matrix.size()) + " matrix");
    if (sign != 1 && sign != -1) throw InputError("configuration " + id + ": sign must be +1 or -1");
    if (!(matrix.ring() == ring)) throw PreconditionError("configuration " + id + " uses a different ring");
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

using Population = std::vector<Configuration>;

/// `fused.sign` is ignored on input; apply_event assigns it.
struct WallEvent {
  Rational time;
  std::string target;
  std::size_t i = 0;
  std::size_t j = 1;
  int delta = 1;
  Configuration fused;
};

struct WallScenario {
  Ring ring;
  std::vector<Configuration> initial;
  std::vector<WallEvent> events;
};

/// Label of the class obtained by merging two components.
inline std::string merge_classes(const std::string& a, const std::string& b) { return a + "+" + b; }

/**
 * The configuration obtained by fusing components i and j of `target`:
 * vertices relabelled by the contraction of {i, j}, matrix pushed forward.
 * The sign is left at +1.
 */
inline Configuration fuse(const Configuration& target, std::size_t i, std::size_t j, std::string id) {
  const std::size_t n1 = target.size();
  if (n1 < 2) throw PreconditionError("cannot fuse a configuration with one component");
  if (i == j || i >= n1 || j >= n1)
    throw PreconditionError("invalid component pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  const Edge e = Edge::between(static_cast<Vertex>(i), static_cast<Vertex>(j));
  ContractionMap c(static_cast<unsigned>(n1), e);
  std::vector<std::string> classes(n1 - 1);
  for (Vertex v = 0; v < n1; ++v) {
    if (v == e.lo || v == e.hi) continue;
    classes[c.image(v)] = target.classes[v];
  }
  classes[c.special_vertex()] = merge_classes(target.classes[e.lo], target.classes[e.hi]);
  LinkingMatrix m = LinkingMatrix::from_edge_vector(pushforward(c, target.matrix.to_edge_vector()));
  return Configuration{std::move(id), std::move(classes), std::move(m), 1};
}

inline RingElement configuration_weight(const Configuration& c) {
  RingElement w = self_linking_weight(c.matrix);
  return c.sign > 0 ? w : -w;
}

inline RingElement total_weight(const Population& population, const Ring& ring) {
  RingElement sum = ring.zero();
  for (const auto& c : population) {
    if (!(c.matrix.ring() == ring)) throw PreconditionError("configuration " + c.id + " uses a different ring");
    sum += configuration_weight(c);
  }
  return sum;
}

namespace detail {

inline auto find_configuration(Population& population, const std::string& id) {
  return std::find_if(population.begin(), population.end(), [&](const Configuration& c) { return c.id == id; });
}

}  // namespace detail

/**
 * With `check_recipe` false the event's fused configuration is used as given
 * instead of being checked against the contraction of the target. This
 * exists to observe what an invalid recipe does to the trace.
 */
inline Population apply_event(Population population, const WallEvent& event, bool check_recipe = true) {
  auto target_it = detail::find_configuration(population, event.target);
  if (target_it == population.end()) throw PreconditionError("event target '" + event.target + "' does not exist");
  if (event.delta != 1 && event.delta != -1) throw InputError("event delta must be +1 or -1");
  if (event.fused.id == event.target) throw InputError("fused configuration must have its own id");

  Configuration& target = *target_it;
  Configuration expected = fuse(target, event.i, event.j, event.fused.id);
  if (check_recipe) {
    if (expected.classes != event.fused.classes)
      throw PreconditionError("fused configuration " + event.fused.id + " has the wrong class labels");
    if (!(expected.matrix == event.fused.matrix))
      throw PreconditionError("fused configuration " + event.fused.id + " does not match the contracted matrix");
  } else {
    if (!(event.fused.matrix.ring() == target.matrix.ring()))
      throw PreconditionError("fused configuration " + event.fused.id + " uses a different ring");
    if (event.fused.classes.size() != event.fused.matrix.size())
      throw InputError("fused configuration " + event.fused.id + " has mismatched classes and matrix");
    expected = event.fused;
  }

  const Ring& ring = target.matrix.ring();
  target.matrix.set(event.i, event.j, target.matrix.at(event.i, event.j) + ring.from_integer(event.delta));
  const int fused_sign = -target.sign * event.delta;

  auto existing = detail::find_configuration(population, event.fused.id);
  if (existing != population.end()) {
    if (existing->classes != expected.classes || !(existing->matrix == expected.matrix) ||
        existing->sign != -fused_sign)
      throw PreconditionError("configuration " + event.fused.id + " exists but is not the mirror of the fused one");
    population.erase(existing);
  } else {
    Configuration born = expected;
    born.sign = fused_sign;
    population.push_back(std::move(born));
  }
  return population;
}

struct TracePoint {
  Rational time;
  RingElement weight;
};

struct ScenarioTrace {
  std::vector<TracePoint> points;

  bool constant() const {
    return std::all_of(points.begin(), points.end(),
                       [&](const TracePoint& p) { return p.weight == points.front().weight; });
  }
};

inline void validate_population(const Population& population, const Ring& ring) {
  for (std::size_t k = 0; k < population.size(); ++k) {
    population[k].validate(ring);
    for (std::size_t l = 0; l < k; ++l) {
      if (population[l].id == population[k].id) throw InputError("duplicate configuration id " + population[k].id);
    }
  }
}

/**
 * Applies the events in time order. The first trace point is the initial
 * weight at time 0, followed by one point per event. `check_recipe` is
 * passed to apply_event.
 */
inline ScenarioTrace run_scenario(const WallScenario& s, bool check_recipe = true) {
  validate_population(s.initial, s.ring);
  std::vector<const WallEvent*> order;
  for (const auto& e : s.events) {
    if (e.time <= 0 || e.time >= 1) throw InputError("event time " + format_rational(e.time) + " is outside (0,1)");
    order.push_back(&e);
  }
  std::stable_sort(order.begin(), order.end(), [](const WallEvent* a, const WallEvent* b) { return a->time < b->time; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (order[k]->time == order[k - 1]->time)
      throw InputError("two events share time " + format_rational(order[k]->time));
  }

  ScenarioTrace trace;
  Population population = s.initial;
  trace.points.push_back({Rational(0), total_weight(population, s.ring)});
  for (const WallEvent* e : order) {
    try {
      population = apply_event(std::move(population), *e, check_recipe);
    } catch (const Error& err) {
      throw Error(err.code(), "event at time " + format_rational(e->time) + ": " + err.what());
    }
    trace.points.push_back({e->time, total_weight(population, s.ring)});
  }
  return trace;
}

struct ScenarioShape {
  std::size_t initial_configurations = 3;
  unsigned max_components = kMaxScenarioComponents;
  std::size_t events = 10;
};

namespace detail {

inline LinkingMatrix random_linking_matrix(Rng& rng, const Ring& ring, std::size_t n) {
  LinkingMatrix m = LinkingMatrix::zero(ring, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, random_element(rng, ring));
  return m;
}

}  // namespace detail

/**
 * Deterministic random scenario. Events either fuse a random pair of a random
 * configuration with at least two components, or (one time in four) undo the
 * previous event by crossing the same wall backwards.
 */
inline WallScenario generate_random_scenario(std::uint64_t seed, const Ring& ring, const ScenarioShape& shape) {
  if (shape.max_components < 1 || shape.max_components > kMaxScenarioComponents)
    throw PreconditionError("component count must be in [1, " + std::to_string(kMaxScenarioComponents) + "]");
  if (shape.events > kMaxScenarioEvents)
    throw PreconditionError("at most " + std::to_string(kMaxScenarioEvents) + " events");
  if (shape.initial_configurations < 1 || shape.initial_configurations > kMaxScenarioInitial)
    throw PreconditionError("initial configuration count must be in [1, " + std::to_string(kMaxScenarioInitial) + "]");
  if (shape.events > 0 && shape.max_components < 2)
    throw PreconditionError("events need configurations with at least two components");

  Rng rng(seed);
  WallScenario s{ring, {}, {}};
  for (std::size_t k = 0; k < shape.initial_configurations; ++k) {
    auto n = static_cast<std::size_t>(uniform_int(rng, 1, shape.max_components));
    if (k == 0 && shape.events > 0) n = std::max<std::size_t>(n, 2);
    std::vector<std::string> classes;
    for (std::size_t v = 0; v < n; ++v) classes.push_back("d" + std::to_string(uniform_int(rng, 1, 9)));
    s.initial.push_back(Configuration{"c" + std::to_string(k), std::move(classes),
                                      detail::random_linking_matrix(rng, ring, n), coin(rng) ? 1 : -1});
  }

  Population population = s.initial;
  for (std::size_t k = 0; k < shape.events; ++k) {
    const Rational time(static_cast<long>(k + 1), static_cast<long>(shape.events + 1));
    const WallEvent* previous = s.events.empty() ? nullptr : &s.events.back();
    std::optional<WallEvent> ev;
    if (previous && coin(rng, 4) && detail::find_configuration(population, previous->fused.id) != population.end()) {
      ev = WallEvent{time, previous->target, previous->i, previous->j, -previous->delta, previous->fused};
    } else {
      std::vector<const Configuration*> candidates;
      for (const auto& c : population)
        if (c.size() >= 2) candidates.push_back(&c);
      const Configuration& target = *candidates[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<std::int64_t>(candidates.size()) - 1))];
      const auto n1 = static_cast<std::int64_t>(target.size());
      auto i = static_cast<std::size_t>(uniform_int(rng, 0, n1 - 1));
      auto j = static_cast<std::size_t>(uniform_int(rng, 0, n1 - 2));
      if (j >= i) ++j;
      const int delta = coin(rng) ? 1 : -1;
      ev = WallEvent{time, target.id, i, j, delta, fuse(target, i, j, "f" + std::to_string(k))};
    }
    population = apply_event(std::move(population), *ev);
    s.events.push_back(std::move(*ev));
  }
  return s;
}

}  // namespace selflink
