#pragma once

/**
 * @file json_io.hpp
 * @brief JSON documents for rings, edge vectors, trees, links, linking
 * matrices, wall scenarios and traces.
 *
 * Ring elements and rational numbers travel as strings so nothing is ever
 * rounded. Readers throw InputError on malformed documents; writers produce
 * output that the matching reader accepts unchanged.
 *
 *   ring         {"kind": "integers"} | {"kind": "modular", "q": 7}
 *                | {"kind": "polynomial", "variables": ["x", "y"]}
 *                (the flag form "mod:7" is also accepted on input)
 *   edge vector  {"n": 4, "ring": R, "coefficients": [{"edge": [0, 1], "value": "x + 1"}, ...]}
 *   link         {"components": [[["0", "1/2", "3"], ...], ...]}
 *   matrix       {"n": 2, "ring": R, "entries": [["0", "1"], ["1", "0"]]}
 *   scenario     {"ring": R, "initial": [C, ...], "events": [E, ...]}
 *     C          {"id": "c0", "classes": ["d1", "d2"], "sign": 1, "matrix": [["0", "1"], ["1", "0"]]}
 *     E          {"time": "1/3", "target": "c0", "pair": [0, 1], "delta": 1,
 *                 "fused": {"id": "f0", "classes": ["d1+d2"], "matrix": [["0"]]}}
 *   trace        {"ring": R, "trace": [{"time": "0", "weight": "3"}, ...], "constant": true}
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "selflink/complete_graph.hpp"
#include "selflink/error.hpp"
#include "selflink/geometry.hpp"
#include "selflink/link.hpp"
#include "selflink/ring.hpp"
#include "selflink/spanning_trees.hpp"
#include "selflink/wall_sim.hpp"

namespace selflink::io {

using json = nlohmann::json;

inline json parse_json(const std::string& text, const std::string& origin = "input") {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + origin + ": " + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str(), "'" + path + "'");
}

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected a JSON object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

inline const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return v;
}

inline long long as_integer(const json& v, const char* what) {
  if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return v.get<long long>();
}

inline unsigned as_index(const json& v, const char* what) {
  long long x = as_integer(v, what);
  if (x < 0 || x > 1'000'000) throw InputError(std::string(what) + " out of range");
  return static_cast<unsigned>(x);
}

inline std::string as_string(const json& v, const char* what) {
  if (!v.is_string()) throw InputError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

/// Ring elements may be written as strings or, for convenience, integers.
inline RingElement as_element(const json& v, const Ring& ring) {
  if (v.is_number_integer()) return ring.from_integer(BigInt(v.get<long long>()));
  return ring.parse(as_string(v, "ring element"));
}

inline Rational as_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  return parse_rational(as_string(v, "coordinate"));
}

inline Edge as_edge(const json& v) {
  if (!v.is_array() || v.size() != 2) throw InputError("an edge is a pair [i, j]");
  const unsigned a = as_index(v[0], "vertex"), b = as_index(v[1], "vertex");
  if (a == b) throw InputError("an edge needs two distinct vertices");
  return Edge::between(a, b);
}

}  // namespace detail

// ---- rings ----------------------------------------------------------------

inline json to_json(const Ring& ring) {
  switch (ring.kind()) {
    case RingKind::Integers: return {{"kind", "integers"}};
    case RingKind::Modular: {
      json q = ring.modulus() <= BigInt(9'007'199'254'740'991LL) ? json(ring.modulus().convert_to<long long>())
                                                                 : json(ring.modulus().str());
      return {{"kind", "modular"}, {"q", q}};
    }
    case RingKind::Polynomial: return {{"kind", "polynomial"}, {"variables", ring.variables()}};
  }
  return {};
}

inline Ring ring_from_json(const json& j) {
  if (j.is_string()) return Ring::from_spec(j.get<std::string>());
  const std::string kind = detail::as_string(detail::field(j, "kind"), "ring kind");
  if (kind == "integers") return Ring::integers();
  if (kind == "modular") {
    const json& q = detail::field(j, "q");
    if (q.is_number_integer()) return Ring::modular(BigInt(q.get<long long>()));
    return Ring::modular(selflink::detail::parse_bigint(detail::as_string(q, "modulus")));
  }
  if (kind == "polynomial") {
    std::vector<std::string> vars;
    for (const auto& v : detail::array_field(j, "variables")) vars.push_back(detail::as_string(v, "variable"));
    return Ring::polynomials(std::move(vars));
  }
  throw InputError("unknown ring kind '" + kind + "'");
}

// ---- edge vectors -----------------------------------------------------------

inline json to_json(const EdgeVector& a) {
  json coefficients = json::array();
  for (const Edge& e : a.graph().edges()) {
    if (a[e].is_zero()) continue;
    coefficients.push_back({{"edge", {e.lo, e.hi}}, {"value", a[e].to_string()}});
  }
  return {{"n", a.graph().vertex_count()}, {"ring", to_json(a.ring())}, {"coefficients", coefficients}};
}

inline EdgeVector edge_vector_from_json(const json& j) {
  const unsigned n = detail::as_index(detail::field(j, "n"), "n");
  const Ring ring = ring_from_json(detail::field(j, "ring"));
  const CompleteGraph graph(n);
  EdgeVector a = EdgeVector::zero(graph, ring);
  std::vector<bool> seen(graph.edge_count(), false);
  for (const auto& entry : detail::array_field(j, "coefficients")) {
    const Edge e = detail::as_edge(detail::field(entry, "edge"));
    if (!graph.contains(e)) throw InputError("edge " + e.to_string() + " is not in K_" + std::to_string(n));
    const std::size_t k = graph.index_of(e);
    if (seen[k]) throw InputError("edge " + e.to_string() + " listed twice");
    seen[k] = true;
    a.set(e, detail::as_element(detail::field(entry, "value"), ring));
  }
  return a;
}

// ---- trees ------------------------------------------------------------------

inline json to_json(const SpanningTree& t) {
  json edges = json::array();
  for (const Edge& e : t.edges()) edges.push_back({e.lo, e.hi});
  return edges;
}

inline SpanningTree tree_from_json(const json& j, unsigned n) {
  if (!j.is_array()) throw InputError("a tree is an array of edges");
  std::vector<Edge> edges;
  for (const auto& e : j) edges.push_back(detail::as_edge(e));
  try {
    return SpanningTree::from_edges(CompleteGraph(n), std::move(edges));
  } catch (const PreconditionError& err) {
    throw InputError(err.what());
  }
}

// ---- links and matrices -------------------------------------------------------

inline json to_json(const Polyline& c) {
  json points = json::array();
  for (const auto& p : c) points.push_back({format_rational(p.x), format_rational(p.y), format_rational(p.z)});
  return points;
}

inline json to_json(const PolylineLink& link) {
  json components = json::array();
  for (const auto& c : link.components()) components.push_back(to_json(c));
  return {{"components", components}};
}

inline Polyline polyline_from_json(const json& j) {
  if (!j.is_array()) throw InputError("a component is an array of points");
  Polyline c;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 3) throw InputError("a point is [x, y, z]");
    c.push_back(Point3{detail::as_rational(p[0]), detail::as_rational(p[1]), detail::as_rational(p[2])});
  }
  return c;
}

inline PolylineLink link_from_json(const json& j) {
  std::vector<Polyline> components;
  for (const auto& c : detail::array_field(j, "components")) components.push_back(polyline_from_json(c));
  return PolylineLink(std::move(components));
}

inline json matrix_entries_to_json(const LinkingMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.entries()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.to_string());
    rows.push_back(r);
  }
  return rows;
}

inline LinkingMatrix matrix_entries_from_json(const json& rows, const Ring& ring) {
  if (!rows.is_array()) throw InputError("matrix entries must be an array of rows");
  std::vector<std::vector<RingElement>> entries;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    std::vector<RingElement> r;
    for (const auto& x : row) r.push_back(detail::as_element(x, ring));
    entries.push_back(std::move(r));
  }
  return LinkingMatrix(ring, std::move(entries));
}

inline json to_json(const LinkingMatrix& m) {
  return {{"n", m.size()}, {"ring", to_json(m.ring())}, {"entries", matrix_entries_to_json(m)}};
}

inline LinkingMatrix matrix_from_json(const json& j) {
  const unsigned n = detail::as_index(detail::field(j, "n"), "n");
  const Ring ring = ring_from_json(detail::field(j, "ring"));
  LinkingMatrix m = matrix_entries_from_json(detail::field(j, "entries"), ring);
  if (m.size() != n) throw InputError("matrix declares n = " + std::to_string(n) + " but has " +
                                      std::to_string(m.size()) + " rows");
  return m;
}

// ---- wall scenarios ---------------------------------------------------------

inline json to_json(const Configuration& c, bool with_sign = true) {
  json out = {{"id", c.id}, {"classes", c.classes}};
  if (with_sign) out["sign"] = c.sign;
  out["matrix"] = matrix_entries_to_json(c.matrix);
  return out;
}

inline Configuration configuration_from_json(const json& j, const Ring& ring, bool with_sign = true) {
  std::vector<std::string> classes;
  for (const auto& c : detail::array_field(j, "classes")) classes.push_back(detail::as_string(c, "class label"));
  int sign = 1;
  if (with_sign) {
    const long long s = detail::as_integer(detail::field(j, "sign"), "sign");
    if (s != 1 && s != -1) throw InputError("sign must be 1 or -1");
    sign = static_cast<int>(s);
  }
  Configuration c{detail::as_string(detail::field(j, "id"), "id"), std::move(classes),
                  matrix_entries_from_json(detail::field(j, "matrix"), ring), sign};
  c.validate(ring);
  return c;
}

inline json to_json(const WallEvent& e) {
  return {{"time", format_rational(e.time)}, {"target", e.target}, {"pair", {e.i, e.j}},
          {"delta", e.delta},                {"fused", to_json(e.fused, false)}};
}

inline WallEvent event_from_json(const json& j, const Ring& ring) {
  const json& pair = detail::field(j, "pair");
  if (!pair.is_array() || pair.size() != 2) throw InputError("pair must be [i, j]");
  const long long delta = detail::as_integer(detail::field(j, "delta"), "delta");
  if (delta != 1 && delta != -1) throw InputError("delta must be 1 or -1");
  return WallEvent{parse_rational(detail::as_string(detail::field(j, "time"), "time")),
                   detail::as_string(detail::field(j, "target"), "target"),
                   detail::as_index(pair[0], "component index"),
                   detail::as_index(pair[1], "component index"),
                   static_cast<int>(delta),
                   configuration_from_json(detail::field(j, "fused"), ring, false)};
}

inline json to_json(const WallScenario& s) {
  json initial = json::array();
  for (const auto& c : s.initial) initial.push_back(to_json(c));
  json events = json::array();
  for (const auto& e : s.events) events.push_back(to_json(e));
  return {{"ring", to_json(s.ring)}, {"initial", initial}, {"events", events}};
}

inline WallScenario scenario_from_json(const json& j) {
  WallScenario s{ring_from_json(detail::field(j, "ring")), {}, {}};
  for (const auto& c : detail::array_field(j, "initial")) s.initial.push_back(configuration_from_json(c, s.ring));
  for (const auto& e : detail::array_field(j, "events")) s.events.push_back(event_from_json(e, s.ring));
  return s;
}

inline json to_json(const ScenarioTrace& t, const Ring& ring) {
  json points = json::array();
  for (const auto& p : t.points) points.push_back({{"time", format_rational(p.time)}, {"weight", p.weight.to_string()}});
  return {{"ring", to_json(ring)}, {"trace", points}, {"constant", t.constant()}};
}

/// The "constant" field is recomputed, not trusted.
inline ScenarioTrace trace_from_json(const json& j) {
  const Ring ring = ring_from_json(detail::field(j, "ring"));
  ScenarioTrace t;
  for (const auto& p : detail::array_field(j, "trace")) {
    t.points.push_back({parse_rational(detail::as_string(detail::field(p, "time"), "time")),
                        detail::as_element(detail::field(p, "weight"), ring)});
  }
  return t;
}

}  // namespace selflink::io
