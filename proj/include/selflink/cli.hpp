#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end. `dispatch` parses argv, runs one subcommand
 * and returns a CommandResult; `run` prints it.
 *
 * Exit codes: 0 ok, 2 usage, 3 invalid input, 4 mathematical precondition,
 * 5 internal invariant breach (including a non-constant wall trace).
 */

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "selflink/complete_graph.hpp"
#include "selflink/error.hpp"
#include "selflink/forested_form.hpp"
#include "selflink/json_io.hpp"
#include "selflink/link.hpp"
#include "selflink/ring.hpp"
#include "selflink/spanning_trees.hpp"
#include "selflink/wall_sim.hpp"

namespace selflink::cli {

using json = nlohmann::json;

struct CommandResult {
  bool ok = true;
  json payload = json::object();
  std::vector<std::string> diagnostics;
  int exit_code = 0;
  std::string help;  // set instead of payload for --help
};

namespace detail {

inline CommandResult failure(ErrorCode code, const std::string& message) {
  CommandResult r;
  r.ok = false;
  r.exit_code = static_cast<int>(code);
  r.payload = {{"error", {{"code", error_code_name(code)}, {"exit_code", r.exit_code}, {"message", message}}}};
  r.diagnostics.push_back(message);
  return r;
}

inline Edge parse_edge_flag(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("edge must be written i,j");
  const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
  auto is_index = [](const std::string& s) {
    return !s.empty() && s.size() < 6 && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (!is_index(a) || !is_index(b)) throw InputError("edge must be written i,j with vertex indices");
  const auto i = static_cast<Vertex>(std::stoul(a)), j = static_cast<Vertex>(std::stoul(b));
  if (i == j) throw InputError("an edge needs two distinct vertices");
  return Edge::between(i, j);
}

}  // namespace detail

inline CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Forested forms, self-linking weights and wall-crossing checks over exact rings.", "selflink"};
  app.require_subcommand(1);
  std::function<CommandResult()> action;

  std::string ring_spec = "integers";
  auto add_ring_flag = [&](CLI::App* cmd) {
    cmd->add_option("--ring", ring_spec, "integers | mod:<q> | poly:<v1,v2,...>")->capture_default_str();
  };

  // ring
  auto* ring_cmd = app.add_subcommand("ring", "Ring constants and element parsing");
  ring_cmd->require_subcommand(1);
  auto* ring_constants = ring_cmd->add_subcommand("constants", "Print zero and one of a ring");
  add_ring_flag(ring_constants);
  ring_constants->callback([&] {
    action = [&] {
      Ring ring = Ring::from_spec(ring_spec);
      CommandResult r;
      r.payload = {{"ring", io::to_json(ring)}, {"zero", ring.zero().to_string()}, {"one", ring.one().to_string()}};
      return r;
    };
  });
  std::string element_text;
  auto* ring_parse = ring_cmd->add_subcommand("parse", "Parse an element and print its canonical form");
  add_ring_flag(ring_parse);
  ring_parse->add_option("--value", element_text, "Element text")->required();
  ring_parse->callback([&] {
    action = [&] {
      Ring ring = Ring::from_spec(ring_spec);
      CommandResult r;
      r.payload = {{"ring", io::to_json(ring)}, {"value", ring.parse(element_text).to_string()}};
      return r;
    };
  });

  // trees
  unsigned tree_n = 0;
  std::string through;
  auto* trees_cmd = app.add_subcommand("trees", "Spanning trees of K_n");
  trees_cmd->require_subcommand(1);
  auto* trees_count = trees_cmd->add_subcommand("count", "Count spanning trees by enumeration");
  trees_count->add_option("--n", tree_n, "Number of vertices (1..9)")->required();
  trees_count->callback([&] {
    action = [&] {
      std::uint64_t count = 0;
      for_each_tree(tree_n, [&](const SpanningTree&) { ++count; });
      CommandResult r;
      r.payload = {{"n", tree_n}, {"count", count}};
      return r;
    };
  });
  auto* trees_list = trees_cmd->add_subcommand("list", "List spanning trees as edge lists");
  trees_list->add_option("--n", tree_n, "Number of vertices (1..9)")->required();
  trees_list->add_option("--through", through, "Only trees containing edge i,j");
  trees_list->callback([&] {
    action = [&] {
      std::vector<SpanningTree> trees;
      CommandResult r;
      if (through.empty()) {
        trees = enumerate_trees(tree_n);
      } else {
        const Edge e = detail::parse_edge_flag(through);
        trees = trees_through_edge(tree_n, e);
        r.payload["through"] = {e.lo, e.hi};
      }
      json list = json::array();
      for (const auto& t : trees) list.push_back(io::to_json(t));
      r.payload["n"] = tree_n;
      r.payload["count"] = trees.size();
      r.payload["trees"] = std::move(list);
      return r;
    };
  });

  // forested
  std::string input_path;
  std::string evaluator = "det";
  std::string edge_flag;
  auto* forested_cmd = app.add_subcommand("forested", "Forested forms of edge vectors");
  forested_cmd->require_subcommand(1);
  auto* forested_eval = forested_cmd->add_subcommand("eval", "Evaluate Phi_n on an edge vector");
  forested_eval->add_option("--input", input_path, "Edge-vector JSON file")->required();
  forested_eval->add_option("--evaluator", evaluator, "treesum | det")->capture_default_str();
  forested_eval->callback([&] {
    action = [&] {
      const EdgeVector a = io::edge_vector_from_json(io::read_json_file(input_path));
      const Evaluator ev = parse_evaluator(evaluator);
      CommandResult r;
      r.payload = {{"n", a.graph().vertex_count()},
                   {"ring", io::to_json(a.ring())},
                   {"evaluator", evaluator_name(ev)},
                   {"value", forested_form(a, ev).to_string()}};
      return r;
    };
  });
  auto* forested_check = forested_cmd->add_subcommand("check-identity", "Check the contraction identity at an edge");
  forested_check->add_option("--input", input_path, "Edge-vector JSON file on K_{n+1}")->required();
  forested_check->add_option("--edge", edge_flag, "Contracted edge i,j")->required();
  forested_check->add_option("--evaluator", evaluator, "treesum | det")->capture_default_str();
  forested_check->callback([&] {
    action = [&] {
      const EdgeVector a = io::edge_vector_from_json(io::read_json_file(input_path));
      const Edge e = detail::parse_edge_flag(edge_flag);
      const IdentityCheck check = contraction_identity_check(a, e, parse_evaluator(evaluator));
      CommandResult r;
      r.payload = {{"edge", {e.lo, e.hi}},
                   {"lhs", check.lhs.to_string()},
                   {"rhs", check.rhs.to_string()},
                   {"holds", check.holds}};
      if (!check.holds) {
        r.ok = false;
        r.exit_code = static_cast<int>(ErrorCode::InvariantBreach);
        r.payload["error"] = {{"code", error_code_name(ErrorCode::InvariantBreach)},
                              {"exit_code", r.exit_code},
                              {"message", "contraction identity fails"}};
      }
      return r;
    };
  });

  // lk
  std::string link_path, matrix_path;
  auto* lk_cmd = app.add_subcommand("lk", "Linking numbers and self-linking weights");
  lk_cmd->require_subcommand(1);
  auto* lk_matrix = lk_cmd->add_subcommand("matrix", "Linking matrix of a polygonal link");
  lk_matrix->add_option("--link", link_path, "Link JSON file")->required();
  add_ring_flag(lk_matrix);
  lk_matrix->callback([&] {
    action = [&] {
      const PolylineLink link = io::link_from_json(io::read_json_file(link_path));
      CommandResult r;
      r.payload = io::to_json(linking_matrix(link, Ring::from_spec(ring_spec)));
      return r;
    };
  });
  auto* lk_weight = lk_cmd->add_subcommand("weight", "Self-linking weight of a matrix or a link");
  auto* matrix_opt = lk_weight->add_option("--matrix", matrix_path, "Linking-matrix JSON file");
  auto* link_opt = lk_weight->add_option("--link", link_path, "Link JSON file");
  matrix_opt->excludes(link_opt);
  add_ring_flag(lk_weight);
  lk_weight->add_option("--evaluator", evaluator, "treesum | det")->capture_default_str();
  lk_weight->callback([&] {
    action = [&] {
      if (matrix_path.empty() && link_path.empty()) throw Error(ErrorCode::Usage, "lk weight needs --matrix or --link");
      const LinkingMatrix m = !matrix_path.empty()
                                  ? io::matrix_from_json(io::read_json_file(matrix_path))
                                  : linking_matrix(io::link_from_json(io::read_json_file(link_path)),
                                                   Ring::from_spec(ring_spec));
      CommandResult r;
      r.payload = {{"n", m.size()},
                   {"ring", io::to_json(m.ring())},
                   {"value", self_linking_weight(m, parse_evaluator(evaluator)).to_string()}};
      return r;
    };
  });

  // wallcross
  std::string scenario_path;
  std::uint64_t seed = 0;
  std::size_t count = 1;
  ScenarioShape shape;
  auto* wall_cmd = app.add_subcommand("wallcross", "Wall-crossing invariance simulator");
  wall_cmd->require_subcommand(1);
  auto add_shape_flags = [&](CLI::App* cmd) {
    cmd->add_option("--initial", shape.initial_configurations, "Initial configurations")->capture_default_str();
    cmd->add_option("--components", shape.max_components, "Maximum components per configuration (<= 6)")
        ->capture_default_str();
    cmd->add_option("--events", shape.events, "Events per scenario (<= 32)")->capture_default_str();
  };
  auto* wall_run = wall_cmd->add_subcommand("run", "Run a scenario and print its weight trace");
  wall_run->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
  bool trust_fused = false;
  wall_run->add_flag("--trust-fused", trust_fused, "Apply fused configurations as given, skipping the contraction check");
  wall_run->callback([&] {
    action = [&] {
      const WallScenario s = io::scenario_from_json(io::read_json_file(scenario_path));
      const ScenarioTrace trace = run_scenario(s, !trust_fused);
      CommandResult r;
      r.payload = io::to_json(trace, s.ring);
      if (!trace.constant()) {
        r.ok = false;
        r.exit_code = static_cast<int>(ErrorCode::InvariantBreach);
        r.payload["error"] = {{"code", error_code_name(ErrorCode::InvariantBreach)},
                              {"exit_code", r.exit_code},
                              {"message", "total weight is not constant along the scenario"}};
      }
      return r;
    };
  });
  auto* wall_generate = wall_cmd->add_subcommand("generate", "Print a seeded random scenario");
  wall_generate->add_option("--seed", seed, "Seed")->required();
  add_ring_flag(wall_generate);
  add_shape_flags(wall_generate);
  wall_generate->callback([&] {
    action = [&] {
      CommandResult r;
      r.payload = io::to_json(generate_random_scenario(seed, Ring::from_spec(ring_spec), shape));
      return r;
    };
  });
  auto* wall_fuzz = wall_cmd->add_subcommand("fuzz", "Run seeded random scenarios; fail on any non-constant trace");
  wall_fuzz->add_option("--seed", seed, "First seed")->required();
  wall_fuzz->add_option("--count", count, "Number of scenarios")->capture_default_str();
  add_ring_flag(wall_fuzz);
  add_shape_flags(wall_fuzz);
  wall_fuzz->callback([&] {
    action = [&] {
      const Ring ring = Ring::from_spec(ring_spec);
      json failures = json::array();
      for (std::size_t k = 0; k < count; ++k) {
        const std::uint64_t s = seed + k;
        if (!run_scenario(generate_random_scenario(s, ring, shape)).constant()) failures.push_back(s);
      }
      CommandResult r;
      r.payload = {{"ring", io::to_json(ring)}, {"first_seed", seed}, {"scenarios", count}, {"failures", failures}};
      if (!failures.empty()) {
        r.ok = false;
        r.exit_code = static_cast<int>(ErrorCode::InvariantBreach);
        r.payload["error"] = {{"code", error_code_name(ErrorCode::InvariantBreach)},
                              {"exit_code", r.exit_code},
                              {"message", std::to_string(failures.size()) + " scenario(s) with a non-constant trace"}};
      }
      return r;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    CommandResult r;
    r.help = out.str();
    return r;
  } catch (const CLI::ParseError& e) {
    return detail::failure(ErrorCode::Usage, e.what());
  }

  if (!action) return detail::failure(ErrorCode::Usage, "no command given");
  try {
    return action();
  } catch (const Error& e) {
    return detail::failure(e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return detail::failure(ErrorCode::InvalidInput, e.what());
  } catch (const std::exception& e) {
    return detail::failure(ErrorCode::InvariantBreach, std::string("internal error: ") + e.what());
  }
}

/// Runs `dispatch` on argv (program name excluded) and prints the result.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandResult r = dispatch(args);
  if (!r.help.empty()) {
    out << r.help;
  } else {
    out << r.payload.dump(2) << '\n';
  }
  for (const auto& d : r.diagnostics) err << "selflink: " << d << '\n';
  return r.exit_code;
}

}  // namespace selflink::cli
