#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "metrep/equivalence.hpp"
#include "metrep/error.hpp"
#include "metrep/graph.hpp"
#include "metrep/io.hpp"
#include "metrep/oracle.hpp"
#include "metrep/realizability.hpp"
#include "metrep/realization.hpp"

namespace metrep::cli {

namespace {

using nlohmann::json;

struct Options {
  std::vector<std::string> files;
  bool json = false;
  bool count_only = false;
  int budget = kDefaultEdgeBudget;
  std::optional<int> order;
  std::optional<int> condition;
  std::string out_path;
};

json vector_json(const DistanceVector& v) {
  return json(std::vector<int>(v.coords().begin(), v.coords().end()));
}

// Graph text with comment lines naming each label's vector and the landmarks.
// The comments keep the file loadable by parse_graph.
std::string annotated_graph(const Realization& r, const StrongGrid& grid) {
  std::string text = "# strong grid: " + std::to_string(grid.dimension) + " copies of P_" +
                     std::to_string(grid.order) + "\n";
  text += "# landmarks " + io::format_vertex_list(r.landmarks()) + "\n";
  for (Vertex v = 0; v < r.graph().vertex_count(); ++v) {
    text += "# " + std::to_string(v) + " " + r.representation(v).to_string() + "\n";
  }
  return text + io::format_graph(r.graph());
}

StrongGrid grid_for(const VectorSet& s, const std::optional<int>& order) {
  StrongGrid grid = StrongGrid::minimal_for(s);
  if (order) {
    if (*order < grid.order) {
      throw Error(ErrorCode::kInvalidArgument, "--order " + std::to_string(*order) +
                                                   " is below the minimum " +
                                                   std::to_string(grid.order));
    }
    grid.order = *order;
  }
  return grid;
}

std::vector<DistanceVector> landmark_vectors(const Realization& r) {
  std::vector<DistanceVector> out;
  for (Vertex w : r.landmarks().members()) out.push_back(r.representation(w));
  return out;
}

// Writes <path> (graph), <path>.json (sidecar) and <path>.dot.
void write_realization_files(const std::string& path, const Realization& r,
                             const StrongGrid& grid) {
  io::write_text_file(path, annotated_graph(r, grid));
  io::write_text_file(path + ".json", io::format_realization_sidecar(r));
  io::write_text_file(path + ".dot", io::format_dot(r.realized_set(), project_realization(r),
                                                    {landmark_vectors(r), true}));
}

int cmd_check(const Options& o, std::ostream& out) {
  const VectorSet s = io::read_vector_set_file(o.files.at(0));
  const auto report = is_realizable(s);
  if (o.json) {
    json j{{"realizable", report.ok()}};
    if (!report.ok()) {
      const auto& v = *report.violation;
      json violation{{"condition", static_cast<int>(v.condition)},
                     {"coordinate", v.coordinate + 1}};
      violation["vector"] = v.vector ? vector_json(*v.vector) : json(nullptr);
      j["violation"] = violation;
    }
    out << j.dump() << "\n";
  } else if (report.ok()) {
    out << "realizable\n";
  } else {
    out << "not realizable: " << report.violation->message() << "\n";
  }
  return report.ok() ? kExitYes : kExitNo;
}

int cmd_canonical(const Options& o, std::ostream& out) {
  const VectorSet s = io::read_vector_set_file(o.files.at(0));
  if (auto report = is_realizable(s); !report) {
    out << "not realizable: " << report.violation->message() << "\n";
    return kExitNo;
  }
  const StrongGrid grid = grid_for(s, o.order);
  const Realization r = canonical_realization(s);
  if (!o.out_path.empty()) {
    write_realization_files(o.out_path, r, grid);
    out << "canonical realization: " << r.graph().vertex_count() << " vertices, "
        << r.graph().edge_count() << " edges, landmarks "
        << io::format_vertex_list(r.landmarks()) << " -> " << o.out_path << "\n";
  } else if (o.json) {
    out << io::format_realization_sidecar(r);
  } else {
    out << annotated_graph(r, grid);
  }
  return kExitYes;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Graph g = io::read_graph_file(o.files.at(0));
  const OrderedVertexSet w = io::parse_vertex_list(o.files.at(1));
  const VectorSet s = io::read_vector_set_file(o.files.at(2));
  w.validate_for(g);

  std::string reason;
  try {
    const Realization r(g, w);
    if (r.realized_set() != s) reason = "realized set differs from the given set";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotResolving) throw;
    reason = e.what();
  }
  const bool ok = reason.empty();
  if (o.json) {
    json j{{"realization", ok}};
    if (!ok) j["reason"] = reason;
    out << j.dump() << "\n";
  } else {
    out << (ok ? "realization verified" : "not a realization: " + reason) << "\n";
  }
  return ok ? kExitYes : kExitNo;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const Graph g = io::read_graph_file(o.files.at(0));
  const MetricBasis basis = metric_dimension(g);
  if (o.json) {
    out << json{{"dimension", basis.dimension}, {"basis", basis.basis.members()}}.dump() << "\n";
  } else {
    out << "metric dimension " << basis.dimension << " (basis "
        << (basis.basis.empty() ? "{}" : io::format_vertex_list(basis.basis)) << ")\n";
  }
  return kExitYes;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  const Realization a(io::read_graph_file(o.files.at(0)), io::parse_vertex_list(o.files.at(1)));
  const Realization b(io::read_graph_file(o.files.at(2)), io::parse_vertex_list(o.files.at(3)));
  const bool same = are_equivalent(a, b);
  VectorEdgeSet only_a;
  VectorEdgeSet only_b;
  if (!same) {
    const auto ea = project_realization(a);
    const auto eb = project_realization(b);
    std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(only_a));
    std::set_difference(eb.begin(), eb.end(), ea.begin(), ea.end(), std::back_inserter(only_b));
  }
  if (o.json) {
    json j{{"equivalent", same}};
    if (!same) {
      j["only_first"] = json::parse(io::format_edge_set(only_a));
      j["only_second"] = json::parse(io::format_edge_set(only_b));
    }
    out << j.dump() << "\n";
  } else if (same) {
    out << "equivalent\n";
  } else {
    out << "not equivalent: " << only_a.size() << " edge(s) only in the first, " << only_b.size()
        << " only in the second\n";
  }
  return same ? kExitYes : kExitNo;
}

std::string witness_summary(const Witness& w) {
  return "condition " + std::to_string(w.condition) + " at (" + std::to_string(w.alpha) + "," +
         std::to_string(w.beta) + ")";
}

int cmd_unique(const Options& o, std::ostream& out) {
  const VectorSet s = io::read_vector_set_file(o.files.at(0));
  const UniquenessVerdict verdict = is_uniquely_realizable(s);
  if (o.json) {
    json j{{"unique", verdict.unique}};
    if (verdict.witness) j["witness"] = json::parse(io::format_witness(*verdict.witness));
    out << j.dump() << "\n";
  } else if (verdict.unique) {
    out << "uniquely realizable\n";
  } else {
    out << "not uniquely realizable: " << witness_summary(*verdict.witness) << "\n";
    out << io::format_witness(*verdict.witness) << "\n";
  }
  return verdict.unique ? kExitYes : kExitNo;
}

std::optional<Witness> lookup_witness(const VectorSet& s, const Options& o) {
  return o.condition ? find_witness(s, *o.condition) : find_witness(s);
}

int cmd_witness(const Options& o, std::ostream& out) {
  const VectorSet s = io::read_vector_set_file(o.files.at(0));
  const auto witness = lookup_witness(s, o);
  if (!witness) {
    out << (o.json ? "null" : "no witness") << "\n";
    return kExitNo;
  }
  out << io::format_witness(*witness) << "\n";
  return kExitYes;
}

int cmd_perturb(const Options& o, std::ostream& out) {
  const VectorSet s = io::read_vector_set_file(o.files.at(0));
  const auto witness = lookup_witness(s, o);
  if (!witness) {
    out << (o.json ? "null" : "no witness: no canonical edge is redundant") << "\n";
    return kExitNo;
  }
  const Perturbation p = delete_edge_from_witness(s, *witness);
  const StrongGrid grid = grid_for(s, o.order);
  if (o.json) {
    json j{{"witness", json::parse(io::format_witness(*witness))},
           {"deleted", json::parse(io::format_edge_deletion(p.deleted))},
           {"edges", json::parse(io::format_edge_set(project_realization(p.realization)))}};
    out << j.dump() << "\n";
  } else {
    out << io::format_edge_deletion(p.deleted) << "\n";
  }
  if (!o.out_path.empty()) {
    write_realization_files(o.out_path, p.realization, grid);
  } else if (!o.json) {
    out << annotated_graph(p.realization, grid);
  }
  return kExitYes;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const VectorSet s = io::read_vector_set_file(o.files.at(0));
  const ClassReport report = enumerate_realization_classes(s, o.budget);
  out << io::format_class_report(report, o.count_only);
  return report.class_count() >= 1 ? kExitYes : kExitNo;
}

int cmd_embed(const Options& o, std::ostream& out) {
  const Graph g = io::read_graph_file(o.files.at(0));
  const OrderedVertexSet w = io::parse_vertex_list(o.files.at(1));
  const Embedding e = embed_graph(g, w, o.order);
  const VectorSet points(w.size(), e.coordinates);
  std::vector<DistanceVector> landmarks;
  for (Vertex v : w.members()) landmarks.push_back(e.coordinates.at(v));
  const std::string dot = io::format_dot(points, e.edges, {landmarks, true});

  if (o.json) {
    json j{{"n", e.grid.dimension}, {"order", e.grid.order}};
    j["coordinates"] = json::array();
    for (const auto& x : e.coordinates) j["coordinates"].push_back(vector_json(x));
    j["edges"] = json::parse(io::format_edge_set(e.edges));
    out << j.dump() << "\n";
  } else {
    out << "# " << e.coordinates.size() << " vertices, " << e.edges.size() << " edges in "
        << e.grid.dimension << " copies of P_" << e.grid.order << "\n";
    for (std::size_t v = 0; v < e.coordinates.size(); ++v) {
      out << "# " << v << " " << e.coordinates[v].to_string() << "\n";
    }
  }
  if (!o.out_path.empty()) {
    io::write_text_file(o.out_path, dot);
  } else if (!o.json) {
    out << dot;
  }
  return kExitYes;
}

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<const char*> positionals;
  bool json = true;
  bool out = false;
  bool order = false;
  bool budget = false;
  bool count_only = false;
  bool condition = false;
  std::function<int(const Options&, std::ostream&)> handler;
};

std::vector<CommandSpec> command_table() {
  return {
      {"check", "Decide realizability of a vector set", {"set"}, true, false, false, false,
       false, false, cmd_check},
      {"canonical", "Emit the canonical realization of a vector set", {"set"}, true, true, true,
       false, false, false, cmd_canonical},
      {"verify", "Confirm that (graph, landmarks) realizes a vector set",
       {"graph", "landmarks", "set"}, true, false, false, false, false, false, cmd_verify},
      {"dim", "Metric dimension of a graph by exhaustive search", {"graph"}, true, false, false,
       false, false, false, cmd_dim},
      {"equiv", "Test equivalence of two realizations",
       {"graph1", "landmarks1", "graph2", "landmarks2"}, true, false, false, false, false, false,
       cmd_equiv},
      {"unique", "Decide unique realizability (n <= 2)", {"set"}, true, false, false, false,
       false, false, cmd_unique},
      {"witness", "Print the least witness configuration (n = 2)", {"set"}, true, false, false,
       false, false, true, cmd_witness},
      {"perturb", "Delete the witness edge from the canonical realization", {"set"}, true, true,
       true, false, false, true, cmd_perturb},
      {"enumerate", "Enumerate all realization classes exhaustively", {"set"}, false, false,
       false, true, true, false, cmd_enumerate},
      {"embed", "Embed a graph into the strong product of paths", {"graph", "landmarks"}, true,
       true, true, false, false, false, cmd_embed},
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric representation sets: realizability, canonical realizations, uniqueness"};
  app.name("metrep");
  app.require_subcommand(1, 1);

  Options options;
  options.files.resize(4);
  const auto table = command_table();
  std::vector<std::pair<CLI::App*, const CommandSpec*>> commands;
  for (const auto& spec : table) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    for (std::size_t i = 0; i < spec.positionals.size(); ++i) {
      sub->add_option(spec.positionals[i], options.files[i])->required();
    }
    if (spec.json) sub->add_flag("--json", options.json, "Machine-readable JSON output");
    if (spec.out) sub->add_option("--out", options.out_path, "Output path");
    if (spec.order) {
      sub->add_option("--order", options.order, "Strong grid path order r")->check(CLI::PositiveNumber);
    }
    if (spec.budget) {
      sub->add_option("--budget", options.budget, "Maximum candidate edge count")
          ->check(CLI::PositiveNumber);
    }
    if (spec.count_only) sub->add_flag("--count-only", options.count_only, "Print only class_count");
    if (spec.condition) {
      sub->add_option("--condition", options.condition, "Restrict to one witness condition")
          ->check(CLI::Range(1, kWitnessConditionCount));
    }
    commands.emplace_back(sub, &spec);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitYes : kExitInvalid;
  }

  for (const auto& [sub, spec] : commands) {
    if (!sub->parsed()) continue;
    try {
      return spec->handler(options, out);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return e.code() == ErrorCode::kBudgetExceeded ? kExitBudget : kExitInvalid;
    }
  }
  return kExitInvalid;
}

}  // namespace metrep::cli
