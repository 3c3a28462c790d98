#include "metrep/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "metrep/error.hpp"

namespace metrep::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what, std::size_t line = 0) {
  throw Error(ErrorCode::kParse, line ? "line " + std::to_string(line) + ": " + what : what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, std::size_t line) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    parse_error("expected an integer, got '" + std::string(token) + "'", line);
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

json vector_json(const DistanceVector& v) {
  return json(std::vector<int>(v.coords().begin(), v.coords().end()));
}

json edge_set_json(const VectorEdgeSet& edges) {
  json out = json::array();
  for (const auto& [a, b] : edges) out.push_back({a.to_string(), b.to_string()});
  return out;
}

DistanceVector vector_from_json(const json& j) {
  if (!j.is_array()) parse_error("vector must be a JSON array");
  std::vector<int> coords;
  for (const auto& c : j) {
    if (!c.is_number_integer()) parse_error("vector coordinates must be integers");
    coords.push_back(c.get<int>());
  }
  return DistanceVector(std::move(coords));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(trim(line));
    if (tokens.empty()) continue;

    if (tokens[0] == "p") {
      if (g) parse_error("duplicate 'p' line", line_no);
      if (tokens.size() != 2) parse_error("expected 'p <vertex_count>'", line_no);
      const int n = parse_int(tokens[1], line_no);
      if (n < 0) parse_error("negative vertex count", line_no);
      g.emplace(n);
    } else if (tokens[0] == "e") {
      if (!g) parse_error("'e' line before 'p' line", line_no);
      if (tokens.size() != 3) parse_error("expected 'e <u> <v>'", line_no);
      try {
        g->add_edge(parse_int(tokens[1], line_no), parse_int(tokens[2], line_no));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kParse) throw;
        parse_error(e.what(), line_no);
      }
    } else {
      parse_error("unknown line type '" + std::string(tokens[0]) + "'", line_no);
    }
  }
  if (!g) parse_error("missing 'p <vertex_count>' line");
  return std::move(*g);
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string format_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

OrderedVertexSet parse_vertex_list(std::string_view text) {
  text = trim(text);
  if (text.empty()) parse_error("empty vertex list");
  std::vector<Vertex> members;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    members.push_back(parse_int(text.substr(pos, comma - pos), 0));
    pos = comma + 1;
  }
  try {
    return OrderedVertexSet(std::move(members));
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

std::string format_vertex_list(const OrderedVertexSet& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

VectorSet parse_vector_set(std::string_view json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) parse_error("vector set must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) parse_error("missing integer field 'n'");
  if (!j.contains("vectors") || !j["vectors"].is_array()) parse_error("missing array field 'vectors'");
  const auto n = j["n"].get<long long>();
  if (n < 1) parse_error("'n' must be at least 1");
  std::vector<DistanceVector> vectors;
  for (const auto& v : j["vectors"]) vectors.push_back(vector_from_json(v));
  try {
    return VectorSet(static_cast<std::size_t>(n), std::move(vectors));
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

VectorSet read_vector_set_file(const std::string& path) {
  return parse_vector_set(read_text_file(path));
}

std::string format_vector_set(const VectorSet& s) {
  json j;
  j["n"] = s.dimension();
  j["vectors"] = json::array();
  for (const auto& v : s) j["vectors"].push_back(vector_json(v));
  return j.dump() + "\n";
}

std::string format_realization_sidecar(const Realization& r) {
  json j;
  j["n"] = r.dimension();
  j["vectors"] = json::array();
  for (const auto& v : r.representations()) j["vectors"].push_back(vector_json(v));
  j["landmarks"] = r.landmarks().members();
  return j.dump() + "\n";
}

std::string format_witness(const Witness& w) {
  json j;
  j["condition"] = w.condition;
  j["alpha"] = w.alpha;
  j["beta"] = w.beta;
  j["members"] = json::array();
  for (const auto& m : w.members) j["members"].push_back(vector_json(m));
  return j.dump();
}

Witness parse_witness(std::string_view json_text) {
  const json j = parse_json(json_text);
  for (const char* key : {"condition", "alpha", "beta"}) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
      parse_error(std::string("missing integer field '") + key + "'");
    }
  }
  if (!j.contains("members") || !j["members"].is_array()) parse_error("missing array field 'members'");
  Witness w{j["condition"].get<int>(), j["alpha"].get<int>(), j["beta"].get<int>(), {}};
  for (const auto& m : j["members"]) w.members.push_back(vector_from_json(m));
  std::sort(w.members.begin(), w.members.end());
  return w;
}

std::string format_edge_deletion(const EdgeDeletion& e) {
  json j;
  j["u"] = vector_json(e.u);
  j["v"] = vector_json(e.v);
  return j.dump();
}

std::string format_edge_set(const VectorEdgeSet& edges) { return edge_set_json(edges).dump(); }

std::string format_class_report(const ClassReport& report, bool count_only) {
  json j;
  j["class_count"] = report.class_count();
  if (!count_only) {
    j["classes"] = json::array();
    for (std::size_t k = 0; k < report.class_count(); ++k) {
      j["classes"].push_back(edge_set_json(report.edges_of(k)));
    }
  }
  return j.dump() + "\n";
}

std::string format_dot(const VectorSet& vertices, const VectorEdgeSet& edges,
                       const DotOptions& options) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& x = vertices[i];
    out << "  v" << i << " [label=\"" << x.to_string() << "\"";
    if (std::find(options.landmarks.begin(), options.landmarks.end(), x) != options.landmarks.end()) {
      out << ", style=filled, fillcolor=black, fontcolor=white";
    }
    if (options.grid_layout && x.size() == 2) {
      out << ", pos=\"" << x[0] << "," << -x[1] << "!\"";
    }
    out << "];\n";
  }
  for (const auto& [a, b] : edges) {
    const auto ia = vertices.index_of(a);
    const auto ib = vertices.index_of(b);
    if (!ia || !ib) {
      throw Error(ErrorCode::kInvalidArgument, "DOT edge endpoint not among the vertices");
    }
    out << "  v" << *ia << " -- v" << *ib << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace metrep::io
