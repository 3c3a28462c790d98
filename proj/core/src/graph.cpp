#include "metrep/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "metrep/error.hpp"

namespace metrep {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.is_vertex(v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(g.vertex_count()) + ")");
  }
}

void require_connected(const Graph& g) {
  if (g.vertex_count() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  }
  if (!g.is_connected()) {
    throw Error(ErrorCode::kDisconnectedGraph, "graph is not connected");
  }
}

}  // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  adjacency_.resize(static_cast<std::size_t>(vertex_count));
}

Graph::Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  require_vertex(*this, u);
  require_vertex(*this, v);
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!has_edge(u, v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  std::erase(adjacency_[u], v);
  std::erase(adjacency_[v], u);
  --edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  require_vertex(*this, u);
  require_vertex(*this, v);
  const auto& smaller = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const Vertex other = &smaller == &adjacency_[u] ? v : u;
  return std::find(smaller.begin(), smaller.end(), other) != smaller.end();
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  const auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

OrderedVertexSet::OrderedVertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::vector<Vertex> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex label in landmark list");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "repeated vertex in landmark list");
  }
}

void OrderedVertexSet::validate_for(const Graph& g) const {
  for (Vertex v : members_) require_vertex(g, v);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> landmark_distances(const Graph& g, const OrderedVertexSet& w) {
  require_connected(g);
  w.validate_for(g);
  std::vector<std::vector<int>> rows;
  rows.reserve(w.size());
  for (Vertex landmark : w.members()) rows.push_back(bfs_distances(g, landmark));
  return rows;
}

std::vector<DistanceVector> metric_representations(const Graph& g, const OrderedVertexSet& w) {
  const auto rows = landmark_distances(g, w);
  std::vector<DistanceVector> reps;
  reps.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> coords(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) coords[i] = rows[i][v];
    reps.emplace_back(std::move(coords));
  }
  return reps;
}

DistanceVector metric_representation(const Graph& g, const OrderedVertexSet& w, Vertex v) {
  require_vertex(g, v);
  require_connected(g);
  w.validate_for(g);
  std::vector<int> coords;
  coords.reserve(w.size());
  for (Vertex landmark : w.members()) coords.push_back(bfs_distances(g, landmark)[v]);
  return DistanceVector(std::move(coords));
}

bool is_resolving_set(const Graph& g, const OrderedVertexSet& w) {
  auto reps = metric_representations(g, w);
  std::sort(reps.begin(), reps.end());
  return std::adjacent_find(reps.begin(), reps.end()) == reps.end();
}

VectorSet representation_set(const Graph& g, const OrderedVertexSet& w) {
  if (w.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "landmark list must not be empty");
  }
  auto reps = metric_representations(g, w);
  std::sort(reps.begin(), reps.end());
  auto dup = std::adjacent_find(reps.begin(), reps.end());
  if (dup != reps.end()) {
    throw Error(ErrorCode::kNotResolving,
                "landmarks do not resolve the graph: two vertices share " + dup->to_string());
  }
  return VectorSet(w.size(), std::move(reps));
}

namespace {

// Advances `combo` (strictly increasing labels < n) to the next k-subset in
// lexicographic order. Returns false after the last one.
bool next_combination(std::vector<Vertex>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

}  // namespace

MetricBasis metric_dimension(const Graph& g) {
  require_connected(g);
  const int n = g.vertex_count();
  // All-pairs distances once; each candidate subset is then a table lookup.
  std::vector<std::vector<int>> dist;
  dist.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));

  std::vector<std::vector<int>> reps(static_cast<std::size_t>(n));
  for (int k = 0; k <= n; ++k) {
    std::vector<Vertex> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[i] = i;
    do {
      for (Vertex v = 0; v < n; ++v) {
        reps[v].clear();
        for (Vertex landmark : combo) reps[v].push_back(dist[landmark][v]);
      }
      auto sorted = reps;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
        return MetricBasis{k, OrderedVertexSet(combo)};
      }
    } while (next_combination(combo, n));
  }
  // The full vertex set always resolves, so the loop returns before here.
  throw Error(ErrorCode::kInternalVerification, "no resolving set found");
}

}  // namespace metrep
