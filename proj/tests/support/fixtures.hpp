#pragma once

// Graphs and vector sets from the worked examples, shared by the unit and
// acceptance suites. Vertex u_k of a named path or cycle has label k - 1.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "metrep/distance_vector.hpp"
#include "metrep/graph.hpp"

namespace metrep::fixtures {

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n > 2) g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline VectorSet p5_set() { return VectorSet({{0, 2}, {2, 0}, {1, 1}, {3, 1}, {1, 3}}); }

/// Two vectors with first coordinate zero.
inline VectorSet unrealizable_set() { return VectorSet({{0, 1}, {0, 2}, {1, 1}}); }

inline VectorSet k5_set() {
  return VectorSet({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}, {1, 1, 1, 1}});
}

inline VectorSet c10_set() {
  return VectorSet(
      {{0, 3}, {3, 0}, {1, 2}, {2, 1}, {1, 4}, {4, 1}, {2, 5}, {5, 2}, {3, 4}, {4, 3}});
}

/// The 14-vector set with three non-equivalent realizations.
inline std::vector<DistanceVector> s14_listing() {
  return {{0, 3}, {3, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 4},
          {4, 1}, {2, 5}, {5, 2}, {3, 4}, {4, 3}, {4, 5}, {5, 4}};
}
inline VectorSet s14_set() { return VectorSet(s14_listing()); }

/// Shared set of the two non-isomorphic three-landmark graphs. Listing order
/// gives the vertex labels of three_landmark_graph_{1,2}.
inline std::vector<DistanceVector> three_landmark_listing() {
  return {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}, {1, 2, 3}, {2, 3, 2}, {3, 2, 1}, {2, 1, 2}, {1, 2, 1}};
}
inline VectorSet three_landmark_set() { return VectorSet(three_landmark_listing()); }
inline OrderedVertexSet three_landmarks() { return OrderedVertexSet({0, 1, 2}); }

inline Graph three_landmark_graph_1() {
  const std::vector<std::pair<Vertex, Vertex>> edges = {
      {0, 1}, {0, 3}, {0, 7}, {1, 2}, {1, 6}, {2, 5}, {2, 7}, {4, 7}, {6, 7}};
  return Graph(8, edges);
}

inline Graph three_landmark_graph_2() {
  const std::vector<std::pair<Vertex, Vertex>> edges = {
      {0, 1}, {0, 3}, {0, 7}, {1, 2}, {1, 6}, {2, 5}, {2, 7}, {3, 6}, {4, 7}};
  return Graph(8, edges);
}

/// One graph on 14 vertices (labels follow s14_listing()) realizing the
/// 14-vector set twice: with (w1, w2) the vertices of (2,3) and (3,2) are
/// adjacent, with (z1, z2) they are not.
inline Graph s14_graph() {
  const std::vector<std::pair<Vertex, Vertex>> edges = {
      {0, 2}, {0, 6}, {1, 3},  {1, 7},   {2, 3},   {2, 4},   {3, 5},   {4, 5},
      {6, 8}, {7, 9}, {8, 10}, {9, 11}, {10, 11}, {10, 12}, {11, 13}};
  return Graph(14, edges);
}
inline OrderedVertexSet s14_landmarks_w() { return OrderedVertexSet({0, 1}); }
inline OrderedVertexSet s14_landmarks_z() { return OrderedVertexSet({8, 9}); }

/// Brute-force isomorphism test over all vertex permutations. Test-only; fine
/// up to about 9 vertices.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    const bool ok = std::all_of(edges.begin(), edges.end(), [&](const auto& e) {
      return b.has_edge(perm[e.first], perm[e.second]);
    });
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace metrep::fixtures
