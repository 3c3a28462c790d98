#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "metrep/equivalence.hpp"
#include "metrep/oracle.hpp"
#include "metrep/realizability.hpp"
#include "metrep/realization.hpp"

using namespace metrep;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

constexpr int kRandomInstances = 240;
constexpr int kRandomBudget = 18;

struct RandomInstance {
  VectorSet set;
  bool realizable;
  std::optional<ClassReport> classes;  // oracle output, realizable instances only
};

std::vector<RandomInstance>& random_instances() {
  static std::vector<RandomInstance> instances;
  return instances;
}

Outcome paper_fixtures() {
  using namespace fixtures;
  if (is_realizable(unrealizable_set())) return {false, "{(0,1),(0,2),(1,1)} accepted"};
  if (!is_realizable(p5_set())) return {false, "P5 set rejected"};
  if (representation_set(path_graph(5), OrderedVertexSet({1, 3})) != p5_set()) {
    return {false, "(P5,(u2,u4)) does not realize the P5 set"};
  }
  if (!is_realizable(k5_set())) return {false, "K5 set rejected"};
  const Graph k5 = complete_graph(5);
  int subsets = 0;
  std::vector<Vertex> order{0, 1, 2, 3, 4};
  do {
    const OrderedVertexSet w({order[0], order[1], order[2], order[3]});
    if (representation_set(k5, w) != k5_set()) return {false, "K5 ordered 4-subset mismatch"};
    ++subsets;
    std::reverse(order.begin() + 4, order.end());
  } while (std::next_permutation(order.begin(), order.end()));
  const Graph g1 = three_landmark_graph_1();
  const Graph g2 = three_landmark_graph_2();
  if (g1.vertex_count() != 8 || g2.vertex_count() != 8 || isomorphic(g1, g2)) {
    return {false, "8-vertex graphs are not two non-isomorphic graphs"};
  }
  const VectorSet a = representation_set(g1, three_landmarks());
  const VectorSet b = representation_set(g2, three_landmarks());
  if (a != b || a != three_landmark_set()) return {false, "8-vertex representation sets differ"};
  return {true, std::to_string(subsets) + " ordered K5 bases"};
}

Outcome c10_criterion() {
  using namespace fixtures;
  const Graph c10 = cycle_graph(10);
  const Realization a(c10, OrderedVertexSet({0, 7}));
  const Realization b(c10, OrderedVertexSet({2, 5}));
  if (a.realized_set() != c10_set() || b.realized_set() != c10_set()) {
    return {false, "C10 landmark pairs do not realize the set"};
  }
  if (!are_equivalent(a, b)) return {false, "(u1,u8) and (u3,u6) not equivalent"};
  if (!is_uniquely_realizable_2d(c10_set()).unique) return {false, "theorem says not unique"};
  const auto report = enumerate_realization_classes(c10_set());
  if (report.class_count() != 1) {
    return {false, "oracle found " + std::to_string(report.class_count()) + " classes"};
  }
  return {true, "1 class"};
}

Outcome s14_criterion() {
  const VectorSet s = fixtures::s14_set();
  const UniquenessVerdict verdict = is_uniquely_realizable_2d(s);
  if (verdict.unique) return {false, "reported unique"};
  const auto w5 = find_witness(s, 5);
  if (!w5) return {false, "no condition-5 witness"};
  const Perturbation p = delete_edge_from_witness(s, *w5);
  if (!realizes_by_label(p.realization, s)) return {false, "perturbed graph does not re-verify"};
  if (are_equivalent(p.realization, canonical_realization(s))) {
    return {false, "perturbed graph equivalent to canonical"};
  }
  const auto report = enumerate_realization_classes(s);
  if (report.class_count() < 3) {
    return {false, "oracle found " + std::to_string(report.class_count()) + " classes"};
  }
  return {true, "condition-5 witness at (" + std::to_string(w5->alpha) + "," +
                    std::to_string(w5->beta) + "), " + std::to_string(report.class_count()) +
                    " classes over " + std::to_string(report.candidate_edges.size()) + " edges"};
}

Outcome theorem_vs_oracle() {
  std::mt19937 rng(20240611);
  auto& instances = random_instances();
  instances.clear();
  while (instances.size() < static_cast<std::size_t>(kRandomInstances)) {
    VectorSet s = generators::random_planar_set(rng, 5, 3, 8);
    if (canonical_edges(s).size() > static_cast<std::size_t>(kRandomBudget)) continue;
    instances.push_back({std::move(s), false, std::nullopt});
  }
  int realizable = 0;
  int unique = 0;
  for (auto& inst : instances) {
    inst.realizable = is_realizable(inst.set).ok();
    if (inst.realizable != oracle_is_realizable(inst.set, kRandomBudget)) {
      return {false, "realizability disagrees on " + inst.set[0].to_string() + ".."};
    }
    if (!inst.realizable) continue;
    ++realizable;
    const bool theorem = is_uniquely_realizable_2d(inst.set).unique;
    if (theorem != oracle_is_uniquely_realizable(inst.set, kRandomBudget)) {
      return {false, "uniqueness disagrees"};
    }
    unique += theorem ? 1 : 0;
    ClassReport report = enumerate_realization_classes(inst.set, kRandomBudget);
    inst.classes = std::move(report);
  }
  return {true, std::to_string(instances.size()) + " instances, " + std::to_string(realizable) +
                    " realizable, " + std::to_string(unique) + " unique"};
}

Outcome upward_closure() {
  long checked = 0;
  for (const auto& inst : random_instances()) {
    if (!inst.classes) continue;
    const auto& valid = inst.classes->valid_edge_subsets;
    const std::size_t m = inst.classes->candidate_edges.size();
    for (const auto& subset : valid) {
      for (std::size_t e = 0; e < m; ++e) {
        if (std::binary_search(subset.begin(), subset.end(), e)) continue;
        EdgeSubset bigger = subset;
        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), e), e);
        if (!std::binary_search(valid.begin(), valid.end(), bigger)) {
          return {false, "adding a canonical edge broke a valid subset"};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " extensions, 0 violations"};
}

Outcome canonical_soundness() {
  long checked = 0;
  for (const auto& inst : random_instances()) {
    if (!inst.realizable) continue;
    const Graph g(static_cast<int>(inst.set.size()), [&] {
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (const auto& [x, y] : canonical_edges(inst.set)) {
        edges.emplace_back(static_cast<Vertex>(*inst.set.index_of(x)),
                           static_cast<Vertex>(*inst.set.index_of(y)));
      }
      return edges;
    }());
    const auto landmarks = canonical_landmarks(inst.set);
    for (std::size_t i = 0; i < landmarks.size(); ++i) {
      const auto d = bfs_distances(g, landmarks[i]);
      for (std::size_t v = 0; v < inst.set.size(); ++v) {
        if (d[v] != inst.set[v][i]) return {false, "BFS distance differs from coordinate"};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " distances, 0 violations"};
}

Outcome metric_dimensions() {
  using namespace fixtures;
  const int p5 = metric_dimension(path_graph(5)).dimension;
  const int c10 = metric_dimension(cycle_graph(10)).dimension;
  const int k5 = metric_dimension(complete_graph(5)).dimension;
  const std::string detail =
      "P5=" + std::to_string(p5) + " C10=" + std::to_string(c10) + " K5=" + std::to_string(k5);
  return {p5 == 1 && c10 == 2 && k5 == 4, detail};
}

Outcome embeddings() {
  using namespace fixtures;
  const std::vector<std::pair<Graph, OrderedVertexSet>> suite = {
      {path_graph(5), OrderedVertexSet({1, 3})},
      {path_graph(5), OrderedVertexSet({0})},
      {complete_graph(5), OrderedVertexSet({0, 1, 2, 3})},
      {cycle_graph(10), OrderedVertexSet({0, 7})},
      {cycle_graph(10), OrderedVertexSet({2, 5})},
      {three_landmark_graph_1(), three_landmarks()},
      {three_landmark_graph_2(), three_landmarks()},
      {s14_graph(), s14_landmarks_w()},
      {s14_graph(), s14_landmarks_z()},
  };
  for (const auto& [g, w] : suite) {
    const Embedding e = embed_graph(g, w);
    auto coords = e.coordinates;
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end()) {
      return {false, "vertex map not injective"};
    }
    if (e.edges.size() != g.edge_count()) return {false, "edge images collapsed"};
    for (const auto& [x, y] : e.edges) {
      if (!strong_adjacent(x, y) || !e.grid.contains(x) || !e.grid.contains(y)) {
        return {false, "edge image outside the strong grid"};
      }
    }
  }
  return {true, std::to_string(suite.size()) + " fixtures"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "paper example fixtures", 1.0, paper_fixtures},
      {2, "C10 equivalence and uniqueness", 5.0, c10_criterion},
      {3, "14-vector set non-uniqueness", 30.0, s14_criterion},
      {4, "theorem vs oracle agreement", 120.0, theorem_vs_oracle},
      {5, "upward closure", 120.0, upward_closure},
      {6, "canonical soundness", 120.0, canonical_soundness},
      {7, "metric dimension brute force", 1.0, metric_dimensions},
      {8, "strong grid embedding", 60.0, embeddings},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && seconds > c.limit_seconds) {
      outcome = {false, "took " + std::to_string(seconds) + " s"};
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%.3f s) %s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.name, seconds, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
