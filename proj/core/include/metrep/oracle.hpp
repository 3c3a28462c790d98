#pragma once

#include <cstddef>
#include <vector>

#include "metrep/distance_vector.hpp"

namespace metrep {

inline constexpr int kDefaultEdgeBudget = 20;
/// Largest canonical edge count handled by the plain subset loop.
inline constexpr std::size_t kExhaustiveEdgeLimit = 20;

enum class EnumerationStrategy {
  /// Plain loop up to kExhaustiveEdgeLimit edges, pruned search above.
  kAuto,
  /// All 2^|E| subsets. Refused above kExhaustiveEdgeLimit.
  kExhaustive,
  /// Depth-first deletion from the full candidate set, descending only
  /// through valid subsets.
  kPruned,
};

/// Ascending indices into ClassReport::candidate_edges.
using EdgeSubset = std::vector<std::size_t>;

/// Every labeled realization class of a set, as edge subsets of the
/// strong-adjacency candidate graph on S. Since candidate_edges is sorted,
/// ordering subsets by index list orders them by edge list too.
struct ClassReport {
  VectorSet set;
  VectorEdgeSet candidate_edges;
  /// Sorted lexicographically.
  std::vector<EdgeSubset> valid_edge_subsets;

  std::size_t class_count() const noexcept { return valid_edge_subsets.size(); }
  VectorEdgeSet edges_of(std::size_t k) const;
  bool contains(const VectorEdgeSet& edges) const;
};

/// Tests every edge subset E of the strong-adjacency graph on s and keeps E
/// iff landmark BFS distances in (s, E) reproduce every coordinate.
/// Throws kBasicConditionFailure if conditions 1-2 fail, kBudgetExceeded if the
/// candidate edge count exceeds edge_budget.
ClassReport enumerate_realization_classes(const VectorSet& s,
                                          int edge_budget = kDefaultEdgeBudget,
                                          EnumerationStrategy strategy = EnumerationStrategy::kAuto);

/// class_count >= 1. Basic-condition failures short-circuit to false.
bool oracle_is_realizable(const VectorSet& s, int edge_budget = kDefaultEdgeBudget);

/// class_count == 1. Throws kNotRealizable when class_count == 0.
bool oracle_is_uniquely_realizable(const VectorSet& s, int edge_budget = kDefaultEdgeBudget);

}  // namespace metrep
