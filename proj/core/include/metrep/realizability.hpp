#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "metrep/distance_vector.hpp"
#include "metrep/realization.hpp"

namespace metrep {

/// The three characterizing conditions, in checking order.
enum class RealizabilityCondition {
  /// Coordinates non-negative, at most one zero per vector.
  kNonNegativeSingleZero = 1,
  /// Each coordinate is zero in exactly one vector.
  kUniqueZeroPerCoordinate = 2,
  /// Every positive coordinate can step down by one through a Chebyshev
  /// neighbour inside the set.
  kDescendingNeighbor = 3,
};

struct ConditionViolation {
  RealizabilityCondition condition;
  /// 0-based coordinate index.
  std::size_t coordinate = 0;
  /// Offending vector; absent when condition 2 fails because no vector has a
  /// zero at `coordinate`.
  std::optional<DistanceVector> vector;

  /// e.g. "condition 2 violated at coordinate 1 by (0,1)" (1-based coordinate).
  std::string message() const;
};

struct RealizabilityReport {
  std::optional<ConditionViolation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

/// Conditions 1 and 2 only.
RealizabilityReport check_basic_conditions(const VectorSet& s);

/// Conditions 1, 2 and 3. The earliest failing condition is reported, with
/// the smallest coordinate and then the lexicographically smallest vector.
RealizabilityReport is_realizable(const VectorSet& s);

/// Vertex i is s[i]; x ~ y iff strong_adjacent(x, y); landmark i is the vector
/// with zero i-th coordinate. Throws kNotRealizable on failure.
Realization canonical_realization(const VectorSet& s);

/// Edge set of the canonical graph: all strong-adjacent pairs within s.
VectorEdgeSet canonical_edges(const VectorSet& s);

/// Landmark order used by canonical realizations: entry i is the index in s
/// of the vector with zero i-th coordinate. Requires the basic conditions.
OrderedVertexSet canonical_landmarks(const VectorSet& s);

/// Builds the realization (s, edges, canonical landmarks) on vertex labels
/// indexed like s. Throws kInvalidArgument when an edge endpoint is not in s.
Realization realization_from_edges(const VectorSet& s, const VectorEdgeSet& edges);

}  // namespace metrep

namespace metrep {

/// True iff r's vertices are labeled like s and r(v|W) == s[v] for every v.
bool realizes_by_label(const Realization& r, const VectorSet& s);

}  // namespace metrep
