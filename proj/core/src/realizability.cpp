#include "metrep/realizability.hpp"

#include <string>

#include "metrep/error.hpp"

namespace metrep {

std::string ConditionViolation::message() const {
  std::string out = "condition " + std::to_string(static_cast<int>(condition)) +
                    " violated at coordinate " + std::to_string(coordinate + 1);
  if (vector) out += " by " + vector->to_string();
  return out;
}

RealizabilityReport check_basic_conditions(const VectorSet& s) {
  const std::size_t n = s.dimension();

  // Condition 1. Vectors are visited in lexicographic order.
  for (const auto& x : s) {
    bool seen_zero = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] < 0 || (x[i] == 0 && seen_zero)) {
        return {ConditionViolation{RealizabilityCondition::kNonNegativeSingleZero, i, x}};
      }
      seen_zero = seen_zero || x[i] == 0;
    }
  }

  // Condition 2.
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<DistanceVector> first_zero;
    for (const auto& x : s) {
      if (x[i] != 0) continue;
      if (first_zero) {
        return {ConditionViolation{RealizabilityCondition::kUniqueZeroPerCoordinate, i, first_zero}};
      }
      first_zero = x;
    }
    if (!first_zero) {
      return {ConditionViolation{RealizabilityCondition::kUniqueZeroPerCoordinate, i, std::nullopt}};
    }
  }
  return {};
}

RealizabilityReport is_realizable(const VectorSet& s) {
  if (auto basic = check_basic_conditions(s); !basic) return basic;

  // Condition 3: linear scan of s for every (x, i) with x_i > 0.
  const std::size_t n = s.dimension();
  for (const auto& x : s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] <= 0) continue;
      bool found = false;
      for (const auto& y : s) {
        if (y[i] == x[i] - 1 && chebyshev_distance(x, y) <= 1) {
          found = true;
          break;
        }
      }
      if (!found) {
        return {ConditionViolation{RealizabilityCondition::kDescendingNeighbor, i, x}};
      }
    }
  }
  return {};
}

VectorEdgeSet canonical_edges(const VectorSet& s) {
  VectorEdgeSet edges;
  const auto& v = s.vectors();
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (strong_adjacent(v[a], v[b])) edges.emplace_back(v[a], v[b]);
    }
  }
  // Already sorted: v is sorted and pairs are emitted in (a, b) order.
  return edges;
}

OrderedVertexSet canonical_landmarks(const VectorSet& s) {
  if (auto basic = check_basic_conditions(s); !basic) {
    throw Error(ErrorCode::kBasicConditionFailure, basic.violation->message());
  }
  std::vector<Vertex> members(s.dimension());
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    const auto& x = s[idx];
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      if (x[i] == 0) members[i] = static_cast<Vertex>(idx);
    }
  }
  return OrderedVertexSet(std::move(members));
}

Realization realization_from_edges(const VectorSet& s, const VectorEdgeSet& edges) {
  Graph g(static_cast<int>(s.size()));
  for (const auto& [x, y] : edges) {
    auto a = s.index_of(x);
    auto b = s.index_of(y);
    if (!a || !b) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + x.to_string() + "-" + y.to_string() + " leaves the vector set");
    }
    g.add_edge(static_cast<Vertex>(*a), static_cast<Vertex>(*b));
  }
  return Realization(std::move(g), canonical_landmarks(s));
}

Realization canonical_realization(const VectorSet& s) {
  if (auto report = is_realizable(s); !report) {
    throw Error(ErrorCode::kNotRealizable, "set is not realizable: " + report.violation->message());
  }
  Realization r = realization_from_edges(s, canonical_edges(s));
  if (!realizes_by_label(r, s)) {
    throw Error(ErrorCode::kInternalVerification,
                "canonical graph does not reproduce the vector set");
  }
  return r;
}

bool realizes_by_label(const Realization& r, const VectorSet& s) {
  if (static_cast<std::size_t>(r.graph().vertex_count()) != s.size()) return false;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (r.representation(static_cast<Vertex>(v)) != s[v]) return false;
  }
  return true;
}

}  // namespace metrep
