#include "metrep/equivalence.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "metrep/error.hpp"
#include "metrep/realizability.hpp"

namespace metrep {

bool are_equivalent(const Realization& a, const Realization& b) {
  if (a.realized_set() != b.realized_set()) {
    throw Error(ErrorCode::kMismatchedSets, "realizations realize different vector sets");
  }
  return project_realization(a) == project_realization(b);
}

Realization add_edge_perturb(const Realization& r, const DistanceVector& u,
                             const DistanceVector& v) {
  const auto a = r.vertex_of(u);
  const auto b = r.vertex_of(v);
  if (!a || !b) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge endpoint not realized: " + (a ? v : u).to_string());
  }
  if (!strong_adjacent(u, v)) {
    throw Error(ErrorCode::kInvalidArgument,
                u.to_string() + " and " + v.to_string() + " are not strong-adjacent");
  }
  if (r.graph().has_edge(*a, *b)) {
    throw Error(ErrorCode::kInvalidArgument,
                "edge " + u.to_string() + "-" + v.to_string() + " already present");
  }
  Graph g = r.graph();
  g.add_edge(*a, *b);
  Realization out(std::move(g), r.landmarks());
  // A strong-grid edge cannot shorten any landmark distance below the
  // coordinate lower bound, so every representation is unchanged.
  if (out.representations() != r.representations()) {
    throw Error(ErrorCode::kInternalVerification, "added edge changed a landmark distance");
  }
  return out;
}

namespace {

using Offset = std::pair<int, int>;

const std::vector<Offset>& pattern_offsets(int condition) {
  static const std::vector<Offset> kPatterns[kWitnessConditionCount] = {
      {{0, 0}, {0, 1}, {1, 0}},
      {{0, 0}, {0, 1}, {1, 1}},
      {{0, 0}, {1, 0}, {1, 1}},
      {{-1, 0}, {0, -1}, {0, 1}, {1, 0}},
      {{0, 0}, {0, 2}, {1, 1}, {2, 0}},
  };
  if (condition < 1 || condition > kWitnessConditionCount) {
    throw Error(ErrorCode::kInvalidArgument,
                "witness condition must be in 1..5, got " + std::to_string(condition));
  }
  return kPatterns[condition - 1];
}

void require_planar_realizable(const VectorSet& s) {
  if (s.dimension() != 2) {
    throw Error(ErrorCode::kUnsupportedDimension,
                "witness configurations are defined for n = 2, got n = " +
                    std::to_string(s.dimension()));
  }
  if (auto report = is_realizable(s); !report) {
    throw Error(ErrorCode::kNotRealizable, "set is not realizable: " + report.violation->message());
  }
}

using PointSet = std::unordered_set<DistanceVector, DistanceVectorHash>;

// Anchors are only tried where some pattern point lands on a member of s, so
// the scan is O(|S|) per condition.
std::optional<Witness> scan_condition(const VectorSet& s, const PointSet& points, int condition) {
  const auto& offsets = pattern_offsets(condition);
  std::optional<std::pair<int, int>> best;
  for (const auto& p : s) {
    for (const auto& [dx, dy] : offsets) {
      const std::pair<int, int> anchor{p[0] - dx, p[1] - dy};
      if (best && *best <= anchor) continue;
      const bool match = std::all_of(offsets.begin(), offsets.end(), [&](const Offset& o) {
        return points.contains(DistanceVector{anchor.first + o.first, anchor.second + o.second});
      });
      if (match) best = anchor;
    }
  }
  if (!best) return std::nullopt;
  return Witness{condition, best->first, best->second,
                 witness_pattern(condition, best->first, best->second)};
}

void validate_witness(const VectorSet& s, const Witness& w) {
  require_planar_realizable(s);
  if (w.members != witness_pattern(w.condition, w.alpha, w.beta)) {
    throw Error(ErrorCode::kInvalidArgument, "witness members do not match condition " +
                                                 std::to_string(w.condition) + " at (" +
                                                 std::to_string(w.alpha) + "," +
                                                 std::to_string(w.beta) + ")");
  }
  for (const auto& m : w.members) {
    if (!s.contains(m)) {
      throw Error(ErrorCode::kInvalidArgument, "witness member " + m.to_string() + " not in set");
    }
  }
}

}  // namespace

std::vector<DistanceVector> witness_pattern(int condition, int alpha, int beta) {
  std::vector<DistanceVector> points;
  for (const auto& [dx, dy] : pattern_offsets(condition)) {
    points.push_back(DistanceVector{alpha + dx, beta + dy});
  }
  std::sort(points.begin(), points.end());
  return points;
}

std::optional<Witness> find_witness(const VectorSet& s, int condition) {
  require_planar_realizable(s);
  const PointSet points(s.begin(), s.end());
  return scan_condition(s, points, condition);
}

std::optional<Witness> find_witness(const VectorSet& s) {
  require_planar_realizable(s);
  const PointSet points(s.begin(), s.end());
  for (int condition = 1; condition <= kWitnessConditionCount; ++condition) {
    if (auto w = scan_condition(s, points, condition)) return w;
  }
  return std::nullopt;
}

UniquenessVerdict is_uniquely_realizable_2d(const VectorSet& s) {
  auto witness = find_witness(s);
  return UniquenessVerdict{!witness.has_value(), std::move(witness)};
}

UniquenessVerdict is_uniquely_realizable(const VectorSet& s) {
  if (s.dimension() == 2) return is_uniquely_realizable_2d(s);
  if (s.dimension() == 1) {
    if (auto report = is_realizable(s); !report) {
      throw Error(ErrorCode::kNotRealizable,
                  "set is not realizable: " + report.violation->message());
    }
    // {0, 1, ..., k}: only consecutive values are strong-adjacent, so the
    // canonical path is the only graph with the right landmark distances.
    return UniquenessVerdict{true, std::nullopt};
  }
  throw Error(ErrorCode::kUnsupportedDimension,
              "uniqueness is decided only for n <= 2, got n = " + std::to_string(s.dimension()));
}

bool is_uniquely_realizable_by_deletion(const VectorSet& s) {
  const Realization canonical = canonical_realization(s);
  const VectorEdgeSet edges = canonical_edges(s);
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    VectorEdgeSet reduced;
    reduced.reserve(edges.size() - 1);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (k != skip) reduced.push_back(edges[k]);
    }
    try {
      if (realizes_by_label(realization_from_edges(s, reduced), s)) return false;
    } catch (const Error& e) {
      // Disconnected or colliding representations: not a realization.
      if (e.code() != ErrorCode::kDisconnectedGraph && e.code() != ErrorCode::kNotResolving) throw;
    }
  }
  return true;
}

EdgeDeletion witness_edge(const Witness& w) {
  const int a = w.alpha;
  const int b = w.beta;
  switch (w.condition) {
    case 1:
    case 4:
      return {DistanceVector{a, b + 1}, DistanceVector{a + 1, b}};
    case 2:
      return {DistanceVector{a, b + 1}, DistanceVector{a + 1, b + 1}};
    case 3:
      return {DistanceVector{a + 1, b}, DistanceVector{a + 1, b + 1}};
    case 5:
      return {DistanceVector{a, b}, DistanceVector{a + 1, b + 1}};
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "witness condition must be in 1..5, got " + std::to_string(w.condition));
  }
}

Perturbation delete_edge_from_witness(const VectorSet& s, const Witness& w) {
  validate_witness(s, w);
  EdgeDeletion deleted = witness_edge(w);

  // Why this edge is redundant: for landmark 1, any shortest path through
  // u -> v can instead pass through the pattern point t with t_1 = u_1, since
  // d(t, w_1) = d(u, w_1) and t ~ v. Landmark 2 is symmetric. The patterns
  // guarantee such a t exists for every landmark whose distance changes
  // along uv.
  VectorEdgeSet edges = canonical_edges(s);
  const VectorEdge target = make_edge(deleted.u, deleted.v);
  const auto it = std::lower_bound(edges.begin(), edges.end(), target);
  if (it == edges.end() || *it != target) {
    throw Error(ErrorCode::kInternalVerification,
                "witness edge " + deleted.u.to_string() + "-" + deleted.v.to_string() +
                    " is not a canonical edge");
  }
  edges.erase(it);

  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::kInternalVerification,
                 "deleting " + deleted.u.to_string() + "-" + deleted.v.to_string() + " " + why);
  };
  std::optional<Realization> reduced;
  try {
    reduced.emplace(realization_from_edges(s, edges));
  } catch (const Error& e) {
    throw fail(std::string("broke the realization: ") + e.what());
  }
  if (!realizes_by_label(*reduced, s)) throw fail("changed a landmark distance");
  return Perturbation{std::move(deleted), std::move(*reduced)};
}

}  // namespace metrep
