#pragma once

// Finite flip-graphs: closure construction, the maximal-set enumeration
// oracle, BFS distances, diameters, geodesic intervals and convexity audits.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flipforge/arc_system.hpp"
#include "flipforge/errors.hpp"

namespace flipforge {

enum class Stratum : std::uint8_t { None, Plain, Punctured };

const char* to_string(Stratum s);

/// Simple undirected graph over triangulation labels. Vertex ids follow BFS
/// discovery order from the seed; neighbour lists are sorted.
struct FlipGraph {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> adjacency;
  std::vector<Stratum> strata;

  int vertex_count() const { return static_cast<int>(labels.size()); }
  long edge_count() const;
  std::optional<int> find(const std::string& label) const;
  bool adjacent(int u, int v) const;
};

template <class Key>
struct Closure {
  FlipGraph graph;
  std::vector<Key> keys;
  std::unordered_map<Key, int> ids;
};

/// Connected component of `seed` under `neighbors`. Throws ModelError when
/// the neighbour relation is not symmetric.
///
/// Neighbors: Key -> range of Key. Labeler: Key -> std::string.
/// Strater: Key -> Stratum.
template <class Key, class Neighbors, class Labeler, class Strater>
Closure<Key> build_closure(const Key& seed, Neighbors&& neighbors, Labeler&& labeler,
                           Strater&& strater) {
  Closure<Key> out;
  auto visit = [&](const Key& k) {
    auto [it, inserted] = out.ids.emplace(k, static_cast<int>(out.keys.size()));
    if (inserted) out.keys.push_back(k);
    return it->second;
  };
  visit(seed);
  std::vector<std::vector<int>> adj;
  for (std::size_t head = 0; head < out.keys.size(); ++head) {
    Key current = out.keys[head];
    std::vector<int> row;
    for (const Key& next : neighbors(current)) row.push_back(visit(next));
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    adj.push_back(std::move(row));
  }
  FlipGraph& g = out.graph;
  g.adjacency = std::move(adj);
  for (const Key& k : out.keys) {
    g.labels.push_back(labeler(k));
    g.strata.push_back(strater(k));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.index.emplace(g.labels[v], v).second) {
      throw ModelError("build_closure: duplicate label '" + g.labels[v] + "'");
    }
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.adjacency[u]) {
      if (u == v) throw ModelError("build_closure: self-loop at '" + g.labels[u] + "'");
      if (!g.adjacent(v, u)) {
        throw ModelError("build_closure: asymmetric neighbours '" + g.labels[u] + "' -> '" +
                         g.labels[v] + "'");
      }
    }
  }
  return out;
}

/// Label-level closure: `neighbors` maps a label to (label, flipped arc) pairs.
FlipGraph build_closure(
    const std::string& seed,
    const std::function<std::vector<std::pair<std::string, std::string>>(const std::string&)>&
        neighbors);

/// Flip-graph of an arc system, seeded at `seed` (which must be a triangulation).
Closure<ArcSet> build_system_graph(const ArcSystem& sys, const ArcSet& seed,
                                   Stratum stratum = Stratum::None);
/// Same, seeded at the greedy completion of the empty set.
Closure<ArcSet> build_system_graph(const ArcSystem& sys, Stratum stratum = Stratum::None);

/// Every maximal pairwise-compatible subset of the universe, found by
/// Bron–Kerbosch over the compatibility graph without using flips. Throws
/// ModelError carrying the offending set if any maximal set has a size other
/// than `expected_size`.
std::vector<ArcSet> enumerate_maximal(const ArcSystem& sys, int expected_size);
inline std::vector<ArcSet> enumerate_maximal(const ArcSystem& sys) {
  return enumerate_maximal(sys, sys.triangulation_size());
}

struct DistanceRow {
  int source = 0;
  std::vector<int> distances;  // -1 when unreachable
};

DistanceRow bfs_distances(const FlipGraph& g, int source);

struct Diameter {
  int value = 0;
  int u = 0;
  int v = 0;
};

/// Exact diameter from all-pairs BFS; `jobs` worker threads process sources.
/// The witness is the lexicographically least pair (u, v), u <= v, at maximal
/// distance. Throws ModelError on a disconnected or empty graph.
Diameter diameter(const FlipGraph& g, int jobs = 1);

/// Full distance matrix (rows in vertex id order).
std::vector<std::vector<int>> distance_matrix(const FlipGraph& g, int jobs = 1);

/// Vertices lying on at least one geodesic from u to v, sorted.
std::vector<int> geodesic_interval(const FlipGraph& g, int u, int v);

struct FlipPath {
  std::vector<int> vertices;
  /// Per step: (removed token, inserted token); empty strings when unknown.
  std::vector<std::pair<std::string, std::string>> steps;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct GeodesicStepCount {
  int distance = 0;
  /// Minimum and maximum, over all geodesics from u to v, of the number of
  /// steps (x, y) satisfying `marked`.
  int min_marked = 0;
  int max_marked = 0;
  /// A geodesic attaining min_marked.
  std::vector<int> witness;
};

/// Dynamic program over the geodesic DAG from u to v.
GeodesicStepCount count_marked_steps(const FlipGraph& g, int u, int v,
                                     const std::function<bool(int, int)>& marked);

/// A shortest path; ties broken toward smaller vertex ids.
FlipPath shortest_path(const FlipGraph& g, int u, int v);

/// Fills `steps` by diffing consecutive labels.
void annotate(const FlipGraph& g, FlipPath& path);

struct ConvexityAudit {
  bool strong = true;
  bool weak = true;
  /// Strong-convexity violation: a geodesic from u to v passes through w outside S.
  std::optional<std::array<int, 3>> strong_violation;
  /// Weak-convexity violation: no geodesic from u to v stays in S.
  std::optional<std::pair<int, int>> weak_violation;
};

/// Audits S (a vertex subset of connected g) for strong and weak convexity.
ConvexityAudit is_strongly_convex(const FlipGraph& g, const std::vector<int>& subset);

/// Vertices whose label contains every token of `mu`.
std::vector<int> fixed_arc_subgraph(const FlipGraph& g, const std::vector<std::string>& mu);

struct Subgraph {
  FlipGraph graph;
  std::vector<int> parent;  // subgraph id -> parent id
};

Subgraph induced_subgraph(const FlipGraph& g, const std::function<bool(const std::string&)>& keep);
Subgraph induced_subgraph(const FlipGraph& g, const std::vector<int>& vertices);

}  // namespace flipforge
