#include "flipforge/flipgraph.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace flipforge {

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::Plain:
      return "plain";
    case Stratum::Punctured:
      return "punctured";
    case Stratum::None:
      break;
  }
  return "n/a";
}

long FlipGraph::edge_count() const {
  long twice = 0;
  for (const auto& row : adjacency) twice += static_cast<long>(row.size());
  return twice / 2;
}

std::optional<int> FlipGraph::find(const std::string& label) const {
  auto it = index.find(label);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

bool FlipGraph::adjacent(int u, int v) const {
  const auto& row = adjacency.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

FlipGraph build_closure(
    const std::string& seed,
    const std::function<std::vector<std::pair<std::string, std::string>>(const std::string&)>&
        neighbors) {
  auto closure = build_closure<std::string>(
      seed,
      [&](const std::string& label) {
        std::vector<std::string> out;
        for (auto& [next, arc] : neighbors(label)) out.push_back(next);
        return out;
      },
      [](const std::string& label) { return label; }, [](const std::string&) { return Stratum::None; });
  return std::move(closure.graph);
}

Closure<ArcSet> build_system_graph(const ArcSystem& sys, const ArcSet& seed, Stratum stratum) {
  if (!sys.is_triangulation(seed)) {
    throw InputError("seed '" + sys.label(seed) + "' is not a triangulation");
  }
  return build_closure<ArcSet>(
      seed,
      [&](const ArcSet& t) {
        std::vector<ArcSet> out;
        for (const Flip& f : sys.flips(t)) out.push_back(f.result);
        return out;
      },
      [&](const ArcSet& t) { return sys.label(t); }, [stratum](const ArcSet&) { return stratum; });
}

Closure<ArcSet> build_system_graph(const ArcSystem& sys, Stratum stratum) {
  return build_system_graph(sys, sys.complete({}), stratum);
}

namespace {

struct CliqueSearch {
  const ArcSystem& sys;
  int expected;
  std::vector<ArcSet> found;

  ArcSet neighbours(int v) const { return sys.compatible_with(v).without(v); }

  void run(ArcSet r, ArcSet p, ArcSet x) {
    if (p.empty() && x.empty()) {
      if (r.count() != expected) {
        throw ModelError("enumerate_maximal: maximal set of size " + std::to_string(r.count()) +
                         " (expected " + std::to_string(expected) + "): " + sys.label(r));
      }
      found.push_back(r);
      return;
    }
    int pivot = -1;
    int best = -1;
    (p | x).for_each([&](int u) {
      int c = (p & neighbours(u)).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    ArcSet branch = p - neighbours(pivot);
    branch.for_each([&](int v) {
      ArcSet nv = neighbours(v);
      run(r.with(v), p & nv, x & nv);
      p.reset(v);
      x.set(v);
    });
  }
};

}  // namespace

std::vector<ArcSet> enumerate_maximal(const ArcSystem& sys, int expected_size) {
  CliqueSearch search{sys, expected_size, {}};
  search.run({}, sys.universe(), {});
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

DistanceRow bfs_distances(const FlipGraph& g, int source) {
  if (source < 0 || source >= g.vertex_count()) throw InputError("bfs: source out of range");
  DistanceRow row{source, std::vector<int>(g.vertex_count(), -1)};
  std::vector<int> queue{source};
  row.distances[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.adjacency[u]) {
      if (row.distances[w] < 0) {
        row.distances[w] = row.distances[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return row;
}

namespace {

// Runs body(source) for every source on `jobs` threads, striding the ids.
template <class Body>
void for_each_source(int count, int jobs, Body&& body) {
  jobs = std::clamp(jobs, 1, std::max(1, count));
  if (jobs == 1) {
    for (int s = 0; s < count; ++s) body(s, 0);
    return;
  }
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (int s = w; s < count; s += jobs) body(s, w);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

Diameter diameter(const FlipGraph& g, int jobs) {
  const int count = g.vertex_count();
  if (count == 0) throw ModelError("diameter of an empty graph");
  // Per-source (eccentricity, farthest id); rows are reduced, never stored.
  std::vector<std::pair<int, int>> ecc(count, {-1, -1});
  std::vector<int> disconnected(count, 0);
  for_each_source(count, jobs, [&](int s, int) {
    DistanceRow row = bfs_distances(g, s);
    int far = s;
    for (int v = 0; v < count; ++v) {
      if (row.distances[v] < 0) {
        disconnected[s] = 1;
        return;
      }
      if (v >= s && row.distances[v] > row.distances[far]) far = v;
    }
    ecc[s] = {row.distances[far], far};
  });
  for (int s = 0; s < count; ++s) {
    if (disconnected[s]) {
      throw ModelError("diameter: graph is disconnected (from '" + g.labels[s] + "')");
    }
  }
  Diameter best{-1, 0, 0};
  for (int s = 0; s < count; ++s) {
    if (ecc[s].first > best.value) best = {ecc[s].first, s, ecc[s].second};
  }
  return best;
}

std::vector<std::vector<int>> distance_matrix(const FlipGraph& g, int jobs) {
  std::vector<std::vector<int>> rows(g.vertex_count());
  for_each_source(g.vertex_count(), jobs,
                  [&](int s, int) { rows[s] = bfs_distances(g, s).distances; });
  return rows;
}

std::vector<int> geodesic_interval(const FlipGraph& g, int u, int v) {
  DistanceRow from_u = bfs_distances(g, u);
  DistanceRow from_v = bfs_distances(g, v);
  const int d = from_u.distances[v];
  std::vector<int> out;
  if (d < 0) return out;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (from_u.distances[w] >= 0 && from_v.distances[w] >= 0 &&
        from_u.distances[w] + from_v.distances[w] == d) {
      out.push_back(w);
    }
  }
  return out;
}

GeodesicStepCount count_marked_steps(const FlipGraph& g, int u, int v,
                                     const std::function<bool(int, int)>& marked) {
  DistanceRow from_u = bfs_distances(g, u);
  DistanceRow to_v = bfs_distances(g, v);
  const int d = from_u.distances[v];
  if (d < 0) throw ModelError("count_marked_steps: vertices are disconnected");
  std::vector<std::vector<int>> layers(static_cast<std::size_t>(d) + 1);
  for (int w = 0; w < g.vertex_count(); ++w) {
    int a = from_u.distances[w];
    if (a >= 0 && to_v.distances[w] >= 0 && a + to_v.distances[w] == d) layers[a].push_back(w);
  }
  // best[w]: (min, max) marked steps over geodesic prefixes from u to w.
  const int unset = -1;
  std::vector<int> lo(g.vertex_count(), unset), hi(g.vertex_count(), unset), back(g.vertex_count(), -1);
  lo[u] = hi[u] = 0;
  for (int layer = 1; layer <= d; ++layer) {
    for (int y : layers[layer]) {
      for (int x : g.adjacency[y]) {
        if (from_u.distances[x] != layer - 1 || lo[x] == unset) continue;
        if (to_v.distances[x] != d - layer + 1) continue;
        int m = marked(x, y) ? 1 : 0;
        if (lo[y] == unset || lo[x] + m < lo[y]) {
          lo[y] = lo[x] + m;
          back[y] = x;
        }
        hi[y] = std::max(hi[y], hi[x] + m);
      }
    }
  }
  GeodesicStepCount out;
  out.distance = d;
  out.min_marked = lo[v];
  out.max_marked = hi[v];
  for (int w = v; w != -1; w = back[w]) out.witness.push_back(w);
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

FlipPath shortest_path(const FlipGraph& g, int u, int v) {
  DistanceRow to_v = bfs_distances(g, v);
  if (to_v.distances[u] < 0) throw ModelError("shortest_path: vertices are disconnected");
  FlipPath path;
  path.vertices.push_back(u);
  int cur = u;
  while (cur != v) {
    for (int w : g.adjacency[cur]) {
      if (to_v.distances[w] == to_v.distances[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.vertices.push_back(cur);
  }
  annotate(g, path);
  return path;
}

void annotate(const FlipGraph& g, FlipPath& path) {
  path.steps.clear();
  for (std::size_t k = 1; k < path.vertices.size(); ++k) {
    auto before = split_label(g.labels[path.vertices[k - 1]]);
    auto after = split_label(g.labels[path.vertices[k]]);
    std::set<std::string> b(before.begin(), before.end());
    std::set<std::string> a(after.begin(), after.end());
    std::string removed;
    std::string inserted;
    for (const auto& t : b) {
      if (!a.count(t)) removed += (removed.empty() ? "" : ",") + t;
    }
    for (const auto& t : a) {
      if (!b.count(t)) inserted += (inserted.empty() ? "" : ",") + t;
    }
    path.steps.emplace_back(removed, inserted);
  }
}

ConvexityAudit is_strongly_convex(const FlipGraph& g, const std::vector<int>& subset) {
  const int count = g.vertex_count();
  std::vector<int> members(subset);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<char> in_s(count, 0);
  for (int s : members) in_s.at(s) = 1;

  ConvexityAudit audit;
  constexpr int kNone = -1;
  std::vector<int> order;
  std::vector<int> dist(count);
  std::vector<int> outside_witness(count);  // least outside vertex on some geodesic, or kNone
  std::vector<char> reachable_inside(count);
  for (int u : members) {
    std::fill(dist.begin(), dist.end(), -1);
    order.assign(1, u);
    dist[u] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      int x = order[head];
      for (int w : g.adjacency[x]) {
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          order.push_back(w);
        }
      }
    }
    for (int x : order) {
      int witness = in_s[x] ? kNone : x;
      bool inside = x == u;
      for (int y : g.adjacency[x]) {
        if (dist[y] != dist[x] - 1) continue;
        if (outside_witness[y] != kNone && (witness == kNone || outside_witness[y] < witness)) {
          witness = outside_witness[y];
        }
        inside = inside || reachable_inside[y];
      }
      outside_witness[x] = witness;
      reachable_inside[x] = in_s[x] && inside;
    }
    for (int v : members) {
      if (v == u) continue;
      if (dist[v] < 0) throw ModelError("convexity audit: graph is disconnected");
      if (outside_witness[v] != kNone && !audit.strong_violation) {
        audit.strong = false;
        audit.strong_violation = std::array<int, 3>{u, v, outside_witness[v]};
      }
      if (!reachable_inside[v] && !audit.weak_violation) {
        audit.weak = false;
        audit.weak_violation = std::make_pair(u, v);
      }
    }
  }
  return audit;
}

std::vector<int> fixed_arc_subgraph(const FlipGraph& g, const std::vector<std::string>& mu) {
  std::vector<std::string> wanted = split_label(join_label(mu));
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto tokens = split_label(g.labels[v]);
    bool all = std::all_of(wanted.begin(), wanted.end(), [&](const std::string& t) {
      return std::find(tokens.begin(), tokens.end(), t) != tokens.end();
    });
    if (all) out.push_back(v);
  }
  return out;
}

Subgraph induced_subgraph(const FlipGraph& g, const std::vector<int>& vertices) {
  Subgraph sub;
  std::vector<int> keep(vertices);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (int v : keep) {
    local.at(v) = static_cast<int>(sub.parent.size());
    sub.parent.push_back(v);
  }
  for (int v : keep) {
    sub.graph.labels.push_back(g.labels[v]);
    sub.graph.strata.push_back(g.strata[v]);
    std::vector<int> row;
    for (int w : g.adjacency[v]) {
      if (local[w] >= 0) row.push_back(local[w]);
    }
    std::sort(row.begin(), row.end());
    sub.graph.adjacency.push_back(std::move(row));
  }
  for (int v = 0; v < sub.graph.vertex_count(); ++v) sub.graph.index.emplace(sub.graph.labels[v], v);
  return sub;
}

Subgraph induced_subgraph(const FlipGraph& g, const std::function<bool(const std::string&)>& keep) {
  std::vector<int> chosen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (keep(g.labels[v])) chosen.push_back(v);
  }
  return induced_subgraph(g, chosen);
}

}  // namespace flipforge
