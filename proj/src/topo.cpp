#include "flipforge/topo.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "flipforge/errors.hpp"
#include "flipforge/flipgraph.hpp"

namespace flipforge {

namespace {

void require_ambient(int n) {
  if (n < 1) throw InputError("ambient size must be at least 1, got " + std::to_string(n));
}

void require_vertex(int v, int n) {
  if (v < 1 || v > n) {
    throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  }
}

int succ(int v, int n) { return v % n + 1; }

// Number of boundary edges on the ccw walk from i to j; a full turn when i == j.
int arc_length(int i, int j, int n) { return i == j ? n : ((j - i) % n + n) % n; }

bool in_interval(int v, int i, int j, int n) { return ((v - i) % n + n) % n <= arc_length(i, j, n); }

// Boundary arc of `inner` contained in that of `outer`.
bool nested(const TopoArc& inner, const TopoArc& outer, int n) {
  int offset = ((inner.i - outer.i) % n + n) % n;
  return offset + arc_length(inner.i, inner.j, n) <= arc_length(outer.i, outer.j, n);
}

bool is_endpoint(int v, const TopoArc& a) { return v == a.i || v == a.j; }

std::vector<int> parse_ints(std::string_view body, std::string_view token) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    while (pos < body.size() && body[pos] == ' ') ++pos;
    if (pos == body.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
    if (ec != std::errc{}) throw InputError("malformed arc token '" + std::string(token) + "'");
    pos = static_cast<std::size_t>(ptr - body.data());
    out.push_back(value);
  }
  return out;
}

void require_interior(const TopoArc& a, int n) {
  ArcClass c = classify(a, n);
  if (c == ArcClass::Boundary) throw InputError("'" + to_token(a) + "' is a boundary arc");
}

}  // namespace

ArcClass classify(const TopoArc& a, int n) {
  require_ambient(n);
  require_vertex(a.i, n);
  require_vertex(a.j, n);
  if (a.is_radial()) {
    if (a.i != a.j) throw InputError("radial arc with two distinct vertices");
    return ArcClass::Radial;
  }
  if (a.i == a.j) return n == 1 ? ArcClass::Boundary : ArcClass::Loop;
  if (a.j == succ(a.i, n)) return ArcClass::Boundary;
  return ArcClass::Chord;
}

std::string to_token(const TopoArc& a) {
  if (a.is_radial()) return "R " + std::to_string(a.i);
  return "C " + std::to_string(a.i) + " " + std::to_string(a.j);
}

TopoArc parse_topo_token(std::string_view token) {
  if (token.size() < 2 || token[1] != ' ') {
    throw InputError("malformed arc token '" + std::string(token) + "'");
  }
  auto nums = parse_ints(token.substr(2), token);
  if (token[0] == 'R' && nums.size() == 1) return TopoArc::radial(nums[0]);
  if (token[0] == 'C' && nums.size() == 2) return TopoArc::cut(nums[0], nums[1]);
  throw InputError("malformed arc token '" + std::string(token) + "'");
}

std::vector<TopoArc> arc_universe(int n) {
  require_ambient(n);
  std::vector<TopoArc> out;
  for (int v = 1; v <= n; ++v) out.push_back(TopoArc::radial(v));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      TopoArc c = TopoArc::cut(i, j);
      if (classify(c, n) != ArcClass::Boundary) out.push_back(c);
    }
  }
  return out;
}

bool compatible(const TopoArc& a, const TopoArc& b, int n) {
  require_interior(a, n);
  require_interior(b, n);
  if (a == b) return true;
  if (a.is_radial() && b.is_radial()) return true;
  if (b.is_radial()) return compatible(b, a, n);
  if (a.is_radial()) {
    // A radial survives only outside the puncture-free side of the cut.
    return is_endpoint(a.i, b) || !in_interval(a.i, b.i, b.j, n);
  }
  if (a.is_loop() && b.is_loop()) return false;
  if (b.is_loop()) return compatible(b, a, n);
  if (a.is_loop()) return is_endpoint(a.i, b) || !in_interval(a.i, b.i, b.j, n);

  if (nested(a, b, n) || nested(b, a, n)) return true;
  // Otherwise the puncture-free sides must meet only in shared endpoints.
  for (int step = 0, v = a.i; step <= arc_length(a.i, a.j, n); ++step, v = succ(v, n)) {
    if (in_interval(v, b.i, b.j, n) && !(is_endpoint(v, a) && is_endpoint(v, b))) return false;
  }
  return true;
}

TopoTriangulation TopoTriangulation::from(int n, std::vector<TopoArc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return {n, std::move(arcs)};
}

bool TopoTriangulation::contains(const TopoArc& a) const {
  return std::binary_search(arcs.begin(), arcs.end(), a);
}

std::string TopoTriangulation::label() const {
  std::vector<std::string> tokens;
  for (const auto& a : arcs) tokens.push_back(to_token(a));
  return join_label(tokens);
}

bool is_triangulation(const std::vector<TopoArc>& arcs, int n) {
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      if (!compatible(arcs[x], arcs[y], n)) return false;
    }
  }
  for (const auto& cand : arc_universe(n)) {
    if (std::find(arcs.begin(), arcs.end(), cand) != arcs.end()) continue;
    bool fits = std::all_of(arcs.begin(), arcs.end(),
                            [&](const TopoArc& a) { return compatible(a, cand, n); });
    if (fits) return false;
  }
  return true;
}

std::optional<TopoFlip> flip(const TopoTriangulation& t, const TopoArc& e) {
  if (!t.contains(e)) throw InputError("flip: '" + to_token(e) + "' is not in " + t.label());
  std::vector<TopoArc> rest;
  for (const auto& a : t.arcs) {
    if (a != e) rest.push_back(a);
  }
  std::optional<TopoArc> partner;
  for (const auto& cand : arc_universe(t.n)) {
    if (cand == e || t.contains(cand)) continue;
    bool fits = std::all_of(rest.begin(), rest.end(),
                            [&](const TopoArc& a) { return compatible(a, cand, t.n); });
    if (!fits) continue;
    if (partner) {
      throw ModelError("flip: '" + to_token(e) + "' of " + t.label() + " has several completions");
    }
    partner = cand;
  }
  if (!partner) return std::nullopt;
  rest.push_back(*partner);
  return TopoFlip{TopoTriangulation::from(t.n, std::move(rest)), *partner};
}

TopoTriangulation fan(int n) {
  require_ambient(n);
  std::vector<TopoArc> arcs;
  for (int v = 1; v <= n; ++v) arcs.push_back(TopoArc::radial(v));
  return TopoTriangulation::from(n, std::move(arcs));
}

TopoTriangulation zigzag_minus(int n) {
  require_ambient(n);
  std::vector<TopoArc> arcs{TopoArc::radial(1)};
  if (n >= 2) arcs.push_back(TopoArc::loop(1));
  if (n >= 3) arcs.push_back(TopoArc::cut(2, 1));
  int lo = 2;
  int hi = n;
  for (int k = 0; k < n - 3; ++k) {
    arcs.push_back(TopoArc::cut(lo, hi));
    if (k % 2 == 0) {
      ++lo;
    } else {
      --hi;
    }
  }
  return TopoTriangulation::from(n, std::move(arcs));
}

int dihedral_vertex(const Dihedral& g, int v, int n) {
  int x = v - 1;
  if (g.reflect) x = (n - x) % n;
  return (x + g.rotation) % n + 1;
}

TopoArc dihedral_action(const Dihedral& g, const TopoArc& a, int n) {
  if (a.is_radial()) return TopoArc::radial(dihedral_vertex(g, a.i, n));
  int i = dihedral_vertex(g, a.i, n);
  int j = dihedral_vertex(g, a.j, n);
  // Reflection reverses orientation, so the puncture-free interval runs j -> i.
  return g.reflect ? TopoArc::cut(j, i) : TopoArc::cut(i, j);
}

TopoTriangulation dihedral_action(const Dihedral& g, const TopoTriangulation& t) {
  std::vector<TopoArc> arcs;
  for (const auto& a : t.arcs) arcs.push_back(dihedral_action(g, a, t.n));
  return TopoTriangulation::from(t.n, std::move(arcs));
}

std::vector<Dihedral> dihedral_group(int n) {
  require_ambient(n);
  std::vector<Dihedral> out;
  for (bool reflect : {false, true}) {
    for (int r = 0; r < n; ++r) out.push_back({r, reflect});
  }
  return out;
}

Dihedral reflection_fixing_first(int /*n*/) { return {0, true}; }

ZigzagPair zigzag_pair(int n) {
  ArcSystem sys = punctured_disk_system(n);
  TopoTriangulation minus = zigzag_minus(n);
  auto closure = build_system_graph(sys, encode(sys, minus));
  DistanceRow row = bfs_distances(closure.graph, 0);

  ZigzagPair best{minus, minus, {}, -1};
  for (const Dihedral& g : dihedral_group(n)) {
    TopoTriangulation image = dihedral_action(g, minus);
    int d = row.distances.at(closure.ids.at(encode(sys, image)));
    if (d > best.distance) best = {minus, std::move(image), g, d};
  }
  return best;
}

TopoTriangulation delete_vertex(const TopoTriangulation& t) {
  const int big = t.n;
  if (big < 2) throw InputError("delete_vertex needs at least two vertices");
  const int n = big - 1;
  auto merge = [big](int v) { return v == big ? 1 : v; };

  std::vector<TopoArc> arcs;
  for (const auto& a : t.arcs) {
    if (a.is_radial()) {
      arcs.push_back(TopoArc::radial(merge(a.i)));
      continue;
    }
    // The ccw walk i -> j loses one edge iff it crosses the merged edge big -> 1.
    int len = arc_length(a.i, a.j, big);
    if (a.i == a.j) {
      len = n;
    } else if (a.j < a.i) {
      --len;
    }
    int start = merge(a.i);
    if (len == n) {
      if (n >= 2) arcs.push_back(TopoArc::loop(start));
    } else if (len >= 2) {
      arcs.push_back(TopoArc::cut(start, (start - 1 + len) % n + 1));
    }
  }
  return TopoTriangulation::from(n, std::move(arcs));
}

namespace {

bool one_flip_apart(const TopoTriangulation& x, const TopoTriangulation& y) {
  if (x.n != y.n || x.arcs.size() != y.arcs.size()) return false;
  std::vector<TopoArc> only_x;
  std::set_difference(x.arcs.begin(), x.arcs.end(), y.arcs.begin(), y.arcs.end(),
                      std::back_inserter(only_x));
  return only_x.size() == 1;
}

}  // namespace

ProjectedPath project_path_delete(const std::vector<TopoTriangulation>& path) {
  ProjectedPath out;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (k > 0 && !one_flip_apart(path[k - 1], path[k])) {
      throw InputError("project_path_delete: elements " + std::to_string(k - 1) + " and " +
                       std::to_string(k) + " are not related by a flip");
    }
    TopoTriangulation image = delete_vertex(path[k]);
    if (!out.path.empty() && out.path.back() == image) {
      ++out.repeats;
      continue;
    }
    if (!out.path.empty() && !one_flip_apart(out.path.back(), image)) {
      throw ModelError("project_path_delete: projected step " + std::to_string(k) +
                       " is neither a repeat nor a flip");
    }
    out.path.push_back(std::move(image));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_token(const Chord& c) {
  return "D " + std::to_string(c.a) + " " + std::to_string(c.b);
}

Chord parse_chord_token(std::string_view token) {
  if (token.size() < 2 || token[0] != 'D' || token[1] != ' ') {
    throw InputError("malformed chord token '" + std::string(token) + "'");
  }
  auto nums = parse_ints(token.substr(2), token);
  if (nums.size() != 2) throw InputError("malformed chord token '" + std::string(token) + "'");
  return Chord::of(nums[0], nums[1]);
}

bool chord_compatible(const Chord& x, const Chord& y) {
  auto strictly_between = [](int v, int lo, int hi) { return lo < v && v < hi; };
  bool interleave = (strictly_between(y.a, x.a, x.b) && !(y.b >= x.a && y.b <= x.b)) ||
                    (strictly_between(y.b, x.a, x.b) && !(y.a >= x.a && y.a <= x.b));
  return !interleave;
}

std::vector<Chord> disk_universe(int n) {
  if (n < 3) throw InputError("disk needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Chord> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 2; b <= n; ++b) {
      if (a == 1 && b == n) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

DiskTriangulation DiskTriangulation::from(int n, std::vector<Chord> chords) {
  std::sort(chords.begin(), chords.end());
  chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
  return {n, std::move(chords)};
}

std::string DiskTriangulation::label() const {
  std::vector<std::string> tokens;
  for (const auto& c : chords) tokens.push_back(to_token(c));
  return join_label(tokens);
}

DiskTriangulation contract_radial(const TopoTriangulation& t, const TopoArc& alpha) {
  if (!alpha.is_radial()) throw InputError("contract_radial: '" + to_token(alpha) + "' is not radial");
  if (!t.contains(alpha)) {
    throw InputError("contract_radial: '" + to_token(alpha) + "' is not in " + t.label());
  }
  const int n = t.n;
  const int a = alpha.i;
  auto interior = [n](int x, int y) {
    if (x == y) return false;
    int d = std::abs(x - y);
    return d != 1 && d != n - 1;
  };
  std::vector<Chord> chords;
  for (const auto& arc : t.arcs) {
    if (arc.is_radial()) {
      if (interior(arc.i, a)) chords.push_back(Chord::of(arc.i, a));
    } else if (arc.is_loop()) {
      if (arc.i != a) throw ModelError("contract_radial: loop not based at the contracted vertex");
    } else if (interior(arc.i, arc.j)) {
      chords.push_back(Chord::of(arc.i, arc.j));
    }
  }
  return DiskTriangulation::from(n, std::move(chords));
}

// ---------------------------------------------------------------------------

ArcSystem punctured_disk_system(int n) {
  std::vector<TopoArc> arcs = arc_universe(n);
  if (static_cast<int>(arcs.size()) > kMaxArcs) {
    throw CapExceeded("T_" + std::to_string(n) + " has " + std::to_string(arcs.size()) +
                      " arcs, above the supported " + std::to_string(kMaxArcs));
  }
  std::sort(arcs.begin(), arcs.end());
  std::vector<std::string> tokens;
  std::vector<ArcSet> compat(arcs.size());
  ArcSet radials;
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    tokens.push_back(to_token(arcs[x]));
    if (arcs[x].is_radial()) radials.set(static_cast<int>(x));
    for (std::size_t y = 0; y < arcs.size(); ++y) {
      if (compatible(arcs[x], arcs[y], n)) compat[x].set(static_cast<int>(y));
    }
  }
  return ArcSystem(std::move(tokens), std::move(compat), n, radials);
}

ArcSystem disk_system(int n) {
  std::vector<Chord> chords = disk_universe(n);
  if (static_cast<int>(chords.size()) > kMaxArcs) {
    throw CapExceeded("A_" + std::to_string(n) + " exceeds the supported arc universe");
  }
  std::vector<std::string> tokens;
  std::vector<ArcSet> compat(chords.size());
  for (std::size_t x = 0; x < chords.size(); ++x) {
    tokens.push_back(to_token(chords[x]));
    for (std::size_t y = 0; y < chords.size(); ++y) {
      if (chord_compatible(chords[x], chords[y])) compat[x].set(static_cast<int>(y));
    }
  }
  return ArcSystem(std::move(tokens), std::move(compat), n - 3);
}

namespace {

template <class Arc>
ArcSet encode_arcs(const ArcSystem& sys, const std::vector<Arc>& arcs) {
  ArcSet s;
  for (const auto& a : arcs) {
    auto idx = sys.find(to_token(a));
    if (!idx) throw InputError("arc '" + to_token(a) + "' is not in this universe");
    s.set(*idx);
  }
  return s;
}

}  // namespace

ArcSet encode(const ArcSystem& sys, const TopoTriangulation& t) { return encode_arcs(sys, t.arcs); }
ArcSet encode(const ArcSystem& sys, const DiskTriangulation& t) { return encode_arcs(sys, t.chords); }

TopoTriangulation decode_topo(const ArcSystem& sys, const ArcSet& s, int n) {
  std::vector<TopoArc> arcs;
  s.for_each([&](int a) { arcs.push_back(parse_topo_token(sys.token(a))); });
  return TopoTriangulation::from(n, std::move(arcs));
}

DiskTriangulation decode_disk(const ArcSystem& sys, const ArcSet& s, int n) {
  std::vector<Chord> chords;
  s.for_each([&](int a) { chords.push_back(parse_chord_token(sys.token(a))); });
  return DiskTriangulation::from(n, std::move(chords));
}

}  // namespace flipforge
