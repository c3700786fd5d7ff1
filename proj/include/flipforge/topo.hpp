#pragma once

// Combinatorial arcs and triangulations of the disk and of the once-punctured
// disk with n marked boundary vertices labelled 1..n counterclockwise.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flipforge/arc_system.hpp"

namespace flipforge {

/// Isotopy class of an arc in the once-punctured disk.
///
/// Radial(v) joins the puncture to vertex v. Cut(i, j) joins i to j and has
/// the counterclockwise vertex interval {i, i+1, ..., j} on its puncture-free
/// side; Cut(v, v) is the loop at v around the puncture and Cut(i, i+1) is a
/// boundary edge.
struct TopoArc {
  enum class Kind : std::uint8_t { Radial, Cut };

  Kind kind = Kind::Radial;
  int i = 1;
  int j = 1;

  static constexpr TopoArc radial(int v) { return {Kind::Radial, v, v}; }
  static constexpr TopoArc cut(int from, int to) { return {Kind::Cut, from, to}; }
  static constexpr TopoArc loop(int v) { return {Kind::Cut, v, v}; }

  constexpr bool is_radial() const { return kind == Kind::Radial; }
  constexpr bool is_loop() const { return kind == Kind::Cut && i == j; }

  constexpr bool operator==(const TopoArc&) const = default;
  constexpr auto operator<=>(const TopoArc&) const = default;
};

enum class ArcClass { Radial, Loop, Chord, Boundary };

ArcClass classify(const TopoArc& a, int n);

/// "R v" or "C i j".
std::string to_token(const TopoArc& a);
TopoArc parse_topo_token(std::string_view token);

/// All interior arc classes of the punctured disk with n vertices, in
/// canonical order (radials, then cuts by (i, j)). Has n*n members.
std::vector<TopoArc> arc_universe(int n);

/// True iff the two classes admit representatives with disjoint interiors.
bool compatible(const TopoArc& a, const TopoArc& b, int n);

/// Sorted, duplicate-free arc list over the punctured disk with n vertices.
struct TopoTriangulation {
  int n = 0;
  std::vector<TopoArc> arcs;

  /// Sorts and deduplicates; performs no validity check.
  static TopoTriangulation from(int n, std::vector<TopoArc> arcs);

  bool contains(const TopoArc& a) const;
  std::string label() const;

  bool operator==(const TopoTriangulation&) const = default;
};

bool is_triangulation(const std::vector<TopoArc>& arcs, int n);

struct TopoFlip {
  TopoTriangulation result;
  TopoArc inserted;
};

/// Replaces `e` by the unique other completion of `t \ {e}`; nullopt when
/// the only completion is `e` (the radial inside a loop).
std::optional<TopoFlip> flip(const TopoTriangulation& t, const TopoArc& e);

/// The all-radial triangulation.
TopoTriangulation fan(int n);

/// Zigzag triangulation with the loop at vertex 1 and the snake of cuts
/// Cut(2,n), Cut(3,n), Cut(3,n-1), Cut(4,n-1), ...
TopoTriangulation zigzag_minus(int n);

/// Element of the dihedral group of order 2n: v -> rotation + (reflect ? -v : v),
/// computed on 0-based labels.
struct Dihedral {
  int rotation = 0;
  bool reflect = false;
};

int dihedral_vertex(const Dihedral& g, int v, int n);
TopoArc dihedral_action(const Dihedral& g, const TopoArc& a, int n);
TopoTriangulation dihedral_action(const Dihedral& g, const TopoTriangulation& t);
/// All 2n elements, rotations first then reflections.
std::vector<Dihedral> dihedral_group(int n);

/// The reflection fixing vertex 1, i.e. v -> n - v + 2.
Dihedral reflection_fixing_first(int n);

struct ZigzagPair {
  TopoTriangulation minus;
  TopoTriangulation plus;
  Dihedral plus_from_minus;
  int distance = 0;
};

/// A_minus plus its dihedral image at maximal flip distance (first maximizer in
/// dihedral_group order). Builds T_n internally.
ZigzagPair zigzag_pair(int n);

/// Merges vertex n+1 into vertex 1 of a triangulation of the (n+1)-vertex
/// punctured disk, dropping arcs that become boundary and merging duplicates.
TopoTriangulation delete_vertex(const TopoTriangulation& t);

struct ProjectedPath {
  std::vector<TopoTriangulation> path;
  int repeats = 0;  // number of steps that collapsed onto the previous element
};

/// Applies delete_vertex along a flip path and drops consecutive duplicates.
ProjectedPath project_path_delete(const std::vector<TopoTriangulation>& path);

// ---------------------------------------------------------------------------
// Unpunctured disk (associahedron model).

/// Unordered non-adjacent pair {a, b}, stored with a < b.
struct Chord {
  int a = 1;
  int b = 3;

  static Chord of(int x, int y) { return x < y ? Chord{x, y} : Chord{y, x}; }
  constexpr bool operator==(const Chord&) const = default;
  constexpr auto operator<=>(const Chord&) const = default;
};

/// "D a b".
std::string to_token(const Chord& c);
Chord parse_chord_token(std::string_view token);

bool chord_compatible(const Chord& x, const Chord& y);
std::vector<Chord> disk_universe(int n);

struct DiskTriangulation {
  int n = 0;
  std::vector<Chord> chords;

  static DiskTriangulation from(int n, std::vector<Chord> chords);
  std::string label() const;
  bool operator==(const DiskTriangulation&) const = default;
};

/// Contracts the puncture onto vertex a along Radial(a).
DiskTriangulation contract_radial(const TopoTriangulation& t, const TopoArc& alpha);

// ---------------------------------------------------------------------------
// Arc systems.

/// T_n: arcs of the punctured disk with its compatibility relation.
ArcSystem punctured_disk_system(int n);
/// A_n: chords of the disk (n >= 3).
ArcSystem disk_system(int n);

ArcSet encode(const ArcSystem& sys, const TopoTriangulation& t);
ArcSet encode(const ArcSystem& sys, const DiskTriangulation& t);
TopoTriangulation decode_topo(const ArcSystem& sys, const ArcSet& s, int n);
DiskTriangulation decode_disk(const ArcSystem& sys, const ArcSet& s, int n);

}  // namespace flipforge
