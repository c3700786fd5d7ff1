#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flipforge/arc_set.hpp"

namespace flipforge {

/// A single flip: `result` is obtained from the source triangulation by
/// removing arc `removed` and inserting arc `inserted`.
struct Flip {
  ArcSet result;
  int removed = -1;
  int inserted = -1;
};

/// A finite arc universe together with its pairwise compatibility relation.
///
/// Every flip-graph in the library (punctured disk, disk, geometric polygons,
/// punctured polygons) is an ArcSystem: triangulations are maximal pairwise
/// compatible subsets and a flip replaces one arc by the unique other arc that
/// completes the remaining set. Arc indices follow the canonical token order,
/// so a triangulation label is just its tokens in index order.
class ArcSystem {
 public:
  ArcSystem() = default;

  /// `compat[a]` must contain `a` itself and be symmetric.
  ArcSystem(std::vector<std::string> tokens, std::vector<ArcSet> compat,
            int triangulation_size, ArcSet radials = {});

  int size() const { return static_cast<int>(tokens_.size()); }
  int triangulation_size() const { return triangulation_size_; }
  const std::string& token(int a) const { return tokens_.at(a); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  std::optional<int> find(std::string_view token) const;

  bool compatible(int a, int b) const { return compat_[a].test(b); }
  const ArcSet& compatible_with(int a) const { return compat_[a]; }
  ArcSet universe() const;

  /// Arcs incident to the puncture (empty for unpunctured systems).
  const ArcSet& radials() const { return radials_; }

  bool pairwise_compatible(const ArcSet& s) const;
  /// Arcs outside `s` compatible with every member of `s`.
  ArcSet completions(const ArcSet& s) const;
  bool is_triangulation(const ArcSet& s) const;

  /// The arc replacing `e` in `t`, or nullopt when `t \ {e}` completes only
  /// back to `t`. Throws InputError if `e` is not in `t` and ModelError if the
  /// completion is not unique.
  std::optional<int> flip_partner(const ArcSet& t, int e) const;
  std::vector<Flip> flips(const ArcSet& t) const;

  std::string label(const ArcSet& t) const;
  std::vector<std::string> label_tokens(const ArcSet& t) const;
  /// Parses "tok,tok,...". Unknown tokens raise InputError naming the closest
  /// valid token.
  ArcSet parse_label(std::string_view label) const;

  /// Greedy completion in index order; used to find a seed triangulation.
  ArcSet complete(ArcSet partial) const;

 private:
  std::vector<std::string> tokens_;
  std::vector<ArcSet> compat_;
  std::unordered_map<std::string, int> index_;
  int triangulation_size_ = 0;
  ArcSet radials_;
};

/// Splits a label on commas and trims surrounding blanks of each token.
std::vector<std::string> split_label(std::string_view label);

/// Joins tokens with commas.
std::string join_label(const std::vector<std::string>& tokens);

}  // namespace flipforge
