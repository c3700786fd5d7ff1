#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace flipforge {

/// Upper bound on the size of any arc universe handled by the library.
/// T_n needs n*n arcs, so this covers the punctured disk up to n = 11.
inline constexpr int kMaxArcs = 128;

/// Fixed-width set of arc indices into an ArcSystem universe.
class ArcSet {
 public:
  constexpr ArcSet() = default;

  static constexpr ArcSet single(int i) {
    ArcSet s;
    s.set(i);
    return s;
  }

  constexpr bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  constexpr void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  constexpr ArcSet with(int i) const {
    ArcSet s = *this;
    s.set(i);
    return s;
  }
  constexpr ArcSet without(int i) const {
    ArcSet s = *this;
    s.reset(i);
    return s;
  }

  constexpr int count() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Lowest index present, or -1.
  constexpr int first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  constexpr bool subset_of(const ArcSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  constexpr ArcSet operator&(const ArcSet& o) const {
    ArcSet r;
    r.words_ = {words_[0] & o.words_[0], words_[1] & o.words_[1]};
    return r;
  }
  constexpr ArcSet operator|(const ArcSet& o) const {
    ArcSet r;
    r.words_ = {words_[0] | o.words_[0], words_[1] | o.words_[1]};
    return r;
  }
  constexpr ArcSet operator^(const ArcSet& o) const {
    ArcSet r;
    r.words_ = {words_[0] ^ o.words_[0], words_[1] ^ o.words_[1]};
    return r;
  }
  /// Set difference.
  constexpr ArcSet operator-(const ArcSet& o) const {
    ArcSet r;
    r.words_ = {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
    return r;
  }
  constexpr ArcSet& operator&=(const ArcSet& o) { return *this = *this & o; }
  constexpr ArcSet& operator|=(const ArcSet& o) { return *this = *this | o; }

  /// Calls f(i) for every member, ascending.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  constexpr bool operator==(const ArcSet&) const = default;
  constexpr auto operator<=>(const ArcSet&) const = default;

  std::size_t hash() const {
    std::uint64_t h = words_[0] * 0x9E3779B97F4A7C15ULL;
    h ^= words_[1] + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, 2> words_{};
};

}  // namespace flipforge

template <>
struct std::hash<flipforge::ArcSet> {
  std::size_t operator()(const flipforge::ArcSet& s) const noexcept { return s.hash(); }
};
