#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace commbench {

// Row, column, color and small ground-set subsets are packed into one word.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return m ? std::countr_zero(m) : -1; }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask low_mask(int n) { return n >= kMaskBits ? ~Mask{0} : bit(n) - 1; }
inline bool has_bit(Mask m, int i) { return (m >> i) & 1U; }

std::vector<int> mask_indices(Mask m);
Mask mask_from_indices(const std::vector<int>& indices);

// Lexicographic order on the sorted index lists of two sets, e.g.
// {0} < {0,1} < {1}.
bool lex_less(Mask a, Mask b);

template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// Fixed-capacity bitset over the cells of X*Y (row-major, index x*ny + y).
class CellSet {
 public:
  static constexpr int kCapacity = 256;

  CellSet() = default;
  static CellSet from_mask(Mask m) {
    CellSet s;
    s.words_[0] = m;
    return s;
  }
  static CellSet first_n(int n);

  void insert(int i) { words_[i >> 6] |= Mask{1} << (i & 63); }
  void erase(int i) { words_[i >> 6] &= ~(Mask{1} << (i & 63)); }
  bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  int size() const {
    int n = 0;
    for (Mask w : words_) n += std::popcount(w);
    return n;
  }
  bool empty() const { return (words_[0] | words_[1] | words_[2] | words_[3]) == 0; }
  int first() const;

  // Low 64 cells as a mask; only meaningful when every index is < 64.
  Mask low_word() const { return words_[0]; }
  bool fits_in_mask() const { return (words_[1] | words_[2] | words_[3]) == 0; }

  CellSet& operator|=(const CellSet& o) {
    for (int i = 0; i < 4; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  CellSet& operator&=(const CellSet& o) {
    for (int i = 0; i < 4; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  CellSet& operator-=(const CellSet& o) {
    for (int i = 0; i < 4; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend CellSet operator|(CellSet a, const CellSet& b) { return a |= b; }
  friend CellSet operator&(CellSet a, const CellSet& b) { return a &= b; }
  friend CellSet operator-(CellSet a, const CellSet& b) { return a -= b; }

  bool intersects(const CellSet& o) const {
    for (int i = 0; i < 4; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const CellSet& o) const {
    for (int i = 0; i < 4; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_size(const CellSet& o) const {
    int n = 0;
    for (int i = 0; i < 4; ++i) n += std::popcount(words_[i] & o.words_[i]);
    return n;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < 4; ++w) {
      Mask m = words_[w];
      while (m) {
        f(w * 64 + std::countr_zero(m));
        m &= m - 1;
      }
    }
  }
  std::vector<int> indices() const;

  friend bool operator==(const CellSet&, const CellSet&) = default;
  // Lexicographic on sorted index lists, matching lex_less for masks.
  friend bool lex_less(const CellSet& a, const CellSet& b);

  std::size_t hash() const;

 private:
  std::array<Mask, 4> words_{};
};

struct CellSetHash {
  std::size_t operator()(const CellSet& s) const { return s.hash(); }
};

}  // namespace commbench
