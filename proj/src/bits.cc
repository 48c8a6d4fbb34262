#include "commbench/bits.h"

#include "commbench/error.h"

namespace commbench {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

Mask mask_from_indices(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaskBits) throw Error(ErrorCode::kSizeCap, "index out of mask range");
    m |= bit(i);
  }
  return m;
}

bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const int i = std::countr_zero(diff);
  const Mask above = i == 63 ? 0 : ~low_mask(i + 1);
  if (has_bit(a, i)) return (b & above) != 0;
  return (a & above) == 0;
}

CellSet CellSet::first_n(int n) {
  CellSet s;
  for (int w = 0; w < 4 && n > 0; ++w, n -= 64) s.words_[w] = low_mask(n);
  return s;
}

int CellSet::first() const {
  for (int w = 0; w < 4; ++w)
    if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
  return -1;
}

std::vector<int> CellSet::indices() const {
  std::vector<int> out;
  for_each([&](int i) { out.push_back(i); });
  return out;
}

bool lex_less(const CellSet& a, const CellSet& b) {
  int w = 0;
  while (w < 4 && a.words_[w] == b.words_[w]) ++w;
  if (w == 4) return false;
  const Mask diff = a.words_[w] ^ b.words_[w];
  const int i = std::countr_zero(diff);
  const Mask above_in_word = i == 63 ? 0 : ~low_mask(i + 1);
  auto any_above = [&](const CellSet& s) {
    if (s.words_[w] & above_in_word) return true;
    for (int k = w + 1; k < 4; ++k)
      if (s.words_[k]) return true;
    return false;
  };
  if (has_bit(a.words_[w], i)) return any_above(b);
  return !any_above(a);
}

std::size_t CellSet::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Mask w : words_) h ^= std::hash<Mask>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace commbench
