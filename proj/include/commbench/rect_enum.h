#pragma once

#include <span>
#include <vector>

#include "commbench/options.h"
#include "commbench/problem.h"

namespace commbench {

// All maximal z-monochromatic rectangles of a problem, sorted by
// canonical_less (color, rows, cols) and deduplicated.
class MonoRectIndex {
 public:
  MonoRectIndex() = default;
  MonoRectIndex(std::vector<ColoredRect> rects, std::vector<CellSet> cells, int colors);

  std::span<const ColoredRect> all() const { return rects_; }
  std::span<const ColoredRect> of_color(int z) const;
  // Cells covered by all()[i].
  const CellSet& cells(std::size_t i) const { return cells_[i]; }
  std::size_t size() const { return rects_.size(); }

 private:
  std::vector<ColoredRect> rects_;
  std::vector<CellSet> cells_;
  std::vector<std::size_t> color_begin_;
};

MonoRectIndex enumerate_maximal(const Problem& p, const Options& options = {});

struct Overlap {
  int count = 0;
  ColoredRect witness;
};

// Largest |rect ∩ cells| over the index; ties go to the first rect in
// canonical order.
Overlap max_overlap(const MonoRectIndex& index, const CellSet& cells);

}  // namespace commbench
