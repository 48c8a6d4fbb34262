#include "commbench/rect_enum.h"

#include <algorithm>
#include <string>

#include "commbench/parallel.h"

namespace commbench {

MonoRectIndex::MonoRectIndex(std::vector<ColoredRect> rects, std::vector<CellSet> cells,
                             int colors)
    : rects_(std::move(rects)), cells_(std::move(cells)) {
  color_begin_.assign(static_cast<std::size_t>(colors) + 1, rects_.size());
  for (std::size_t i = rects_.size(); i-- > 0;) color_begin_[rects_[i].color] = i;
  for (int z = colors - 1; z >= 0; --z)
    color_begin_[z] = std::min(color_begin_[z], color_begin_[z + 1]);
}

std::span<const ColoredRect> MonoRectIndex::of_color(int z) const {
  if (z < 0 || z + 1 >= static_cast<int>(color_begin_.size())) return {};
  return std::span<const ColoredRect>(rects_).subspan(color_begin_[z],
                                                      color_begin_[z + 1] - color_begin_[z]);
}

namespace {

// Closed pairs (rowclosure(cols(A)), cols(A)) for row subsets A in
// [begin, end); the pair is a maximal all-ones submatrix of M_z.
void closures_for_color(const Problem& p, int z, Mask begin, Mask end,
                        std::vector<ColoredRect>& out) {
  const int nx = p.rows();
  for (Mask a = begin; a < end; ++a) {
    Mask cols = p.all_cols();
    for_each_bit(a, [&](int x) { cols &= p.accept_cols(z, x); });
    if (cols == 0) continue;
    Mask rows = 0;
    for (int x = 0; x < nx; ++x)
      if ((p.accept_cols(z, x) & cols) == cols) rows |= bit(x);
    // Each closed pair is produced by many A; keep it only for A equal to
    // its closure so shards do not emit duplicates.
    if (rows == a) out.push_back({{rows, cols}, z});
  }
}

}  // namespace

MonoRectIndex enumerate_maximal(const Problem& p, const Options& options) {
  if (p.rows() > options.enum_row_cap)
    throw Error(ErrorCode::kSizeCap, "rectangle enumeration over " + std::to_string(p.rows()) +
                                         " rows exceeds cap " +
                                         std::to_string(options.enum_row_cap));
  const Mask subsets = bit(p.rows());
  std::vector<ColoredRect> rects;
  for (int z = 0; z < p.colors(); ++z) {
    const int jobs = std::max(1, options.jobs);
    std::vector<std::vector<ColoredRect>> shards(static_cast<std::size_t>(jobs));
    parallel_chunks(subsets - 1, jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
      closures_for_color(p, z, begin + 1, end + 1, shards[chunk]);
    });
    for (auto& shard : shards) rects.insert(rects.end(), shard.begin(), shard.end());
  }
  std::sort(rects.begin(), rects.end(), canonical_less);
  rects.erase(std::unique(rects.begin(), rects.end()), rects.end());

  std::vector<CellSet> cells;
  cells.reserve(rects.size());
  for (const auto& r : rects) cells.push_back(p.rect_cells(r.rect));
  return MonoRectIndex(std::move(rects), std::move(cells), p.colors());
}

Overlap max_overlap(const MonoRectIndex& index, const CellSet& cells) {
  if (cells.empty()) throw Error(ErrorCode::kEmptyCellSet, "max_overlap of an empty cell set");
  Overlap best;
  bool have = false;
  for (std::size_t i = 0; i < index.size(); ++i) {
    const int count = index.cells(i).intersection_size(cells);
    if (!have || count > best.count) {
      best = {count, index.all()[i]};
      have = true;
    }
  }
  return best;
}

}  // namespace commbench
