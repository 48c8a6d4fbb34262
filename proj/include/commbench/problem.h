#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commbench/bits.h"
#include "commbench/error.h"

namespace commbench {

// Hard representation limits. Rows, columns and colors live in one Mask;
// cells live in a CellSet.
inline constexpr int kMaxSide = 64;
inline constexpr int kMaxColors = 64;
inline constexpr int kMaxCells = CellSet::kCapacity;

using ColorMask = Mask;

// A combinatorial rectangle rows x cols.
struct Rect {
  Mask rows = 0;
  Mask cols = 0;

  bool empty() const { return rows == 0 || cols == 0; }
  bool contains(const Rect& o) const {
    return (o.rows & ~rows) == 0 && (o.cols & ~cols) == 0;
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

Rect intersect(const Rect& a, const Rect& b);

// Rows first, then columns, both lexicographic on index lists.
bool lex_less(const Rect& a, const Rect& b);

struct ColoredRect {
  Rect rect;
  int color = 0;

  friend bool operator==(const ColoredRect&, const ColoredRect&) = default;
};

// Color, then rows, then columns.
bool canonical_less(const ColoredRect& a, const ColoredRect& b);

using ColoredCover = std::vector<ColoredRect>;

struct AcceptTriple {
  int x = 0;
  int y = 0;
  int z = 0;
};

class Problem;

// Factor metadata retained by product() so projections can be taken.
struct ProductInfo {
  std::shared_ptr<const Problem> s;
  std::shared_ptr<const Problem> t;
};

// A finite relation S subset of (X x Y) x Z. Immutable after construction.
class Problem {
 public:
  Problem(std::string name, int rows, int cols, int colors,
          const std::vector<AcceptTriple>& accept);

  const std::string& name() const { return name_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int colors() const { return colors_; }
  int cell_count() const { return rows_ * cols_; }

  int cell(int x, int y) const { return x * cols_ + y; }
  std::pair<int, int> cell_coords(int index) const { return {index / cols_, index % cols_}; }

  bool accepts(int x, int y, int z) const { return has_bit(accept_cols_[z * rows_ + x], y); }
  ColorMask cell_colors(int x, int y) const { return cell_colors_[cell(x, y)]; }
  ColorMask cell_colors(int index) const { return cell_colors_[index]; }
  // Columns y with (x, y, z) in S.
  Mask accept_cols(int z, int x) const { return accept_cols_[z * rows_ + x]; }

  bool total() const { return total_; }
  bool is_function() const { return function_; }

  Mask all_rows() const { return low_mask(rows_); }
  Mask all_cols() const { return low_mask(cols_); }
  Rect full_rect() const { return {all_rows(), all_cols()}; }
  CellSet all_cells() const { return CellSet::first_n(cell_count()); }
  CellSet rect_cells(const Rect& r) const;

  // Lowest-index cell of `cells` with no valid color.
  std::optional<int> first_uncolorable(const CellSet& cells) const;
  bool is_monochromatic(const Rect& r, int z) const;

  // For function problems, the single color of each cell.
  int function_value(int x, int y) const;
  std::vector<AcceptTriple> accept_list() const;

  const ProductInfo* product_info() const { return product_ ? &*product_ : nullptr; }

  // Same dimensions and the same accepted triples; name and product
  // metadata are not compared.
  bool same_relation(const Problem& o) const;

 private:
  friend Problem product(const Problem& s, const Problem& t, int cell_cap);

  std::string name_;
  int rows_;
  int cols_;
  int colors_;
  std::vector<Mask> accept_cols_;      // [z * rows + x]
  std::vector<ColorMask> cell_colors_;  // [x * cols + y]
  bool total_ = false;
  bool function_ = false;
  std::optional<ProductInfo> product_;
};

Problem make_function_problem(const std::vector<std::vector<int>>& grid, int colors,
                              std::string name = "function");
Problem make_relation_problem(int rows, int cols, int colors,
                              const std::vector<AcceptTriple>& accept,
                              std::string name = "relation");

// Colors z such that every cell of r accepts z.
ColorMask valid_colors(const Problem& p, const Rect& r);

// Direct-sum product: rows (a,p) -> a*nx_T + p, cols (b,q) -> b*ny_T + q,
// colors (o,z) -> o*nz_T + z.
Problem product(const Problem& s, const Problem& t, int cell_cap = kMaxCells);

Rect project_s(const Problem& prod, const Rect& r);
Rect project_t(const Problem& prod, const Rect& r);

// Index helpers for product coordinates.
struct ProductCoords {
  int s_index;
  int t_index;
};
ProductCoords split_row(const Problem& prod, int row);
ProductCoords split_col(const Problem& prod, int col);

}  // namespace commbench
