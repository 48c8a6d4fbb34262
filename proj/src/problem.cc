#include "commbench/problem.h"

#include <string>

namespace commbench {

Rect intersect(const Rect& a, const Rect& b) { return {a.rows & b.rows, a.cols & b.cols}; }

bool lex_less(const Rect& a, const Rect& b) {
  if (a.rows != b.rows) return lex_less(a.rows, b.rows);
  return lex_less(a.cols, b.cols);
}

bool canonical_less(const ColoredRect& a, const ColoredRect& b) {
  if (a.color != b.color) return a.color < b.color;
  return lex_less(a.rect, b.rect);
}

Problem::Problem(std::string name, int rows, int cols, int colors,
                 const std::vector<AcceptTriple>& accept)
    : name_(std::move(name)), rows_(rows), cols_(cols), colors_(colors) {
  if (rows < 1 || cols < 1 || colors < 1)
    throw Error(ErrorCode::kInvalidArgument, "problem dimensions must be positive");
  if (rows > kMaxSide || cols > kMaxSide)
    throw Error(ErrorCode::kSizeCap, "rows and cols are limited to " + std::to_string(kMaxSide));
  if (colors > kMaxColors)
    throw Error(ErrorCode::kSizeCap, "colors are limited to " + std::to_string(kMaxColors));
  if (rows * cols > kMaxCells)
    throw Error(ErrorCode::kSizeCap, "cells are limited to " + std::to_string(kMaxCells));

  accept_cols_.assign(static_cast<std::size_t>(colors) * rows, 0);
  cell_colors_.assign(static_cast<std::size_t>(rows) * cols, 0);
  for (const auto& [x, y, z] : accept) {
    if (x < 0 || x >= rows || y < 0 || y >= cols)
      throw Error(ErrorCode::kInvalidArgument,
                  "cell (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
    if (z < 0 || z >= colors) throw Error(ErrorCode::kInvalidColor, std::to_string(z));
    accept_cols_[z * rows + x] |= bit(y);
    cell_colors_[x * cols + y] |= bit(z);
  }
  total_ = true;
  function_ = true;
  for (ColorMask c : cell_colors_) {
    if (c == 0) total_ = false;
    if (popcount(c) != 1) function_ = false;
  }
}

CellSet Problem::rect_cells(const Rect& r) const {
  CellSet out;
  for_each_bit(r.rows, [&](int x) { for_each_bit(r.cols, [&](int y) { out.insert(cell(x, y)); }); });
  return out;
}

std::optional<int> Problem::first_uncolorable(const CellSet& cells) const {
  std::optional<int> found;
  cells.for_each([&](int i) {
    if (!found && cell_colors_[i] == 0) found = i;
  });
  return found;
}

bool Problem::is_monochromatic(const Rect& r, int z) const {
  if (z < 0 || z >= colors_) return false;
  bool ok = true;
  for_each_bit(r.rows, [&](int x) { ok = ok && (accept_cols(z, x) & r.cols) == r.cols; });
  return ok;
}

int Problem::function_value(int x, int y) const {
  const ColorMask c = cell_colors(x, y);
  if (popcount(c) != 1)
    throw Error(ErrorCode::kInvalidArgument, "cell does not have exactly one valid color");
  return lowest_bit(c);
}

std::vector<AcceptTriple> Problem::accept_list() const {
  std::vector<AcceptTriple> out;
  for (int x = 0; x < rows_; ++x)
    for (int y = 0; y < cols_; ++y)
      for_each_bit(cell_colors(x, y), [&](int z) { out.push_back({x, y, z}); });
  return out;
}

bool Problem::same_relation(const Problem& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && colors_ == o.colors_ &&
         cell_colors_ == o.cell_colors_;
}

Problem make_function_problem(const std::vector<std::vector<int>>& grid, int colors,
                              std::string name) {
  if (grid.empty() || grid.front().empty())
    throw Error(ErrorCode::kInvalidArgument, "function table must be nonempty");
  const int rows = static_cast<int>(grid.size());
  const int cols = static_cast<int>(grid.front().size());
  std::vector<AcceptTriple> accept;
  accept.reserve(static_cast<std::size_t>(rows) * cols);
  for (int x = 0; x < rows; ++x) {
    if (static_cast<int>(grid[x].size()) != cols)
      throw Error(ErrorCode::kInvalidArgument, "function table is ragged");
    for (int y = 0; y < cols; ++y) {
      const int z = grid[x][y];
      if (z < 0 || z >= colors)
        throw Error(ErrorCode::kInvalidColor, "entry (" + std::to_string(x) + "," +
                                                  std::to_string(y) + ") = " + std::to_string(z));
      accept.push_back({x, y, z});
    }
  }
  return Problem(std::move(name), rows, cols, colors, accept);
}

Problem make_relation_problem(int rows, int cols, int colors,
                              const std::vector<AcceptTriple>& accept, std::string name) {
  return Problem(std::move(name), rows, cols, colors, accept);
}

ColorMask valid_colors(const Problem& p, const Rect& r) {
  if (r.empty()) throw Error(ErrorCode::kEmptyRect, "valid_colors of an empty rectangle");
  ColorMask acc = low_mask(p.colors());
  for_each_bit(r.rows, [&](int x) {
    for_each_bit(r.cols, [&](int y) { acc &= p.cell_colors(x, y); });
  });
  return acc;
}

Problem product(const Problem& s, const Problem& t, int cell_cap) {
  const long rows = static_cast<long>(s.rows()) * t.rows();
  const long cols = static_cast<long>(s.cols()) * t.cols();
  const long colors = static_cast<long>(s.colors()) * t.colors();
  if (rows > kMaxSide || cols > kMaxSide || colors > kMaxColors || rows * cols > cell_cap ||
      rows * cols > kMaxCells)
    throw Error(ErrorCode::kSizeCap, "product " + s.name() + "x" + t.name() + " is " +
                                         std::to_string(rows) + "x" + std::to_string(cols) +
                                         " with " + std::to_string(colors) + " colors");

  std::vector<AcceptTriple> accept;
  for (int a = 0; a < s.rows(); ++a)
    for (int b = 0; b < s.cols(); ++b)
      for (int p = 0; p < t.rows(); ++p)
        for (int q = 0; q < t.cols(); ++q)
          for_each_bit(s.cell_colors(a, b), [&](int o) {
            for_each_bit(t.cell_colors(p, q), [&](int z) {
              accept.push_back({a * t.rows() + p, b * t.cols() + q, o * t.colors() + z});
            });
          });
  Problem out(s.name() + "x" + t.name(), static_cast<int>(rows), static_cast<int>(cols),
              static_cast<int>(colors), accept);
  out.product_ = ProductInfo{std::make_shared<const Problem>(s), std::make_shared<const Problem>(t)};
  return out;
}

namespace {

const ProductInfo& require_product(const Problem& prod) {
  const ProductInfo* info = prod.product_info();
  if (info == nullptr) throw Error(ErrorCode::kNotAProduct, prod.name());
  return *info;
}

}  // namespace

ProductCoords split_row(const Problem& prod, int row) {
  const int nt = require_product(prod).t->rows();
  return {row / nt, row % nt};
}

ProductCoords split_col(const Problem& prod, int col) {
  const int nt = require_product(prod).t->cols();
  return {col / nt, col % nt};
}

Rect project_s(const Problem& prod, const Rect& r) {
  const ProductInfo& info = require_product(prod);
  const int nt_rows = info.t->rows();
  const int nt_cols = info.t->cols();
  Rect out;
  for_each_bit(r.rows, [&](int row) { out.rows |= bit(row / nt_rows); });
  for_each_bit(r.cols, [&](int col) { out.cols |= bit(col / nt_cols); });
  return out;
}

Rect project_t(const Problem& prod, const Rect& r) {
  const ProductInfo& info = require_product(prod);
  const int nt_rows = info.t->rows();
  const int nt_cols = info.t->cols();
  Rect out;
  for_each_bit(r.rows, [&](int row) { out.rows |= bit(row % nt_rows); });
  for_each_bit(r.cols, [&](int col) { out.cols |= bit(col % nt_cols); });
  return out;
}

}  // namespace commbench
