#pragma once

#include <cstdint>
#include <string>

#include "commbench/measure.h"
#include "commbench/options.h"
#include "commbench/problem.h"
#include "commbench/rect_enum.h"

namespace commbench {

struct CoverResult {
  int value = 0;
  ColoredCover witness;
  std::uint64_t explored = 0;  // search nodes visited
};

struct CheckResult {
  bool ok = true;
  std::string reason;  // first failure when !ok

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

// Exact minimum rectangle cover by branch and bound over the maximal
// monochromatic rectangles. Immutable after construction, so one solver can
// serve concurrent queries.
class CoverSolver {
 public:
  explicit CoverSolver(Problem p, const Options& options = {});
  CoverSolver(Problem p, MonoRectIndex index);

  // Throws kEmptyCellSet / kUncoverable.
  CoverResult solve(const CellSet& cells) const;

  const Problem& problem() const { return problem_; }
  const MonoRectIndex& index() const { return index_; }

 private:
  Problem problem_;
  MonoRectIndex index_;
};

CoverResult cover_number(const Problem& p, const CellSet& cells, const Options& options = {});

CheckResult verify_cover(const Problem& p, const CellSet& cells, const ColoredCover& cover);

// Sigma -> Cov(Sigma) over the ground set X*Y (cell index x*ny + y), with
// Cov(empty) = 0. Requires a total problem with at most 64 cells.
MeasureOracle cover_measure(const Problem& p, const Options& options = {});

}  // namespace commbench
