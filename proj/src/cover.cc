#include "commbench/cover.h"

#include <algorithm>
#include <climits>
#include <numeric>
#include <vector>

namespace commbench {

namespace {

std::string cell_name(const Problem& p, int cell) {
  const auto [x, y] = p.cell_coords(cell);
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// Set-cover instance: universe = queried cells, candidate sets = indexed
// rectangles restricted to the universe with dominated sets removed.
class CoverSearch {
 public:
  CoverSearch(const MonoRectIndex& index, const CellSet& universe) : universe_(universe) {
    std::vector<std::pair<CellSet, int>> candidates;
    for (std::size_t i = 0; i < index.size(); ++i) {
      CellSet s = index.cells(i) & universe;
      if (!s.empty()) candidates.emplace_back(s, static_cast<int>(i));
    }
    // Drop a set when another contains it; among equal sets keep the first.
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
        if (i == j || !candidates[i].first.is_subset_of(candidates[j].first)) continue;
        dominated = !(candidates[i].first == candidates[j].first) || j < i;
      }
      if (!dominated) {
        sets_.push_back(candidates[i].first);
        rect_of_.push_back(candidates[i].second);
      }
    }

    cells_ = universe.indices();
    sets_of_cell_.assign(CellSet::kCapacity, {});
    neighborhood_.assign(CellSet::kCapacity, CellSet{});
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      sets_[s].for_each([&](int c) {
        sets_of_cell_[c].push_back(static_cast<int>(s));
        neighborhood_[c] |= sets_[s];
      });
    }
    // Cells in order of increasing degree drive both branching and the bound.
    std::stable_sort(cells_.begin(), cells_.end(), [&](int a, int b) {
      return sets_of_cell_[a].size() < sets_of_cell_[b].size();
    });
  }

  std::vector<int> run() {
    best_ = greedy();
    best_size_ = static_cast<int>(best_.size());
    std::vector<int> chosen;
    dfs(universe_, chosen);
    return best_;
  }

  int rect_of(int set) const { return rect_of_[set]; }
  std::uint64_t explored() const { return explored_; }

 private:
  std::vector<int> greedy() const {
    std::vector<int> picks;
    CellSet uncovered = universe_;
    while (!uncovered.empty()) {
      int best = -1;
      int gain = 0;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        const int g = sets_[s].intersection_size(uncovered);
        if (g > gain) {
          gain = g;
          best = static_cast<int>(s);
        }
      }
      picks.push_back(best);
      uncovered -= sets_[best];
    }
    return picks;
  }

  // Number of uncovered cells no two of which share a candidate set.
  int lower_bound(const CellSet& uncovered) const {
    CellSet blocked;
    int count = 0;
    for (int c : cells_) {
      if (!uncovered.contains(c) || blocked.contains(c)) continue;
      ++count;
      blocked |= neighborhood_[c];
    }
    return count;
  }

  void dfs(const CellSet& uncovered, std::vector<int>& chosen) {
    ++explored_;
    if (uncovered.empty()) {
      if (static_cast<int>(chosen.size()) < best_size_) {
        best_ = chosen;
        best_size_ = static_cast<int>(chosen.size());
      }
      return;
    }
    if (static_cast<int>(chosen.size()) + lower_bound(uncovered) >= best_size_) return;

    int pivot = -1;
    for (int c : cells_) {
      if (uncovered.contains(c)) {
        pivot = c;
        break;
      }
    }
    std::vector<int> options = sets_of_cell_[pivot];
    std::vector<int> gain(options.size());
    for (std::size_t i = 0; i < options.size(); ++i)
      gain[i] = sets_[options[i]].intersection_size(uncovered);
    std::vector<std::size_t> order(options.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return gain[a] > gain[b]; });
    for (std::size_t i : order) {
      chosen.push_back(options[i]);
      dfs(uncovered - sets_[options[i]], chosen);
      chosen.pop_back();
      if (static_cast<int>(chosen.size()) + 1 >= best_size_) return;
    }
  }

  CellSet universe_;
  std::vector<CellSet> sets_;
  std::vector<int> rect_of_;
  std::vector<int> cells_;
  std::vector<std::vector<int>> sets_of_cell_;
  std::vector<CellSet> neighborhood_;
  std::vector<int> best_;
  int best_size_ = INT_MAX;
  std::uint64_t explored_ = 0;
};

}  // namespace

CoverSolver::CoverSolver(Problem p, const Options& options)
    : problem_(std::move(p)), index_(enumerate_maximal(problem_, options)) {}

CoverSolver::CoverSolver(Problem p, MonoRectIndex index)
    : problem_(std::move(p)), index_(std::move(index)) {}

CoverResult CoverSolver::solve(const CellSet& cells) const {
  if (cells.empty()) throw Error(ErrorCode::kEmptyCellSet, "cover of an empty cell set");
  if (!cells.is_subset_of(problem_.all_cells()))
    throw Error(ErrorCode::kInvalidArgument, "cell set exceeds the problem domain");
  if (auto bad = problem_.first_uncolorable(cells))
    throw Error(ErrorCode::kUncoverable, "cell " + cell_name(problem_, *bad) + " has no valid color");

  CoverSearch search(index_, cells);
  const std::vector<int> picks = search.run();
  CoverResult result;
  result.value = static_cast<int>(picks.size());
  result.explored = search.explored();
  for (int s : picks) result.witness.push_back(index_.all()[search.rect_of(s)]);
  std::sort(result.witness.begin(), result.witness.end(), canonical_less);
  return result;
}

CoverResult cover_number(const Problem& p, const CellSet& cells, const Options& options) {
  return CoverSolver(p, options).solve(cells);
}

CheckResult verify_cover(const Problem& p, const CellSet& cells, const ColoredCover& cover) {
  CellSet covered;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const auto& entry = cover[i];
    if (entry.rect.empty()) return CheckResult::fail("entry " + std::to_string(i) + " is empty");
    if ((entry.rect.rows & ~p.all_rows()) || (entry.rect.cols & ~p.all_cols()))
      return CheckResult::fail("entry " + std::to_string(i) + " leaves the domain");
    if (!p.is_monochromatic(entry.rect, entry.color))
      return CheckResult::fail("entry " + std::to_string(i) + " is not monochromatic with color " +
                               std::to_string(entry.color));
    covered |= p.rect_cells(entry.rect);
  }
  const CellSet missing = cells - covered;
  if (!missing.empty()) return CheckResult::fail("uncovered cell " + cell_name(p, missing.first()));
  return CheckResult::pass();
}

MeasureOracle cover_measure(const Problem& p, const Options& options) {
  if (!p.total()) throw Error(ErrorCode::kNotTotal, p.name() + " has an uncolorable cell");
  if (p.cell_count() > kMaskBits)
    throw Error(ErrorCode::kSizeCap, "cover measure needs at most 64 cells");
  auto solver = std::make_shared<const CoverSolver>(p, options);
  return MeasureOracle("cover:" + p.name(), p.cell_count(), [solver](Mask cells) {
    return static_cast<double>(solver->solve(CellSet::from_mask(cells)).value);
  });
}

}  // namespace commbench
