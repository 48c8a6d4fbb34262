#include "commbench/protocol.h"

#include <algorithm>
#include <string>

namespace commbench {

namespace {
constexpr int kFlatTableBits = 20;

std::string rect_str(const Rect& r) {
  auto list = [](Mask m) {
    std::string s = "{";
    bool first = true;
    for_each_bit(m, [&](int i) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    });
    return s + "}";
  };
  return list(r.rows) + "x" + list(r.cols);
}
}  // namespace

int ProtocolTree::add_leaf(const Rect& rect, int color) {
  Node n;
  n.rect = rect;
  n.leaf = true;
  n.color = color;
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

int ProtocolTree::add_internal(Owner owner, const Rect& rect, int child0, int child1) {
  Node n;
  n.rect = rect;
  n.leaf = false;
  n.owner = owner;
  n.child[0] = child0;
  n.child[1] = child1;
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

int ProtocolTree::leaf_count() const {
  if (root_ < 0) return 0;
  int count = 0;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    const Node& n = nodes_.at(stack.back());
    stack.pop_back();
    if (n.leaf) {
      ++count;
    } else {
      stack.push_back(n.child[0]);
      stack.push_back(n.child[1]);
    }
  }
  return count;
}

int ProtocolTree::depth() const { return root_ < 0 ? 0 : depth_from(root_); }

int ProtocolTree::depth_from(int node) const {
  const Node& n = nodes_.at(node);
  if (n.leaf) return 0;
  return 1 + std::max(depth_from(n.child[0]), depth_from(n.child[1]));
}

ProtocolSolver::Table::Table(int rows, int cols)
    : cols_(cols), flat_(rows + cols <= kFlatTableBits) {
  if (flat_) flat_entries_.resize(std::size_t{1} << (rows + cols));
}

ProtocolSolver::Entry& ProtocolSolver::Table::at(const Rect& r) {
  if (flat_) return flat_entries_[(r.rows << cols_) | r.cols];
  return sparse_[r.rows][r.cols];
}

ProtocolSolver::ProtocolSolver(Problem p, const Options& options)
    : problem_(std::move(p)),
      options_(options),
      size_table_(problem_.rows(), problem_.cols()),
      depth_table_(problem_.rows(), problem_.cols()) {}

void ProtocolSolver::check_query(const Rect& r) const {
  if (r.empty()) throw Error(ErrorCode::kEmptyRect, "protocol query on an empty rectangle");
  if ((r.rows & ~problem_.all_rows()) || (r.cols & ~problem_.all_cols()))
    throw Error(ErrorCode::kInvalidArgument, "rectangle leaves the domain");
  const int extent = popcount(r.rows) + popcount(r.cols);
  if (extent > options_.protocol_cap)
    throw Error(ErrorCode::kSizeCap, "protocol query with |rows|+|cols| = " +
                                         std::to_string(extent) + " exceeds cap " +
                                         std::to_string(options_.protocol_cap));
  if (auto bad = problem_.first_uncolorable(problem_.rect_cells(r))) {
    const auto [x, y] = problem_.cell_coords(*bad);
    throw Error(ErrorCode::kNoProtocol,
                "cell (" + std::to_string(x) + "," + std::to_string(y) + ") has no valid color");
  }
}

const ProtocolSolver::Entry& ProtocolSolver::solve(Kind kind, const Rect& r) {
  Table& table = kind == Kind::kSize ? size_table_ : depth_table_;
  {
    const Entry& cached = table.at(r);
    if (cached.value >= 0) return cached;
  }
  Entry best;
  if (valid_colors(problem_, r) != 0) {
    best.value = kind == Kind::kSize ? 1 : 0;
    return table.at(r) = best;
  }
  // Cheapest possible non-leaf outcome; reaching it ends the scan early.
  const int floor = kind == Kind::kSize ? 2 : 1;
  auto combine = [&](int a, int b) { return kind == Kind::kSize ? a + b : 1 + std::max(a, b); };

  for (Owner side : {Owner::kAlice, Owner::kBob}) {
    const Mask set = side == Owner::kAlice ? r.rows : r.cols;
    if (popcount(set) < 2) continue;
    const Mask low = set & (~set + 1);
    const Mask rest = set ^ low;
    // part0 = low | s for every proper subset s of rest.
    for (Mask s = 0;; s = (s - rest) & rest) {
      if (s == rest) break;
      const Mask part0 = low | s;
      const Mask part1 = set ^ part0;
      const Rect r0 = side == Owner::kAlice ? Rect{part0, r.cols} : Rect{r.rows, part0};
      const Rect r1 = side == Owner::kAlice ? Rect{part1, r.cols} : Rect{r.rows, part1};
      const int v0 = solve(kind, r0).value;
      if (kind == Kind::kSize && best.value >= 0 && v0 + 1 >= best.value) continue;
      const int v = combine(v0, solve(kind, r1).value);
      if (best.value < 0 || v < best.value) {
        best = {v, side, part0};
        if (v <= floor) return table.at(r) = best;
      }
    }
  }
  return table.at(r) = best;
}

int ProtocolSolver::size(const Rect& r) {
  std::lock_guard lock(mutex_);
  check_query(r);
  return solve(Kind::kSize, r).value;
}

int ProtocolSolver::depth(const Rect& r) {
  std::lock_guard lock(mutex_);
  check_query(r);
  return solve(Kind::kDepth, r).value;
}

int ProtocolSolver::build(Kind kind, const Rect& r, ProtocolTree& tree) {
  const Entry e = solve(kind, r);
  if (e.part0 == 0) return tree.add_leaf(r, lowest_bit(valid_colors(problem_, r)));
  Rect r0 = r;
  Rect r1 = r;
  if (e.side == Owner::kAlice) {
    r0.rows = e.part0;
    r1.rows = r.rows ^ e.part0;
  } else {
    r0.cols = e.part0;
    r1.cols = r.cols ^ e.part0;
  }
  const int c0 = build(kind, r0, tree);
  const int c1 = build(kind, r1, tree);
  return tree.add_internal(e.side, r, c0, c1);
}

ProtocolTree ProtocolSolver::size_witness(const Rect& r) {
  std::lock_guard lock(mutex_);
  check_query(r);
  ProtocolTree tree;
  tree.set_root(build(Kind::kSize, r, tree));
  return tree;
}

ProtocolTree ProtocolSolver::depth_witness(const Rect& r) {
  std::lock_guard lock(mutex_);
  check_query(r);
  ProtocolTree tree;
  tree.set_root(build(Kind::kDepth, r, tree));
  return tree;
}

CheckResult verify_protocol(const Problem& p, const ProtocolTree& tree) {
  if (tree.empty()) return CheckResult::fail("tree has no root");
  const auto& nodes = tree.nodes();
  if (tree.node(tree.root()).rect != p.full_rect())
    return CheckResult::fail("root rectangle " + rect_str(tree.node(tree.root()).rect) +
                             " is not the full domain");
  std::vector<int> visits(nodes.size(), 0);
  std::vector<int> stack{tree.root()};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    if (i < 0 || i >= static_cast<int>(nodes.size()))
      return CheckResult::fail("dangling child index " + std::to_string(i));
    if (++visits[i] > 1) return CheckResult::fail("node " + std::to_string(i) + " reached twice");
    const auto& n = nodes[i];
    const std::string where = "node " + std::to_string(i) + " " + rect_str(n.rect);
    if (n.rect.empty()) return CheckResult::fail(where + " has an empty rectangle");
    if (n.leaf) {
      if (!p.is_monochromatic(n.rect, n.color))
        return CheckResult::fail(where + " leaf is not monochromatic with color " +
                                 std::to_string(n.color));
      continue;
    }
    for (int c : n.child)
      if (c < 0 || c >= static_cast<int>(nodes.size()))
        return CheckResult::fail(where + " has a dangling child index");
    const auto& a = nodes[n.child[0]].rect;
    const auto& b = nodes[n.child[1]].rect;
    if (n.owner == Owner::kAlice) {
      if (a.cols != n.rect.cols || b.cols != n.rect.cols)
        return CheckResult::fail(where + " Alice node changes columns");
      if ((a.rows & b.rows) != 0 || (a.rows | b.rows) != n.rect.rows)
        return CheckResult::fail(where + " children do not partition the rows");
    } else {
      if (a.rows != n.rect.rows || b.rows != n.rect.rows)
        return CheckResult::fail(where + " Bob node changes rows");
      if ((a.cols & b.cols) != 0 || (a.cols | b.cols) != n.rect.cols)
        return CheckResult::fail(where + " children do not partition the columns");
    }
    stack.push_back(n.child[1]);
    stack.push_back(n.child[0]);
  }
  return CheckResult::pass();
}

namespace {

int split_build(const Problem& p, const Rect& r, ProtocolTree& tree) {
  const bool split_rows = popcount(r.rows) > 1;
  const Mask set = split_rows ? r.rows : r.cols;
  if (popcount(set) <= 1) {
    const ColorMask colors = valid_colors(p, r);
    if (colors == 0) throw Error(ErrorCode::kNoProtocol, "uncolorable cell " + rect_str(r));
    return tree.add_leaf(r, lowest_bit(colors));
  }
  const std::vector<int> idx = mask_indices(set);
  Mask first_half = 0;
  for (std::size_t i = 0; i < idx.size() / 2; ++i) first_half |= bit(idx[i]);
  Rect r0 = r;
  Rect r1 = r;
  if (split_rows) {
    r0.rows = first_half;
    r1.rows = set ^ first_half;
  } else {
    r0.cols = first_half;
    r1.cols = set ^ first_half;
  }
  const int c0 = split_build(p, r0, tree);
  const int c1 = split_build(p, r1, tree);
  return tree.add_internal(split_rows ? Owner::kAlice : Owner::kBob, r, c0, c1);
}

}  // namespace

ProtocolTree full_split_protocol(const Problem& p) {
  ProtocolTree tree;
  tree.set_root(split_build(p, p.full_rect(), tree));
  return tree;
}

}  // namespace commbench
