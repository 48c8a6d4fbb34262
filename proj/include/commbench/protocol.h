#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "commbench/cover.h"
#include "commbench/options.h"
#include "commbench/problem.h"

namespace commbench {

enum class Owner { kAlice, kBob };

// A deterministic protocol tree stored as an arena; children refer to node
// indices. Leaves carry an output color, internal nodes an owner.
class ProtocolTree {
 public:
  struct Node {
    Rect rect;
    bool leaf = true;
    int color = -1;
    Owner owner = Owner::kAlice;
    int child[2] = {-1, -1};
  };

  int add_leaf(const Rect& rect, int color);
  int add_internal(Owner owner, const Rect& rect, int child0, int child1);
  void set_root(int node) { root_ = node; }

  int root() const { return root_; }
  const Node& node(int i) const { return nodes_.at(i); }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool empty() const { return root_ < 0; }

  int leaf_count() const;
  int depth() const;

 private:
  int depth_from(int node) const;

  std::vector<Node> nodes_;
  int root_ = -1;
};

// Exact protocol size L and communication depth C on sub-rectangles of a
// problem, by memoized recursion over canonical bipartitions (the part
// holding the lowest index is child 0). Queries are serialized internally.
class ProtocolSolver {
 public:
  explicit ProtocolSolver(Problem p, const Options& options = {});

  int size(const Rect& r);
  int depth(const Rect& r);
  ProtocolTree size_witness(const Rect& r);
  ProtocolTree depth_witness(const Rect& r);

  const Problem& problem() const { return problem_; }

 private:
  struct Entry {
    int value = -1;
    Owner side = Owner::kAlice;
    Mask part0 = 0;  // child-0 rows (Alice) or cols (Bob); 0 for leaves
  };
  enum class Kind { kSize, kDepth };

  class Table {
   public:
    Table(int rows, int cols);
    Entry& at(const Rect& r);

   private:
    int cols_;
    bool flat_;
    std::vector<Entry> flat_entries_;
    std::unordered_map<Mask, std::unordered_map<Mask, Entry>> sparse_;
  };

  void check_query(const Rect& r) const;
  const Entry& solve(Kind kind, const Rect& r);
  int build(Kind kind, const Rect& r, ProtocolTree& tree);

  Problem problem_;
  Options options_;
  Table size_table_;
  Table depth_table_;
  std::mutex mutex_;
};

CheckResult verify_protocol(const Problem& p, const ProtocolTree& tree);

// Alice halves the rows down to singletons, then Bob halves the columns; on a
// total problem every leaf is a single cell.
ProtocolTree full_split_protocol(const Problem& p);

}  // namespace commbench
