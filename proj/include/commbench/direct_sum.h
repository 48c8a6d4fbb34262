#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commbench/fooling.h"
#include "commbench/options.h"
#include "commbench/problem.h"
#include "commbench/protocol.h"
#include "commbench/rational.h"

namespace commbench {

// A number that is exact when it can be (counts, rational bounds) and a
// double otherwise (logarithmic bounds).
struct BoundValue {
  std::optional<Rational> exact;
  double approx = 0.0;

  static BoundValue of(const Rational& q) { return {q, q.to_double()}; }
  static BoundValue of(double x) { return {std::nullopt, x}; }
  std::string str() const;
};

enum class Relation { kGe, kEq };

// One checked inequality lhs >= rhs (or lhs == rhs). A vacuous bound is one
// whose right-hand side carries no information at this size; it is still
// evaluated and `holds` reports the outcome.
struct Bound {
  std::string name;
  BoundValue lhs;
  BoundValue rhs;
  Relation relation = Relation::kGe;
  bool holds = false;
  bool vacuous = false;
};

Bound make_bound(std::string name, const Rational& lhs, const Rational& rhs,
                 Relation rel = Relation::kGe);
// Integer lhs against ceil(rhs).
Bound make_ceil_bound(std::string name, std::int64_t lhs, const Rational& rhs);
// lhs >= rhs in doubles; vacuous when rhs <= vacuous_below.
Bound make_log_bound(std::string name, double lhs, double rhs, double vacuous_below);

struct DirectSumReport {
  std::string s_name;
  std::string t_name;
  std::optional<int> cov_s, cov_t, cov_product, cov_hardcore;
  std::optional<int> l_s, l_product, c_s, c_product;
  CellSet lambda;
  Rational delta;
  std::vector<Bound> bounds;

  bool all_hold() const;
  void append(const DirectSumReport& other);
};

// Product cells ((a,p),(b,q)) whose T-coordinate (p,q) lies in lambda.
CellSet hardcore(const Problem& s, const Problem& t, const CellSet& lambda);

// Cov(SxT) >= Cov(S)/delta, the same on the hardcore, and the log form.
DirectSumReport check_thm41(const Problem& s, const Problem& t, const CellSet& lambda,
                            const Options& options = {});

// phi(node) = (1/|lambda|) * sum over (p,q) in lambda of L_S of the
// S-projection of node ∩ block(p,q); the empty projection counts 0.
class PhiMeasure {
 public:
  PhiMeasure(const Problem& s, const Problem& t, const CellSet& lambda,
             const Options& options = {});
  Rational operator()(const Rect& node_rect);

 private:
  int t_rows_;
  int t_cols_;
  int s_rows_;
  int s_cols_;
  std::vector<std::pair<int, int>> blocks_;
  ProtocolSolver s_solver_;
};

Rational phi(const Problem& s, const Problem& t, const CellSet& lambda, const Rect& node_rect,
             const Options& options = {});

// Per-tree phi checks on a verified protocol of SxT: root value equals L(S),
// subadditivity at every internal node, every leaf <= delta, and the leaf sum
// chain L(tree) * delta >= sum phi(leaf) >= phi(root).
std::vector<Bound> check_phi_tree(const Problem& s, const Problem& t, const CellSet& lambda,
                                  const Rational& delta, const ProtocolTree& tree,
                                  const Options& options = {});

// L(SxT) >= L(S)/delta, the log form, and check_phi_tree on an optimal
// witness protocol of SxT.
DirectSumReport check_thm43(const Problem& s, const Problem& t, const CellSet& lambda,
                            const Options& options = {});

// Both theorem checks, protocol depths, and (when S and T are the same
// relation) the log L(FxF) chain.
DirectSumReport direct_sum(const Problem& s, const Problem& t, const CellSet& lambda,
                           const Options& options = {});

struct ExploreRow {
  Problem f;
  int cov = 0;
  int l = 0;
  int l_square = 0;  // L(FxF)
  int c = 0;
  int c_square = 0;  // C(FxF)
  double log_size_gap = 0.0;  // log2 L(FxF) - log2 L(F)
  int depth_gap = 0;          // C(FxF) - C(F)
  Bound chain;                // log2 L(FxF) >= log2 L(F) + log2 Cov(F) - log2 log2 |A||B| - 4
};

// One row per boolean function on a x b (1 <= a, b <= max_side), up to row,
// column and color permutations. Requires max_side <= 3.
std::vector<ExploreRow> explore_conjectures(int max_side, const Options& options = {});

}  // namespace commbench
