#include "commbench/direct_sum.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "commbench/cover.h"
#include "commbench/parallel.h"

namespace commbench {

std::string BoundValue::str() const {
  if (exact) return exact->str();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", approx);
  return buf;
}

Bound make_bound(std::string name, const Rational& lhs, const Rational& rhs, Relation rel) {
  Bound b;
  b.name = std::move(name);
  b.lhs = BoundValue::of(lhs);
  b.rhs = BoundValue::of(rhs);
  b.relation = rel;
  b.holds = rel == Relation::kGe ? lhs >= rhs : lhs == rhs;
  return b;
}

Bound make_ceil_bound(std::string name, std::int64_t lhs, const Rational& rhs) {
  Bound b = make_bound(std::move(name), Rational(lhs), rhs);
  b.holds = lhs >= rhs.ceil();
  return b;
}

Bound make_log_bound(std::string name, double lhs, double rhs, double vacuous_below) {
  Bound b;
  b.name = std::move(name);
  b.lhs = BoundValue::of(lhs);
  b.rhs = BoundValue::of(rhs);
  b.holds = std::isnan(rhs) || lhs >= rhs - 1e-12;
  b.vacuous = std::isnan(rhs) || rhs <= vacuous_below;
  return b;
}

bool DirectSumReport::all_hold() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const Bound& b) { return b.holds; });
}

void DirectSumReport::append(const DirectSumReport& o) {
  auto take = [](std::optional<int>& dst, const std::optional<int>& src) {
    if (src) dst = src;
  };
  take(cov_s, o.cov_s);
  take(cov_t, o.cov_t);
  take(cov_product, o.cov_product);
  take(cov_hardcore, o.cov_hardcore);
  take(l_s, o.l_s);
  take(l_product, o.l_product);
  take(c_s, o.c_s);
  take(c_product, o.c_product);
  bounds.insert(bounds.end(), o.bounds.begin(), o.bounds.end());
}

CellSet hardcore(const Problem& s, const Problem& t, const CellSet& lambda) {
  if (lambda.empty()) throw Error(ErrorCode::kEmptyCellSet, "hardcore needs a nonempty lambda");
  if (!lambda.is_subset_of(t.all_cells()))
    throw Error(ErrorCode::kInvalidArgument, "lambda exceeds T's domain");
  const long cells = static_cast<long>(s.cell_count()) * t.cell_count();
  if (cells > kMaxCells) throw Error(ErrorCode::kSizeCap, "product domain too large");
  const int product_cols = s.cols() * t.cols();
  CellSet out;
  lambda.for_each([&](int cell) {
    const auto [p, q] = t.cell_coords(cell);
    for (int a = 0; a < s.rows(); ++a)
      for (int b = 0; b < s.cols(); ++b)
        out.insert((a * t.rows() + p) * product_cols + (b * t.cols() + q));
  });
  return out;
}

namespace {

void require_total(const Problem& p) {
  if (!p.total()) throw Error(ErrorCode::kNotTotal, p.name() + " has an uncolorable cell");
}

// log2 log2 n, NaN when undefined (n < 2 gives log2 n <= 0).
double loglog(double n) {
  const double l = std::log2(n);
  return l > 0.0 ? std::log2(l) : std::nan("");
}

}  // namespace

DirectSumReport check_thm41(const Problem& s, const Problem& t, const CellSet& lambda,
                            const Options& options) {
  require_total(s);
  require_total(t);
  const Problem st = product(s, t);
  const FoolingCertificate cert = min_fooling_delta(t, lambda, options);

  DirectSumReport r;
  r.s_name = s.name();
  r.t_name = t.name();
  r.lambda = lambda;
  r.delta = cert.delta;
  r.cov_s = cover_number(s, s.all_cells(), options).value;
  r.cov_t = cover_number(t, t.all_cells(), options).value;
  const CoverSolver st_solver(st, options);
  r.cov_product = st_solver.solve(st.all_cells()).value;
  r.cov_hardcore = st_solver.solve(hardcore(s, t, lambda)).value;

  const Rational rhs = Rational(*r.cov_s) / cert.delta;
  r.bounds.push_back(make_ceil_bound("thm41", *r.cov_product, rhs));
  r.bounds.push_back(make_ceil_bound("thm41_hardcore", *r.cov_hardcore, rhs));
  const double log_rhs = std::log2(*r.cov_s) + std::log2(*r.cov_t) -
                         loglog(static_cast<double>(t.cell_count())) - 4.0;
  r.bounds.push_back(make_log_bound("thm41_log", std::log2(*r.cov_product), log_rhs, 0.0));
  return r;
}

PhiMeasure::PhiMeasure(const Problem& s, const Problem& t, const CellSet& lambda,
                       const Options& options)
    : t_rows_(t.rows()),
      t_cols_(t.cols()),
      s_rows_(s.rows()),
      s_cols_(s.cols()),
      s_solver_(s, options) {
  if (lambda.empty()) throw Error(ErrorCode::kEmptyCellSet, "phi needs a nonempty lambda");
  if (!lambda.is_subset_of(t.all_cells()))
    throw Error(ErrorCode::kInvalidArgument, "lambda exceeds T's domain");
  lambda.for_each([&](int cell) { blocks_.push_back(t.cell_coords(cell)); });
}

Rational PhiMeasure::operator()(const Rect& node_rect) {
  if (node_rect.empty()) throw Error(ErrorCode::kEmptyRect, "phi of an empty rectangle");
  std::int64_t total = 0;
  for (const auto& [p, q] : blocks_) {
    Rect proj;
    for (int a = 0; a < s_rows_; ++a)
      if (has_bit(node_rect.rows, a * t_rows_ + p)) proj.rows |= bit(a);
    for (int b = 0; b < s_cols_; ++b)
      if (has_bit(node_rect.cols, b * t_cols_ + q)) proj.cols |= bit(b);
    if (!proj.empty()) total += s_solver_.size(proj);
  }
  return Rational(total, static_cast<std::int64_t>(blocks_.size()));
}

Rational phi(const Problem& s, const Problem& t, const CellSet& lambda, const Rect& node_rect,
             const Options& options) {
  PhiMeasure m(s, t, lambda, options);
  return m(node_rect);
}

std::vector<Bound> check_phi_tree(const Problem& s, const Problem& t, const CellSet& lambda,
                                  const Rational& delta, const ProtocolTree& tree,
                                  const Options& options) {
  PhiMeasure measure(s, t, lambda, options);
  const auto& nodes = tree.nodes();
  std::vector<Rational> value(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) value[i] = measure(nodes[i].rect);

  ProtocolSolver s_solver(s, options);
  const int l_s = s_solver.size(s.full_rect());

  std::optional<Rational> min_slack;
  Rational max_leaf(0);
  Rational leaf_sum(0);
  int leaves = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (n.leaf) {
      max_leaf = std::max(max_leaf, value[i]);
      leaf_sum = leaf_sum + value[i];
      ++leaves;
    } else {
      const Rational slack = value[n.child[0]] + value[n.child[1]] - value[i];
      if (!min_slack || slack < *min_slack) min_slack = slack;
    }
  }
  std::vector<Bound> out;
  out.push_back(make_bound("fact46_root", value[tree.root()], Rational(l_s), Relation::kEq));
  // Subadditivity: phi(v0) + phi(v1) - phi(v) >= 0 at every internal node.
  out.push_back(make_bound("fact46_subadditive", min_slack.value_or(Rational(0)), Rational(0)));
  out.push_back(make_bound("fact47_leaves", delta, max_leaf));
  out.push_back(make_bound("phi_leaf_sum", leaf_sum, value[tree.root()]));
  out.push_back(make_bound("thm43_tree", Rational(leaves) * delta, Rational(l_s)));
  return out;
}

DirectSumReport check_thm43(const Problem& s, const Problem& t, const CellSet& lambda,
                            const Options& options) {
  require_total(s);
  require_total(t);
  const Problem st = product(s, t);
  const FoolingCertificate cert = min_fooling_delta(t, lambda, options);

  DirectSumReport r;
  r.s_name = s.name();
  r.t_name = t.name();
  r.lambda = lambda;
  r.delta = cert.delta;
  ProtocolSolver s_solver(s, options);
  ProtocolSolver st_solver(st, options);
  r.l_s = s_solver.size(s.full_rect());
  r.l_product = st_solver.size(st.full_rect());
  r.cov_t = cover_number(t, t.all_cells(), options).value;

  r.bounds.push_back(make_ceil_bound("thm43", *r.l_product, Rational(*r.l_s) / cert.delta));
  const double log_rhs = std::log2(*r.l_s) + std::log2(*r.cov_t) -
                         loglog(static_cast<double>(t.cell_count())) - 4.0;
  r.bounds.push_back(make_log_bound("thm43_log", std::log2(*r.l_product), log_rhs, 0.0));

  const ProtocolTree witness = st_solver.size_witness(st.full_rect());
  if (!verify_protocol(st, witness))
    throw Error(ErrorCode::kInvalidArgument, "internal: witness protocol failed verification");
  for (Bound& b : check_phi_tree(s, t, lambda, cert.delta, witness, options))
    r.bounds.push_back(std::move(b));
  return r;
}

DirectSumReport direct_sum(const Problem& s, const Problem& t, const CellSet& lambda,
                           const Options& options) {
  DirectSumReport r = check_thm41(s, t, lambda, options);
  r.append(check_thm43(s, t, lambda, options));
  ProtocolSolver s_solver(s, options);
  ProtocolSolver st_solver(product(s, t), options);
  r.c_s = s_solver.depth(s.full_rect());
  r.c_product = st_solver.depth(st_solver.problem().full_rect());
  if (s.same_relation(t)) {
    const double rhs = std::log2(*r.l_s) + std::log2(*r.cov_s) -
                       loglog(static_cast<double>(s.cell_count())) - 4.0;
    r.bounds.push_back(
        make_log_bound("cor48", std::log2(*r.l_product), rhs, std::log2(*r.l_s)));
  }
  return r;
}

namespace {

// Row-major code of a boolean table.
std::uint32_t table_code(const std::vector<int>& cells) {
  std::uint32_t code = 0;
  for (int v : cells) code = code * 2 + static_cast<std::uint32_t>(v);
  return code;
}

std::uint32_t canonical_code(int a, int b, std::uint32_t code) {
  std::vector<int> rows(a), cols(b);
  std::vector<int> base(a * b);
  for (int i = a * b - 1; i >= 0; --i) {
    base[i] = code & 1U;
    code >>= 1;
  }
  std::uint32_t best = UINT32_MAX;
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      for (int flip = 0; flip < 2; ++flip) {
        std::vector<int> cells(a * b);
        for (int x = 0; x < a; ++x)
          for (int y = 0; y < b; ++y) cells[x * b + y] = base[rows[x] * b + cols[y]] ^ flip;
        best = std::min(best, table_code(cells));
      }
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return best;
}

}  // namespace

std::vector<ExploreRow> explore_conjectures(int max_side, const Options& options) {
  if (max_side < 1) throw Error(ErrorCode::kInvalidArgument, "max_side must be positive");
  if (max_side > 3) throw Error(ErrorCode::kSizeCap, "explore supports max_side <= 3");

  std::vector<std::pair<int, std::vector<std::vector<int>>>> jobs_list;
  for (int a = 1; a <= max_side; ++a) {
    for (int b = 1; b <= max_side; ++b) {
      const std::uint32_t count = 1U << (a * b);
      for (std::uint32_t code = 0; code < count; ++code) {
        if (canonical_code(a, b, code) != code) continue;
        std::vector<std::vector<int>> grid(a, std::vector<int>(b));
        for (int i = a * b - 1; i >= 0; --i) grid[i / b][i % b] = (code >> (a * b - 1 - i)) & 1U;
        jobs_list.emplace_back(a * b, std::move(grid));
      }
    }
  }

  std::vector<std::optional<ExploreRow>> rows(jobs_list.size());
  Options local = options;
  local.protocol_cap = std::max(local.protocol_cap, 2 * max_side * max_side);
  local.enum_row_cap = std::max(local.enum_row_cap, max_side);
  parallel_chunks(jobs_list.size(), options.jobs,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
    Options inner = local;
    inner.jobs = 1;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& grid = jobs_list[i].second;
      std::string name = "f" + std::to_string(grid.size()) + "x" + std::to_string(grid[0].size()) + ":";
      for (const auto& row : grid)
        for (int v : row) name += static_cast<char>('0' + v);
      Problem f = make_function_problem(grid, 2, name);
      ProtocolSolver fs(f, inner);
      const Problem ff = product(f, f);
      ProtocolSolver ffs(ff, inner);
      ExploreRow row{f};
      row.cov = cover_number(f, f.all_cells(), inner).value;
      row.l = fs.size(f.full_rect());
      row.c = fs.depth(f.full_rect());
      row.l_square = ffs.size(ff.full_rect());
      row.c_square = ffs.depth(ff.full_rect());
      row.log_size_gap = std::log2(row.l_square) - std::log2(row.l);
      row.depth_gap = row.c_square - row.c;
      const double rhs = std::log2(row.l) + std::log2(row.cov) -
                         loglog(static_cast<double>(f.cell_count())) - 4.0;
      row.chain = make_log_bound("cor48", std::log2(row.l_square), rhs, std::log2(row.l));
      rows[i] = std::move(row);
    }
  });
  std::vector<ExploreRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

}  // namespace commbench
