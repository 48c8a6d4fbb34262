#include "commbench/fooling.h"

#include <string>
#include <vector>

#include "commbench/fortify.h"
#include "commbench/parallel.h"

namespace commbench {

FoolingCertificate min_fooling_delta(const MonoRectIndex& index, const CellSet& lambda) {
  if (lambda.empty()) throw Error(ErrorCode::kEmptyCellSet, "fooling set must be nonempty");
  const Overlap overlap = max_overlap(index, lambda);
  if (overlap.count == 0)
    throw Error(ErrorCode::kUncoverable, "no monochromatic rectangle meets the fooling set");
  FoolingCertificate cert;
  cert.lambda = lambda;
  cert.delta = Rational(overlap.count, lambda.size());
  cert.witness = overlap.witness;
  cert.cov_lb = static_cast<int>(Rational(lambda.size(), overlap.count).ceil());
  return cert;
}

FoolingCertificate min_fooling_delta(const Problem& p, const CellSet& lambda,
                                     const Options& options) {
  return min_fooling_delta(enumerate_maximal(p, options), lambda);
}

bool is_delta_fooling(const MonoRectIndex& index, const CellSet& lambda, const Rational& delta) {
  if (delta <= Rational(0) || delta > Rational(1))
    throw Error(ErrorCode::kInvalidDelta, "delta must lie in (0, 1], got " + delta.str());
  if (lambda.empty()) throw Error(ErrorCode::kEmptyCellSet, "fooling set must be nonempty");
  const int overlap = max_overlap(index, lambda).count;
  // Strict "> delta" in the definition: fooling iff overlap <= delta * |lambda|.
  return Rational(overlap) <= delta * Rational(lambda.size());
}

int cov_lower_bound(const FoolingCertificate& cert) {
  return static_cast<int>((Rational(1) / cert.delta).ceil());
}

std::optional<FoolingStrategy> parse_fooling_strategy(std::string_view name) {
  if (name == "exhaustive") return FoolingStrategy::kExhaustive;
  if (name == "greedy") return FoolingStrategy::kGreedy;
  if (name == "fortify") return FoolingStrategy::kFortify;
  return std::nullopt;
}

std::string_view fooling_strategy_name(FoolingStrategy s) {
  switch (s) {
    case FoolingStrategy::kExhaustive: return "exhaustive";
    case FoolingStrategy::kGreedy: return "greedy";
    case FoolingStrategy::kFortify: return "fortify";
  }
  return "?";
}

bool better_certificate(const FoolingCertificate& a, const FoolingCertificate& b) {
  if (a.delta != b.delta) return a.delta < b.delta;
  if (a.lambda.size() != b.lambda.size()) return a.lambda.size() > b.lambda.size();
  return lex_less(a.lambda, b.lambda);
}

namespace {

FoolingCertificate exhaustive_search(const Problem& p, const MonoRectIndex& index,
                                     std::optional<int> size_hint, const Options& options) {
  const int n = p.cell_count();
  if (n > options.subset_cap)
    throw Error(ErrorCode::kSizeCap, "exhaustive fooling search over " + std::to_string(n) +
                                         " cells exceeds cap " +
                                         std::to_string(options.subset_cap));
  Mask colorable = 0;
  for (int i = 0; i < n; ++i)
    if (p.cell_colors(i) != 0) colorable |= bit(i);
  std::vector<Mask> rect_masks;
  for (std::size_t i = 0; i < index.size(); ++i) rect_masks.push_back(index.cells(i).low_word());

  const int jobs = std::max(1, options.jobs);
  std::vector<std::optional<FoolingCertificate>> best(static_cast<std::size_t>(jobs));
  const std::size_t total = (std::size_t{1} << n) - 1;
  parallel_chunks(total, jobs, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    // Track (overlap, size, mask) and build a certificate only for winners.
    int best_overlap = 0;
    int best_size = 0;
    Mask best_mask = 0;
    for (std::size_t k = begin; k < end; ++k) {
      const Mask lam = static_cast<Mask>(k + 1);
      if (lam & ~colorable) continue;
      const int size = popcount(lam);
      if (size_hint && size != *size_hint) continue;
      int overlap = 0;
      for (Mask r : rect_masks) overlap = std::max(overlap, popcount(r & lam));
      bool take = best_mask == 0;
      if (!take) {
        // overlap/size vs best_overlap/best_size
        const long lhs = static_cast<long>(overlap) * best_size;
        const long rhs = static_cast<long>(best_overlap) * size;
        take = lhs < rhs || (lhs == rhs && (size > best_size ||
                                            (size == best_size && lex_less(lam, best_mask))));
      }
      if (take) {
        best_overlap = overlap;
        best_size = size;
        best_mask = lam;
      }
    }
    if (best_mask != 0) best[chunk] = min_fooling_delta(index, CellSet::from_mask(best_mask));
  });

  std::optional<FoolingCertificate> winner;
  for (auto& b : best)
    if (b && (!winner || better_certificate(*b, *winner))) winner = b;
  if (!winner) throw Error(ErrorCode::kUncoverable, "no colorable subset of the requested size");
  return *winner;
}

FoolingCertificate greedy_search(const Problem& p, const MonoRectIndex& index,
                                 std::optional<int> size_hint) {
  const int n = p.cell_count();
  const int limit = size_hint ? *size_hint : n;
  CellSet lambda;
  std::optional<FoolingCertificate> best;
  for (int step = 0; step < limit; ++step) {
    int pick = -1;
    int pick_overlap = 0;
    for (int c = 0; c < n; ++c) {
      if (lambda.contains(c) || p.cell_colors(c) == 0) continue;
      CellSet trial = lambda;
      trial.insert(c);
      const int overlap = max_overlap(index, trial).count;
      if (pick < 0 || overlap < pick_overlap) {
        pick = c;
        pick_overlap = overlap;
      }
    }
    if (pick < 0) break;
    lambda.insert(pick);
    FoolingCertificate cert = min_fooling_delta(index, lambda);
    if (!size_hint || lambda.size() == *size_hint) {
      if (!best || better_certificate(cert, *best)) best = cert;
    }
  }
  if (!best) throw Error(ErrorCode::kUncoverable, "no colorable cells to build a fooling set");
  return *best;
}

}  // namespace

FoolingCertificate search_fooling(const Problem& p, FoolingStrategy strategy,
                                  std::optional<int> size_hint, const Options& options) {
  if (size_hint && (*size_hint < 1 || *size_hint > p.cell_count()))
    throw Error(ErrorCode::kInvalidArgument, "size hint out of range");
  switch (strategy) {
    case FoolingStrategy::kExhaustive:
      return exhaustive_search(p, enumerate_maximal(p, options), size_hint, options);
    case FoolingStrategy::kGreedy:
      return greedy_search(p, enumerate_maximal(p, options), size_hint);
    case FoolingStrategy::kFortify:
      return fortify_cover(p, options).fooling;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy");
}

}  // namespace commbench
