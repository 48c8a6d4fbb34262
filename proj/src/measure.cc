#include "commbench/measure.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <unordered_map>

#include "commbench/error.h"

namespace commbench {

namespace {
constexpr int kFlatMemoLimit = 20;
constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
}  // namespace

struct MeasureOracle::Memo {
  explicit Memo(int ground) {
    if (ground <= kFlatMemoLimit) flat.assign(std::size_t{1} << ground, kUnset);
  }
  std::shared_mutex mutex;
  std::vector<double> flat;
  std::unordered_map<Mask, double> sparse;
  std::atomic<std::size_t> evaluations{0};
};

MeasureOracle::MeasureOracle(std::string name, int ground_size, Eval eval, double tolerance)
    : name_(std::move(name)),
      ground_size_(ground_size),
      tolerance_(tolerance),
      eval_(std::move(eval)),
      memo_(std::make_shared<Memo>(ground_size)) {
  if (ground_size < 1 || ground_size > kMaskBits)
    throw Error(ErrorCode::kSizeCap, "measure ground size must be in [1, 64]");
}

double MeasureOracle::operator()(Mask subset) const {
  if (subset & ~ground()) throw Error(ErrorCode::kInvalidArgument, "subset outside ground set");
  if (subset == 0) return 0.0;
  {
    std::shared_lock lock(memo_->mutex);
    if (!memo_->flat.empty()) {
      const double v = memo_->flat[subset];
      if (!std::isnan(v)) return v;
    } else if (auto it = memo_->sparse.find(subset); it != memo_->sparse.end()) {
      return it->second;
    }
  }
  const double value = eval_(subset);
  memo_->evaluations.fetch_add(1, std::memory_order_relaxed);
  std::unique_lock lock(memo_->mutex);
  if (!memo_->flat.empty())
    memo_->flat[subset] = value;
  else
    memo_->sparse.emplace(subset, value);
  return value;
}

std::size_t MeasureOracle::evaluations() const { return memo_->evaluations.load(); }

bool approx_less(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return a < b - tol * scale;
}

bool approx_leq(double a, double b, double tol) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return a <= b + tol * scale;
}

MeasureOracle cardinality_measure(int n) {
  return MeasureOracle("cardinality", n, [](Mask s) { return static_cast<double>(popcount(s)); });
}

void validate_distribution(const Distribution& dist) {
  if (dist.variables < 1 || dist.variables > 16)
    throw Error(ErrorCode::kInvalidDistribution, "variables must be in [1, 16]");
  const std::size_t outcomes = std::size_t{1} << dist.variables;
  if (dist.probabilities.size() != outcomes)
    throw Error(ErrorCode::kInvalidDistribution,
                "expected " + std::to_string(outcomes) + " probabilities, got " +
                    std::to_string(dist.probabilities.size()));
  double sum = 0.0;
  for (double p : dist.probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p))
      throw Error(ErrorCode::kInvalidDistribution, "probabilities must be finite and nonnegative");
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw Error(ErrorCode::kInvalidDistribution, "probabilities sum to " + std::to_string(sum));
}

MeasureOracle entropy_measure(const Distribution& dist) {
  validate_distribution(dist);
  const int n = dist.variables;
  auto probs = std::make_shared<const std::vector<double>>(dist.probabilities);
  auto eval = [n, probs](Mask vars) {
    // Variable v is bit (n - 1 - v) of the outcome index.
    Mask outcome_bits = 0;
    for_each_bit(vars, [&](int v) { outcome_bits |= bit(n - 1 - v); });
    std::unordered_map<Mask, double> marginal;
    for (std::size_t i = 0; i < probs->size(); ++i) {
      const double p = (*probs)[i];
      if (p > 0.0) marginal[static_cast<Mask>(i) & outcome_bits] += p;
    }
    double h = 0.0;
    for (const auto& [key, p] : marginal)
      if (p > 0.0) h -= p * std::log2(p);
    return std::max(h, 0.0);
  };
  return MeasureOracle("entropy", n, eval, 1e-9);
}

MeasureReport check_measure(const MeasureOracle& m, std::uint64_t seed, int exhaustive_limit,
                            int sample_pairs) {
  MeasureReport report;
  const int n = m.ground_size();
  const double tol = m.tolerance();
  auto note_pair = [&](Mask a, Mask b) {
    const double lhs = m(a | b);
    const double rhs = m(a) + m(b);
    ++report.pairs_checked;
    if (!approx_leq(lhs, rhs, tol)) {
      if (!report.subadditivity_witness) {
        report.subadditivity_witness = {a, b};
        report.violations.push_back("subadditivity: mu(" + std::to_string(a | b) + ")=" +
                                    std::to_string(lhs) + " > mu(" + std::to_string(a) +
                                    ")+mu(" + std::to_string(b) + ")=" + std::to_string(rhs));
      }
      report.valid = false;
    }
  };
  auto note_subset = [&](Mask s) {
    const double v = m(s);
    ++report.subsets_checked;
    const bool ok = s == 0 ? v == 0.0 : v > 0.0;
    if (!ok) {
      if (!report.semipositivity_witness) {
        report.semipositivity_witness = s;
        report.violations.push_back("semipositivity: mu(" + std::to_string(s) +
                                    ")=" + std::to_string(v));
      }
      report.valid = false;
    }
  };

  if (n <= exhaustive_limit) {
    const Mask all = m.ground();
    for (Mask s = 0;; ++s) {
      note_subset(s);
      if (s == all) break;
    }
    for (Mask a = 1; a <= all; ++a)
      for (Mask b = a; b <= all; ++b) note_pair(a, b);
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(seed);
  const Mask all = m.ground();
  note_subset(0);
  note_subset(all);
  for (int i = 0; i < sample_pairs; ++i) {
    const Mask a = rng() & all;
    const Mask b = rng() & all;
    note_subset(a);
    note_pair(a, b);
  }
  return report;
}

}  // namespace commbench
