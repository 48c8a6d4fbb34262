#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "commbench/bits.h"
#include "commbench/options.h"

namespace commbench {

// A set function over subsets of {0, ..., ground_size - 1}, memoized.
//
// Values are nonnegative reals; integral measures (cover number,
// cardinality) are represented exactly. Copies share one memo table, which is
// safe to use from several threads: concurrent misses may evaluate the same
// subset twice but always store the same value.
class MeasureOracle {
 public:
  using Eval = std::function<double(Mask)>;

  MeasureOracle(std::string name, int ground_size, Eval eval, double tolerance = 1e-12);

  double operator()(Mask subset) const;

  const std::string& name() const { return name_; }
  int ground_size() const { return ground_size_; }
  Mask ground() const { return low_mask(ground_size_); }
  // Relative slack used by every inequality test on this measure's values.
  double tolerance() const { return tolerance_; }
  std::size_t evaluations() const;

 private:
  struct Memo;

  std::string name_;
  int ground_size_;
  double tolerance_;
  Eval eval_;
  std::shared_ptr<Memo> memo_;
};

// Tolerant comparisons used by the fortification scans and certificates.
bool approx_less(double a, double b, double tol);   // a < b, beyond tolerance
bool approx_leq(double a, double b, double tol);    // a <= b, within tolerance

MeasureOracle cardinality_measure(int n);

// Joint distribution over n binary variables; probabilities[i] is the mass of
// the outcome whose bit (n - 1 - v) is variable v's value.
struct Distribution {
  int variables = 0;
  std::vector<double> probabilities;
};

void validate_distribution(const Distribution& dist);

// Shannon entropy (bits) of the marginal on each subset of variables.
MeasureOracle entropy_measure(const Distribution& dist);

struct MeasureReport {
  bool valid = true;
  bool exhaustive = true;
  std::uint64_t subsets_checked = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<std::string> violations;
  // First subadditivity violation (A, B) with mu(A u B) > mu(A) + mu(B).
  std::optional<std::pair<Mask, Mask>> subadditivity_witness;
  std::optional<Mask> semipositivity_witness;
};

// Semipositivity on every subset and subadditivity on every pair when the
// ground set has at most `exhaustive_limit` elements; otherwise
// `sample_pairs` random pairs drawn from `seed`.
MeasureReport check_measure(const MeasureOracle& m, std::uint64_t seed = 0,
                            int exhaustive_limit = 12, int sample_pairs = 200000);

}  // namespace commbench
