#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commbench/fooling.h"
#include "commbench/measure.h"
#include "commbench/options.h"
#include "commbench/problem.h"

namespace commbench {

// Subsets of `base` ordered by size, then lexicographically on index lists.
std::vector<Mask> subsets_by_size(Mask base, int min_size, int max_size);

struct WeakFortification {
  Mask lambda1 = 0;     // sigma minus lambda_max
  Mask lambda_max = 0;  // maximal cheap subset
  std::vector<Mask> trace;  // lambda_max after each merge
};

// Grows lambda_max from the empty set by merging the first nonempty
// T within sigma \ lambda_max with
//   mu(lambda_max u T) < rho * |lambda_max u T| / |sigma| * mu(sigma)
// until none remains. Requires 0 < rho < 1.
WeakFortification weak_fortify(const MeasureOracle& m, Mask sigma, double rho,
                               const Options& options = {});

struct InverseFortification {
  Mask lambda0 = 0;
  std::vector<Mask> trace;  // lambda0 after each descent step
};

// Descends from sigma to a minimal nonempty subset satisfying
//   |lambda0| / |sigma| <= (mu(lambda0) / mu(sigma))^c.
// Requires c >= 1 and mu(sigma) > 0.
InverseFortification inverse_fortify(const MeasureOracle& m, Mask sigma, double c,
                                     const Options& options = {});

struct FortificationResult {
  Mask sigma = 0;
  Mask lambda0 = 0;
  Mask lambda = 0;
  double c = 1.0;          // inverse-fortification exponent, log2 |sigma|
  double weak_rho = 0.5;   // weak-fortification rho, 1 / (2 log2 |sigma|)
  double rho = 1.0;        // certified level, 1 / (4 log2 |sigma|)
  std::vector<Mask> inverse_trace;
  std::vector<Mask> weak_trace;
  double mu_sigma = 0.0;
  double mu_lambda0 = 0.0;
  double mu_lambda = 0.0;
  bool certified = false;
  std::string failure;  // why certification failed, if it did
};

FortificationResult fortify(const MeasureOracle& m, Mask sigma, const Options& options = {});

struct Certificate {
  bool ok = true;
  std::optional<Mask> violation;
  std::string reason;

  explicit operator bool() const { return ok; }
};

// Every nonempty T within lambda has mu(T) >= factor * |T| / |lambda| * reference.
Certificate certify_density(const MeasureOracle& m, Mask lambda, double factor, double reference,
                            const Options& options = {});

// lambda is rho-fortified: certify_density with reference mu(lambda).
Certificate certify_fortified(const MeasureOracle& m, Mask lambda, double rho,
                              const Options& options = {});

// Both weak-fortification guarantees for lambda1 taken from sigma.
Certificate certify_weak(const MeasureOracle& m, Mask sigma, Mask lambda1, double rho,
                         const Options& options = {});

// Both inverse-fortification guarantees for lambda0 taken from sigma.
Certificate certify_inverse(const MeasureOracle& m, Mask sigma, Mask lambda0, double c,
                            const Options& options = {});

struct CoverFortification {
  FortificationResult fortification;
  FoolingCertificate fooling;
  int cov = 0;                 // Cov(S)
  double delta_nominal = 0.0;  // 16 log2(|X||Y|) / Cov(S)
  bool delta_within_nominal = false;
  // Cov(T) >= |T|/|lambda| * Cov(S) / (16 log2 |X||Y|) for every T in lambda.
  bool cover_density_certified = false;
};

// Fortification of the cover measure over the whole domain X*Y.
CoverFortification fortify_cover(const Problem& p, const Options& options = {});

}  // namespace commbench
