#include "commbench/fortify.h"

#include <cmath>
#include <string>

#include "commbench/cover.h"
#include "commbench/parallel.h"

namespace commbench {

std::vector<Mask> subsets_by_size(Mask base, int min_size, int max_size) {
  const std::vector<int> elems = mask_indices(base);
  const int n = static_cast<int>(elems.size());
  std::vector<Mask> out;
  for (int k = std::max(min_size, 0); k <= std::min(max_size, n); ++k) {
    // Positions pos[0] < ... < pos[k-1], advanced in lexicographic order.
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i;
    while (true) {
      Mask m = 0;
      for (int i : pos) m |= bit(elems[i]);
      out.push_back(m);
      int i = k - 1;
      while (i >= 0 && pos[i] == n - k + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return out;
}

namespace {

void check_scan(const MeasureOracle& m, Mask set, const Options& options, const char* what) {
  if (set & ~m.ground()) throw Error(ErrorCode::kInvalidArgument, "set outside the ground set");
  if (popcount(set) > options.subset_cap)
    throw Error(ErrorCode::kSizeCap, std::string(what) + " over " +
                                         std::to_string(popcount(set)) +
                                         " elements exceeds cap " +
                                         std::to_string(options.subset_cap));
}

std::string mask_str(Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](int i) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}

}  // namespace

WeakFortification weak_fortify(const MeasureOracle& m, Mask sigma, double rho,
                               const Options& options) {
  if (!(rho > 0.0 && rho < 1.0))
    throw Error(ErrorCode::kInvalidRho, "rho must lie in (0, 1), got " + std::to_string(rho));
  if (sigma == 0) throw Error(ErrorCode::kEmptyCellSet, "sigma must be nonempty");
  check_scan(m, sigma, options, "weak fortification");

  const double mu_sigma = m(sigma);
  const double n = popcount(sigma);
  const double tol = m.tolerance();
  WeakFortification out;
  while (true) {
    const Mask rest = sigma & ~out.lambda_max;
    if (rest == 0) break;
    std::optional<Mask> found;
    for (int k = 1; k <= popcount(rest) && !found; ++k) {
      const std::vector<Mask> level = subsets_by_size(rest, k, k);
      const std::size_t i = parallel_find_first(level.size(), options.jobs, [&](std::size_t j) {
        const Mask u = out.lambda_max | level[j];
        return approx_less(m(u), rho * popcount(u) / n * mu_sigma, tol);
      });
      if (i < level.size()) found = level[i];
    }
    if (!found) break;
    out.lambda_max |= *found;
    out.trace.push_back(out.lambda_max);
  }
  out.lambda1 = sigma & ~out.lambda_max;
  return out;
}

InverseFortification inverse_fortify(const MeasureOracle& m, Mask sigma, double c,
                                     const Options& options) {
  if (!(c >= 1.0)) throw Error(ErrorCode::kInvalidArgument, "c must be at least 1");
  if (sigma == 0) throw Error(ErrorCode::kEmptyCellSet, "sigma must be nonempty");
  check_scan(m, sigma, options, "inverse fortification");
  const double mu_sigma = m(sigma);
  if (!(mu_sigma > 0.0))
    throw Error(ErrorCode::kInvalidMeasure, "mu(sigma) must be positive");

  const double n = popcount(sigma);
  const double tol = m.tolerance();
  InverseFortification out;
  out.lambda0 = sigma;
  while (true) {
    const int size = popcount(out.lambda0);
    std::optional<Mask> found;
    for (int k = 1; k < size && !found; ++k) {
      const std::vector<Mask> level = subsets_by_size(out.lambda0, k, k);
      const std::size_t i = parallel_find_first(level.size(), options.jobs, [&](std::size_t j) {
        const double density = popcount(level[j]) / n;
        return approx_leq(density, std::pow(m(level[j]) / mu_sigma, c), tol);
      });
      if (i < level.size()) found = level[i];
    }
    if (!found) break;
    out.lambda0 = *found;
    out.trace.push_back(out.lambda0);
  }
  return out;
}

Certificate certify_density(const MeasureOracle& m, Mask lambda, double factor, double reference,
                            const Options& options) {
  if (lambda == 0) return {};
  check_scan(m, lambda, options, "certificate scan");
  const double size = popcount(lambda);
  const double tol = m.tolerance();
  const std::vector<Mask> subsets = subsets_by_size(lambda, 1, popcount(lambda));
  const std::size_t i = parallel_find_first(subsets.size(), options.jobs, [&](std::size_t j) {
    return approx_less(m(subsets[j]), factor * popcount(subsets[j]) / size * reference, tol);
  });
  if (i == subsets.size()) return {};
  const Mask bad = subsets[i];
  return {false, bad,
          "mu(" + mask_str(bad) + ") = " + std::to_string(m(bad)) + " < " +
              std::to_string(factor * popcount(bad) / size * reference)};
}

Certificate certify_fortified(const MeasureOracle& m, Mask lambda, double rho,
                              const Options& options) {
  return certify_density(m, lambda, rho, m(lambda), options);
}

Certificate certify_weak(const MeasureOracle& m, Mask sigma, Mask lambda1, double rho,
                         const Options& options) {
  if (lambda1 & ~sigma) return {false, lambda1, "lambda1 is not inside sigma"};
  const double mu_sigma = m(sigma);
  // Densities are relative to sigma, not lambda1.
  Certificate cert = certify_density(m, lambda1, rho * popcount(lambda1) / popcount(sigma),
                                     mu_sigma, options);
  if (!cert) return cert;
  if (approx_less(m(lambda1), (1.0 - rho) * mu_sigma, m.tolerance()))
    return {false, lambda1,
            "mu(lambda1) = " + std::to_string(m(lambda1)) + " < (1 - rho) mu(sigma) = " +
                std::to_string((1.0 - rho) * mu_sigma)};
  return {};
}

Certificate certify_inverse(const MeasureOracle& m, Mask sigma, Mask lambda0, double c,
                            const Options& options) {
  if (lambda0 == 0) return {false, lambda0, "lambda0 is empty"};
  if (lambda0 & ~sigma) return {false, lambda0, "lambda0 is not inside sigma"};
  check_scan(m, lambda0, options, "certificate scan");
  const double mu0 = m(lambda0);
  if (!(mu0 > 0.0)) return {false, lambda0, "mu(lambda0) is not positive"};
  const double tol = m.tolerance();
  const double size0 = popcount(lambda0);
  const std::vector<Mask> subsets = subsets_by_size(lambda0, 1, popcount(lambda0));
  const std::size_t i = parallel_find_first(subsets.size(), options.jobs, [&](std::size_t j) {
    return !approx_leq(std::pow(m(subsets[j]) / mu0, c), popcount(subsets[j]) / size0, tol);
  });
  if (i < subsets.size())
    return {false, subsets[i],
            "|T|/|lambda0| < (mu(T)/mu(lambda0))^c at T = " + mask_str(subsets[i])};
  const double floor = std::pow(1.0 / popcount(sigma), 1.0 / c) * m(sigma);
  if (approx_less(mu0, floor, tol))
    return {false, lambda0,
            "mu(lambda0) = " + std::to_string(mu0) + " < " + std::to_string(floor)};
  return {};
}

FortificationResult fortify(const MeasureOracle& m, Mask sigma, const Options& options) {
  if (sigma == 0) throw Error(ErrorCode::kEmptyCellSet, "sigma must be nonempty");
  check_scan(m, sigma, options, "fortification");
  FortificationResult r;
  r.sigma = sigma;
  r.mu_sigma = m(sigma);
  const int n = popcount(sigma);
  if (n == 1) {
    // A singleton is 1-fortified by itself.
    r.lambda0 = r.lambda = sigma;
    r.c = 1.0;
    r.weak_rho = 0.5;
    r.rho = 1.0;
  } else {
    r.c = std::log2(static_cast<double>(n));
    r.weak_rho = 1.0 / (2.0 * r.c);
    r.rho = 1.0 / (4.0 * r.c);
    InverseFortification inv = inverse_fortify(m, sigma, r.c, options);
    r.lambda0 = inv.lambda0;
    r.inverse_trace = std::move(inv.trace);
    WeakFortification weak = weak_fortify(m, r.lambda0, r.weak_rho, options);
    r.lambda = weak.lambda1;
    r.weak_trace = std::move(weak.trace);
  }
  r.mu_lambda0 = m(r.lambda0);
  r.mu_lambda = m(r.lambda);

  const Certificate cert = certify_fortified(m, r.lambda, r.rho, options);
  if (!cert) {
    r.failure = cert.reason;
  } else if (approx_less(r.mu_lambda, r.mu_sigma / 4.0, m.tolerance())) {
    r.failure = "mu(lambda) = " + std::to_string(r.mu_lambda) + " < mu(sigma)/4 = " +
                std::to_string(r.mu_sigma / 4.0);
  }
  r.certified = r.failure.empty();
  return r;
}

CoverFortification fortify_cover(const Problem& p, const Options& options) {
  if (!p.total()) throw Error(ErrorCode::kNotTotal, p.name() + " has an uncolorable cell");
  if (p.cell_count() > options.subset_cap)
    throw Error(ErrorCode::kSizeCap, "cover fortification over " +
                                         std::to_string(p.cell_count()) +
                                         " cells exceeds cap " +
                                         std::to_string(options.subset_cap));
  const MeasureOracle m = cover_measure(p, options);
  CoverFortification out;
  out.fortification = fortify(m, m.ground(), options);
  out.cov = static_cast<int>(out.fortification.mu_sigma);
  out.fooling = min_fooling_delta(p, CellSet::from_mask(out.fortification.lambda), options);

  const double log_cells = std::log2(static_cast<double>(p.cell_count()));
  out.delta_nominal = 16.0 * log_cells / out.cov;
  out.delta_within_nominal =
      out.fooling.delta.to_double() <= std::max(out.delta_nominal, 1.0) + 1e-12;
  if (p.cell_count() == 1) {
    out.cover_density_certified = true;
  } else {
    out.cover_density_certified =
        certify_density(m, out.fortification.lambda, 1.0 / (16.0 * log_cells), out.cov, options)
            .ok;
  }
  return out;
}

}  // namespace commbench
