#pragma once

#include <optional>
#include <string_view>

#include "commbench/options.h"
#include "commbench/problem.h"
#include "commbench/rational.h"
#include "commbench/rect_enum.h"

namespace commbench {

// Lambda with the least delta for which it is delta-fooling:
// delta = (max cells of lambda inside one monochromatic rectangle) / |lambda|.
struct FoolingCertificate {
  CellSet lambda;
  Rational delta;
  ColoredRect witness;  // a rectangle achieving the maximum overlap
  int cov_lb = 0;       // ceil(1 / delta)
};

// Throws kEmptyCellSet; kUncoverable when no monochromatic rectangle touches
// lambda (delta would be 0).
FoolingCertificate min_fooling_delta(const MonoRectIndex& index, const CellSet& lambda);
FoolingCertificate min_fooling_delta(const Problem& p, const CellSet& lambda,
                                     const Options& options = {});

// lambda is delta-fooling iff every monochromatic rectangle holds at most
// delta * |lambda| of its cells. Requires 0 < delta <= 1.
bool is_delta_fooling(const MonoRectIndex& index, const CellSet& lambda, const Rational& delta);

int cov_lower_bound(const FoolingCertificate& cert);

enum class FoolingStrategy { kExhaustive, kGreedy, kFortify };

std::optional<FoolingStrategy> parse_fooling_strategy(std::string_view name);
std::string_view fooling_strategy_name(FoolingStrategy s);

// Preference order between certificates: smaller delta, then larger lambda,
// then lexicographically smaller lambda.
bool better_certificate(const FoolingCertificate& a, const FoolingCertificate& b);

// kExhaustive scans every nonempty colorable cell subset (nx*ny <= subset
// cap); with a size hint only subsets of that size. kGreedy grows lambda one
// cell at a time (up to the size hint) and keeps the best prefix. kFortify
// returns the fortified set produced by fortify_cover.
FoolingCertificate search_fooling(const Problem& p, FoolingStrategy strategy,
                                  std::optional<int> size_hint = std::nullopt,
                                  const Options& options = {});

}  // namespace commbench
