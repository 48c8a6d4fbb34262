#pragma once

#include <algorithm>

namespace commbench {

// Size caps and worker count shared by all solvers. Caps fail loudly with
// ErrorCode::kSizeCap instead of truncating.
struct Options {
  int enum_row_cap = 16;   // rows for 2^nx closure enumeration
  int protocol_cap = 16;   // |rows| + |cols| of a protocol query
  int subset_cap = 16;     // ground size for exhaustive subset scans
  int jobs = 1;

  // Applies a single --cap override to every cap.
  static Options with_cap(int cap, int jobs = 1) {
    Options o;
    o.enum_row_cap = std::min(cap, 30);
    o.protocol_cap = std::min(cap, 40);
    o.subset_cap = std::min(cap, 30);
    o.jobs = jobs;
    return o;
  }
};

}  // namespace commbench
