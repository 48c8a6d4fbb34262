#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "commbench/problem.h"

namespace commbench {

// Bundled named problems: EQ1, EQ2, AND2, GT2, CONST.
std::vector<std::string> bundled_names();
std::optional<Problem> bundled_problem(std::string_view name);

// Equality and greater-than on `bits`-bit inputs.
Problem equality_problem(int bits);
Problem greater_than_problem(int bits);
Problem and_problem();
Problem constant_problem(int rows, int cols);

// Every function rows x cols -> [0, colors), in base-`colors` row-major
// counting order (cell 0 most significant).
std::vector<Problem> all_functions(int rows, int cols, int colors);

Problem random_function(std::mt19937_64& rng, int rows, int cols, int colors);
// Each triple accepted with probability `density`; every cell keeps at
// least one color so the relation is total.
Problem random_relation(std::mt19937_64& rng, int rows, int cols, int colors, double density);

}  // namespace commbench
