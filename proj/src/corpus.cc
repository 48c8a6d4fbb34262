#include "commbench/corpus.h"

#include <string>

namespace commbench {

std::vector<std::string> bundled_names() { return {"EQ1", "EQ2", "AND2", "GT2", "CONST"}; }

std::optional<Problem> bundled_problem(std::string_view name) {
  if (name == "EQ1") return equality_problem(1);
  if (name == "EQ2") return equality_problem(2);
  if (name == "AND2") return and_problem();
  if (name == "GT2") return greater_than_problem(2);
  if (name == "CONST") return constant_problem(4, 4);
  return std::nullopt;
}

Problem equality_problem(int bits) {
  const int n = 1 << bits;
  std::vector<std::vector<int>> grid(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) grid[i][i] = 1;
  return make_function_problem(grid, 2, "EQ" + std::to_string(bits));
}

Problem greater_than_problem(int bits) {
  const int n = 1 << bits;
  std::vector<std::vector<int>> grid(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) grid[x][y] = x > y ? 1 : 0;
  return make_function_problem(grid, 2, "GT" + std::to_string(bits));
}

Problem and_problem() { return make_function_problem({{0, 0}, {0, 1}}, 2, "AND2"); }

Problem constant_problem(int rows, int cols) {
  return make_function_problem(std::vector<std::vector<int>>(rows, std::vector<int>(cols, 0)), 1,
                               "CONST");
}

std::vector<Problem> all_functions(int rows, int cols, int colors) {
  const int cells = rows * cols;
  std::uint64_t count = 1;
  for (int i = 0; i < cells; ++i) count *= static_cast<std::uint64_t>(colors);
  std::vector<Problem> out;
  out.reserve(count);
  std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t rest = code;
    std::string name = "f" + std::to_string(rows) + "x" + std::to_string(cols) + ":";
    for (int i = cells - 1; i >= 0; --i) {
      grid[i / cols][i % cols] = static_cast<int>(rest % colors);
      rest /= colors;
    }
    for (const auto& row : grid)
      for (int v : row) name += std::to_string(v);
    out.push_back(make_function_problem(grid, colors, name));
  }
  return out;
}

Problem random_function(std::mt19937_64& rng, int rows, int cols, int colors) {
  std::uniform_int_distribution<int> pick(0, colors - 1);
  std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
  std::string name = "rand" + std::to_string(rows) + "x" + std::to_string(cols) + ":";
  for (auto& row : grid)
    for (int& v : row) {
      v = pick(rng);
      name += std::to_string(v);
    }
  return make_function_problem(grid, colors, name);
}

Problem random_relation(std::mt19937_64& rng, int rows, int cols, int colors, double density) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> pick(0, colors - 1);
  std::vector<AcceptTriple> accept;
  for (int x = 0; x < rows; ++x)
    for (int y = 0; y < cols; ++y) {
      bool any = false;
      for (int z = 0; z < colors; ++z)
        if (keep(rng)) {
          accept.push_back({x, y, z});
          any = true;
        }
      if (!any) accept.push_back({x, y, pick(rng)});
    }
  return make_relation_problem(rows, cols, colors, accept,
                               "relation" + std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace commbench
