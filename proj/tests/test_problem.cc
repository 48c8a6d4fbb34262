#include <gtest/gtest.h>

#include <random>

#include "commbench/corpus.h"
#include "commbench/problem.h"
#include "commbench/rational.h"
#include "oracles.h"

using namespace commbench;

namespace {

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << error_code_name(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Bits, MaskHelpers) {
  EXPECT_EQ(mask_indices(0b1011), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(mask_from_indices({0, 1, 3}), Mask{0b1011});
  EXPECT_EQ(low_mask(64), ~Mask{0});
  // {0,2} < {1}: index lists compared lexicographically
  EXPECT_TRUE(lex_less(Mask{0b101}, Mask{0b010}));
  EXPECT_TRUE(lex_less(Mask{0b001}, Mask{0b011}));
  EXPECT_FALSE(lex_less(Mask{0b011}, Mask{0b011}));
}

TEST(Bits, CellSetOps) {
  CellSet a;
  a.insert(3);
  a.insert(200);
  CellSet b = CellSet::first_n(4);
  EXPECT_EQ(a.size(), 2);
  EXPECT_EQ(b.size(), 4);
  EXPECT_EQ((a & b).size(), 1);
  EXPECT_EQ((a | b).size(), 5);
  EXPECT_EQ((b - a).indices(), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(a.contains(200));
  EXPECT_FALSE(a.fits_in_mask());
  EXPECT_EQ(a.first(), 3);
  EXPECT_TRUE(CellSet{}.empty());
}

TEST(Rational, Arithmetic) {
  const Rational half(1, 2);
  EXPECT_EQ(half + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(4, 8), half);
  EXPECT_EQ(Rational(4, -8), Rational(-1, 2));
  EXPECT_EQ(Rational(7, 2).ceil(), 4);
  EXPECT_EQ(Rational(8, 2).ceil(), 4);
  EXPECT_LT(Rational(1, 3), half);
  EXPECT_EQ(Rational(3, 4).str(), "3/4");
  EXPECT_EQ(Rational(4).str(), "4");
  expect_code(ErrorCode::kInvalidArgument, [] { Rational(1, 0); });
}

TEST(Problem, FunctionExamples) {
  const Problem c = make_function_problem({{0, 0}, {0, 0}}, 1);
  EXPECT_TRUE(c.total());
  EXPECT_TRUE(c.is_function());
  EXPECT_EQ(valid_colors(c, c.full_rect()), Mask{1});

  const Problem eq = equality_problem(1);
  EXPECT_EQ(eq.rows(), 2);
  EXPECT_EQ(eq.function_value(0, 0), 1);
  EXPECT_EQ(eq.function_value(0, 1), 0);
  EXPECT_EQ(valid_colors(eq, {0b01, 0b01}), Mask{0b10});
  EXPECT_EQ(valid_colors(eq, eq.full_rect()), Mask{0});

  const Problem a = and_problem();
  EXPECT_EQ(a.function_value(1, 1), 1);
  EXPECT_EQ(a.function_value(0, 1), 0);

  EXPECT_EQ(valid_colors(constant_problem(4, 4), constant_problem(4, 4).full_rect()), Mask{1});
}

TEST(Problem, Errors) {
  expect_code(ErrorCode::kInvalidColor, [] { make_function_problem({{0, 2}}, 2); });
  expect_code(ErrorCode::kInvalidColor, [] { make_function_problem({{-1}}, 2); });
  expect_code(ErrorCode::kInvalidArgument, [] { make_function_problem({{0, 1}, {0}}, 2); });
  expect_code(ErrorCode::kEmptyRect, [] { valid_colors(equality_problem(1), {0, 1}); });
  expect_code(ErrorCode::kInvalidArgument, [] { make_relation_problem(2, 2, 2, {{2, 0, 0}}); });
  expect_code(ErrorCode::kNotAProduct,
              [] { project_s(equality_problem(1), equality_problem(1).full_rect()); });
}

TEST(Problem, RelationTotality) {
  const Problem partial = make_relation_problem(2, 2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}});
  EXPECT_FALSE(partial.total());
  EXPECT_FALSE(partial.is_function());
  EXPECT_EQ(partial.first_uncolorable(partial.all_cells()), partial.cell(1, 0));

  const Problem both = make_relation_problem(1, 1, 2, {{0, 0, 0}, {0, 0, 1}});
  EXPECT_TRUE(both.total());
  EXPECT_FALSE(both.is_function());
  EXPECT_EQ(valid_colors(both, both.full_rect()), Mask{0b11});
}

TEST(Problem, ProductExamples) {
  const Problem eq = equality_problem(1);
  const Problem pr = product(eq, eq);
  EXPECT_EQ(pr.rows(), 4);
  EXPECT_EQ(pr.cols(), 4);
  EXPECT_EQ(pr.colors(), 4);
  EXPECT_TRUE(pr.total());
  EXPECT_EQ(project_s(pr, pr.full_rect()), eq.full_rect());
  EXPECT_EQ(project_t(pr, pr.full_rect()), eq.full_rect());
  // row (a,p) = a*2 + p; {(0,0)} x {(1,1)} -> S rect {0}x{1}
  EXPECT_EQ(project_s(pr, {bit(0), bit(3)}), (Rect{bit(0), bit(1)}));
  EXPECT_EQ(project_t(pr, {bit(0), bit(3)}), (Rect{bit(0), bit(1)}));
  // color (o,z) -> o*2+z; cell ((0,0),(0,0)) has EQ values (1,1) -> 3
  EXPECT_TRUE(pr.accepts(0, 0, 3));
  EXPECT_EQ(pr.cell_colors(0, 0), Mask{1} << 3);

  const Problem c = constant_problem(2, 2);
  const Problem cc = product(c, c);
  EXPECT_EQ(cc.colors(), 1);
  EXPECT_EQ(valid_colors(cc, cc.full_rect()), Mask{1});

  expect_code(ErrorCode::kSizeCap, [&] { product(constant_problem(4, 4), constant_problem(4, 4), 100); });
}

TEST(Problem, ProductMatchesDefinition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Problem s = random_relation(rng, 2, 3, 2, 0.5);
    const Problem t = random_function(rng, 3, 2, 3);
    const Problem st = product(s, t);
    for (int a = 0; a < 2; ++a)
      for (int p = 0; p < 3; ++p)
        for (int b = 0; b < 3; ++b)
          for (int q = 0; q < 2; ++q)
            for (int o = 0; o < 2; ++o)
              for (int z = 0; z < 3; ++z)
                ASSERT_EQ(st.accepts(a * 3 + p, b * 2 + q, o * 3 + z),
                          s.accepts(a, b, o) && t.accepts(p, q, z));
  }
}

TEST(Problem, ProjectionOfMonochromaticIsMonochromatic) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> side(1, 3);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Problem s = random_function(rng, side(rng), side(rng), 2);
    const Problem t = random_function(rng, side(rng), side(rng), 2);
    const Problem st = product(s, t);
    std::uniform_int_distribution<Mask> rows(1, st.all_rows()), cols(1, st.all_cols());
    const Rect r{rows(rng), cols(rng)};
    if (oracle::mono_color(st, r.rows, r.cols) < 0) continue;
    ++checked;
    const Rect rs = project_s(st, r);
    const Rect rt = project_t(st, r);
    EXPECT_GE(oracle::mono_color(s, rs.rows, rs.cols), 0);
    EXPECT_GE(oracle::mono_color(t, rt.rows, rt.cols), 0);
  }
  EXPECT_GT(checked, 10);
}

TEST(Problem, SameRelationIgnoresName) {
  EXPECT_TRUE(equality_problem(1).same_relation(make_function_problem({{1, 0}, {0, 1}}, 2, "x")));
  EXPECT_FALSE(equality_problem(1).same_relation(and_problem()));
}

TEST(Corpus, Bundled) {
  for (const auto& n : bundled_names()) {
    const auto p = bundled_problem(n);
    ASSERT_TRUE(p.has_value()) << n;
    EXPECT_TRUE(p->total());
  }
  EXPECT_FALSE(bundled_problem("nope").has_value());
  EXPECT_EQ(all_functions(2, 2, 2).size(), 16u);
  EXPECT_EQ(all_functions(1, 3, 3).size(), 27u);
  EXPECT_EQ(greater_than_problem(2).function_value(3, 0), 1);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_TRUE(random_relation(rng, 3, 3, 3, 0.2).total());
}
