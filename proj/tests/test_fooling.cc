#include <gtest/gtest.h>

#include <random>

#include "commbench/corpus.h"
#include "commbench/cover.h"
#include "commbench/fooling.h"
#include "commbench/fortify.h"
#include "oracles.h"

using namespace commbench;

namespace {

CellSet diag(const Problem& p) {
  CellSet s;
  s.insert(p.cell(0, 0));
  s.insert(p.cell(1, 1));
  return s;
}

}  // namespace

TEST(Fooling, Examples) {
  const Problem eq = equality_problem(1);
  const FoolingCertificate d = min_fooling_delta(eq, diag(eq));
  EXPECT_EQ(d.delta, Rational(1, 2));
  EXPECT_EQ(cov_lower_bound(d), 2);
  EXPECT_EQ(cover_number(eq, diag(eq)).value, 2);

  const Problem c = constant_problem(4, 4);
  CellSet some;
  some.insert(3);
  some.insert(9);
  some.insert(15);
  const FoolingCertificate cc = min_fooling_delta(c, some);
  EXPECT_EQ(cc.delta, Rational(1));
  EXPECT_EQ(cov_lower_bound(cc), 1);

  const Problem a = and_problem();
  const FoolingCertificate ad = min_fooling_delta(a, diag(a));
  EXPECT_EQ(ad.delta, Rational(1, 2));
  EXPECT_EQ(cov_lower_bound(ad), 2);
  EXPECT_EQ(cover_number(a, diag(a)).value, 2);
}

TEST(Fooling, IsDeltaFooling) {
  const Problem eq = equality_problem(1);
  const MonoRectIndex idx = enumerate_maximal(eq);
  EXPECT_TRUE(is_delta_fooling(idx, diag(eq), Rational(1, 2)));
  EXPECT_FALSE(is_delta_fooling(idx, diag(eq), Rational(1, 4)));
  EXPECT_TRUE(is_delta_fooling(idx, eq.all_cells(), Rational(1)));
  EXPECT_THROW(is_delta_fooling(idx, diag(eq), Rational(0)), Error);
  EXPECT_THROW(is_delta_fooling(idx, diag(eq), Rational(3, 2)), Error);
  EXPECT_THROW(min_fooling_delta(eq, CellSet{}), Error);
}

TEST(Fooling, Search) {
  const Problem eq = equality_problem(1);
  // every maximal rect of EQ1 is a single cell, so the whole domain gives 1/4
  const FoolingCertificate ex = search_fooling(eq, FoolingStrategy::kExhaustive);
  EXPECT_EQ(ex.delta, Rational(1, 4));
  EXPECT_EQ(ex.lambda, eq.all_cells());
  const FoolingCertificate two = search_fooling(eq, FoolingStrategy::kExhaustive, 2);
  EXPECT_EQ(two.delta, Rational(1, 2));
  EXPECT_EQ(two.lambda.size(), 2);

  const FoolingCertificate cex = search_fooling(constant_problem(2, 2), FoolingStrategy::kExhaustive);
  EXPECT_EQ(cex.delta, Rational(1));

  const FoolingCertificate gr = search_fooling(eq, FoolingStrategy::kGreedy);
  EXPECT_LE(gr.delta, Rational(1, 2));

  const FoolingCertificate fo = search_fooling(eq, FoolingStrategy::kFortify);
  EXPECT_TRUE(certify_fortified(cover_measure(eq), fo.lambda.low_word(), 1.0 / 8));

  Options o;
  o.subset_cap = 8;
  EXPECT_THROW(search_fooling(equality_problem(2), FoolingStrategy::kExhaustive, std::nullopt, o), Error);
  EXPECT_EQ(parse_fooling_strategy("greedy"), FoolingStrategy::kGreedy);
  EXPECT_FALSE(parse_fooling_strategy("magic").has_value());
}

TEST(Fooling, LiteralDefinitionAgrees) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    const Problem p = i % 2 ? random_function(rng, 3, 3, 3) : random_relation(rng, 3, 3, 2, 0.4);
    const MonoRectIndex idx = enumerate_maximal(p);
    std::uniform_int_distribution<std::uint64_t> pick(1, 511);
    for (int k = 0; k < 20; ++k) {
      const CellSet lam = CellSet::from_mask(pick(rng));
      const auto cells = lam.indices();
      const FoolingCertificate c = min_fooling_delta(idx, lam);
      EXPECT_EQ(c.delta, oracle::literal_min_delta(p, cells));
      const int n = lam.size();
      for (int j = 1; j <= n; ++j)
        EXPECT_EQ(is_delta_fooling(idx, lam, Rational(j, n)),
                  oracle::literal_is_fooling(p, cells, Rational(j, n)));
      EXPECT_LE(c.cov_lb, oracle::min_cover(p, lam.low_word()));
    }
  }
}

TEST(Fooling, GreedyAndExhaustiveShardsAgree) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 6; ++i) {
    const Problem p = random_function(rng, 3, 4, 2);
    Options four;
    four.jobs = 4;
    const FoolingCertificate a = search_fooling(p, FoolingStrategy::kExhaustive);
    const FoolingCertificate b = search_fooling(p, FoolingStrategy::kExhaustive, std::nullopt, four);
    EXPECT_EQ(a.lambda, b.lambda);
    EXPECT_EQ(a.delta, b.delta);
  }
}
