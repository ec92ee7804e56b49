#include <gtest/gtest.h>

#include "mrsk/error.hpp"
#include "mrsk/mirabolic.hpp"
#include "mrsk/rsk.hpp"
#include "test_util.hpp"

namespace mrsk {
namespace {

const MarginMatrix kExampleM({{1, 0, 2}, {1, 1, 0}, {0, 3, 0}});
const TwoRowArray kExampleOmega{{1, 1, 2, 2, 2, 2, 3, 3}, {2, 1, 3, 3, 3, 2, 1, 1}};

const TwoRowArray kWorkedOmega{{1, 1, 2, 2, 3, 3, 3}, {4, 2, 3, 1, 4, 2, 1}};
const MirabolicOutput kWorkedOut{Partition{4, 2, 1}, Partition{3, 2, 1}, Partition{3, 2, 1, 1},
                                   Tableau{{1, 2, 3, 4}, {1, 2}, {4}}, Tableau{{1, 2, 3}, {1, 3}, {2}, {3}}};

TEST(DeltaToBeta, Examples) {
  const auto da = delta_to_beta(DecoratedMatrix{kExampleM, {{1, 3}, {2, 1}}});
  EXPECT_EQ(da.omega, kExampleOmega);
  EXPECT_EQ(da.beta, (std::set<int>{1, 2, 7, 8}));

  EXPECT_TRUE(delta_to_beta(DecoratedMatrix{kExampleM, {}}).beta.empty());

  const auto all = delta_to_beta(DecoratedMatrix{MarginMatrix({{1, 0}, {0, 1}}), {{2, 2}}});
  EXPECT_EQ(all.beta, (std::set<int>{1, 2}));
}

TEST(DeltaToBeta, RejectsZeroEntryAndNonAntichain) {
  EXPECT_THROW(delta_to_beta(DecoratedMatrix{kExampleM, {{1, 2}}}), Error);
  EXPECT_THROW(delta_to_beta(DecoratedMatrix{kExampleM, {{1, 1}, {2, 2}}}), Error);
}

TEST(BetaToDelta, Examples) {
  const auto dm = beta_to_delta(DecoratedArray{kExampleOmega, {1, 2, 7, 8}});
  EXPECT_EQ(dm.m, kExampleM);
  EXPECT_EQ(dm.delta, (std::set<MatrixPos>{{1, 3}, {2, 1}}));

  EXPECT_EQ(beta_to_delta(DecoratedArray{TwoRowArray{{1, 2}, {1, 2}}, {1, 2}}).delta, (std::set<MatrixPos>{{2, 2}}));

  // Column 2 of the worked-example array, (u,w) = (1,2), is minimal.
  EXPECT_EQ(beta_to_delta(DecoratedArray{kWorkedOmega, {2}}).delta, (std::set<MatrixPos>{{2, 1}}));
  EXPECT_THROW(beta_to_delta(DecoratedArray{kExampleOmega, {}}), Error);
}

TEST(ValidateDecoration, Examples) {
  EXPECT_TRUE(validate_decoration(DecoratedArray{kWorkedOmega, {4, 7}}));
  EXPECT_TRUE(validate_decoration(DecoratedArray{kWorkedOmega, {}}));
  EXPECT_FALSE(validate_decoration(DecoratedArray{kWorkedOmega, {7}}));
  EXPECT_FALSE(validate_decoration(DecoratedArray{kWorkedOmega, {9}}));
}

TEST(ValidateDecoration, EqualColumnsAllOrNone) {
  const TwoRowArray a{{1, 1}, {1, 1}};
  EXPECT_TRUE(validate_decoration(DecoratedArray{a, {1, 2}}));
  EXPECT_FALSE(validate_decoration(DecoratedArray{a, {1}}));
  EXPECT_FALSE(validate_decoration(DecoratedArray{a, {2}}));
}

TEST(MirabolicRsk, WorkedExampleTrace) {
  const auto tr = mirabolic_rsk_traced(DecoratedArray{kWorkedOmega, {4, 7}});
  EXPECT_EQ(tr.initial_reserve, (std::vector<int>{8, 9, 10, 11, 12, 13, 14}));
  const std::vector<std::vector<int>> reserves{{4, 9, 10, 11, 12, 13, 14}, {2, 9, 10, 11, 12, 13, 14},
                                               {2, 3, 10, 11, 12, 13, 14}, {2, 3, 10, 11, 12, 13, 14},
                                               {2, 3, 4, 11, 12, 13, 14},  {2, 3, 4, 11, 12, 13, 14},
                                               {2, 3, 4, 11, 12, 13, 14}};
  const std::vector<Tableau> ts{Tableau{{8}},
                                Tableau{{4}, {8}},
                                Tableau{{4, 9}, {8}},
                                Tableau{{1, 9}, {4}, {8}},
                                Tableau{{1, 9, 10}, {4}, {8}},
                                Tableau{{1, 2, 10}, {4, 9}, {8}},
                                Tableau{{1, 2, 10}, {1, 9}, {4}, {8}}};
  const std::vector<Tableau> tps{Tableau{{1}},
                                 Tableau{{1}, {1}},
                                 Tableau{{1, 2}, {1}},
                                 Tableau{{1, 2}, {1}, {2}},
                                 Tableau{{1, 2, 3}, {1}, {2}},
                                 Tableau{{1, 2, 3}, {1, 3}, {2}},
                                 Tableau{{1, 2, 3}, {1, 3}, {2}, {3}}};
  ASSERT_EQ(tr.steps.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) {
    SCOPED_TRACE(i + 1);
    EXPECT_EQ(tr.steps[i].reserve, reserves[i]);
    EXPECT_EQ(tr.steps[i].t, ts[i]);
    EXPECT_EQ(tr.steps[i].t_prime, tps[i]);
  }
  EXPECT_EQ(tr.t_full, (Tableau{{1, 2, 3, 4, 11, 12, 13, 14}, {1, 2, 10}, {4, 9}, {8}}));
  EXPECT_EQ(tr.nu, (Partition{8, 3, 2, 1}));
  EXPECT_EQ(tr.output, kWorkedOut);
}

TEST(MirabolicRsk, SizeOne) {
  const TwoRowArray one{{1}, {1}};
  EXPECT_EQ(mirabolic_rsk(DecoratedArray{one, {1}}),
            (MirabolicOutput{Partition{1}, Partition{}, Partition{1}, Tableau{{1}}, Tableau{{1}}}));
  EXPECT_EQ(mirabolic_rsk(DecoratedArray{one, {}}),
            (MirabolicOutput{Partition{1}, Partition{1}, Partition{1}, Tableau{{1}}, Tableau{{1}}}));
}

TEST(MirabolicRsk, RejectsInvalidInput) {
  EXPECT_THROW(mirabolic_rsk(DecoratedArray{kWorkedOmega, {7}}), Error);
  EXPECT_THROW(mirabolic_rsk(DecoratedArray{TwoRowArray{{1, 1}, {1, 2}}, {}}), NotOrderedError);
}

TEST(MirabolicInverseSearch, Examples) {
  EXPECT_EQ(mirabolic_inverse_search(kWorkedOut, Composition{2, 2, 1, 2}, Composition{2, 2, 3}, 7),
            (DecoratedArray{kWorkedOmega, {4, 7}}));
  const TwoRowArray one{{1}, {1}};
  EXPECT_EQ(mirabolic_inverse_search(mirabolic_rsk(DecoratedArray{one, {}}), Composition{1}, Composition{1}),
            (DecoratedArray{one, {}}));
  EXPECT_THROW(mirabolic_inverse_search(kWorkedOut, Composition{2, 2, 1, 2}, Composition{2, 2, 3}), Error);
}

TEST(MirabolicProperty, FullDecorationIsPlainRsk) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testing::random_array(std::uniform_int_distribution<int>(1, 8)(rng), rng);
    DecoratedArray da{a, {}};
    for (int l = 1; l <= static_cast<int>(a.size()); ++l) da.beta.insert(l);
    const auto out = mirabolic_rsk(da);
    const auto [p, q] = rsk_forward(a);
    EXPECT_EQ(out.t, p);
    EXPECT_EQ(out.t_prime, q);
    auto rest = p.shape().parts();
    rest.erase(rest.begin());
    EXPECT_EQ(out.theta, Partition(rest));
  }
}

TEST(MirabolicProperty, OutputsInterlaceAndMatchShapes) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& mup : enumerate_compositions(d))
        for (const auto& da : enumerate_decorated_arrays(mu, mup)) {
          const auto tr = mirabolic_rsk_traced(da);
          const auto& o = tr.output;
          EXPECT_TRUE(interlaces(o.lambda, o.theta));
          EXPECT_TRUE(interlaces(o.lambda_prime, o.theta));
          EXPECT_EQ(o.t.shape(), o.lambda);
          EXPECT_EQ(o.t_prime.shape(), o.lambda_prime);
          EXPECT_EQ(o.t_prime.shape(), tr.steps.back().t.shape());
          EXPECT_TRUE(o.t.is_semistandard());
          EXPECT_TRUE(o.t_prime.is_semistandard());
          EXPECT_EQ(Composition::from_content(o.t.content()), mu);
          EXPECT_EQ(Composition::from_content(o.t_prime.content()), mup);
        }
}

TEST(Dictionary, DeltaBetaRoundTripExhaustive) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& mup : enumerate_compositions(d))
        for (const auto& da : enumerate_decorated_arrays(mu, mup)) {
          if (da.beta.empty()) continue;
          const auto dm = beta_to_delta(da);
          EXPECT_TRUE(dm.is_valid());
          EXPECT_EQ(delta_to_beta(dm), da);
        }
}

// Oracle for the decoration condition: beta must be a down-set of columns
// under the product order on (u, w).
TEST(EnumerateDecoratedArrays, MatchesDownSetOracle) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& mup : enumerate_compositions(d)) {
        std::set<DecoratedArray> oracle;
        for (const auto& m : enumerate_margin_matrices(mu, mup)) {
          const auto a = matrix_to_array(m);
          for (unsigned mask = 0; mask < (1u << d); ++mask) {
            bool ok = true;
            for (int j = 0; j < d && ok; ++j) {
              if (!(mask >> j & 1u)) continue;
              for (int i = 0; i < d && ok; ++i)
                if (!(mask >> i & 1u) && a.u[static_cast<std::size_t>(i)] <= a.u[static_cast<std::size_t>(j)] &&
                    a.w[static_cast<std::size_t>(i)] <= a.w[static_cast<std::size_t>(j)])
                  ok = false;
            }
            if (!ok) continue;
            DecoratedArray da{a, {}};
            for (int l = 0; l < d; ++l)
              if (mask >> l & 1u) da.beta.insert(l + 1);
            oracle.insert(da);
          }
        }
        const auto got = enumerate_decorated_arrays(mu, mup);
        EXPECT_EQ(std::set<DecoratedArray>(got.begin(), got.end()), oracle);
        EXPECT_EQ(got.size(), oracle.size());
      }
}

TEST(MirabolicBijection, ExhaustiveUpToThree) {
  for (int d = 1; d <= 3; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& mup : enumerate_compositions(d)) {
        const auto arrays = enumerate_decorated_arrays(mu, mup);
        const auto outputs = enumerate_mirabolic_outputs(mu, mup);
        std::set<MirabolicOutput> image;
        for (const auto& da : arrays) EXPECT_TRUE(image.insert(mirabolic_rsk(da)).second);
        EXPECT_EQ(image, std::set<MirabolicOutput>(outputs.begin(), outputs.end()));
        for (const auto& o : outputs) EXPECT_EQ(mirabolic_rsk(mirabolic_inverse_search(o, mu, mup)), o);
      }
}

}  // namespace
}  // namespace mrsk
