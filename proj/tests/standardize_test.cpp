#include <gtest/gtest.h>

#include <numeric>

#include "mrsk/error.hpp"
#include "mrsk/rsk.hpp"
#include "mrsk/standardize.hpp"
#include "test_util.hpp"

namespace mrsk {
namespace {

const TwoRowArray kOmega{{1, 2, 2, 3, 3}, {1, 3, 1, 2, 2}};

TEST(StdTableau, Examples) {
  EXPECT_EQ(std_tableau(Tableau{{1, 2}, {1, 2}, {3}}), (Tableau{{1, 3}, {2, 4}, {5}}));
  EXPECT_EQ(std_tableau(Tableau{{1, 3}, {2, 4}, {5}}), (Tableau{{1, 3}, {2, 4}, {5}}));
  EXPECT_EQ(std_tableau(Tableau{{1, 2}, {2, 3}, {3}}), (Tableau{{1, 2}, {3, 4}, {5}}));
  EXPECT_THROW(std_tableau(Tableau{{1, 1}}), NotSemistandardError);
}

// The textbook convention (weak rows, strict columns) numbers equal entries
// left to right.
TEST(StdTableau, ClassicalConvention) {
  EXPECT_EQ(std_tableau(Tableau{{1, 1, 2}, {2}, {3}}, StdConvention::Classical), (Tableau{{1, 2, 4}, {3}, {5}}));
  EXPECT_EQ(std_tableau(Tableau{{1, 2, 3}, {2}, {3}}, StdConvention::Classical), (Tableau{{1, 3, 5}, {2}, {4}}));
}

TEST(StdArray, Examples) {
  EXPECT_EQ(std_array(kOmega), (TwoRowArray{{1, 2, 3, 4, 5}, {2, 5, 1, 4, 3}}));
  const TwoRowArray perm{{1, 2, 3}, {3, 1, 2}};
  EXPECT_EQ(std_array(perm), perm);
  EXPECT_EQ(std_array(TwoRowArray{{1, 1}, {1, 1}}), (TwoRowArray{{1, 2}, {2, 1}}));
  EXPECT_THROW(std_array(TwoRowArray{{1, 1}, {1, 2}}), NotOrderedError);
}

TEST(StdArray, ClassicalConvention) {
  const TwoRowArray lex{{1, 2, 2, 3, 3}, {3, 1, 2, 1, 2}};
  EXPECT_EQ(std_array(lex, StdConvention::Classical), (TwoRowArray{{1, 2, 3, 4, 5}, {5, 1, 3, 2, 4}}));
}

TEST(StdInverse, Examples) {
  EXPECT_EQ(std_inverse(TwoRowArray{{1, 2, 3, 4, 5}, {2, 5, 1, 4, 3}}, Composition{2, 2, 1}, Composition{1, 2, 2}),
            kOmega);
  const TwoRowArray id{{1, 2, 3, 4}, {1, 2, 3, 4}};
  EXPECT_EQ(std_inverse(id, Composition::ones(4), Composition::ones(4)), id);
  EXPECT_EQ(std_inverse(TwoRowArray{{1, 2}, {2, 1}}, Composition{2}, Composition{1, 1}), (TwoRowArray{{1, 2}, {1, 1}}));
}

TEST(StdInverse, RejectsPermutationsOutsideImage) {
  // Increasing letters inside one block cannot come from the decreasing rule.
  EXPECT_THROW(std_inverse(TwoRowArray{{1, 2}, {1, 2}}, Composition{2}, Composition{1, 1}), NotInImageError);
  EXPECT_THROW(std_inverse(TwoRowArray{{1, 2}, {1, 2}}, Composition{3}, Composition{1, 1}), NotInImageError);
}

TEST(CheckCommute, Examples) {
  EXPECT_TRUE(check_commute(kOmega));
  const auto [p, q] = rsk_forward(std_array(kOmega));
  EXPECT_EQ(p, (Tableau{{1, 3}, {2, 4}, {5}}));
  EXPECT_EQ(q, (Tableau{{1, 2}, {3, 4}, {5}}));
  EXPECT_TRUE(check_commute(TwoRowArray{{1, 2, 3}, {2, 3, 1}}));
}

TEST(CheckCommute, ExhaustiveSmall) {
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : enumerate_compositions(d))
      for (const auto& nu : enumerate_compositions(d))
        for (const auto& m : enumerate_margin_matrices(mu, nu)) EXPECT_TRUE(check_commute(matrix_to_array(m)));
}

TEST(StdProperty, InjectiveAndInvertibleForFixedContents) {
  for (int d = 1; d <= 5; ++d) {
    for (const auto& mu : enumerate_compositions(d)) {
      for (const auto& nu : enumerate_compositions(d)) {
        std::set<TwoRowArray> images;
        for (const auto& m : enumerate_margin_matrices(mu, nu)) {
          const auto a = matrix_to_array(m);
          const auto s = std_array(a);
          EXPECT_TRUE(images.insert(s).second);
          EXPECT_EQ(std_inverse(s, mu, nu), a);
          std::vector<int> sorted = s.w;
          std::sort(sorted.begin(), sorted.end());
          std::vector<int> iota(static_cast<std::size_t>(d));
          std::iota(iota.begin(), iota.end(), 1);
          EXPECT_EQ(sorted, iota);
        }
      }
    }
  }
}

TEST(StdProperty, TableauShapePreservedOnRandomInput) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testing::random_array(std::uniform_int_distribution<int>(1, 10)(rng), rng);
    const auto [p, q] = rsk_forward(a);
    const auto sp = std_tableau(p);
    EXPECT_EQ(sp.shape(), p.shape());
    EXPECT_TRUE(sp.is_standard());
    EXPECT_TRUE(check_commute(a));
  }
}

}  // namespace
}  // namespace mrsk
