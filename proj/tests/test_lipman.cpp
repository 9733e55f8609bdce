#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"

using namespace arfkit;

namespace {

/// <e, ne+1, ..., ne+e-1>; n = 0 gives the naturals.
NumericalSemigroup example_family(int e, int n) {
  std::vector<int> gens{e};
  for (int k = 1; k < e; ++k) gens.push_back(n * e + k);
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace

TEST(MaximalIdeal, Examples) {
  EXPECT_EQ(testing_support::members_below(maximal_ideal(NumericalSemigroup::from_generators({3, 5})), 11),
            (std::vector<int>{3, 5, 6, 8, 9, 10}));
  EXPECT_EQ(maximal_ideal(NumericalSemigroup::naturals()), RelativeIdeal::principal(NumericalSemigroup::naturals(), 1));
  EXPECT_EQ(testing_support::members_below(maximal_ideal(NumericalSemigroup::from_generators({2, 5})), 7),
            (std::vector<int>{2, 4, 5, 6}));
}

TEST(LipmanChain, Examples) {
  const auto a = lipman_chain(NumericalSemigroup::from_generators({2, 5}));
  EXPECT_EQ(a.members, (std::vector<NumericalSemigroup>{NumericalSemigroup::from_generators({2, 5}),
                                                        NumericalSemigroup::from_generators({2, 3}),
                                                        NumericalSemigroup::naturals()}));
  EXPECT_EQ(a.multiplicity_sequence, (std::vector<int>{2, 2, 1}));

  const auto b = lipman_chain(NumericalSemigroup::from_generators({3, 7, 8}));
  EXPECT_EQ(b.members, (std::vector<NumericalSemigroup>{NumericalSemigroup::from_generators({3, 7, 8}),
                                                        NumericalSemigroup::from_generators({3, 4, 5}),
                                                        NumericalSemigroup::naturals()}));

  const auto c = lipman_chain(NumericalSemigroup::naturals());
  EXPECT_EQ(c.members, std::vector<NumericalSemigroup>{NumericalSemigroup::naturals()});
  EXPECT_EQ(c.multiplicity_sequence, std::vector<int>{1});

  const auto d = lipman_chain(NumericalSemigroup::from_generators({3, 5}));
  EXPECT_EQ(d.members, (std::vector<NumericalSemigroup>{NumericalSemigroup::from_generators({3, 5}),
                                                        NumericalSemigroup::from_generators({2, 3}),
                                                        NumericalSemigroup::naturals()}));
}

TEST(LipmanChain, ExampleFamilyDescendsOneStepAtATime) {
  for (int e = 2; e <= 5; ++e) {
    for (int n = 0; n <= 5; ++n) {
      const auto chain = lipman_chain(example_family(e, n));
      ASSERT_EQ(chain.size(), static_cast<std::size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) {
        EXPECT_EQ(chain.members[static_cast<std::size_t>(i)], example_family(e, n - i)) << e << ' ' << n << ' ' << i;
        if (i < n) {
          EXPECT_EQ(chain.multiplicity_sequence[static_cast<std::size_t>(i)], e);
          EXPECT_TRUE(has_minimal_multiplicity(chain.members[static_cast<std::size_t>(i)]));
        }
      }
    }
  }
}

TEST(LipmanChain, StructuralInvariants) {
  for (const auto& s : enumerate_semigroups(10)) {
    const auto chain = lipman_chain(s);
    ASSERT_FALSE(chain.members.empty());
    EXPECT_EQ(chain.members.front(), s);
    EXPECT_EQ(chain.members.back(), NumericalSemigroup::naturals());
    EXPECT_EQ(chain.multiplicity_sequence.back(), 1);
    EXPECT_LE(chain.size(), static_cast<std::size_t>(s.genus()) + 1);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      EXPECT_TRUE(chain.members[i].is_subset_of(chain.members[i + 1]));
      EXPECT_LT(chain.members[i + 1].genus(), chain.members[i].genus());
      EXPECT_EQ(chain.members[i + 1], blowup_ideal(maximal_ideal(chain.members[i])));
    }
  }
}

TEST(LipmanChain, ChainOfAMemberIsTheSuffix) {
  for (const auto& s : enumerate_semigroups(9)) {
    const auto chain = lipman_chain(s);
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto sub = lipman_chain(chain.members[i]);
      EXPECT_EQ(sub.members, std::vector<NumericalSemigroup>(chain.members.begin() + static_cast<long>(i), chain.members.end()));
    }
  }
}

TEST(LipmanChain, ArfIffMaximalIdealStableAndEndArf) {
  for (const auto& s : enumerate_semigroups(10)) {
    const auto j = maximal_ideal(s);
    EXPECT_EQ(is_arf(s), is_stable(j).stable && is_arf(end_semigroup(j))) << s.to_string();
  }
}
