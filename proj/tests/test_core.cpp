#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "dposet/completions.hpp"
#include "dposet/enumeration.hpp"
#include "dposet/errors.hpp"
#include "dposet/pairing.hpp"
#include "dposet/products.hpp"
#include "dposet/text.hpp"
#include "oracles.hpp"

using namespace dposet;

namespace {

DoublePoset P(const char* text) { return parse_poset(text); }

const DoublePoset kLambda = P("dp 3 h{(1,3),(2,3)} r{(1,2)}");
const DoublePoset kV = P("dp 3 h{(1,2),(1,3)} r{(2,3)}");

std::vector<DoublePoset> up_to(PosetClass c, int max_n) {
  std::vector<DoublePoset> out;
  for (int n = 0; n <= max_n; ++n) {
    const auto& level = enumerate(c, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

TEST(DoublePoset, ClosesGenerators) {
  const auto c2 = P("dp 2 h{(1,2)} r{}");
  EXPECT_TRUE(c2.less(Order::h, 0, 1));
  EXPECT_FALSE(c2.comparable(Order::r, 0, 1));
  const auto c3 = P("dp 3 h{(1,2),(2,3)} r{}");
  EXPECT_TRUE(c3.less(Order::h, 0, 2));
  const auto p = P("dp 3 h{(1,2)} r{(2,3),(1,3)}");
  EXPECT_FALSE(p.less(Order::h, 0, 2));
  EXPECT_EQ(to_string(p), "dp 3 h{(1,2)} r{(1,3),(2,3)}");
}

TEST(DoublePoset, RejectsCyclesAndRange) {
  EXPECT_THROW(P("dp 2 h{(1,2),(2,1)} r{}"), CycleError);
  EXPECT_THROW(P("dp 2 h{(1,3)} r{}"), RangeError);
  EXPECT_THROW(P("dp 2 h{} r{(0,1)}"), RangeError);
  EXPECT_EQ(P("dp 2 h{(1,1)} r{}"), discrete(2));
}

TEST(DoublePoset, InducedSubposet) {
  EXPECT_EQ(induced_subposet(kLambda, 0b101), chain_h(2));
  EXPECT_EQ(induced_subposet(kLambda, 0b111), kLambda);
  EXPECT_EQ(induced_subposet(kLambda, 0).size(), 0);
}

TEST(Text, ParseErrorsNameTheProduction) {
  for (const char* bad : {"", "dp", "dp 2 h{(1,2)}", "dp 2 h{(1,2) r{}", "xx 2 h{} r{}", "dp 2 h{} r{} junk",
                          "dp -1 h{} r{}", "dp 2 h{(1,)} r{}"}) {
    EXPECT_THROW(parse_poset(bad), ParseError) << bad;
  }
  try {
    parse_poset("dp 2 h{(1,2} r{}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("pair"), std::string::npos) << e.what();
  }
}

TEST(Text, WhitespaceInsensitive) {
  EXPECT_EQ(P(" dp 3\nh{ (1 ,3),(2,3) }  r{(1,2)} "), kLambda);
}

TEST(Text, SinglePosetForm) {
  const auto q = parse_single_poset("sp 3 le{(1,2),(2,3)}");
  EXPECT_TRUE(q.less(0, 2));
  EXPECT_EQ(to_string(q), "sp 3 le{(1,2),(1,3),(2,3)}");
  EXPECT_THROW(parse_single_poset("sp 2 le{(1,2),(2,1)}"), CycleError);
}

TEST(Text, RoundTripOnEnumeratedPosets) {
  for (PosetClass c : {PosetClass::dp, PosetClass::pp, PosetClass::wnp}) {
    for (const auto& p : up_to(c, c == PosetClass::dp ? 4 : 5)) EXPECT_EQ(parse_poset(to_string(p)), p);
  }
}

TEST(Plane, Examples) {
  EXPECT_TRUE(is_plane(chain_h(2)));
  EXPECT_FALSE(is_plane(discrete(2)));
  EXPECT_FALSE(is_plane(P("dp 2 h{(1,2)} r{(1,2)}")));
  EXPECT_TRUE(is_plane(discrete(1)));
  EXPECT_TRUE(is_plane(discrete(0)));
}

TEST(Plane, ExactlyOneRelationPerPair) {
  for (const auto& p : up_to(PosetClass::pp, 5)) {
    for (int x = 0; x < p.size(); ++x) {
      for (int y = x + 1; y < p.size(); ++y) {
        const int held = p.less(Order::h, x, y) + p.less(Order::h, y, x) + p.less(Order::r, x, y) +
                         p.less(Order::r, y, x);
        EXPECT_EQ(held, 1);
      }
    }
  }
}

TEST(Plane, MatchesPairwiseDefinitionOnAllDoublePosets) {
  for (const auto& p : up_to(PosetClass::dp, 4)) EXPECT_EQ(is_plane(p), oracle::is_plane(p)) << to_string(p);
}

TEST(WN, Examples) {
  EXPECT_TRUE(is_wn(kLambda));
  for (const auto& f : n_forms()) EXPECT_FALSE(is_wn(f));
  for (const auto& p : up_to(PosetClass::pf, 6)) EXPECT_TRUE(is_wn(p));
  EXPECT_FALSE(is_wn(discrete(2)));
}

TEST(WN, NFormsAreTheCompletionsOfTheNShape) {
  const auto brute = oracle::plane_completions(n_shape());
  ASSERT_EQ(brute.size(), 2u);
  std::set<DoublePoset> got;
  for (const auto& f : n_forms()) got.insert(oracle::canonical(f));
  EXPECT_EQ(got, std::set<DoublePoset>(brute.begin(), brute.end()));
  EXPECT_NE(n_forms()[0], n_forms()[1]);
}

TEST(WN, MatchesSubsetSearchOnPlanePosets) {
  for (const auto& p : up_to(PosetClass::pp, 6)) EXPECT_EQ(is_wn(p), oracle::is_wn(p)) << to_string(p);
}

TEST(Forest, Examples) {
  EXPECT_TRUE(is_forest(kV));
  EXPECT_FALSE(is_forest(kLambda));
  EXPECT_TRUE(is_forest(chain_h(3)));
  EXPECT_TRUE(is_forest(antichain_r(3)));
}

TEST(Forest, MatchesSubsetSearchOnPlanePosets) {
  for (const auto& p : up_to(PosetClass::pp, 6)) EXPECT_EQ(is_forest(p), oracle::is_forest(p)) << to_string(p);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(antichain_r(2), Order::h), (std::vector<VertexMask>{0b01, 0b10}));
  EXPECT_EQ(connected_components(chain_h(2), Order::h), (std::vector<VertexMask>{0b11}));
  EXPECT_EQ(connected_components(kLambda, Order::h), (std::vector<VertexMask>{0b111}));
  EXPECT_TRUE(connected_components(discrete(0), Order::h).empty());
  EXPECT_FALSE(is_connected(discrete(0), Order::h));
  EXPECT_TRUE(is_connected(antichain_r(3), Order::r));
}

TEST(TotalOrder, Examples) {
  EXPECT_EQ(plane_total_order(kLambda), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(plane_total_order(antichain_r(2)), (std::vector<int>{0, 1}));
  EXPECT_THROW(plane_total_order(discrete(2)), NotPlaneError);
}

TEST(TotalOrder, IsALinearExtensionOfBothOrders) {
  for (const auto& p : up_to(PosetClass::pp, 5)) {
    const auto order = plane_total_order(p);
    std::vector<int> pos(p.size());
    for (int i = 0; i < p.size(); ++i) pos[order[i]] = i;
    for (int x = 0; x < p.size(); ++x) {
      for (int y = 0; y < p.size(); ++y) {
        if (x == y) continue;
        EXPECT_EQ(p.less(Order::h, x, y) || p.less(Order::r, x, y), pos[x] < pos[y]);
      }
    }
  }
}

TEST(Canonical, Examples) {
  EXPECT_EQ(canonical(P("dp 3 h{(2,1),(3,1)} r{(3,2)}")), kLambda);
  for (const auto& p : up_to(PosetClass::dp, 3)) EXPECT_EQ(canonical(canonical(p)), canonical(p));
}

TEST(Canonical, AgreesWithPermutationSearchOnDoublePosets) {
  std::set<DoublePoset> seen;
  for (const auto& p : up_to(PosetClass::dp, 4)) {
    EXPECT_TRUE(seen.insert(oracle::canonical(p)).second) << to_string(p);
    EXPECT_EQ(oracle::canonical(canonical(p)), oracle::canonical(p));
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    const auto p = oracle::random_double_poset(rng, n);
    const auto c = canonical(p);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto q = relabel(p, perm);
    EXPECT_EQ(canonical(q), c);
    EXPECT_EQ(canonical_form(q).key, canonical_form(p).key);
    EXPECT_EQ(canonical_form_generic(q), canonical_form_generic(p));
  }
}

TEST(Canonical, PlaneShortcutSeparatesTheSameClassesAsTheGenericSearch) {
  std::mt19937 rng(7);
  for (int n = 1; n <= 5; ++n) {
    std::set<DoublePoset> generic;
    for (const auto& p : enumerate(PosetClass::pp, n)) {
      EXPECT_TRUE(generic.insert(canonical_form_generic(p)).second);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto q = relabel(p, perm);
      EXPECT_EQ(canonical(q), p);
      EXPECT_EQ(canonical_form_generic(q), canonical_form_generic(p));
    }
  }
}

TEST(Involution, Examples) {
  EXPECT_EQ(involution(antichain_r(2)), chain_h(2));
  EXPECT_EQ(involution(point()), point());
  EXPECT_EQ(involution(compose_g(chain_h(2), point())), kLambda);
  for (const auto& p : up_to(PosetClass::dp, 4)) EXPECT_EQ(involution(involution(p)), canonical(p));
}

TEST(Involution, PreservesPlaneAndWN) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& p : enumerate(PosetClass::dp, n)) {
      const auto i = involution(p);
      EXPECT_EQ(is_plane(i), is_plane(p));
      EXPECT_EQ(is_wn(i), is_wn(p));
    }
  }
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphism_count(kLambda), 1u);
  EXPECT_EQ(automorphism_count(discrete(3)), 6u);
  EXPECT_EQ(automorphism_count(P("dp 2 h{(1,2)} r{(1,2)}")), 1u);
  for (const auto& p : up_to(PosetClass::pp, 5)) EXPECT_EQ(automorphism_count(p), 1u);
}

TEST(Automorphisms, MatchBruteForceAndPictures) {
  for (const auto& p : up_to(PosetClass::dp, 4)) {
    const auto a = automorphism_count(p);
    EXPECT_EQ(a, oracle::automorphisms(p)) << to_string(p);
    EXPECT_EQ(a, pictures_count(p, involution(p))) << to_string(p);
  }
}

TEST(ComparabilityCounts, Examples) {
  EXPECT_EQ(comparability_counts(chain_h(2)), (ComparabilityCounts{1, 0}));
  EXPECT_EQ(comparability_counts(antichain_r(2)), (ComparabilityCounts{0, 1}));
  EXPECT_EQ(comparability_counts(discrete(2)), (ComparabilityCounts{0, 0}));
  EXPECT_EQ(comparability_counts(kLambda), (ComparabilityCounts{2, 1}));
}

TEST(Crown, Examples) {
  EXPECT_EQ(crown_poset(1).as_first_order(), chain_h(2));
  auto strict = [](const SinglePoset& q) {
    int count = 0;
    for (int x = 0; x < q.size(); ++x) count += popcount(q.successors(x));
    return count;
  };
  EXPECT_EQ(crown_poset(2).size(), 4);
  EXPECT_EQ(strict(crown_poset(2)), 4);
  EXPECT_EQ(strict(crown_poset(3)), 6);
  EXPECT_THROW(crown_poset(0), RangeError);
}

TEST(Completions, Examples) {
  EXPECT_TRUE(plane_completions(crown_poset(3)).empty());
  EXPECT_TRUE(plane_completions(crown_poset(4)).empty());
  ASSERT_EQ(plane_completions(crown_poset(1)).size(), 1u);
  EXPECT_EQ(plane_completions(crown_poset(1))[0], chain_h(2));
  EXPECT_FALSE(plane_completions(crown_poset(2)).empty());
  EXPECT_EQ(plane_completions(n_shape()).size(), 2u);
  EXPECT_TRUE(wn_completions(n_shape()).empty());
  EXPECT_TRUE(wn_completions(crown_poset(3)).empty());
  const auto chain = wn_completions(parse_single_poset("sp 3 le{(1,2),(2,3)}"));
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0], chain_h(3));
}

TEST(Completions, MatchOrientationSearch) {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& q : enumerate_single_posets(n)) {
      std::set<DoublePoset> got;
      for (const auto& p : plane_completions(q)) {
        EXPECT_TRUE(is_plane(p));
        got.insert(oracle::canonical(p));
      }
      const auto brute = oracle::plane_completions(q);
      EXPECT_EQ(got, std::set<DoublePoset>(brute.begin(), brute.end())) << to_string(q);
    }
  }
  for (int n : {2, 3}) {
    const auto brute = oracle::plane_completions(crown_poset(n));
    EXPECT_EQ(plane_completions(crown_poset(n)).size(), brute.size());
  }
}

TEST(Completions, WNCompletionExistsIffNoInducedN) {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& q : enumerate_single_posets(n)) {
      const bool has_n = oracle::has_induced_n(q);
      EXPECT_EQ(has_induced_n(q), has_n) << to_string(q);
      EXPECT_EQ(!wn_completions(q).empty(), !has_n) << to_string(q);
    }
  }
}
