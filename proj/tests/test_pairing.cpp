#include <gtest/gtest.h>

#include <random>

#include "dposet/enumeration.hpp"
#include "dposet/errors.hpp"
#include "dposet/fixtures.hpp"
#include "dposet/hopf.hpp"
#include "dposet/pairing.hpp"
#include "dposet/text.hpp"
#include "oracles.hpp"

using namespace dposet;

namespace {

// <x, T> for a tensor T, extended from <a (x) b, c (x) d> = <a, c><b, d>.
mpq_class pair_with(const DoublePoset& a, const DoublePoset& b, const TensorComb& t) {
  mpq_class sum = 0;
  for (const auto& [k, c] : t) sum += c * pictures_count(a, k.first) * pictures_count(b, k.second);
  return sum;
}

const DoublePoset& random_of_size(std::mt19937& rng, int n) {
  const auto& level = enumerate(PosetClass::dp, n);
  return level[std::uniform_int_distribution<std::size_t>(0, level.size() - 1)(rng)];
}

}  // namespace

TEST(Pictures, Examples) {
  EXPECT_EQ(pictures_count(chain_h(2), chain_h(2)), 0u);
  EXPECT_EQ(pictures_count(chain_h(2), antichain_r(2)), 1u);
  EXPECT_EQ(pictures_count(antichain_r(2), antichain_r(2)), 2u);
  EXPECT_EQ(pictures_count(chain_h(3), antichain_r(3)), 1u);
  EXPECT_EQ(pictures_count(antichain_r(3), antichain_r(3)), 6u);
  EXPECT_EQ(pictures_count(point(), chain_h(2)), 0u);
  EXPECT_EQ(pictures_count(DoublePoset{}, DoublePoset{}), 1u);
}

TEST(Pictures, MatchPermutationSearch) {
  for (int n = 0; n <= 3; ++n) {
    const auto& basis = enumerate(PosetClass::dp, n);
    for (const auto& p : basis) {
      for (const auto& q : basis) ASSERT_EQ(pictures_count(p, q), oracle::pictures(p, q));
    }
  }
  std::mt19937 rng(44);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 3;
    const auto p = oracle::random_double_poset(rng, n), q = oracle::random_double_poset(rng, n);
    ASSERT_EQ(pictures_count(p, q), oracle::pictures(p, q));
  }
}

TEST(Pictures, Symmetric) {
  for (int n = 0; n <= 3; ++n) {
    const auto& basis = enumerate(PosetClass::dp, n);
    for (const auto& p : basis) {
      for (const auto& q : basis) ASSERT_EQ(pictures_count(p, q), pictures_count(q, p));
    }
  }
}

TEST(Pictures, TriangularityLemma) {
  for (int n = 0; n <= 3; ++n) {
    const auto& basis = enumerate(PosetClass::dp, n);
    for (const auto& p : basis) {
      const auto cp = comparability_counts(p);
      for (const auto& q : basis) {
        if (pictures_count(p, q) == 0) continue;
        const auto iq = involution(q);
        const auto ci = comparability_counts(iq);
        EXPECT_TRUE(cp.x <= ci.x && cp.y >= ci.y);
        if (cp == ci) EXPECT_EQ(p, iq);
      }
    }
  }
}

TEST(Pictures, HopfAdjunctions) {
  std::mt19937 rng(150);
  for (int trial = 0; trial < 150; ++trial) {
    const int total = 1 + trial % 5;
    const int a = std::uniform_int_distribution<int>(0, total)(rng);
    const auto& p = random_of_size(rng, a);
    const auto& q = random_of_size(rng, total - a);
    const auto& r = random_of_size(rng, total);
    EXPECT_EQ(mpq_class(pictures_count(compose_g(p, q), r)), pair_with(p, q, coproduct(r)));
    EXPECT_EQ(mpq_class(pictures_count(compose_h(p, q), r)), pair_with(p, q, deconcat_coproduct_g(r)));
  }
}

TEST(PairingMatrix, PublishedMatrices) {
  ASSERT_EQ(fixtures::pairing_matrices().size(), 3u);
  for (const auto& f : fixtures::pairing_matrices()) {
    std::vector<DoublePoset> basis;
    for (const char* w : f.basis) basis.push_back(fixtures::word(w));
    EXPECT_EQ(pairing_matrix(basis).entries, f.entries);
  }
  const std::vector<DoublePoset> pp2{chain_h(2), antichain_r(2)};
  EXPECT_EQ(pairing_matrix(pp2).entries, (std::vector<std::vector<std::uint64_t>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(fixtures::pairing_matrices()[2].entries.back(), (std::vector<std::uint64_t>{1, 2, 2, 3, 3, 6}));
}

TEST(PairingMatrix, SerialAndParallelAgree) {
  const auto& basis = enumerate(PosetClass::wnp, 5);
  EXPECT_EQ(pairing_matrix(basis, Execution::serial).entries, pairing_matrix(basis, Execution::parallel).entries);
}

TEST(PairingMatrix, Errors) {
  const std::vector<DoublePoset> mixed{point(), chain_h(2)};
  EXPECT_THROW(pairing_matrix(mixed), SizeMismatchError);
  EXPECT_THROW(xy_order(mixed), SizeMismatchError);
  const std::vector<DoublePoset> half{chain_h(2)};
  EXPECT_THROW(nondegeneracy_check(half), BasisNotIotaClosedError);
  EXPECT_EQ(to_string(pairing_matrix(std::vector<DoublePoset>{chain_h(2), antichain_r(2)})), "0 1\n1 2\n");
}

TEST(XYOrder, Examples) {
  const std::vector<DoublePoset> pp2{antichain_r(2), chain_h(2)};
  EXPECT_EQ(xy_order(pp2), (std::vector<DoublePoset>{chain_h(2), antichain_r(2)}));
  EXPECT_EQ(xy_order(std::vector<DoublePoset>{point()}), (std::vector<DoublePoset>{point()}));
}

TEST(XYOrder, RefinesTheDominanceOrder) {
  for (int n = 1; n <= 4; ++n) {
    const auto order = xy_order(enumerate(PosetClass::dp, n));
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto a = comparability_counts(order[i]);
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const auto b = comparability_counts(order[j]);
        // order[i] comes first, so it must not be forced after order[j].
        EXPECT_FALSE(a != b && a.x <= b.x && a.y >= b.y);
      }
    }
  }
}

TEST(Triangular, LowerTriangularWithAutomorphismDiagonal) {
  for (PosetClass c : {PosetClass::pp, PosetClass::wnp, PosetClass::dp}) {
    for (int n = 1; n <= (c == PosetClass::dp ? 3 : 4); ++n) {
      const auto t = triangular_form(enumerate(c, n));
      EXPECT_TRUE(is_lower_triangular(t));
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_EQ(t.entries[i][i], automorphism_count(t.rows[i]));
        EXPECT_EQ(t.cols[i], involution(t.rows[i]));
      }
    }
  }
}

TEST(ExactRank, SmallMatrices) {
  using M = std::vector<std::vector<mpz_class>>;
  EXPECT_EQ(exact_rank(M{}), 0u);
  EXPECT_EQ(exact_rank(M{{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(exact_rank(M{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(exact_rank(M{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 2u);
  EXPECT_EQ(exact_rank(M{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}), 3u);
  EXPECT_EQ(exact_rank(M{{0, 1}, {1, 0}, {1, 1}}), 2u);
  mpz_class big = 1;
  for (int i = 0; i < 40; ++i) big *= 10;
  EXPECT_EQ(exact_rank(M{{big, big + 1}, {big - 1, big}}), 2u);
  EXPECT_EQ(exact_rank(M{{big, 2 * big}, {1, 2}}), 1u);
}

TEST(Nondegeneracy, Examples) {
  const auto pp3 = nondegeneracy_check(enumerate(PosetClass::pp, 3));
  EXPECT_EQ(pp3.dimension, 6u);
  EXPECT_TRUE(pp3.full_rank());
  const auto wn4 = nondegeneracy_check(enumerate(PosetClass::wnp, 4));
  EXPECT_EQ(wn4.dimension, 22u);
  EXPECT_TRUE(wn4.full_rank());
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(nondegeneracy_check(enumerate(PosetClass::dp, n)).full_rank());
}
