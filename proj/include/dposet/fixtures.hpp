#pragma once

// Published values used by the check suites and the tests. Posets are named
// by glyph: un, deux, troisun, troisdeux, ptroisun, quatreun, ... , with
// juxtaposition (a space) meaning the product g.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dposet/combination.hpp"
#include "dposet/poset.hpp"

namespace dposet::fixtures {

// A single glyph or a space-separated g-product of glyphs. Throws ParseError
// for unknown names.
DoublePoset word(std::string_view text);

struct TensorTerm {
  int coeff;
  const char* left;
  const char* right;
};

struct CoproductFixture {
  const char* glyph;
  std::vector<TensorTerm> terms;
  TensorComb expected() const;
};

// The seventeen displayed reduced coproducts.
const std::vector<CoproductFixture>& reduced_coproducts();

struct MatrixFixture {
  std::vector<const char*> basis;
  std::vector<std::vector<std::uint64_t>> entries;
};

// Pairing matrices on plane posets of size 1, 2, 3 in the displayed order.
const std::vector<MatrixFixture>& pairing_matrices();

// Displayed pairs P <-> iota(P).
const std::vector<std::pair<const char*, const char*>>& involution_table();

struct StarFixture {
  const char* left;
  const char* right;
  std::vector<std::pair<int, const char*>> terms;
  LinComb expected() const;
};

const std::vector<StarFixture>& star_products();

// Counting rows as published.
const std::vector<std::uint64_t>& wnp_counts();    // n = 0..10
const std::vector<std::uint64_t>& wnp_h_counts();  // n = 0..10
const std::vector<std::uint64_t>& pf_counts();     // n = 1..4

// Displayed plane poset lists for n = 0..4 and plane forests for n = 1..4.
const std::vector<std::vector<const char*>>& plane_poset_lists();
const std::vector<std::vector<const char*>>& plane_forest_lists();

}  // namespace dposet::fixtures
