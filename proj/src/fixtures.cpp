#include "dposet/fixtures.hpp"

#include <map>
#include <sstream>

#include "dposet/errors.hpp"
#include "dposet/products.hpp"
#include "dposet/text.hpp"

namespace dposet::fixtures {

namespace {

const std::map<std::string, DoublePoset, std::less<>>& glyph_table() {
  static const auto table = [] {
    const DoublePoset u = point();
    const DoublePoset c2 = chain_h(2);
    auto g = [](const DoublePoset& a, const DoublePoset& b) { return compose_g(a, b); };
    auto h = [](const DoublePoset& a, const DoublePoset& b) { return compose_h(a, b); };
    std::map<std::string, DoublePoset, std::less<>> t;
    t["un"] = u;
    t["deux"] = c2;
    t["troisun"] = h(u, antichain_r(2));
    t["troisdeux"] = chain_h(3);
    t["ptroisun"] = h(antichain_r(2), u);
    t["quatreun"] = h(u, antichain_r(3));
    t["quatredeux"] = h(u, g(c2, u));
    t["quatretrois"] = h(u, g(u, c2));
    t["quatrequatre"] = h(c2, antichain_r(2));
    t["quatrecinq"] = chain_h(4);
    t["pquatreun"] = h(antichain_r(3), u);
    t["pquatredeux"] = h(g(c2, u), u);
    t["pquatretrois"] = h(g(u, c2), u);
    t["pquatrequatre"] = h(antichain_r(2), c2);
    // The two N-forms. This orientation matches the displayed coproducts.
    t["pquatrecinq"] = canonical(parse_poset("dp 4 h{(1,2),(1,4),(3,4)} r{(1,3),(2,3),(2,4)}"));
    t["pquatresix"] = involution(t["pquatrecinq"]);
    t["pquatresept"] = h(antichain_r(2), antichain_r(2));
    t["pquatrehuit"] = h(h(u, antichain_r(2)), u);
    return t;
  }();
  return table;
}

}  // namespace

DoublePoset word(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string name;
  DoublePoset acc;
  while (in >> name) {
    auto it = glyph_table().find(name);
    if (it == glyph_table().end()) throw ParseError("unknown glyph '" + name + "'");
    acc = compose_g(acc, it->second);
  }
  return acc;
}

TensorComb CoproductFixture::expected() const {
  TensorComb out;
  for (const auto& t : terms) out.add({word(t.left), word(t.right)}, t.coeff);
  return out;
}

const std::vector<CoproductFixture>& reduced_coproducts() {
  static const std::vector<CoproductFixture> list = {
      {"deux", {{1, "un", "un"}}},
      {"troisun", {{2, "deux", "un"}, {1, "un", "un un"}}},
      {"troisdeux", {{1, "un", "deux"}, {1, "deux", "un"}}},
      {"ptroisun", {{1, "un un", "un"}, {2, "un", "deux"}}},
      {"quatreun", {{1, "un", "un un un"}, {3, "deux", "un un"}, {3, "troisun", "un"}}},
      {"quatredeux",
       {{1, "troisdeux", "un"}, {1, "troisun", "un"}, {1, "deux", "deux"}, {1, "deux", "un un"}, {1, "un", "deux un"}}},
      {"quatretrois",
       {{1, "troisdeux", "un"}, {1, "troisun", "un"}, {1, "deux", "deux"}, {1, "deux", "un un"}, {1, "un", "un deux"}}},
      {"quatrequatre", {{2, "troisdeux", "un"}, {1, "un", "troisun"}, {1, "deux", "un un"}}},
      {"quatrecinq", {{1, "un", "troisdeux"}, {1, "deux", "deux"}, {1, "troisdeux", "un"}}},
      {"pquatreun", {{1, "un un un", "un"}, {3, "un un", "deux"}, {3, "un", "ptroisun"}}},
      {"pquatredeux",
       {{1, "un", "troisdeux"}, {1, "un", "ptroisun"}, {1, "deux", "deux"}, {1, "un un", "deux"}, {1, "deux un", "un"}}},
      {"pquatretrois",
       {{1, "un", "troisdeux"}, {1, "un", "ptroisun"}, {1, "deux", "deux"}, {1, "un un", "deux"}, {1, "un deux", "un"}}},
      {"pquatrequatre", {{2, "un", "troisdeux"}, {1, "ptroisun", "un"}, {1, "un un", "deux"}}},
      {"pquatrecinq",
       {{1, "deux un", "un"},
        {1, "ptroisun", "un"},
        {1, "deux", "deux"},
        {1, "un un", "un un"},
        {1, "un", "un deux"},
        {1, "un", "troisun"}}},
      {"pquatresix",
       {{1, "un deux", "un"},
        {1, "ptroisun", "un"},
        {1, "deux", "deux"},
        {1, "un un", "un un"},
        {1, "un", "deux un"},
        {1, "un", "troisun"}}},
      {"pquatresept", {{2, "ptroisun", "un"}, {2, "un", "troisun"}, {1, "un un", "un un"}}},
      {"pquatrehuit", {{1, "troisun", "un"}, {2, "deux", "deux"}, {1, "un", "ptroisun"}}},
  };
  return list;
}

const std::vector<MatrixFixture>& pairing_matrices() {
  static const std::vector<MatrixFixture> list = {
      {{"un"}, {{1}}},
      {{"deux", "un un"}, {{0, 1}, {1, 2}}},
      {{"troisdeux", "troisun", "ptroisun", "deux un", "un deux", "un un un"},
       {{0, 0, 0, 0, 0, 1},
        {0, 0, 0, 0, 1, 2},
        {0, 0, 0, 1, 0, 2},
        {0, 0, 1, 1, 1, 3},
        {0, 1, 0, 1, 1, 3},
        {1, 2, 2, 3, 3, 6}}},
  };
  return list;
}

const std::vector<std::pair<const char*, const char*>>& involution_table() {
  static const std::vector<std::pair<const char*, const char*>> list = {
      {"un", "un"},
      {"un un", "deux"},
      {"un un un", "troisdeux"},
      {"un deux", "troisun"},
      {"deux un", "ptroisun"},
      {"un un un un", "quatrecinq"},
      {"un un deux", "quatrequatre"},
      {"un deux un", "pquatrehuit"},
      {"un ptroisun", "quatredeux"},
      {"un troisun", "quatretrois"},
      {"un troisdeux", "quatreun"},
      {"deux un un", "pquatrequatre"},
      {"deux deux", "pquatresept"},
      {"ptroisun un", "pquatredeux"},
      {"pquatreun", "troisdeux un"},
      {"pquatresix", "pquatrecinq"},
      {"pquatretrois", "troisun un"},
  };
  return list;
}

LinComb StarFixture::expected() const {
  LinComb out;
  for (const auto& [c, w] : terms) out.add(word(w), c);
  return out;
}

const std::vector<StarFixture>& star_products() {
  static const std::vector<StarFixture> list = {
      {"un", "deux", {{1, "un deux"}, {1, "deux un"}, {2, "ptroisun"}, {1, "troisdeux"}}},
      {"deux", "un", {{1, "un deux"}, {1, "deux un"}, {2, "troisun"}, {1, "troisdeux"}}},
  };
  return list;
}

const std::vector<std::uint64_t>& wnp_counts() {
  static const std::vector<std::uint64_t> v = {1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};
  return v;
}

const std::vector<std::uint64_t>& wnp_h_counts() {
  static const std::vector<std::uint64_t> v = {0, 1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049};
  return v;
}

const std::vector<std::uint64_t>& pf_counts() {
  static const std::vector<std::uint64_t> v = {1, 2, 5, 14};
  return v;
}

const std::vector<std::vector<const char*>>& plane_poset_lists() {
  static const std::vector<std::vector<const char*>> v = {
      {""},
      {"un"},
      {"un un", "deux"},
      {"un un un", "un deux", "deux un", "troisun", "troisdeux", "ptroisun"},
      {"un un un un", "un un deux", "un deux un", "deux un un", "un troisun", "troisun un",
       "un troisdeux", "troisdeux un", "un ptroisun", "ptroisun un", "deux deux", "quatreun",
       "quatredeux", "quatretrois", "quatrequatre", "quatrecinq", "pquatreun", "pquatredeux",
       "pquatretrois", "pquatrequatre", "pquatrecinq", "pquatresix", "pquatresept", "pquatrehuit"},
  };
  return v;
}

const std::vector<std::vector<const char*>>& plane_forest_lists() {
  static const std::vector<std::vector<const char*>> v = {
      {"un"},
      {"un un", "deux"},
      {"un un un", "un deux", "deux un", "troisun", "troisdeux"},
      {"un un un un", "un un deux", "un deux un", "deux un un", "un troisun", "troisun un", "un troisdeux",
       "troisdeux un", "deux deux", "quatreun", "quatredeux", "quatretrois", "quatrequatre", "quatrecinq"},
  };
  return v;
}

}  // namespace dposet::fixtures
