#pragma once

// The two associative products of double posets and their unique
// factorizations.

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dposet/poset.hpp"

namespace dposet {

// g: cross pairs P -> Q are <_2-related and <=_1-incomparable (side by side).
// h: cross pairs P -> Q are <_1-related and <=_2-incomparable (stacked).
enum class Product { g, h };

// Unit is the empty poset. Results are canonical.
DoublePoset compose_g(const DoublePoset& p, const DoublePoset& q);
DoublePoset compose_h(const DoublePoset& p, const DoublePoset& q);
DoublePoset compose(Product op, const DoublePoset& p, const DoublePoset& q);
DoublePoset compose_all(Product op, std::span<const DoublePoset> factors);

// Labeled disjoint union with vertices of q shifted by |p|; not canonicalized.
DoublePoset concatenate(Product op, const DoublePoset& p, const DoublePoset& q);

struct FactorizationResult {
  Product op = Product::g;
  std::vector<DoublePoset> factors;  // canonical, indecomposable for op
};

// Maximal-length factorization; empty for the unit.
FactorizationResult factorize(const DoublePoset& p, Product op);

// Vertex blocks of the g-factorization of a labeled poset, in product order.
std::vector<VertexMask> g_blocks(const DoublePoset& p);

enum class IndecomposabilityClass { unit, both_indecomposable, only_1_indecomposable, only_2_indecomposable };

IndecomposabilityClass classify(const DoublePoset& p);
std::string to_string(IndecomposabilityClass c);

bool is_1_indecomposable(const DoublePoset& p);
bool is_2_indecomposable(const DoublePoset& p);

// Alternating g/h expression tree with 1,2-indecomposable leaves.
struct DecompositionTree {
  struct Node {
    Product op;
    std::vector<DecompositionTree> children;
  };
  std::variant<DoublePoset, Node> value;

  bool is_leaf() const { return std::holds_alternative<DoublePoset>(value); }
};

// Throws EmptyInputError for the empty poset.
DecompositionTree decomposition_tree(const DoublePoset& p);
DoublePoset evaluate(const DecompositionTree& tree);
std::string to_string(const DecompositionTree& tree);

}  // namespace dposet
