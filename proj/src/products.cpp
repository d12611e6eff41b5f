#include "dposet/products.hpp"

#include <algorithm>

#include "dposet/errors.hpp"
#include "dposet/text.hpp"

namespace dposet {

DoublePoset concatenate(Product op, const DoublePoset& p, const DoublePoset& q) {
  const int a = p.size();
  const int n = a + q.size();
  if (n > kMaxVertices) throw RangeError("product exceeds vertex capacity");
  Relation h{}, r{};
  for (int v = 0; v < a; ++v) {
    h[v] = p.successors(Order::h, v);
    r[v] = p.successors(Order::r, v);
  }
  for (int v = 0; v < q.size(); ++v) {
    h[a + v] = q.successors(Order::h, v) << a;
    r[a + v] = q.successors(Order::r, v) << a;
  }
  const VertexMask right = full_mask(n) & ~full_mask(a);
  Relation& cross = op == Product::g ? r : h;
  for (int v = 0; v < a; ++v) cross[v] |= right;
  return DoublePoset::from_masks(n, std::span(h.data(), n), std::span(r.data(), n));
}

DoublePoset compose(Product op, const DoublePoset& p, const DoublePoset& q) {
  return canonical(concatenate(op, p, q));
}

DoublePoset compose_g(const DoublePoset& p, const DoublePoset& q) { return compose(Product::g, p, q); }
DoublePoset compose_h(const DoublePoset& p, const DoublePoset& q) { return compose(Product::h, p, q); }

DoublePoset compose_all(Product op, std::span<const DoublePoset> factors) {
  DoublePoset acc;
  for (const auto& f : factors) acc = concatenate(op, acc, f);
  return canonical(acc);
}

std::vector<VertexMask> g_blocks(const DoublePoset& p) {
  const int n = p.size();
  auto separated = [&](int x, int y) {
    return !p.comparable(Order::h, x, y) && p.comparable(Order::r, x, y);
  };
  // Candidate blocks: components of the graph of non-separated pairs.
  std::vector<VertexMask> blocks;
  VertexMask seen = 0;
  for (int v = 0; v < n; ++v) {
    if (seen >> v & 1u) continue;
    VertexMask comp = bit(v), frontier = bit(v);
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (int y = 0; y < n; ++y) {
        if (!(comp >> y & 1u) && !separated(x, y)) {
          comp |= bit(y);
          frontier |= bit(y);
        }
      }
    }
    seen |= comp;
    blocks.push_back(comp);
  }
  // Blocks with <_2 relations in both directions belong to one factor: merge
  // strongly connected blocks of the "some a <_2 b" digraph.
  const int k = static_cast<int>(blocks.size());
  std::vector<VertexMask> reach(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (VertexMask m = blocks[i]; m; m &= m - 1) {
        if (p.successors(Order::r, std::countr_zero(m)) & blocks[j]) {
          reach[i] |= bit(j);
          break;
        }
      }
    }
  }
  for (int m = 0; m < k; ++m) {
    for (int i = 0; i < k; ++i) {
      if (reach[i] >> m & 1u) reach[i] |= reach[m];
    }
  }
  std::vector<VertexMask> groups;
  VertexMask taken = 0;
  for (int i = 0; i < k; ++i) {
    if (taken >> i & 1u) continue;
    VertexMask members = bit(i);
    for (int j = i + 1; j < k; ++j) {
      if ((reach[i] >> j & 1u) && (reach[j] >> i & 1u)) members |= bit(j);
    }
    taken |= members;
    VertexMask vertices = 0;
    for (VertexMask m = members; m; m &= m - 1) vertices |= blocks[std::countr_zero(m)];
    groups.push_back(vertices);
  }
  // The condensation is a tournament without cycles, so the number of
  // groups a group reaches fixes its position.
  std::vector<int> idx(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) idx[i] = static_cast<int>(i);
  auto reached = [&](int g) {
    int count = 0;
    for (std::size_t h = 0; h < groups.size(); ++h) {
      if (static_cast<int>(h) == g) continue;
      const int any = std::countr_zero(groups[h]);
      for (VertexMask m = groups[g]; m; m &= m - 1) {
        if (p.less(Order::r, std::countr_zero(m), any)) {
          ++count;
          break;
        }
      }
    }
    return count;
  };
  std::vector<int> rank(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) rank[g] = reached(static_cast<int>(g));
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return rank[a] > rank[b]; });
  std::vector<VertexMask> ordered;
  for (int i : idx) ordered.push_back(groups[i]);
  return ordered;
}

FactorizationResult factorize(const DoublePoset& p, Product op) {
  FactorizationResult result;
  result.op = op;
  if (op == Product::g) {
    for (VertexMask block : g_blocks(p)) result.factors.push_back(canonical(induced_subposet(p, block)));
  } else {
    const DoublePoset swapped = swap_orders(p);
    for (VertexMask block : g_blocks(swapped)) result.factors.push_back(canonical(induced_subposet(p, block)));
  }
  return result;
}

bool is_1_indecomposable(const DoublePoset& p) { return !p.empty() && g_blocks(p).size() == 1; }
bool is_2_indecomposable(const DoublePoset& p) { return !p.empty() && g_blocks(swap_orders(p)).size() == 1; }

IndecomposabilityClass classify(const DoublePoset& p) {
  if (p.empty()) return IndecomposabilityClass::unit;
  const bool one = is_1_indecomposable(p);
  const bool two = is_2_indecomposable(p);
  if (one && two) return IndecomposabilityClass::both_indecomposable;
  return one ? IndecomposabilityClass::only_1_indecomposable : IndecomposabilityClass::only_2_indecomposable;
}

std::string to_string(IndecomposabilityClass c) {
  switch (c) {
    case IndecomposabilityClass::unit: return "unit";
    case IndecomposabilityClass::both_indecomposable: return "both-indecomposable";
    case IndecomposabilityClass::only_1_indecomposable: return "only-1-indecomposable";
    case IndecomposabilityClass::only_2_indecomposable: return "only-2-indecomposable";
  }
  return "?";
}

DecompositionTree decomposition_tree(const DoublePoset& p) {
  if (p.empty()) throw EmptyInputError("decomposition tree of the empty poset");
  for (Product op : {Product::g, Product::h}) {
    auto f = factorize(p, op);
    if (f.factors.size() > 1) {
      DecompositionTree::Node node{op, {}};
      for (const auto& factor : f.factors) node.children.push_back(decomposition_tree(factor));
      return {std::move(node)};
    }
  }
  return {canonical(p)};
}

DoublePoset evaluate(const DecompositionTree& tree) {
  if (tree.is_leaf()) return std::get<DoublePoset>(tree.value);
  const auto& node = std::get<DecompositionTree::Node>(tree.value);
  std::vector<DoublePoset> parts;
  for (const auto& child : node.children) parts.push_back(evaluate(child));
  return compose_all(node.op, parts);
}

std::string to_string(const DecompositionTree& tree) {
  if (tree.is_leaf()) return "[" + to_string(std::get<DoublePoset>(tree.value)) + "]";
  const auto& node = std::get<DecompositionTree::Node>(tree.value);
  std::string out = node.op == Product::g ? "g(" : "h(";
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += ", ";
    out += to_string(node.children[i]);
  }
  return out + ")";
}

}  // namespace dposet
