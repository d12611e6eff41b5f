#include "dposet/hopf.hpp"

#include <algorithm>

#include "dposet/errors.hpp"

namespace dposet {

std::vector<VertexMask> ideals(const DoublePoset& p) {
  const int n = p.size();
  // Larger up-sets sit lower, so maximal vertices come first and every
  // successor of a vertex is decided before it.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(p.successors(Order::h, a)) < popcount(p.successors(Order::h, b));
  });
  std::vector<VertexMask> out;
  auto dfs = [&](auto&& self, int idx, VertexMask chosen) -> void {
    if (idx == n) {
      out.push_back(chosen);
      return;
    }
    const int v = order[idx];
    self(self, idx + 1, chosen);
    const VertexMask up = p.successors(Order::h, v);
    if ((up & chosen) == up) self(self, idx + 1, chosen | bit(v));
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

TensorComb coproduct(const DoublePoset& p) {
  TensorComb out;
  const VertexMask all = p.vertices();
  for (VertexMask ideal : ideals(p)) {
    out.add({canonical(induced_subposet(p, all & ~ideal)), canonical(induced_subposet(p, ideal))}, 1);
  }
  return out;
}

TensorComb coproduct(const LinComb& x) {
  TensorComb out;
  for (const auto& [p, c] : x) {
    TensorComb term = coproduct(p);
    term *= c;
    out += term;
  }
  return out;
}

TensorComb reduced_coproduct(const DoublePoset& p) {
  if (p.empty()) throw EmptyInputError("reduced coproduct of the empty poset");
  TensorComb out = coproduct(p);
  const DoublePoset c = canonical(p);
  out.add({c, DoublePoset()}, -1);
  out.add({DoublePoset(), c}, -1);
  return out;
}

TensorComb deconcat_coproduct_g(const DoublePoset& p) {
  const auto factors = factorize(p, Product::g).factors;
  TensorComb out;
  const std::span<const DoublePoset> all(factors);
  for (std::size_t i = 0; i <= factors.size(); ++i) {
    out.add({compose_all(Product::g, all.first(i)), compose_all(Product::g, all.subspan(i))}, 1);
  }
  return out;
}

TensorComb reduced_deconcat_coproduct_g(const DoublePoset& p) {
  if (p.empty()) throw EmptyInputError("reduced coproduct of the empty poset");
  TensorComb out = deconcat_coproduct_g(p);
  const DoublePoset c = canonical(p);
  out.add({c, DoublePoset()}, -1);
  out.add({DoublePoset(), c}, -1);
  return out;
}

Tensor3Comb coproduct_left_iterated(const DoublePoset& p) {
  Tensor3Comb out;
  for (const auto& [t, c] : coproduct(p)) {
    for (const auto& [u, d] : coproduct(t.first)) out.add({u.first, u.second, t.second}, c * d);
  }
  return out;
}

Tensor3Comb coproduct_right_iterated(const DoublePoset& p) {
  Tensor3Comb out;
  for (const auto& [t, c] : coproduct(p)) {
    for (const auto& [u, d] : coproduct(t.second)) out.add({t.first, u.first, u.second}, c * d);
  }
  return out;
}

TensorComb tensor_product(Product op, const TensorComb& x, const TensorComb& y) {
  TensorComb out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      out.add({compose(op, a.first, b.first), compose(op, a.second, b.second)}, ca * cb);
    }
  }
  return out;
}

TensorComb left_multiply(Product op, const DoublePoset& p, const TensorComb& x) {
  return tensor_product(op, TensorComb({canonical(p), DoublePoset()}), x);
}

TensorComb right_multiply(Product op, const TensorComb& x, const DoublePoset& q) {
  return tensor_product(op, x, TensorComb({DoublePoset(), canonical(q)}));
}

LinComb product(Product op, const LinComb& x, const LinComb& y) {
  LinComb out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) out.add(compose(op, a, b), ca * cb);
  }
  return out;
}

}  // namespace dposet
