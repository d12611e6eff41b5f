#include "dposet/twoas.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "dposet/assembly.hpp"
#include "dposet/enumeration.hpp"
#include "dposet/errors.hpp"
#include "dposet/pairing.hpp"
#include "dposet/products.hpp"
#include "dposet/text.hpp"

namespace dposet {

namespace {

constexpr PairRelations kStarCross = kHForward | kRForward | kRBackward;

// Labeled assemblies of p (vertices 0..|p|-1) below q (the rest) in which q
// spans an ideal.
PlaneAssembly star_assembly(const DoublePoset& p, const DoublePoset& q) {
  if (p.size() + q.size() > kMaxVertices) throw RangeError("product exceeds vertex capacity");
  PlaneAssembly a(p.size() + q.size());
  a.fix_block(p, 0);
  a.fix_block(q, p.size());
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) a.restrict(x, p.size() + y, kStarCross);
  }
  return a;
}

LinComb star_impl(const DoublePoset& p, const DoublePoset& q, bool wn_only) {
  if (!is_plane(p) || !is_plane(q)) throw NotPlaneError("star needs plane arguments");
  LinComb out;
  star_assembly(p, q).for_each([&](const DoublePoset& r) {
    if (!wn_only || is_wn(r)) out.add(canonical(r), 1);
  });
  return out;
}

}  // namespace

LinComb star(const DoublePoset& p, const DoublePoset& q) { return star_impl(p, q, false); }
LinComb star_wn(const DoublePoset& p, const DoublePoset& q) { return star_impl(p, q, true); }

LinComb star_wn(const LinComb& x, const LinComb& y) {
  return bilinear<DoublePoset, LinComb>(x, y, [](const DoublePoset& a, const DoublePoset& b) { return star_wn(a, b); });
}

LinComb phi(const DoublePoset& p) {
  if (!is_wn(p)) throw NotWNError("phi needs a WN poset");
  LinComb out;
  for (const auto& q : enumerate(PosetClass::wnp, p.size())) {
    out.add(q, static_cast<unsigned long>(pictures_count(p, q)));
  }
  return out;
}

LinComb phi(const LinComb& x) {
  LinComb out;
  for (const auto& [p, c] : x) out += c * phi(p);
  return out;
}

LinComb binfty_bracket(std::span<const DoublePoset> left, std::span<const DoublePoset> right) {
  if (left.empty() || right.empty()) throw EmptyListError("bracket needs two nonempty lists");
  for (auto side : {left, right}) {
    for (const auto& p : side) {
      if (!is_wn(p)) throw NotWNError("bracket arguments must be WN");
      if (!is_connected(p, Order::h)) throw NotHConnectedError("bracket arguments must be h-connected");
    }
  }
  const LinComb product = star_wn(compose_all(Product::g, left), compose_all(Product::g, right));
  return product.filtered([](const DoublePoset& r) { return is_connected(r, Order::h); });
}

IndexedWNPoset IndexedWNPoset::make(const DoublePoset& labeled, std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != labeled.size()) throw LabelError("one label per vertex expected");
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw LabelError("labels must be distinct");
  if (!is_wn(labeled)) throw NotWNError("indexed posets must be WN");
  const auto order = plane_total_order(labeled);
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  IndexedWNPoset out;
  out.base_ = relabel(labeled, rank);
  out.labels_.resize(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) out.labels_[rank[v]] = labels[v];
  return out;
}

bool IndexedWNPoset::standard() const {
  std::vector<int> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

IndexedWNPoset indexed_point(int label) { return IndexedWNPoset::make(point(), {label}); }

IndexedWNPoset shift_labels(const IndexedWNPoset& p, int k) {
  std::vector<int> labels = p.labels();
  for (int& l : labels) l += k;
  return IndexedWNPoset::make(p.base(), std::move(labels));
}

IndexedWNPoset permute_labels(const IndexedWNPoset& p, std::span<const int> tau) {
  if (!p.standard() || static_cast<int>(tau.size()) != p.size()) throw LabelError("permutation does not match labels");
  std::vector<int> labels;
  for (int l : p.labels()) labels.push_back(tau[l - 1]);
  return IndexedWNPoset::make(p.base(), std::move(labels));
}

IndexedWNPoset indexed_involution(const IndexedWNPoset& p) {
  return IndexedWNPoset::make(swap_orders(p.base()), p.labels());
}

IndexedWNPoset b_mn(int m, int n) {
  if (m < 1 || n < 1) throw RangeError("b_mn needs m, n >= 1");
  std::vector<int> labels(m + n);
  std::iota(labels.begin(), labels.end(), 1);
  return IndexedWNPoset::make(concatenate(Product::h, antichain_r(m), antichain_r(n)), std::move(labels));
}

IndexedWNPoset parse_indexed(std::string_view text) {
  detail::TextReader in(text);
  in.expect("idp", "indexed");
  const int n = in.integer("indexed");
  in.expect("h{", "indexed");
  const auto h = in.pairs("pairs");
  in.expect("}", "indexed");
  in.expect("r{", "indexed");
  const auto r = in.pairs("pairs");
  in.expect("}", "indexed");
  in.expect("lab{", "indexed");
  std::vector<int> labels(std::max(n, 0), 0);
  std::vector<bool> given(labels.size(), false);
  if (!in.peek("}")) {
    while (true) {
      const int v = in.integer("label");
      in.expect(":", "label");
      const int l = in.integer("label");
      if (v < 1 || v > n || given[v - 1]) throw ParseError("parse error in production 'label': bad vertex");
      labels[v - 1] = l;
      given[v - 1] = true;
      if (!in.peek(",")) break;
      in.expect(",", "labels");
    }
  }
  in.expect("}", "indexed");
  in.finish("indexed");
  if (std::find(given.begin(), given.end(), false) != given.end()) {
    throw ParseError("parse error in production 'labels': every vertex needs a label");
  }
  return IndexedWNPoset::make(DoublePoset::from_generators(n, h, r), std::move(labels));
}

std::string to_string(const IndexedWNPoset& p) {
  std::string out = "i" + to_string(p.base()) + " lab{";
  for (int v = 0; v < p.size(); ++v) {
    if (v) out += ',';
    out += std::to_string(v + 1) + ':' + std::to_string(p.labels()[v]);
  }
  return out + "}";
}

std::string to_string(const IndexedComb& c) {
  if (c.empty()) return "0\n";
  std::string out;
  for (const auto& [p, coeff] : c) out += coeff.get_str() + " * " + to_string(p) + "\n";
  return out;
}

IndexedComb star_wn(const IndexedWNPoset& p, const IndexedWNPoset& q) {
  std::vector<int> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  IndexedComb out;
  star_assembly(p.base(), q.base()).for_each([&](const DoublePoset& r) {
    if (is_wn(r)) out.add(IndexedWNPoset::make(r, labels), 1);
  });
  return out;
}

IndexedComb star_wn(const IndexedComb& x, const IndexedComb& y) {
  return bilinear<IndexedWNPoset, IndexedComb>(
      x, y, [](const IndexedWNPoset& a, const IndexedWNPoset& b) { return star_wn(a, b); });
}

IndexedWNPoset compose_g(const IndexedWNPoset& p, const IndexedWNPoset& q) {
  std::vector<int> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  return IndexedWNPoset::make(concatenate(Product::g, p.base(), q.base()), std::move(labels));
}

IndexedComb compose_g(const IndexedComb& x, const IndexedComb& y) {
  return bilinear<IndexedWNPoset, IndexedComb>(
      x, y, [](const IndexedWNPoset& a, const IndexedWNPoset& b) { return IndexedComb(compose_g(a, b)); });
}

bool is_complete_subposet(const DoublePoset& host, VertexMask block) {
  for (Order o : {Order::h, Order::r}) {
    VertexMask above = 0, below = 0;
    for (VertexMask m = block; m; m &= m - 1) {
      const int x = std::countr_zero(m);
      above |= host.successors(o, x);
      below |= host.predecessors(o, x);
    }
    if (above & below & ~block) return false;
  }
  return true;
}

bool is_q_family(const DoublePoset& q, std::span<const VertexMask> blocks, const DoublePoset& host) {
  if (static_cast<int>(blocks.size()) != q.size()) return false;
  VertexMask covered = 0;
  for (VertexMask b : blocks) {
    if (covered & b) return false;
    covered |= b;
    if (!is_complete_subposet(host, b)) return false;
  }
  if (covered != host.vertices()) return false;
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j) {
      if (i == j) continue;
      bool some_h = false, all_r = true;
      for (VertexMask m = blocks[i]; m; m &= m - 1) {
        const int x = std::countr_zero(m);
        if (host.successors(Order::h, x) & blocks[j]) some_h = true;
        if ((host.successors(Order::r, x) & blocks[j]) != blocks[j]) all_r = false;
      }
      if (q.less(Order::h, i, j) != some_h) return false;
      if (q.less(Order::r, i, j) != all_r) return false;
    }
  }
  return true;
}

std::uint64_t count_q_families(const DoublePoset& q, std::span<const DoublePoset> parts, const DoublePoset& host) {
  if (static_cast<int>(parts.size()) != q.size()) throw SizeMismatchError("one part per vertex of the pattern");
  int total = 0;
  for (const auto& p : parts) total += p.size();
  if (total != host.size()) throw SizeMismatchError("part sizes must add up to the host size");
  std::vector<DoublePoset> targets;
  for (const auto& p : parts) targets.push_back(canonical(p));
  std::vector<VertexMask> blocks(parts.size(), 0);
  std::uint64_t count = 0;
  auto choose = [&](auto&& self, std::size_t i, VertexMask remaining) -> void {
    if (i == parts.size()) {
      if (is_q_family(q, blocks, host)) ++count;
      return;
    }
    const int need = parts[i].size();
    for (VertexMask s = remaining;; s = (s - 1) & remaining) {
      if (popcount(s) == need && canonical(induced_subposet(host, s)) == targets[i]) {
        blocks[i] = s;
        self(self, i + 1, remaining & ~s);
      }
      if (s == 0) break;
    }
  };
  choose(choose, 0, host.vertices());
  return count;
}

namespace {

void require_standard(const IndexedWNPoset& p, const char* what) {
  if (!p.standard()) throw LabelError(std::string(what) + " must be labeled 1..n");
}

}  // namespace

namespace {

IndexedWNPoset restrict_to(const IndexedWNPoset& s, VertexMask block) {
  std::vector<int> labels;
  for (VertexMask m = block; m; m &= m - 1) labels.push_back(s.labels()[std::countr_zero(m)]);
  return IndexedWNPoset::make(induced_subposet(s.base(), block), std::move(labels));
}

// Substitutes leaves into patterns over the labels 1..k, memoized per pattern.
// A g-product goes to the g-product of the parts. For S = A h B with A
// h-indecomposable, the star of the parts covers every labeled assembly of
// A * B; all of them but S have fewer h-pairs and get subtracted.
class Substitution {
 public:
  explicit Substitution(std::vector<IndexedWNPoset> leaves) : leaves_(std::move(leaves)) {}

  const IndexedComb& operator()(const IndexedWNPoset& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    IndexedComb out;
    if (s.size() == 0) {
      out = IndexedComb(s);
    } else if (s.size() == 1) {
      out = IndexedComb(leaves_[s.labels()[0] - 1]);
    } else if (const auto g = g_blocks(s.base()); g.size() > 1) {
      const VertexMask first = g.front();
      out = compose_g((*this)(restrict_to(s, first)), (*this)(restrict_to(s, s.base().vertices() & ~first)));
    } else {
      const VertexMask first = g_blocks(swap_orders(s.base())).front();
      const auto a = restrict_to(s, first);
      const auto b = restrict_to(s, s.base().vertices() & ~first);
      out = star_wn((*this)(a), (*this)(b));
      for (const auto& [t, c] : star_wn(a, b)) {
        if (t == s) continue;
        IndexedComb term = (*this)(t);
        term *= c;
        out -= term;
      }
    }
    return memo_.emplace(s, std::move(out)).first->second;
  }

 private:
  std::vector<IndexedWNPoset> leaves_;
  std::map<IndexedWNPoset, IndexedComb> memo_;
};

}  // namespace

IndexedComb operad_compose(const IndexedWNPoset& q, std::span<const IndexedWNPoset> args) {
  const int k = q.size();
  if (static_cast<int>(args.size()) != k) throw SizeMismatchError("one argument per vertex of Q");
  require_standard(q, "Q");
  for (const auto& a : args) require_standard(a, "arguments");
  std::vector<IndexedWNPoset> shifted;
  int offset = 0;
  for (const auto& a : args) {
    shifted.push_back(shift_labels(a, offset));
    offset += a.size();
  }
  if (offset > kMaxVertices) throw RangeError("composition exceeds vertex capacity");
  Substitution substitute(std::move(shifted));
  return substitute(q);
}

IndexedComb operad_compose(const IndexedWNPoset& q, std::span<const IndexedComb> args) {
  if (static_cast<int>(args.size()) != q.size()) throw SizeMismatchError("one argument per vertex of Q");
  IndexedComb out;
  std::vector<IndexedWNPoset> chosen(args.size());
  auto expand = [&](auto&& self, std::size_t i, const Rational& coeff) -> void {
    if (i == args.size()) {
      IndexedComb term = operad_compose(q, chosen);
      term *= coeff;
      out += term;
      return;
    }
    for (const auto& [p, c] : args[i]) {
      chosen[i] = p;
      self(self, i + 1, coeff * c);
    }
  };
  expand(expand, 0, Rational(1));
  return out;
}

IndexedComb operad_compose(const IndexedComb& q, std::span<const IndexedComb> args) {
  IndexedComb out;
  for (const auto& [p, c] : q) {
    IndexedComb term = operad_compose(p, args);
    term *= c;
    out += term;
  }
  return out;
}

std::uint64_t decorated_pairing(const IndexedWNPoset& p, const IndexedWNPoset& q) {
  if (p.size() != q.size()) return 0;
  const int n = p.size();
  std::map<int, int> where;
  for (int v = 0; v < n; ++v) where[q.labels()[v]] = v;
  std::vector<int> sigma(n);
  for (int v = 0; v < n; ++v) {
    auto it = where.find(p.labels()[v]);
    if (it == where.end()) return 0;
    sigma[v] = it->second;
  }
  const DoublePoset& a = p.base();
  const DoublePoset& b = q.base();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a.less(Order::h, i, j) && !b.less(Order::r, sigma[i], sigma[j])) return 0;
      if (b.less(Order::h, sigma[i], sigma[j]) && !a.less(Order::r, i, j)) return 0;
    }
  }
  return 1;
}

std::vector<IndexedWNPoset> indexed_basis(int k) {
  std::vector<std::pair<int, IndexedWNPoset>> keyed;
  for (const auto& p : enumerate(PosetClass::wnp, k)) {
    const auto c = comparability_counts(p);
    std::vector<int> labels(k);
    std::iota(labels.begin(), labels.end(), 1);
    do {
      keyed.emplace_back(c.y - c.x, IndexedWNPoset::make(p, labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<IndexedWNPoset> out;
  for (auto& [d, p] : keyed) out.push_back(std::move(p));
  return out;
}

namespace {

std::mutex basis_mutex;
std::map<int, std::vector<IndexedWNPoset>> basis_cache;

const std::vector<IndexedWNPoset>& cached_basis(int k) {
  std::lock_guard lock(basis_mutex);
  auto it = basis_cache.find(k);
  if (it == basis_cache.end()) it = basis_cache.emplace(k, indexed_basis(k)).first;
  return it->second;
}

// Evaluates the (g, h)-word of p with g -> * and h -> g, leaves replaced by
// leaf(label).
template <class Leaf>
IndexedComb evaluate_word(const DoublePoset& p, const std::vector<int>& labels, const Leaf& leaf) {
  if (p.size() == 1) return leaf(labels[0]);
  for (Product op : {Product::g, Product::h}) {
    const auto blocks = op == Product::g ? g_blocks(p) : g_blocks(swap_orders(p));
    if (blocks.size() < 2) continue;
    IndexedComb acc;
    bool first = true;
    for (VertexMask b : blocks) {
      std::vector<int> sub;
      for (VertexMask m = b; m; m &= m - 1) sub.push_back(labels[std::countr_zero(m)]);
      IndexedComb part = evaluate_word(induced_subposet(p, b), sub, leaf);
      if (first) {
        acc = std::move(part);
        first = false;
      } else {
        acc = op == Product::g ? star_wn(acc, part) : compose_g(acc, part);
      }
    }
    return acc;
  }
  throw NotWNError("word expansion reached a biconnected poset other than the point");
}

}  // namespace

IndexedComb phi_inverse(const IndexedWNPoset& q) {
  if (!q.standard()) throw LabelError("phi_inverse needs labels 1..n");
  const auto& basis = cached_basis(q.size());
  const std::size_t m = basis.size();
  // Row j of the triangular system: sum_i c_i <S_i, iota(S_j)> = [iota(S_j) = Q],
  // where only i >= j contribute and the diagonal is 1.
  std::vector<Rational> c(m, 0);
  std::vector<std::size_t> nonzero;
  for (std::size_t j = m; j-- > 0;) {
    const IndexedWNPoset target = indexed_involution(basis[j]);
    Rational value = target == q ? 1 : 0;
    for (std::size_t i : nonzero) {
      if (decorated_pairing(basis[i], target)) value -= c[i];
    }
    if (value != 0) {
      c[j] = value;
      nonzero.push_back(j);
    }
  }
  IndexedComb out;
  for (std::size_t i : nonzero) out.add(basis[i], c[i]);
  return out;
}

IndexedComb xi_oracle(const IndexedWNPoset& q, std::span<const IndexedWNPoset> args) {
  const int k = q.size();
  if (static_cast<int>(args.size()) != k) throw SizeMismatchError("one argument per vertex of Q");
  require_standard(q, "Q");
  for (const auto& a : args) require_standard(a, "arguments");
  std::vector<IndexedWNPoset> shifted;
  int offset = 0;
  for (const auto& a : args) {
    shifted.push_back(shift_labels(a, offset));
    offset += a.size();
  }
  auto leaf = [&](int label) { return IndexedComb(shifted[label - 1]); };
  IndexedComb out;
  for (const auto& [p, c] : phi_inverse(q)) {
    IndexedComb term = evaluate_word(p.base(), p.labels(), leaf);
    term *= c;
    out += term;
  }
  return out;
}

}  // namespace dposet
