#include "dposet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dposet/completions.hpp"
#include "dposet/errors.hpp"

namespace dposet {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw RangeError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
}

Relation close_or_throw(int n, std::span<const VertexMask> up, const char* which) {
  if (static_cast<int>(up.size()) < n) throw RangeError("relation has fewer rows than vertices");
  Relation rel{};
  for (int i = 0; i < n; ++i) {
    if (up[i] & ~full_mask(n)) throw RangeError(std::string("vertex out of range in ") + which);
    rel[i] = up[i] & ~bit(i);
  }
  if (!transitive_closure(n, std::span(rel.data(), n))) {
    throw CycleError(std::string("relation ") + which + " is not antisymmetric");
  }
  return rel;
}

Relation from_pairs(int n, std::span<const std::pair<int, int>> gens, const char* which) {
  Relation rel{};
  for (const auto& [i, j] : gens) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw RangeError("pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range in " + which);
    }
    if (i != j) rel[i - 1] |= bit(j - 1);
  }
  return rel;
}

}  // namespace

bool transitive_closure(int n, std::span<VertexMask> up) {
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (up[i] >> k & 1u) up[i] |= up[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (up[i] >> i & 1u) return false;
  }
  return true;
}

DoublePoset DoublePoset::from_generators(int n, std::span<const std::pair<int, int>> first,
                                         std::span<const std::pair<int, int>> second) {
  check_size(n);
  const Relation a = from_pairs(n, first, "first order");
  const Relation b = from_pairs(n, second, "second order");
  return from_masks(n, std::span(a.data(), n), std::span(b.data(), n));
}

DoublePoset DoublePoset::from_masks(int n, std::span<const VertexMask> first,
                                    std::span<const VertexMask> second) {
  check_size(n);
  DoublePoset p;
  p.n_ = n;
  p.first_ = close_or_throw(n, first, "h");
  p.second_ = close_or_throw(n, second, "r");
  return p;
}

VertexMask DoublePoset::predecessors(Order o, int x) const {
  VertexMask m = 0;
  const Relation& up = rel(o);
  for (int i = 0; i < n_; ++i) {
    if (up[i] >> x & 1u) m |= bit(i);
  }
  return m;
}

CanonicalKey DoublePoset::encoding() const {
  CanonicalKey k;
  k.n = static_cast<std::uint8_t>(n_);
  for (int i = 0; i < kMaxVertices; ++i) {
    k.rows[i] = static_cast<std::uint16_t>(first_[i]);
    k.rows[kMaxVertices + i] = static_cast<std::uint16_t>(second_[i]);
  }
  return k;
}

SinglePoset SinglePoset::from_generators(int n, std::span<const std::pair<int, int>> gens) {
  check_size(n);
  const Relation a = from_pairs(n, gens, "order");
  return from_masks(n, std::span(a.data(), n));
}

SinglePoset SinglePoset::from_masks(int n, std::span<const VertexMask> up) {
  check_size(n);
  SinglePoset p;
  p.n_ = n;
  p.up_ = close_or_throw(n, up, "le");
  return p;
}

DoublePoset SinglePoset::as_first_order() const {
  const Relation none{};
  return DoublePoset::from_masks(n_, std::span(up_.data(), n_), std::span(none.data(), n_));
}

namespace {

std::array<int, kMaxVertices> subset_index(VertexMask subset) {
  std::array<int, kMaxVertices> index{};
  index.fill(-1);
  int k = 0;
  for (int v = 0; v < kMaxVertices; ++v) {
    if (subset >> v & 1u) index[v] = k++;
  }
  return index;
}

VertexMask compress(VertexMask m, VertexMask subset, const std::array<int, kMaxVertices>& index) {
  VertexMask out = 0;
  m &= subset;
  while (m) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    out |= bit(index[v]);
  }
  return out;
}

}  // namespace

DoublePoset induced_subposet(const DoublePoset& p, VertexMask subset) {
  if (subset & ~p.vertices()) throw RangeError("subset contains vertices outside the poset");
  const auto index = subset_index(subset);
  const int k = popcount(subset);
  Relation h{}, r{};
  for (int v = 0; v < p.size(); ++v) {
    if (index[v] < 0) continue;
    h[index[v]] = compress(p.successors(Order::h, v), subset, index);
    r[index[v]] = compress(p.successors(Order::r, v), subset, index);
  }
  return DoublePoset::from_masks(k, std::span(h.data(), k), std::span(r.data(), k));
}

SinglePoset induced_subposet(const SinglePoset& p, VertexMask subset) {
  if (subset & ~full_mask(p.size())) throw RangeError("subset contains vertices outside the poset");
  const auto index = subset_index(subset);
  const int k = popcount(subset);
  Relation up{};
  for (int v = 0; v < p.size(); ++v) {
    if (index[v] >= 0) up[index[v]] = compress(p.successors(v), subset, index);
  }
  return SinglePoset::from_masks(k, std::span(up.data(), k));
}

DoublePoset relabel(const DoublePoset& p, std::span<const int> perm) {
  const int n = p.size();
  Relation h{}, r{};
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (p.less(Order::h, v, w)) h[perm[v]] |= bit(perm[w]);
      if (p.less(Order::r, v, w)) r[perm[v]] |= bit(perm[w]);
    }
  }
  return DoublePoset::from_masks(n, std::span(h.data(), n), std::span(r.data(), n));
}

DoublePoset swap_orders(const DoublePoset& p) {
  const int n = p.size();
  return DoublePoset::from_masks(n, std::span(p.rel(Order::r).data(), n),
                                 std::span(p.rel(Order::h).data(), n));
}

bool is_plane(const DoublePoset& p) {
  for (int x = 0; x < p.size(); ++x) {
    for (int y = x + 1; y < p.size(); ++y) {
      if (p.comparable(Order::h, x, y) == p.comparable(Order::r, x, y)) return false;
    }
  }
  return true;
}

const std::array<DoublePoset, 2>& n_forms() {
  static const std::array<DoublePoset, 2> forms = [] {
    const auto all = plane_completions(n_shape());
    if (all.size() != 2) throw Error("N shape must have exactly two plane completions");
    return std::array<DoublePoset, 2>{all[0], all[1]};
  }();
  return forms;
}

bool is_wn(const DoublePoset& p) {
  if (!is_plane(p)) return false;
  const int n = p.size();
  if (n < 4) return true;
  const auto& forms = n_forms();
  for (VertexMask s = 0; s <= full_mask(n); ++s) {
    if (popcount(s) != 4) continue;
    const DoublePoset sub = induced_subposet(p, s);
    int h_pairs = 0;
    for (int v = 0; v < 4; ++v) h_pairs += popcount(sub.successors(Order::h, v));
    if (h_pairs != 3) continue;
    const DoublePoset c = canonical(sub);
    if (c == forms[0] || c == forms[1]) return false;
  }
  return true;
}

bool is_forest(const DoublePoset& p) {
  if (!is_plane(p)) return false;
  // A plane poset contains the Lambda pattern iff two h-incomparable
  // vertices share an h-upper bound.
  for (int z = 0; z < p.size(); ++z) {
    const VertexMask below = p.predecessors(Order::h, z);
    for (int x = 0; x < p.size(); ++x) {
      if (!(below >> x & 1u)) continue;
      for (int y = x + 1; y < p.size(); ++y) {
        if ((below >> y & 1u) && !p.comparable(Order::h, x, y)) return false;
      }
    }
  }
  return true;
}

std::vector<VertexMask> connected_components(const DoublePoset& p, Order o) {
  std::vector<VertexMask> out;
  VertexMask seen = 0;
  for (int v = 0; v < p.size(); ++v) {
    if (seen >> v & 1u) continue;
    VertexMask comp = bit(v);
    VertexMask frontier = bit(v);
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const VertexMask nb = (p.successors(o, x) | p.predecessors(o, x)) & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const DoublePoset& p, Order o) {
  return !p.empty() && connected_components(p, o).size() == 1;
}

std::vector<int> plane_total_order(const DoublePoset& p) {
  if (!is_plane(p)) throw NotPlaneError("total order requires a plane poset");
  const int n = p.size();
  std::vector<int> order(n, -1);
  for (int v = 0; v < n; ++v) {
    const int rank = popcount(p.predecessors(Order::h, v) | p.predecessors(Order::r, v));
    if (order[rank] != -1) throw NotPlaneError("plane total order is not total");
    order[rank] = v;
  }
  return order;
}

namespace {

DoublePoset plane_canonical(const DoublePoset& p) {
  const auto order = plane_total_order(p);
  std::vector<int> perm(p.size());
  for (int i = 0; i < p.size(); ++i) perm[order[i]] = i;
  return relabel(p, perm);
}

// Iterated colour refinement on in/out neighbourhoods of both orders. Colours
// are ranks of invariant signatures, so isomorphic posets get matching
// colourings.
std::vector<int> refine_colors(const DoublePoset& p) {
  const int n = p.size();
  std::vector<int> color(n, 0);
  int classes = 1;
  for (int round = 0; round <= n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      for (Order o : {Order::h, Order::r}) {
        for (VertexMask m : {p.successors(o, v), p.predecessors(o, v)}) {
          std::vector<int> nb;
          while (m) {
            nb.push_back(color[std::countr_zero(m)]);
            m &= m - 1;
          }
          std::sort(nb.begin(), nb.end());
          sig[v].push_back(-1);
          sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
      }
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const int next = static_cast<int>(sorted.size());
    if (next == classes && round > 0) break;
    classes = next;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const DoublePoset& p) : p_(p), n_(p.size()), color_(refine_colors(p)) {
    std::vector<int> by_color(n_);
    std::iota(by_color.begin(), by_color.end(), 0);
    std::stable_sort(by_color.begin(), by_color.end(), [&](int a, int b) { return color_[a] < color_[b]; });
    for (int i = 0; i < n_; ++i) slot_color_[i] = color_[by_color[i]];
  }

  DoublePoset run() {
    dfs(0, false);
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[best_[i]] = i;
    return relabel(p_, perm);
  }

 private:
  std::uint64_t code(int pos, int v) const {
    std::uint64_t c = 0;
    for (int q = 0; q < pos; ++q) {
      const int u = cur_[q];
      c = (c << 4) | (std::uint64_t{p_.less(Order::h, u, v)} << 3) |
          (std::uint64_t{p_.less(Order::h, v, u)} << 2) | (std::uint64_t{p_.less(Order::r, u, v)} << 1) |
          std::uint64_t{p_.less(Order::r, v, u)};
    }
    return c;
  }

  void dfs(int pos, bool below_best) {
    if (pos == n_) {
      if (!have_best_ || below_best) {
        best_ = cur_;
        best_code_ = cur_code_;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v & 1u) || color_[v] != slot_color_[pos]) continue;
      const std::uint64_t c = code(pos, v);
      bool below = below_best;
      if (have_best_ && !below_best) {
        if (c > best_code_[pos]) continue;
        below = c < best_code_[pos];
      }
      cur_[pos] = v;
      cur_code_[pos] = c;
      used_ |= bit(v);
      dfs(pos + 1, below);
      used_ &= ~bit(v);
    }
  }

  const DoublePoset& p_;
  int n_;
  std::vector<int> color_;
  std::array<int, kMaxVertices> slot_color_{};
  std::array<int, kMaxVertices> cur_{};
  std::array<int, kMaxVertices> best_{};
  std::array<std::uint64_t, kMaxVertices> cur_code_{};
  std::array<std::uint64_t, kMaxVertices> best_code_{};
  VertexMask used_ = 0;
  bool have_best_ = false;
};

}  // namespace

DoublePoset canonical_form_generic(const DoublePoset& p) {
  if (p.size() <= 1) return p;
  return CanonicalSearch(p).run();
}

CanonicalForm canonical_form(const DoublePoset& p) {
  DoublePoset c = is_plane(p) ? plane_canonical(p) : canonical_form_generic(p);
  const CanonicalKey key = c.encoding();
  return {std::move(c), key};
}

DoublePoset canonical(const DoublePoset& p) { return canonical_form(p).poset; }

SinglePoset canonical(const SinglePoset& p) {
  const DoublePoset c = canonical_form_generic(p.as_first_order());
  return SinglePoset::from_masks(c.size(), std::span(c.rel(Order::h).data(), c.size()));
}

DoublePoset involution(const DoublePoset& p) { return canonical(swap_orders(p)); }

std::uint64_t automorphism_count(const DoublePoset& p) {
  const int n = p.size();
  const std::vector<int> color = refine_colors(p);
  std::array<int, kMaxVertices> image{};
  VertexMask used = 0;
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w & 1u) || color[w] != color[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        for (Order o : {Order::h, Order::r}) {
          if (p.less(o, u, v) != p.less(o, image[u], w) || p.less(o, v, u) != p.less(o, w, image[u])) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      image[v] = w;
      used |= bit(w);
      self(self, v + 1);
      used &= ~bit(w);
    }
  };
  dfs(dfs, 0);
  return count;
}

ComparabilityCounts comparability_counts(const DoublePoset& p) {
  ComparabilityCounts c;
  for (int v = 0; v < p.size(); ++v) {
    c.x += popcount(p.successors(Order::h, v));
    c.y += popcount(p.successors(Order::r, v));
  }
  return c;
}

std::vector<std::pair<int, int>> hasse_covers(const DoublePoset& p, Order o) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size(); ++x) {
    VertexMask above = p.successors(o, x);
    VertexMask indirect = 0;
    for (VertexMask m = above; m; m &= m - 1) indirect |= p.successors(o, std::countr_zero(m));
    for (VertexMask m = above & ~indirect; m; m &= m - 1) out.emplace_back(x, std::countr_zero(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DoublePoset point() { return DoublePoset::from_generators(1, {}, {}); }

DoublePoset antichain_r(int n) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 1; i < n; ++i) gens.emplace_back(i, i + 1);
  return DoublePoset::from_generators(n, {}, gens);
}

DoublePoset chain_h(int n) {
  std::vector<std::pair<int, int>> gens;
  for (int i = 1; i < n; ++i) gens.emplace_back(i, i + 1);
  return DoublePoset::from_generators(n, gens, {});
}

DoublePoset discrete(int n) { return DoublePoset::from_generators(n, {}, {}); }

}  // namespace dposet

std::size_t std::hash<dposet::CanonicalKey>::operator()(const dposet::CanonicalKey& k) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ k.n;
  for (auto row : k.rows) {
    h ^= row;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}
