#pragma once

// Double posets: a finite vertex set 0..n-1 carrying two strict partial
// orders. The first order is written <=_1 (or <=_h for plane posets), the
// second <=_2 (or <=_r). Relations are stored transitively closed as one
// successor bitmask per vertex, so every predicate is a direct bit query.
//
// Vertices are 0-based in the API; the text format is 1-based.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace dposet {

inline constexpr int kMaxVertices = 16;

using VertexMask = std::uint32_t;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
constexpr VertexMask full_mask(int n) { return n == 0 ? 0 : (bit(n) - 1); }
inline int popcount(VertexMask m) { return std::popcount(m); }

// h is the first order (<=_1), r the second (<=_2).
enum class Order { h, r };

constexpr Order other(Order o) { return o == Order::h ? Order::r : Order::h; }

using Relation = std::array<VertexMask, kMaxVertices>;

// Total encoding of a labeled double poset: size, then the rows of the first
// order, then the rows of the second. Equal keys of canonical forms mean
// isomorphic posets.
struct CanonicalKey {
  std::uint8_t n = 0;
  std::array<std::uint16_t, 2 * kMaxVertices> rows{};

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

class DoublePoset {
 public:
  DoublePoset() = default;

  // Builds the reflexive-transitive closure of 1-based generator pairs.
  // Throws RangeError for out-of-range vertices, CycleError when the closure
  // is not antisymmetric.
  static DoublePoset from_generators(int n, std::span<const std::pair<int, int>> first,
                                     std::span<const std::pair<int, int>> second);

  // 0-based strict successor masks. They are closed here; the same errors as
  // from_generators apply.
  static DoublePoset from_masks(int n, std::span<const VertexMask> first,
                                std::span<const VertexMask> second);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  VertexMask vertices() const { return full_mask(n_); }

  // Strict relation x <_o y.
  bool less(Order o, int x, int y) const { return (rel(o)[x] >> y) & 1u; }
  bool leq(Order o, int x, int y) const { return x == y || less(o, x, y); }
  bool comparable(Order o, int x, int y) const { return less(o, x, y) || less(o, y, x); }

  VertexMask successors(Order o, int x) const { return rel(o)[x]; }
  VertexMask predecessors(Order o, int x) const;

  const Relation& rel(Order o) const { return o == Order::h ? first_ : second_; }

  CanonicalKey encoding() const;

  friend auto operator<=>(const DoublePoset&, const DoublePoset&) = default;
  friend bool operator==(const DoublePoset&, const DoublePoset&) = default;

 private:
  std::int32_t n_ = 0;
  Relation first_{};
  Relation second_{};
};

// A bare poset, the input of the completion searches.
class SinglePoset {
 public:
  SinglePoset() = default;
  static SinglePoset from_generators(int n, std::span<const std::pair<int, int>> gens);
  static SinglePoset from_masks(int n, std::span<const VertexMask> up);

  int size() const { return n_; }
  bool less(int x, int y) const { return (up_[x] >> y) & 1u; }
  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
  VertexMask successors(int x) const { return up_[x]; }

  // The double poset with this order first and a discrete second order.
  DoublePoset as_first_order() const;

  friend auto operator<=>(const SinglePoset&, const SinglePoset&) = default;
  friend bool operator==(const SinglePoset&, const SinglePoset&) = default;

 private:
  std::int32_t n_ = 0;
  Relation up_{};
};

// Closes strict successor masks in place. Returns false if the closure has a
// cycle.
bool transitive_closure(int n, std::span<VertexMask> up);

// Both orders restricted to `subset`, renumbered preserving vertex order.
DoublePoset induced_subposet(const DoublePoset& p, VertexMask subset);
SinglePoset induced_subposet(const SinglePoset& p, VertexMask subset);

// Vertex v of p becomes vertex perm[v] of the result.
DoublePoset relabel(const DoublePoset& p, std::span<const int> perm);

// Swaps the two orders without canonicalizing.
DoublePoset swap_orders(const DoublePoset& p);

bool is_plane(const DoublePoset& p);
bool is_wn(const DoublePoset& p);
bool is_forest(const DoublePoset& p);

// The two plane completions of the N-shaped poset, canonical, sorted.
const std::array<DoublePoset, 2>& n_forms();

// Components of the comparability graph of the selected order, each as a
// vertex mask, sorted by smallest vertex. Empty poset gives no components.
std::vector<VertexMask> connected_components(const DoublePoset& p, Order o);
// Exactly one component. The empty poset is not connected.
bool is_connected(const DoublePoset& p, Order o);

// Vertices listed increasingly for x <= y iff x <=_h y or x <=_r y.
// Throws NotPlaneError.
std::vector<int> plane_total_order(const DoublePoset& p);

struct CanonicalForm {
  DoublePoset poset;
  CanonicalKey key;
};

// Plane posets are relabeled along their total order; other posets go
// through canonical_form_generic.
CanonicalForm canonical_form(const DoublePoset& p);
DoublePoset canonical(const DoublePoset& p);

// Minimizes a prefix encoding over all vertex orderings compatible with an
// iteratively refined degree partition. Works for any double poset.
DoublePoset canonical_form_generic(const DoublePoset& p);

SinglePoset canonical(const SinglePoset& p);

// (P, <=_2, <=_1), canonical.
DoublePoset involution(const DoublePoset& p);

std::uint64_t automorphism_count(const DoublePoset& p);

struct ComparabilityCounts {
  int x = 0;  // strict <_1 pairs
  int y = 0;  // strict <_2 pairs
  friend bool operator==(const ComparabilityCounts&, const ComparabilityCounts&) = default;
};
ComparabilityCounts comparability_counts(const DoublePoset& p);

// Hasse covers of one order as 0-based (lower, upper) pairs, sorted.
std::vector<std::pair<int, int>> hasse_covers(const DoublePoset& p, Order o);

// Single point, antichain in the second order, chain in the first order.
DoublePoset point();
DoublePoset antichain_r(int n);  // A_n: n points totally ordered by <=_2
DoublePoset chain_h(int n);      // C_n: n points totally ordered by <=_1
DoublePoset discrete(int n);     // both orders trivial

}  // namespace dposet

template <>
struct std::hash<dposet::CanonicalKey> {
  std::size_t operator()(const dposet::CanonicalKey& k) const noexcept;
};

template <>
struct std::hash<dposet::DoublePoset> {
  std::size_t operator()(const dposet::DoublePoset& p) const noexcept {
    return std::hash<dposet::CanonicalKey>{}(p.encoding());
  }
};
