#pragma once

// Exhaustive search over plane double posets on a fixed vertex set where each
// vertex pair is restricted to a set of admissible relations. Every pair of a
// plane poset carries exactly one of four relations, so the search assigns
// one per pair and only has to keep both orders transitive.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "dposet/poset.hpp"

namespace dposet {

// Relation of a pair (a, b) with a < b as vertex indices.
enum PairRelation : std::uint8_t {
  kHForward = 1,   // a <_h b
  kHBackward = 2,  // b <_h a
  kRForward = 4,   // a <_r b
  kRBackward = 8,  // b <_r a
};
using PairRelations = std::uint8_t;
inline constexpr PairRelations kAnyRelation = kHForward | kHBackward | kRForward | kRBackward;

class PlaneAssembly {
 public:
  explicit PlaneAssembly(int n);

  int size() const { return n_; }

  // Restricts the admissible relations of {x, y}. Relations are given from
  // x's point of view, i.e. kHForward means x <_h y.
  void restrict(int x, int y, PairRelations allowed);

  // Copies every relation of `p` onto vertices offset..offset+|p|-1.
  void fix_block(const DoublePoset& p, int offset);

  // Visits every transitive assignment. The posets passed in are labeled
  // (not canonicalized) and plane by construction.
  void for_each(const std::function<void(const DoublePoset&)>& visit) const;

  std::vector<DoublePoset> solutions() const;

 private:
  int n_;
  // allowed_[a][b] for a < b, from a's point of view.
  std::array<std::array<PairRelations, kMaxVertices>, kMaxVertices> allowed_{};
};

// Swaps the point of view of a relation set: x-relative becomes y-relative.
PairRelations flip(PairRelations rel);

}  // namespace dposet
