#pragma once

// The product dual to the coproduct, the 2-As isomorphism phi, B-infinity
// brackets, and the operad of WN posets with indexed vertices.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dposet/combination.hpp"
#include "dposet/poset.hpp"

namespace dposet {

// P * Q = sum over R of n(P, Q; R) R, where n counts ideals I of R with
// R \ I = P and I = Q. Plane inputs only (NotPlaneError); terms are plane.
LinComb star(const DoublePoset& p, const DoublePoset& q);
// The WN terms of star. This is the product on the WN subalgebra.
LinComb star_wn(const DoublePoset& p, const DoublePoset& q);
LinComb star_wn(const LinComb& x, const LinComb& y);

// sum over Q in WNP(|P|) of <P, Q> Q. Throws NotWNError, BudgetExceededError.
LinComb phi(const DoublePoset& p);
LinComb phi(const LinComb& x);

// h-connected part of (P1 g ... g Pm) * (Q1 g ... g Qn). Every argument must
// be WN and h-connected. Throws EmptyListError, NotWNError,
// NotHConnectedError.
LinComb binfty_bracket(std::span<const DoublePoset> left, std::span<const DoublePoset> right);

// A WN poset whose vertices carry distinct integer labels. Stored with the
// base in canonical form, labels listed per canonical vertex. Plane posets
// have no automorphisms, so this is a normal form.
class IndexedWNPoset {
 public:
  IndexedWNPoset() = default;
  // Throws NotWNError, LabelError (wrong count or repeated labels).
  static IndexedWNPoset make(const DoublePoset& labeled, std::vector<int> labels);

  const DoublePoset& base() const { return base_; }
  const std::vector<int>& labels() const { return labels_; }
  int size() const { return base_.size(); }
  // True when the labels are exactly 1..n.
  bool standard() const;

  friend auto operator<=>(const IndexedWNPoset&, const IndexedWNPoset&) = default;
  friend bool operator==(const IndexedWNPoset&, const IndexedWNPoset&) = default;

 private:
  DoublePoset base_;
  std::vector<int> labels_;
};

using IndexedComb = LinearCombination<IndexedWNPoset>;

IndexedWNPoset indexed_point(int label);
IndexedWNPoset shift_labels(const IndexedWNPoset& p, int k);
// Label l becomes tau[l - 1]; labels must be 1..n.
IndexedWNPoset permute_labels(const IndexedWNPoset& p, std::span<const int> tau);
IndexedWNPoset indexed_involution(const IndexedWNPoset& p);
// A_m h A_n, lower antichain labeled 1..m along <=_r, upper m+1..m+n.
// Throws RangeError unless m, n >= 1.
IndexedWNPoset b_mn(int m, int n);

// "idp" INT "h{" pairs "}" "r{" pairs "}" "lab{" vertex ":" label, ... "}"
IndexedWNPoset parse_indexed(std::string_view text);
std::string to_string(const IndexedWNPoset& p);
std::string to_string(const IndexedComb& c);

// Labeled versions of the WN product and of g: labels travel with the
// vertices, so every assembly is a distinct term.
IndexedComb star_wn(const IndexedWNPoset& p, const IndexedWNPoset& q);
IndexedComb star_wn(const IndexedComb& x, const IndexedComb& y);
IndexedWNPoset compose_g(const IndexedWNPoset& p, const IndexedWNPoset& q);
IndexedComb compose_g(const IndexedComb& x, const IndexedComb& y);

// Interval-closed for both orders.
bool is_complete_subposet(const DoublePoset& host, VertexMask block);
// blocks[i] is the block of vertex i of q.
bool is_q_family(const DoublePoset& q, std::span<const VertexMask> blocks, const DoublePoset& host);
// Block systems of host that form a q-family with block i isomorphic to
// parts[i]. Throws SizeMismatchError.
std::uint64_t count_q_families(const DoublePoset& q, std::span<const DoublePoset> parts, const DoublePoset& host);

// Q o (P1, ..., Pk): the vertex of Q labeled d receives P_d shifted by
// |P_1| + ... + |P_{d-1}|. Q must carry labels 1..k and so must each P_d.
// Built from labeled assemblies: g-factors of Q compose by g, and an h-product
// A h B is the star of the composed parts minus the other assemblies of A * B.
// When the arguments have no r-relations the terms are the q-families.
// Throws SizeMismatchError, LabelError, RangeError.
IndexedComb operad_compose(const IndexedWNPoset& q, std::span<const IndexedWNPoset> args);
IndexedComb operad_compose(const IndexedWNPoset& q, std::span<const IndexedComb> args);
IndexedComb operad_compose(const IndexedComb& q, std::span<const IndexedComb> args);

// Pictures that match equal labels; 0 or 1.
std::uint64_t decorated_pairing(const IndexedWNPoset& p, const IndexedWNPoset& q);
// Every WN poset of size k with every labeling by 1..k, in xy order.
std::vector<IndexedWNPoset> indexed_basis(int k);
// Preimage of Q under the labeled phi, as a combination of labeled posets.
IndexedComb phi_inverse(const IndexedWNPoset& q);
// Q o (args) computed independently of Q-families: expand Q in the free
// (*, g) algebra through phi_inverse and substitute the shifted arguments.
IndexedComb xi_oracle(const IndexedWNPoset& q, std::span<const IndexedWNPoset> args);

}  // namespace dposet
