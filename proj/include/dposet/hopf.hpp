#pragma once

// The ideal coproduct, its reduced version and deconcatenation along the
// g-factorization.

#include <vector>

#include "dposet/combination.hpp"
#include "dposet/poset.hpp"
#include "dposet/products.hpp"

namespace dposet {

// All <=_1-up-closed vertex subsets, including the empty set and P, sorted
// as masks.
std::vector<VertexMask> ideals(const DoublePoset& p);

// Sum over ideals I of (P \ I) (x) I, factors canonical.
TensorComb coproduct(const DoublePoset& p);
TensorComb coproduct(const LinComb& x);

// coproduct minus P (x) 1 and 1 (x) P. Throws EmptyInputError.
TensorComb reduced_coproduct(const DoublePoset& p);

// Sum over P1 g P2 = P of P1 (x) P2.
TensorComb deconcat_coproduct_g(const DoublePoset& p);
TensorComb reduced_deconcat_coproduct_g(const DoublePoset& p);

// (Delta (x) id) Delta and (id (x) Delta) Delta.
Tensor3Comb coproduct_left_iterated(const DoublePoset& p);
Tensor3Comb coproduct_right_iterated(const DoublePoset& p);

// (a (x) b) op (c (x) d) = (a op c) (x) (b op d), extended bilinearly.
TensorComb tensor_product(Product op, const TensorComb& x, const TensorComb& y);

// (P (x) 1) op x and x op (1 (x) Q).
TensorComb left_multiply(Product op, const DoublePoset& p, const TensorComb& x);
TensorComb right_multiply(Product op, const TensorComb& x, const DoublePoset& q);

LinComb product(Product op, const LinComb& x, const LinComb& y);

}  // namespace dposet
