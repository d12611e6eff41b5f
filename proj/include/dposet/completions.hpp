#pragma once

// Searches for second orders that turn a bare poset into a plane (or WN)
// double poset.

#include <vector>

#include "dposet/poset.hpp"

namespace dposet {

// a, b minimal; c, d maximal; a < c, b < c, b < d.
SinglePoset n_shape();

// 2N vertices x_1..x_N, y_1..y_N with x_i < y_i and x_i < y_{i+1 mod N}.
// Throws RangeError for N = 0 or when 2N exceeds the vertex capacity.
SinglePoset crown_poset(int n);

// Every second order making (Q, <=_Q, <=_r) plane, up to isomorphism:
// distinct canonical forms sorted by key.
std::vector<DoublePoset> plane_completions(const SinglePoset& q);

// The WN members of plane_completions.
std::vector<DoublePoset> wn_completions(const SinglePoset& q);

// True if some 4-subset of Q induces the N shape.
bool has_induced_n(const SinglePoset& q);

}  // namespace dposet
