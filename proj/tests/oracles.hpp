#pragma once

// Brute-force reference implementations. Everything here works from the
// definitions by exhaustive search over permutations or subsets and shares no
// search code with the library.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dposet/combination.hpp"
#include "dposet/poset.hpp"

namespace oracle {

using dposet::DoublePoset;
using dposet::SinglePoset;
using dposet::VertexMask;

// Lexicographically smallest encoding over all n! relabelings.
DoublePoset canonical(const DoublePoset& p);
bool isomorphic(const DoublePoset& a, const DoublePoset& b);
std::uint64_t automorphisms(const DoublePoset& p);

// All n! bijections checked against both implications.
std::uint64_t pictures(const DoublePoset& p, const DoublePoset& q);

// Every subset tested for being up-closed in the first order.
std::vector<VertexMask> ideals(const DoublePoset& p);
dposet::TensorComb coproduct(const DoublePoset& p);

// Strict partial orders on n labeled points, by testing every relation.
std::vector<std::vector<VertexMask>> labeled_orders(int n);
// Isomorphism classes of double posets, by brute-force dedup. n <= 4.
std::vector<DoublePoset> double_posets(int n);

// Pairwise definitions.
bool is_plane(const DoublePoset& p);
// Through 4-subsets compared with the two completions of the N shape found
// by exhaustive search.
bool is_wn(const DoublePoset& p);
bool is_forest(const DoublePoset& p);
bool has_induced_n(const SinglePoset& q);

// Orients each incomparable pair of q either way and keeps the transitive ones.
std::vector<DoublePoset> plane_completions(const SinglePoset& q);

// P * Q read off Delta(R) for every R in basis: the coefficient of R is the
// number of ideals I with (R \ I, I) isomorphic to (P, Q). Keyed by the
// oracle canonical forms of P and Q.
using StarTable = std::map<std::pair<DoublePoset, DoublePoset>, dposet::LinComb>;
StarTable star_by_duality(const std::vector<DoublePoset>& basis);

// C_{n+1} = sum C_i C_{n-i}.
std::vector<std::uint64_t> catalan(int n);

// Random labeled double poset on n points: each order is generated by
// random forward edges along an independent random permutation.
DoublePoset random_double_poset(std::mt19937& rng, int n);

}  // namespace oracle
