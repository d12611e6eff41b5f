#pragma once

// The picture pairing on double posets and the exact linear algebra around
// it.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dposet/execution.hpp"
#include "dposet/poset.hpp"

namespace dposet {

// Bijections s: P -> Q with i <=_1 j => s(i) <=_2 s(j) and
// s(i) <=_1 s(j) => i <=_2 j. Zero when the sizes differ.
std::uint64_t pictures_count(const DoublePoset& p, const DoublePoset& q);

struct PairingMatrix {
  std::vector<DoublePoset> rows;
  std::vector<DoublePoset> cols;
  std::vector<std::vector<std::uint64_t>> entries;  // entries[i][j] = <rows[i], cols[j]>
};

// Throws SizeMismatchError unless every poset has the same size.
PairingMatrix pairing_matrix(std::span<const DoublePoset> basis, Execution exec = Execution::parallel);
PairingMatrix pairing_matrix(std::span<const DoublePoset> rows, std::span<const DoublePoset> cols,
                             Execution exec = Execution::parallel);

// Sorted by (Y - X, key) ascending: P comes after Q whenever X_P <= X_Q and
// Y_P >= Y_Q with (X_P, Y_P) != (X_Q, Y_Q).
std::vector<DoublePoset> xy_order(std::span<const DoublePoset> basis);

// Rows in xy order, columns the involution images of the rows. Lower
// triangular with |Aut| on the diagonal when the basis is closed under the
// involution.
PairingMatrix triangular_form(std::span<const DoublePoset> basis, Execution exec = Execution::parallel);
bool is_lower_triangular(const PairingMatrix& m);

// Rank over the rationals. Fraction-free elimination on sparse integer rows,
// each row kept primitive by dividing out its content.
std::size_t exact_rank(const std::vector<std::vector<mpz_class>>& matrix);
std::size_t exact_rank(const PairingMatrix& m);

struct NondegeneracyReport {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  bool full_rank() const { return rank == dimension; }
};

// Throws SizeMismatchError, BasisNotIotaClosedError.
NondegeneracyReport nondegeneracy_check(std::span<const DoublePoset> basis, Execution exec = Execution::parallel);

// One row per line, entries space-separated.
std::string to_string(const PairingMatrix& m);

}  // namespace dposet
