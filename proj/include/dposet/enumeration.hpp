#pragma once

// Isomorphism classes of double posets by size, and the counting sequences
// they are checked against.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dposet/execution.hpp"
#include "dposet/poset.hpp"

namespace dposet {

// wnp_h / wnp_r: WN posets that are h-connected / r-connected.
enum class PosetClass { dp, pp, wnp, wnp_h, wnp_r, pf };

std::string to_string(PosetClass c);
// Accepts dp, pp, wn, wnp, wnh, wnr, pf. Throws ParseError.
PosetClass parse_poset_class(std::string_view name);

// Largest size enumerate() accepts for the class.
int budget(PosetClass c);
bool belongs(PosetClass c, const DoublePoset& p);

// Canonical forms sorted by key, each class once. Results are cached; the
// reference stays valid for the life of the program. Throws
// BudgetExceededError, RangeError for negative n.
const std::vector<DoublePoset>& enumerate(PosetClass c, int n, Execution exec = Execution::parallel);
// Same result without touching the cache; levels below n are still cached.
std::vector<DoublePoset> enumerate_uncached(PosetClass c, int n, Execution exec);
// Counts level n without storing it (the DP path keeps only the dedup set).
std::uint64_t count(PosetClass c, int n, Execution exec = Execution::parallel);

// Every strict partial order on the labeled set 0..n-1.
std::vector<SinglePoset> labeled_posets(int n);
// Unlabeled posets, canonical, sorted. n <= 6.
std::vector<SinglePoset> enumerate_single_posets(int n);

// Coefficients 0..n of the generating series of h-connected WN posets by the
// little Schroeder recurrence.
std::vector<mpz_class> schroeder_coefficients(int n);
// Power series square root of f with f[0] = 1, to order n.
std::vector<mpq_class> series_sqrt(const std::vector<mpq_class>& f, int n);
// Coefficients 0..n of (1 + x - sqrt(1 - 6x + x^2)) / 4 and
// (3 - x - sqrt(1 - 6x + x^2)) / 2, expanded from the closed forms.
std::vector<mpq_class> wnp_h_series(int n);
std::vector<mpq_class> wnp_series(int n);
std::vector<mpz_class> catalan_numbers(int n);
std::vector<mpz_class> factorials(int n);

struct SequenceRow {
  int n = 0;
  std::uint64_t count = 0;
  std::optional<mpz_class> expected;
  bool ok = true;
};

struct SequenceReport {
  PosetClass cls = PosetClass::pp;
  std::vector<SequenceRow> rows;
  // |WNP_h(n)| = |WNP(n)| / 2 for 2 <= n, only for wnp_h.
  bool halving_ok = true;
  bool ok() const;
};

// Compares counts for n = 0..max_n (1..max_n for the connected classes)
// with n!, the two closed forms, and Catalan numbers. DP has no oracle.
SequenceReport sequence_check(PosetClass c, int max_n, Execution exec = Execution::parallel);
std::string to_string(const SequenceReport& r);

}  // namespace dposet
