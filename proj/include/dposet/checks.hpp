#pragma once

// Batch verification suites behind `check`. Each check prints one line; a
// failing check reports its first mismatching term.

#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>

#include "dposet/twoas.hpp"

namespace dposet {

enum class Suite { sequences, hopf, pairing, operad };

// Throws ParseError.
Suite parse_suite(std::string_view name);

// max_n caps the sizes; each check also stays inside its enumeration budget.
bool run_suite(Suite suite, int max_n, std::ostream& out);

// Every (Q, args) with Q standard-labeled of size k >= 1, each argument
// standard-labeled, and total argument size <= max_total.
void for_each_operad_input(int max_total,
                           const std::function<void(const IndexedWNPoset&, std::span<const IndexedWNPoset>)>& visit);

// First term on which two combinations differ, printed as
// "<poset>: <a> vs <b>"; empty when equal.
std::string first_difference(const LinComb& a, const LinComb& b);
std::string first_difference(const TensorComb& a, const TensorComb& b);
std::string first_difference(const IndexedComb& a, const IndexedComb& b);

}  // namespace dposet
