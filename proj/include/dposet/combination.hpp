#pragma once

// Finite formal combinations with exact rational coefficients. Zero
// coefficients are never stored; iteration follows the basis ordering, which
// for canonical posets coincides with CanonicalKey order.

#include <gmpxx.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "dposet/poset.hpp"

namespace dposet {

using Rational = mpq_class;

template <class Basis>
class LinearCombination {
 public:
  using Terms = std::map<Basis, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(Basis b, Rational c = 1) { add(std::move(b), c); }

  void add(const Basis& b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Basis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinearCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [b, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  template <class Pred>
  LinearCombination filtered(Pred keep) const {
    LinearCombination out;
    for (const auto& [b, c] : terms_) {
      if (keep(b)) out.terms_.emplace(b, c);
    }
    return out;
  }

 private:
  Terms terms_;
};

using LinComb = LinearCombination<DoublePoset>;
using Tensor2 = std::pair<DoublePoset, DoublePoset>;
using TensorComb = LinearCombination<Tensor2>;
using Tensor3 = std::tuple<DoublePoset, DoublePoset, DoublePoset>;
using Tensor3Comb = LinearCombination<Tensor3>;

// Bilinear extension of a basis-level operation returning a combination.
template <class Basis, class Result, class Op>
Result bilinear(const LinearCombination<Basis>& a, const LinearCombination<Basis>& b, Op op) {
  Result out;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) {
      Result term = op(x, y);
      term *= cx * cy;
      out += term;
    }
  }
  return out;
}

// Basis posets are canonical; grade = size if homogeneous, -1 otherwise.
int grade(const LinComb& c);

// "<rational> * <poset text>" per line; "0" for the empty combination.
std::string to_string(const LinComb& c);
// "<rational> * <poset> (x) <poset>" per line.
std::string to_string(const TensorComb& c);

}  // namespace dposet
