#include "dposet/checks.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "dposet/enumeration.hpp"
#include "dposet/errors.hpp"
#include "dposet/fixtures.hpp"
#include "dposet/hopf.hpp"
#include "dposet/pairing.hpp"
#include "dposet/products.hpp"
#include "dposet/text.hpp"

namespace dposet {

Suite parse_suite(std::string_view name) {
  if (name == "sequences") return Suite::sequences;
  if (name == "hopf") return Suite::hopf;
  if (name == "pairing") return Suite::pairing;
  if (name == "operad") return Suite::operad;
  throw ParseError("suite: expected sequences|hopf|pairing|operad, got '" + std::string(name) + "'");
}

namespace {

template <class Basis, class Print>
std::string difference(const LinearCombination<Basis>& a, const LinearCombination<Basis>& b, Print print) {
  std::set<Basis> keys;
  for (const auto& [k, c] : a) keys.insert(k);
  for (const auto& [k, c] : b) keys.insert(k);
  for (const auto& k : keys) {
    const Rational x = a.coefficient(k), y = b.coefficient(k);
    if (x != y) return print(k) + ": " + x.get_str() + " vs " + y.get_str();
  }
  return {};
}

}  // namespace

std::string first_difference(const LinComb& a, const LinComb& b) {
  return difference(a, b, [](const DoublePoset& p) { return to_string(p); });
}

std::string first_difference(const TensorComb& a, const TensorComb& b) {
  return difference(a, b, [](const Tensor2& t) { return to_string(t.first) + " (x) " + to_string(t.second); });
}

std::string first_difference(const IndexedComb& a, const IndexedComb& b) {
  return difference(a, b, [](const IndexedWNPoset& p) { return to_string(p); });
}

void for_each_operad_input(int max_total,
                           const std::function<void(const IndexedWNPoset&, std::span<const IndexedWNPoset>)>& visit) {
  std::vector<std::vector<IndexedWNPoset>> by_size(max_total + 1);
  for (int s = 1; s <= max_total; ++s) by_size[s] = indexed_basis(s);
  for (int k = 1; k <= max_total; ++k) {
    for (const auto& q : by_size[k]) {
      std::vector<IndexedWNPoset> args(k);
      auto fill = [&](auto&& self, int i, int used) -> void {
        if (i == k) {
          visit(q, args);
          return;
        }
        const int room = max_total - used - (k - i - 1);
        for (int s = 1; s <= room; ++s) {
          for (const auto& a : by_size[s]) {
            args[i] = a;
            self(self, i + 1, used + s);
          }
        }
      };
      fill(fill, 0, 0);
    }
  }
}

namespace {

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}
  void line(const std::string& name, bool ok, const std::string& detail = {}) {
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) out_ << ": " << detail;
    out_ << '\n';
    all_ok_ = all_ok_ && ok;
  }
  bool ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

void sequences_suite(int max_n, Reporter& rep) {
  for (PosetClass c : {PosetClass::pp, PosetClass::wnp, PosetClass::wnp_h, PosetClass::wnp_r, PosetClass::pf}) {
    const int top = std::min(max_n, budget(c));
    const auto report = sequence_check(c, top);
    std::string detail;
    for (const auto& row : report.rows) {
      if (!row.ok) {
        detail = "n=" + std::to_string(row.n) + " got " + std::to_string(row.count) + " expected " +
                 row.expected->get_str();
        break;
      }
    }
    if (!report.halving_ok) detail += " halving fails";
    rep.line("counts " + to_string(c) + " up to " + std::to_string(top), report.ok(), detail);
  }
  const int top = std::min(max_n, budget(PosetClass::wnp));
  bool table_ok = true;
  std::string detail;
  for (int n = 0; n <= top && table_ok; ++n) {
    const auto got = enumerate(PosetClass::wnp, n).size();
    if (got != fixtures::wnp_counts()[n]) {
      table_ok = false;
      detail = "wn n=" + std::to_string(n);
    }
    if (n >= 1 && enumerate(PosetClass::wnp_h, n).size() != fixtures::wnp_h_counts()[n]) {
      table_ok = false;
      detail = "wnh n=" + std::to_string(n);
    }
  }
  rep.line("published wn table up to " + std::to_string(top), table_ok, detail);
  const auto rec = schroeder_coefficients(10);
  const auto closed = wnp_h_series(10);
  bool series_ok = true;
  for (int n = 0; n <= 10; ++n) series_ok = series_ok && mpq_class(rec[n]) == closed[n];
  rep.line("recurrence matches closed form to order 10", series_ok);
}

void hopf_suite(int max_n, Reporter& rep) {
  for (const auto& f : fixtures::reduced_coproducts()) {
    const auto got = reduced_coproduct(fixtures::word(f.glyph));
    const auto diff = first_difference(got, f.expected());
    rep.line(std::string("reduced coproduct of ") + f.glyph, diff.empty(), diff);
  }
  for (int n = 0; n <= std::min(max_n, 4); ++n) {
    std::string detail;
    for (const auto& p : enumerate(PosetClass::dp, n)) {
      if (coproduct_left_iterated(p) != coproduct_right_iterated(p)) {
        detail = to_string(p);
        break;
      }
    }
    rep.line("coassociativity on dp(" + std::to_string(n) + ")", detail.empty(), detail);
  }
  for (PosetClass c : {PosetClass::pp, PosetClass::wnp}) {
    for (int n = 0; n <= std::min(max_n, 5); ++n) {
      std::string detail;
      for (const auto& p : enumerate(c, n)) {
        for (const auto& [t, coeff] : coproduct(p)) {
          if (!belongs(c, t.first) || !belongs(c, t.second)) detail = to_string(p);
        }
        if (!detail.empty()) break;
      }
      rep.line("coproduct closed on " + to_string(c) + "(" + std::to_string(n) + ")", detail.empty(), detail);
    }
  }
}

void pairing_suite(int max_n, Reporter& rep) {
  for (const auto& f : fixtures::pairing_matrices()) {
    std::vector<DoublePoset> basis;
    for (const char* w : f.basis) basis.push_back(fixtures::word(w));
    const auto m = pairing_matrix(basis);
    rep.line("pairing matrix on pp(" + std::to_string(basis.front().size()) + ")",
             m.entries == f.entries);
  }
  for (int n = 0; n <= std::min(max_n, 4); ++n) {
    const auto& basis = enumerate(PosetClass::dp, n);
    const auto m = pairing_matrix(basis);
    bool symmetric = true, aut = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) symmetric = symmetric && m.entries[i][j] == m.entries[j][i];
      aut = aut && pictures_count(basis[i], involution(basis[i])) == automorphism_count(basis[i]);
    }
    rep.line("pairing symmetric on dp(" + std::to_string(n) + ")", symmetric);
    rep.line("<P, iota P> = |Aut P| on dp(" + std::to_string(n) + ")", aut);
  }
  auto nondegenerate = [&](PosetClass c, int top) {
    for (int n = 1; n <= std::min(max_n, top); ++n) {
      const auto& basis = enumerate(c, n);
      const auto report = nondegeneracy_check(basis);
      const auto tri = triangular_form(basis);
      bool diagonal = true;
      for (std::size_t i = 0; i < tri.rows.size(); ++i) {
        diagonal = diagonal && tri.entries[i][i] == automorphism_count(tri.rows[i]);
      }
      rep.line("full rank on " + to_string(c) + "(" + std::to_string(n) + ")", report.full_rank(),
               std::to_string(report.rank) + " of " + std::to_string(report.dimension));
      rep.line("triangular against iota on " + to_string(c) + "(" + std::to_string(n) + ")",
               is_lower_triangular(tri) && diagonal);
    }
  };
  nondegenerate(PosetClass::pp, 5);
  nondegenerate(PosetClass::wnp, 5);
  nondegenerate(PosetClass::dp, 4);
}

void operad_suite(int max_n, Reporter& rep) {
  const int top = std::min(max_n, 4);
  std::string detail;
  std::size_t cases = 0;
  for_each_operad_input(top, [&](const IndexedWNPoset& q, std::span<const IndexedWNPoset> args) {
    ++cases;
    if (!detail.empty()) return;
    const auto a = operad_compose(q, args);
    const auto b = xi_oracle(q, args);
    if (a != b) detail = to_string(q) + " -> " + first_difference(a, b);
  });
  rep.line("composition agrees with the 2-As oracle on " + std::to_string(cases) + " inputs", detail.empty(), detail);
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const auto b = b_mn(m, n);
      const auto covers = hasse_covers(b.base(), Order::h);
      bool bipartite = static_cast<int>(covers.size()) == m * n;
      for (const auto& [x, y] : covers) bipartite = bipartite && b.labels()[x] <= m && b.labels()[y] > m;
      rep.line("b(" + std::to_string(m) + "," + std::to_string(n) + ") Hasse graph complete bipartite", bipartite);
      const std::vector<DoublePoset> left(m, point()), right(n, point());
      const LinComb expected(compose_h(antichain_r(m), antichain_r(n)));
      const auto got = binfty_bracket(left, right);
      rep.line("bracket of " + std::to_string(m) + " and " + std::to_string(n) + " points", got == expected,
               first_difference(got, expected));
    }
  }
}

}  // namespace

bool run_suite(Suite suite, int max_n, std::ostream& out) {
  Reporter rep(out);
  switch (suite) {
    case Suite::sequences: sequences_suite(max_n, rep); break;
    case Suite::hopf: hopf_suite(max_n, rep); break;
    case Suite::pairing: pairing_suite(max_n, rep); break;
    case Suite::operad: operad_suite(max_n, rep); break;
  }
  return rep.ok();
}

}  // namespace dposet
