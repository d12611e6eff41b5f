#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "dposet/checks.hpp"
#include "dposet/completions.hpp"
#include "dposet/enumeration.hpp"
#include "dposet/fixtures.hpp"
#include "dposet/hopf.hpp"
#include "dposet/pairing.hpp"
#include "dposet/products.hpp"
#include "dposet/text.hpp"
#include "dposet/twoas.hpp"
#include "oracles.hpp"

using namespace dposet;

namespace {

// Each criterion returns an empty string on success, otherwise the first
// failure it ran into.
using Criterion = std::function<std::string()>;

template <class... T>
std::string say(const T&... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

std::string counts() {
  auto sizes = [](PosetClass c, int from, int to) {
    std::vector<std::uint64_t> out;
    for (int n = from; n <= to; ++n) out.push_back(enumerate(c, n).size());
    return out;
  };
  if (sizes(PosetClass::pp, 0, 6) != std::vector<std::uint64_t>{1, 1, 2, 6, 24, 120, 720}) return "PP counts";
  if (sizes(PosetClass::wnp, 0, 7) != std::vector<std::uint64_t>{1, 1, 2, 6, 22, 90, 394, 1806}) return "WNP counts";
  if (sizes(PosetClass::wnp_h, 1, 7) != std::vector<std::uint64_t>{1, 1, 3, 11, 45, 197, 903}) return "WNP_h counts";
  if (sizes(PosetClass::pf, 1, 4) != std::vector<std::uint64_t>{1, 2, 5, 14}) return "PF counts";
  for (int n = 2; n <= 7; ++n) {
    if (2 * enumerate(PosetClass::wnp_h, n).size() != enumerate(PosetClass::wnp, n).size()) return say("halving at ", n);
  }
  return {};
}

std::string series() {
  const auto wn = wnp_series(7), wnh = wnp_h_series(7);
  const auto rec = schroeder_coefficients(7);
  for (int n = 0; n <= 7; ++n) {
    const mpq_class a = enumerate(PosetClass::wnp, n).size();
    const mpq_class b = enumerate(PosetClass::wnp_h, n).size();
    if (wn[n] != a) return say("WNP series at ", n);
    if (wnh[n] != b || mpq_class(rec[n]) != b) return say("WNP_h series at ", n);
  }
  return {};
}

std::string coproduct_fixtures() {
  const auto& list = fixtures::reduced_coproducts();
  if (list.size() != 17) return say(list.size(), " fixtures");
  for (const auto& f : list) {
    const auto got = reduced_coproduct(fixtures::word(f.glyph));
    if (got != f.expected()) return say(f.glyph, ": ", first_difference(got, f.expected()));
  }
  return {};
}

std::string pairing_fixtures() {
  if (fixtures::pairing_matrices().size() != 3) return "matrix count";
  for (const auto& f : fixtures::pairing_matrices()) {
    std::vector<DoublePoset> basis;
    for (const char* w : f.basis) basis.push_back(fixtures::word(w));
    if (pairing_matrix(basis).entries != f.entries) return say("matrix of size ", basis.size());
  }
  for (int n = 0; n <= 4; ++n) {
    const auto& basis = enumerate(PosetClass::dp, n);
    const auto m = pairing_matrix(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (m.entries[i][j] != m.entries[j][i]) return say("asymmetric at ", to_string(basis[i]));
      }
      const auto aut = automorphism_count(basis[i]);
      if (pictures_count(basis[i], involution(basis[i])) != aut || aut != oracle::automorphisms(basis[i])) {
        return say("automorphisms of ", to_string(basis[i]));
      }
    }
  }
  return {};
}

std::string nondegeneracy() {
  for (PosetClass c : {PosetClass::pp, PosetClass::wnp, PosetClass::dp}) {
    const int top = c == PosetClass::dp ? 4 : 5;
    for (int n = 0; n <= top; ++n) {
      const auto& basis = enumerate(c, n);
      if (!nondegeneracy_check(basis).full_rank()) return say(to_string(c), " rank at ", n);
      const auto t = triangular_form(basis);
      if (!is_lower_triangular(t)) return say(to_string(c), " not triangular at ", n);
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.cols[i] != involution(t.rows[i]) || t.entries[i][i] != automorphism_count(t.rows[i])) {
          return say(to_string(c), " diagonal at ", to_string(t.rows[i]));
        }
      }
    }
  }
  return {};
}

mpq_class pair_with(const DoublePoset& a, const DoublePoset& b, const TensorComb& t) {
  mpq_class sum = 0;
  for (const auto& [k, c] : t) sum += c * pictures_count(a, k.first) * pictures_count(b, k.second);
  return sum;
}

std::string hopf_axioms() {
  std::mt19937 rng(2024);
  auto random = [&](int n) { return canonical(oracle::random_double_poset(rng, n)); };
  auto split = [&](int total) { return std::uniform_int_distribution<int>(0, total)(rng); };
  constexpr int kTrials = 150;
  for (int t = 0; t < kTrials; ++t) {
    const auto p = random(1 + t % 5);
    if (coproduct_left_iterated(p) != coproduct_right_iterated(p)) return say("coassociativity at ", to_string(p));
  }
  for (int t = 0; t < kTrials; ++t) {
    const int total = 1 + t % 5, a = split(total);
    const auto p = random(a), q = random(total - a);
    if (coproduct(compose_g(p, q)) != tensor_product(Product::g, coproduct(p), coproduct(q))) {
      return say("multiplicativity at ", to_string(p), " , ", to_string(q));
    }
    TensorComb rhs = left_multiply(Product::h, p, coproduct(q));
    rhs += right_multiply(Product::h, coproduct(p), q);
    rhs.add({p, q}, -1);
    if (coproduct(compose_h(p, q)) != rhs) return say("infinitesimal identity at ", to_string(p), " , ", to_string(q));
  }
  for (int t = 0; t < kTrials; ++t) {
    const int total = 1 + t % 5, a = split(total);
    const auto p = random(a), q = random(total - a), r = random(total);
    if (mpq_class(pictures_count(compose_g(p, q), r)) != pair_with(p, q, coproduct(r))) {
      return say("g adjunction at ", to_string(r));
    }
    if (mpq_class(pictures_count(compose_h(p, q), r)) != pair_with(p, q, deconcat_coproduct_g(r))) {
      return say("h adjunction at ", to_string(r));
    }
  }
  return {};
}

std::string factorization() {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& p : enumerate(PosetClass::dp, n)) {
      for (Product op : {Product::g, Product::h}) {
        const auto f = factorize(p, op);
        if (compose_all(op, f.factors) != p) return say("factor identity at ", to_string(p));
        for (const auto& x : f.factors) {
          if (factorize(x, op).factors.size() != 1) return say("reducible factor in ", to_string(p));
        }
      }
      if (n > 0 && !is_1_indecomposable(p) && !is_2_indecomposable(p)) return say("trichotomy at ", to_string(p));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate(PosetClass::pp, n)) {
      if (is_1_indecomposable(p) != is_connected(p, Order::h) || is_2_indecomposable(p) != is_connected(p, Order::r)) {
        return say("connectivity at ", to_string(p));
      }
    }
  }
  const auto w = parse_poset("dp 3 h{(1,3)} r{(1,2),(1,3),(2,3)}");
  if (is_plane(w) || !is_1_indecomposable(w) || is_connected(w, Order::h)) return "non-plane witness";
  return {};
}

std::string completions() {
  if (!plane_completions(crown_poset(3)).empty() || !plane_completions(crown_poset(4)).empty()) return "crowns 3, 4";
  if (plane_completions(crown_poset(1)).empty() || plane_completions(crown_poset(2)).empty()) return "crowns 1, 2";
  for (int n = 0; n <= 6; ++n) {
    for (const auto& q : enumerate_single_posets(n)) {
      const bool n_free = !has_induced_n(q);
      if (n_free != !oracle::has_induced_n(q)) return "induced N detection";
      if (wn_completions(q).empty() == n_free) return say("WN completion at size ", n);
    }
  }
  return {};
}

std::string star_and_phi() {
  if (fixtures::star_products().size() != 2) return "star fixture count";
  for (const auto& f : fixtures::star_products()) {
    if (star(fixtures::word(f.left), fixtures::word(f.right)) != f.expected()) return say(f.left, " * ", f.right);
  }
  for (int total = 0; total <= 5; ++total) {
    const auto table = oracle::star_by_duality(enumerate(PosetClass::pp, total));
    for (int a = 0; a <= total; ++a) {
      for (const auto& p : enumerate(PosetClass::pp, a)) {
        for (const auto& q : enumerate(PosetClass::pp, total - a)) {
          const auto it = table.find({oracle::canonical(p), oracle::canonical(q)});
          const auto got = star(p, q);
          if (got != (it == table.end() ? LinComb{} : it->second)) return say(to_string(p), " * ", to_string(q));
        }
      }
    }
  }
  for (int total = 0; total <= 4; ++total) {
    for (int a = 0; a <= total; ++a) {
      for (const auto& p : enumerate(PosetClass::wnp, a)) {
        for (const auto& q : enumerate(PosetClass::wnp, total - a)) {
          if (phi(compose_g(p, q)) != star_wn(phi(p), phi(q)) ||
              phi(compose_h(p, q)) != product(Product::g, phi(p), phi(q))) {
            return say("phi morphism at ", to_string(p), " , ", to_string(q));
          }
        }
      }
    }
  }
  for (int n = 0; n <= 5; ++n) {
    const auto& basis = enumerate(PosetClass::wnp, n);
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& p : basis) {
      const auto image = phi(p);
      std::vector<mpz_class> row;
      for (const auto& q : basis) row.push_back(image.coefficient(q).get_num());
      rows.push_back(std::move(row));
    }
    if (exact_rank(rows) != basis.size()) return say("phi singular at ", n);
  }
  return {};
}

std::vector<int> random_parts(std::mt19937& rng, int total, int parts) {
  std::vector<int> cuts(total - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> out;
  int prev = 0;
  for (int c : cuts) {
    out.push_back(c - prev);
    prev = c;
  }
  out.push_back(total - prev);
  return out;
}

std::string operad() {
  std::vector<std::vector<IndexedWNPoset>> basis(6);
  for (int k = 1; k <= 5; ++k) basis[k] = indexed_basis(k);
  std::mt19937 rng(77);
  auto pick = [&](int size) -> const IndexedWNPoset& {
    return basis[size][std::uniform_int_distribution<std::size_t>(0, basis[size].size() - 1)(rng)];
  };

  for (int k = 1; k <= 5; ++k) {
    for (const auto& q : basis[k]) {
      const std::vector<IndexedWNPoset> points(k, indexed_point(1)), one{q};
      if (operad_compose(q, points) != IndexedComb(q)) return say("right unit at ", to_string(q));
      if (operad_compose(indexed_point(1), one) != IndexedComb(q)) return say("left unit at ", to_string(q));
    }
  }

  for (int trial = 0; trial < 150; ++trial) {
    const int total = 2 + trial % 4;
    const int middle = std::uniform_int_distribution<int>(1, total)(rng);
    const int k = std::uniform_int_distribution<int>(1, middle)(rng);
    const auto& q = pick(k);
    std::vector<IndexedWNPoset> ps;
    for (int s : random_parts(rng, middle, k)) ps.push_back(pick(s));
    std::vector<IndexedComb> rs;
    for (int s : random_parts(rng, total, middle)) rs.emplace_back(pick(s));
    const auto lhs = operad_compose(operad_compose(q, ps), std::span<const IndexedComb>(rs));
    std::vector<IndexedComb> inner;
    std::size_t next = 0;
    for (const auto& p : ps) {
      const std::vector<IndexedComb> block(rs.begin() + next, rs.begin() + next + p.size());
      next += p.size();
      inner.push_back(operad_compose(IndexedComb(p), std::span<const IndexedComb>(block)));
    }
    const auto rhs = operad_compose(q, std::span<const IndexedComb>(inner));
    if (lhs != rhs) return say("associativity at ", to_string(q), ": ", first_difference(lhs, rhs));
  }

  std::string failure;
  std::size_t cases = 0;
  for_each_operad_input(4, [&](const IndexedWNPoset& q, std::span<const IndexedWNPoset> args) {
    ++cases;
    if (!failure.empty()) return;
    const auto a = operad_compose(q, args), b = xi_oracle(q, args);
    if (a != b) failure = say("oracle at ", to_string(q), ": ", first_difference(a, b));
  });
  if (!failure.empty()) return failure;
  if (cases == 0) return "no oracle inputs";

  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const auto b = b_mn(m, n);
      const auto covers = hasse_covers(b.base(), Order::h);
      if (static_cast<int>(covers.size()) != m * n) return say("b(", m, ",", n, ") cover count");
      for (const auto& [x, y] : covers) {
        if (b.labels()[x] > m || b.labels()[y] <= m) return say("b(", m, ",", n, ") cover side");
      }
      const std::vector<DoublePoset> left(m, point()), right(n, point());
      if (binfty_bracket(left, right) != LinComb(compose_h(antichain_r(m), antichain_r(n)))) {
        return say("bracket of ", m, " and ", n, " points");
      }
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"counting", counts},
      {"generating functions", series},
      {"coproduct fixtures", coproduct_fixtures},
      {"pairing fixtures, symmetry, automorphisms", pairing_fixtures},
      {"non-degeneracy and triangular form", nondegeneracy},
      {"Hopf and infinitesimal axioms", hopf_axioms},
      {"factorization", factorization},
      {"completions", completions},
      {"star and phi", star_and_phi},
      {"operad", operad},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = criteria[i].second();
    } catch (const std::exception& e) {
      failure = say("exception: ", e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failure.empty() ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!failure.empty()) std::cout << ": " << failure;
    std::cout << " (" << std::fixed << std::setprecision(1) << seconds << "s)" << std::endl;
    if (!failure.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
