#include "dposet/pairing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "dposet/errors.hpp"

namespace dposet {

std::uint64_t pictures_count(const DoublePoset& p, const DoublePoset& q) {
  const int n = p.size();
  if (n != q.size()) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(p.predecessors(Order::h, a)) < popcount(p.predecessors(Order::h, b));
  });
  std::array<int, kMaxVertices> image{};
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, int idx, VertexMask used) -> void {
    if (idx == n) {
      ++count;
      return;
    }
    const int v = order[idx];
    for (VertexMask free = full_mask(n) & ~used; free; free &= free - 1) {
      const int w = std::countr_zero(free);
      bool ok = true;
      for (int k = 0; k < idx && ok; ++k) {
        const int u = order[k];
        const int su = image[u];
        if (p.less(Order::h, u, v) && !q.less(Order::r, su, w)) ok = false;
        if (p.less(Order::h, v, u) && !q.less(Order::r, w, su)) ok = false;
        if (q.less(Order::h, su, w) && !p.less(Order::r, u, v)) ok = false;
        if (q.less(Order::h, w, su) && !p.less(Order::r, v, u)) ok = false;
      }
      if (!ok) continue;
      image[v] = w;
      self(self, idx + 1, used | bit(w));
    }
  };
  dfs(dfs, 0, 0);
  return count;
}

namespace {

void require_same_size(std::span<const DoublePoset> a, std::span<const DoublePoset> b) {
  const int n = a.empty() ? (b.empty() ? 0 : b.front().size()) : a.front().size();
  for (const auto& p : a) {
    if (p.size() != n) throw SizeMismatchError("basis posets differ in size");
  }
  for (const auto& p : b) {
    if (p.size() != n) throw SizeMismatchError("basis posets differ in size");
  }
}

}  // namespace

PairingMatrix pairing_matrix(std::span<const DoublePoset> rows, std::span<const DoublePoset> cols, Execution exec) {
  require_same_size(rows, cols);
  PairingMatrix m;
  m.rows.assign(rows.begin(), rows.end());
  m.cols.assign(cols.begin(), cols.end());
  const long nr = static_cast<long>(rows.size());
  m.entries.assign(nr, std::vector<std::uint64_t>(cols.size(), 0));
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) m.entries[i][j] = pictures_count(rows[i], cols[j]);
    }
  } else {
    for (long i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) m.entries[i][j] = pictures_count(rows[i], cols[j]);
    }
  }
  return m;
}

PairingMatrix pairing_matrix(std::span<const DoublePoset> basis, Execution exec) {
  return pairing_matrix(basis, basis, exec);
}

std::vector<DoublePoset> xy_order(std::span<const DoublePoset> basis) {
  require_same_size(basis, {});
  std::vector<std::pair<int, DoublePoset>> keyed;
  for (const auto& p : basis) {
    const auto c = comparability_counts(p);
    keyed.emplace_back(c.y - c.x, canonical(p));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<DoublePoset> out;
  for (auto& [d, p] : keyed) out.push_back(std::move(p));
  return out;
}

PairingMatrix triangular_form(std::span<const DoublePoset> basis, Execution exec) {
  const auto rows = xy_order(basis);
  std::vector<DoublePoset> cols;
  for (const auto& p : rows) cols.push_back(involution(p));
  return pairing_matrix(rows, cols, exec);
}

bool is_lower_triangular(const PairingMatrix& m) {
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < m.entries[i].size(); ++j) {
      if (m.entries[i][j] != 0) return false;
    }
  }
  return true;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

void make_primitive(SparseRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

mpz_class entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : mpz_class(0);
}

// row := a * row - b * pivot
SparseRow combine(const SparseRow& row, const mpz_class& a, const SparseRow& pivot, const mpz_class& b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      mpz_class v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t exact_rank(const std::vector<std::vector<mpz_class>>& matrix) {
  std::vector<SparseRow> rows;
  for (const auto& r : matrix) {
    SparseRow s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] != 0) s.emplace_back(c, r[c]);
    }
    if (!s.empty()) rows.push_back(std::move(s));
  }
  // Column-by-column: rows whose leading column is c compete for the pivot;
  // the sparsest wins and is eliminated from the others.
  std::size_t rank = 0;
  std::map<std::size_t, std::vector<std::size_t>> by_lead;
  for (std::size_t i = 0; i < rows.size(); ++i) by_lead[rows[i].front().first].push_back(i);
  while (!by_lead.empty()) {
    auto node = by_lead.extract(by_lead.begin());
    auto& group = node.mapped();
    const std::size_t col = node.key();
    auto best = std::min_element(group.begin(), group.end(),
                                 [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
    const std::size_t piv = *best;
    group.erase(best);
    ++rank;
    const mpz_class pv = rows[piv].front().second;
    for (std::size_t i : group) {
      const mpz_class rv = entry(rows[i], col);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), pv.get_mpz_t(), rv.get_mpz_t());
      rows[i] = combine(rows[i], pv / g, rows[piv], rv / g);
      if (rows[i].empty()) continue;
      make_primitive(rows[i]);
      by_lead[rows[i].front().first].push_back(i);
    }
  }
  return rank;
}

std::size_t exact_rank(const PairingMatrix& m) {
  std::vector<std::vector<mpz_class>> z;
  for (const auto& row : m.entries) {
    std::vector<mpz_class> r;
    for (std::uint64_t v : row) r.emplace_back(static_cast<unsigned long>(v));
    z.push_back(std::move(r));
  }
  return exact_rank(z);
}

NondegeneracyReport nondegeneracy_check(std::span<const DoublePoset> basis, Execution exec) {
  require_same_size(basis, {});
  std::set<DoublePoset> members;
  for (const auto& p : basis) members.insert(canonical(p));
  for (const auto& p : members) {
    if (!members.count(involution(p))) throw BasisNotIotaClosedError("basis is not closed under the involution");
  }
  // Rank is invariant under permuting columns, and the triangular layout keeps
  // elimination free of fill-in.
  const std::vector<DoublePoset> distinct(members.begin(), members.end());
  NondegeneracyReport report;
  report.dimension = distinct.size();
  report.rank = exact_rank(triangular_form(distinct, exec));
  return report;
}

std::string to_string(const PairingMatrix& m) {
  std::string out;
  for (const auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace dposet
