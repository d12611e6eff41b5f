#include "dposet/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "dposet/errors.hpp"

namespace dposet {

std::string to_string(PosetClass c) {
  switch (c) {
    case PosetClass::dp: return "dp";
    case PosetClass::pp: return "pp";
    case PosetClass::wnp: return "wn";
    case PosetClass::wnp_h: return "wnh";
    case PosetClass::wnp_r: return "wnr";
    case PosetClass::pf: return "pf";
  }
  return "?";
}

PosetClass parse_poset_class(std::string_view name) {
  if (name == "dp") return PosetClass::dp;
  if (name == "pp") return PosetClass::pp;
  if (name == "wn" || name == "wnp") return PosetClass::wnp;
  if (name == "wnh") return PosetClass::wnp_h;
  if (name == "wnr") return PosetClass::wnp_r;
  if (name == "pf") return PosetClass::pf;
  throw ParseError("class: expected dp|pp|wn|wnh|wnr|pf, got '" + std::string(name) + "'");
}

int budget(PosetClass c) {
  switch (c) {
    case PosetClass::dp: return 5;
    case PosetClass::pf: return 9;
    default: return 7;
  }
}

bool belongs(PosetClass c, const DoublePoset& p) {
  switch (c) {
    case PosetClass::dp: return true;
    case PosetClass::pp: return is_plane(p);
    case PosetClass::wnp: return is_wn(p);
    case PosetClass::wnp_h: return is_wn(p) && is_connected(p, Order::h);
    case PosetClass::wnp_r: return is_wn(p) && is_connected(p, Order::r);
    case PosetClass::pf: return is_forest(p);
  }
  return false;
}

std::vector<SinglePoset> labeled_posets(int n) {
  if (n < 0 || n > kMaxVertices) throw RangeError("poset size out of range");
  std::vector<SinglePoset> level{SinglePoset()};
  for (int k = 0; k < n; ++k) {
    std::vector<SinglePoset> next;
    for (const auto& p : level) {
      Relation up{};
      for (int v = 0; v < k; ++v) up[v] = p.successors(v);
      for (VertexMask down = 0; down < bit(k); ++down) {
        bool down_closed = true;
        for (VertexMask m = down; m && down_closed; m &= m - 1) {
          const int d = std::countr_zero(m);
          for (int w = 0; w < k; ++w) {
            if (p.less(w, d) && !(down >> w & 1u)) down_closed = false;
          }
        }
        if (!down_closed) continue;
        const VertexMask free = full_mask(k) & ~down;
        // up-set U: up-closed, disjoint from down, and every d < u already
        for (VertexMask u = free;; u = (u - 1) & free) {
          bool ok = true;
          for (VertexMask m = u; m && ok; m &= m - 1) {
            const int x = std::countr_zero(m);
            if ((p.successors(x) & u) != p.successors(x)) ok = false;
            for (VertexMask dm = down; dm && ok; dm &= dm - 1) {
              if (!p.less(std::countr_zero(dm), x)) ok = false;
            }
          }
          if (ok) {
            Relation r = up;
            for (VertexMask m = down; m; m &= m - 1) r[std::countr_zero(m)] |= bit(k);
            r[k] = u;
            next.push_back(SinglePoset::from_masks(k + 1, std::span(r.data(), k + 1)));
          }
          if (u == 0) break;
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<SinglePoset> enumerate_single_posets(int n) {
  if (n > 6) throw BudgetExceededError("single posets are enumerated up to size 6");
  std::set<SinglePoset> seen;
  for (const auto& p : labeled_posets(n)) seen.insert(canonical(p));
  return {seen.begin(), seen.end()};
}

namespace {

// Children of a canonical plane poset obtained by adding a new maximum of
// the total order. They come out canonical and pairwise distinct.
template <class Visit>
void plane_children(const DoublePoset& parent, Visit&& visit) {
  const int k = parent.size();
  Relation h{}, r{};
  for (int v = 0; v < k; ++v) {
    h[v] = parent.successors(Order::h, v);
    r[v] = parent.successors(Order::r, v);
  }
  const VertexMask all = full_mask(k);
  for (VertexMask below = 0; below <= all; ++below) {
    const VertexMask right = all & ~below;
    bool ok = true;
    for (VertexMask m = below; m && ok; m &= m - 1) {
      if (parent.predecessors(Order::h, std::countr_zero(m)) & ~below) ok = false;
    }
    for (VertexMask m = right; m && ok; m &= m - 1) {
      if (parent.predecessors(Order::r, std::countr_zero(m)) & ~right) ok = false;
    }
    if (ok) {
      Relation ch = h, cr = r;
      for (VertexMask m = below; m; m &= m - 1) ch[std::countr_zero(m)] |= bit(k);
      for (VertexMask m = right; m; m &= m - 1) cr[std::countr_zero(m)] |= bit(k);
      visit(DoublePoset::from_masks(k + 1, std::span(ch.data(), k + 1), std::span(cr.data(), k + 1)));
    }
    if (below == all) break;
  }
}

PosetClass parent_class(PosetClass c) {
  switch (c) {
    case PosetClass::wnp_h:
    case PosetClass::wnp_r: return PosetClass::wnp;
    default: return c;
  }
}

std::vector<DoublePoset> extend_level(PosetClass c, const std::vector<DoublePoset>& parents, Execution exec) {
  std::vector<std::vector<DoublePoset>> buckets(parents.size());
  const long np = static_cast<long>(parents.size());
  auto work = [&](long i) {
    plane_children(parents[i], [&](const DoublePoset& child) {
      if (belongs(c, child)) buckets[i].push_back(child);
    });
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < np; ++i) work(i);
  } else {
    for (long i = 0; i < np; ++i) work(i);
  }
  std::vector<DoublePoset> out;
  for (auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::set<DoublePoset> dp_level(int n, Execution exec) {
  const auto firsts = enumerate_single_posets(n);
  const auto seconds = labeled_posets(n);
  const long total = static_cast<long>(firsts.size() * seconds.size());
  auto candidate = [&](long idx) {
    const auto& a = firsts[idx / seconds.size()];
    const auto& b = seconds[idx % seconds.size()];
    Relation h{}, r{};
    for (int v = 0; v < n; ++v) {
      h[v] = a.successors(v);
      r[v] = b.successors(v);
    }
    return canonical(DoublePoset::from_masks(n, std::span(h.data(), n), std::span(r.data(), n)));
  };
  std::set<DoublePoset> seen;
  if (exec == Execution::parallel) {
#pragma omp parallel
    {
      std::set<DoublePoset> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (long i = 0; i < total; ++i) local.insert(candidate(i));
#pragma omp critical(dposet_dp_merge)
      seen.merge(local);
    }
  } else {
    for (long i = 0; i < total; ++i) seen.insert(candidate(i));
  }
  return seen;
}

void check_budget(PosetClass c, int n) {
  if (n < 0) throw RangeError("negative size");
  if (n > budget(c)) {
    throw BudgetExceededError("size " + std::to_string(n) + " exceeds the budget " + std::to_string(budget(c)) +
                              " for class " + to_string(c));
  }
}

std::vector<DoublePoset> compute_level(PosetClass c, int n, Execution exec) {
  if (c == PosetClass::dp) {
    auto s = dp_level(n, exec);
    return {s.begin(), s.end()};
  }
  if (n == 0) {
    if (c == PosetClass::wnp_h || c == PosetClass::wnp_r) return {};
    return {DoublePoset()};
  }
  if (c == PosetClass::wnp_h || c == PosetClass::wnp_r) {
    std::vector<DoublePoset> out;
    for (const auto& p : enumerate(PosetClass::wnp, n, exec)) {
      if (belongs(c, p)) out.push_back(p);
    }
    return out;
  }
  return extend_level(c, enumerate(parent_class(c), n - 1, exec), exec);
}

std::recursive_mutex cache_mutex;
std::map<std::pair<PosetClass, int>, std::vector<DoublePoset>> cache;

}  // namespace

const std::vector<DoublePoset>& enumerate(PosetClass c, int n, Execution exec) {
  check_budget(c, n);
  std::lock_guard lock(cache_mutex);
  auto it = cache.find({c, n});
  if (it == cache.end()) it = cache.emplace(std::pair{c, n}, compute_level(c, n, exec)).first;
  return it->second;
}

std::vector<DoublePoset> enumerate_uncached(PosetClass c, int n, Execution exec) {
  check_budget(c, n);
  return compute_level(c, n, exec);
}

std::uint64_t count(PosetClass c, int n, Execution exec) {
  check_budget(c, n);
  {
    std::lock_guard lock(cache_mutex);
    auto it = cache.find({c, n});
    if (it != cache.end()) return it->second.size();
  }
  if (c == PosetClass::dp) return dp_level(n, exec).size();
  if (n == 0 || c == PosetClass::wnp_h || c == PosetClass::wnp_r) return compute_level(c, n, exec).size();
  const auto& parents = enumerate(parent_class(c), n - 1, exec);
  std::uint64_t total = 0;
  const long np = static_cast<long>(parents.size());
  auto work = [&](long i) {
    std::uint64_t local = 0;
    plane_children(parents[i], [&](const DoublePoset& child) { local += belongs(c, child) ? 1 : 0; });
    return local;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long i = 0; i < np; ++i) total += work(i);
  } else {
    for (long i = 0; i < np; ++i) total += work(i);
  }
  return total;
}

std::vector<mpz_class> schroeder_coefficients(int n) {
  std::vector<mpz_class> s(std::max(n + 1, 3), 0);
  s[1] = 1;
  s[2] = 1;
  for (int k = 2; k + 1 <= n; ++k) s[k + 1] = (3 * (2 * k - 1) * s[k] - (k - 2) * s[k - 1]) / (k + 1);
  s.resize(n + 1);
  return s;
}

std::vector<mpq_class> series_sqrt(const std::vector<mpq_class>& f, int n) {
  if (f.empty() || f[0] != 1) throw RangeError("series_sqrt needs constant term 1");
  std::vector<mpq_class> s(n + 1, 0);
  s[0] = 1;
  for (int k = 1; k <= n; ++k) {
    mpq_class acc = k < static_cast<int>(f.size()) ? f[k] : mpq_class(0);
    for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc / 2;
  }
  return s;
}

namespace {

std::vector<mpq_class> root_term(int n) { return series_sqrt({1, -6, 1}, n); }

}  // namespace

std::vector<mpq_class> wnp_h_series(int n) {
  auto s = root_term(n);
  std::vector<mpq_class> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    mpq_class v = -s[k];
    if (k == 0) v += 1;
    if (k == 1) v += 1;
    out[k] = v / 4;
  }
  return out;
}

std::vector<mpq_class> wnp_series(int n) {
  auto s = root_term(n);
  std::vector<mpq_class> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    mpq_class v = -s[k];
    if (k == 0) v += 3;
    if (k == 1) v -= 1;
    out[k] = v / 2;
  }
  return out;
}

std::vector<mpz_class> catalan_numbers(int n) {
  std::vector<mpz_class> c(n + 1, 0);
  c[0] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i <= k; ++i) c[k + 1] += c[i] * c[k - i];
  }
  return c;
}

std::vector<mpz_class> factorials(int n) {
  std::vector<mpz_class> f(n + 1, 1);
  for (int k = 1; k <= n; ++k) f[k] = f[k - 1] * k;
  return f;
}

bool SequenceReport::ok() const {
  return halving_ok && std::all_of(rows.begin(), rows.end(), [](const SequenceRow& r) { return r.ok; });
}

SequenceReport sequence_check(PosetClass c, int max_n, Execution exec) {
  check_budget(c, max_n);
  SequenceReport report;
  report.cls = c;
  const bool connected = c == PosetClass::wnp_h || c == PosetClass::wnp_r;
  std::vector<mpz_class> expected;
  switch (c) {
    case PosetClass::pp: expected = factorials(max_n); break;
    case PosetClass::pf: expected = catalan_numbers(max_n); break;
    case PosetClass::wnp:
      for (const auto& q : wnp_series(max_n)) expected.push_back(q.get_num());
      break;
    case PosetClass::wnp_h:
    case PosetClass::wnp_r: expected = schroeder_coefficients(max_n); break;
    case PosetClass::dp: break;
  }
  for (int n = connected ? 1 : 0; n <= max_n; ++n) {
    SequenceRow row;
    row.n = n;
    row.count = enumerate(c, n, exec).size();
    if (!expected.empty()) {
      row.expected = expected[n];
      row.ok = *row.expected == mpz_class(static_cast<unsigned long>(row.count));
    }
    report.rows.push_back(std::move(row));
  }
  if (c == PosetClass::wnp_h) {
    for (int n = 2; n <= max_n; ++n) {
      if (2 * enumerate(c, n, exec).size() != enumerate(PosetClass::wnp, n, exec).size()) report.halving_ok = false;
    }
  }
  return report;
}

std::string to_string(const SequenceReport& r) {
  std::string out;
  for (const auto& row : r.rows) {
    out += to_string(r.cls) + "(" + std::to_string(row.n) + ") = " + std::to_string(row.count);
    if (row.expected) out += " expected " + row.expected->get_str() + (row.ok ? " ok" : " MISMATCH");
    out += "\n";
  }
  if (r.cls == PosetClass::wnp_h) out += std::string("half of wn: ") + (r.halving_ok ? "ok" : "MISMATCH") + "\n";
  return out;
}

}  // namespace dposet
