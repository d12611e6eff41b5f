#include "dposet/assembly.hpp"

#include <cassert>

#include "dposet/errors.hpp"

namespace dposet {

PairRelations flip(PairRelations rel) {
  PairRelations out = 0;
  if (rel & kHForward) out |= kHBackward;
  if (rel & kHBackward) out |= kHForward;
  if (rel & kRForward) out |= kRBackward;
  if (rel & kRBackward) out |= kRForward;
  return out;
}

PlaneAssembly::PlaneAssembly(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw RangeError("assembly size out of range");
  for (auto& row : allowed_) row.fill(kAnyRelation);
}

void PlaneAssembly::restrict(int x, int y, PairRelations allowed) {
  if (x == y || x < 0 || y < 0 || x >= n_ || y >= n_) throw RangeError("bad assembly pair");
  if (x < y) {
    allowed_[x][y] &= allowed;
  } else {
    allowed_[y][x] &= flip(allowed);
  }
}

void PlaneAssembly::fix_block(const DoublePoset& p, int offset) {
  for (int a = 0; a < p.size(); ++a) {
    for (int b = a + 1; b < p.size(); ++b) {
      PairRelations rel = 0;
      if (p.less(Order::h, a, b)) rel |= kHForward;
      if (p.less(Order::h, b, a)) rel |= kHBackward;
      if (p.less(Order::r, a, b)) rel |= kRForward;
      if (p.less(Order::r, b, a)) rel |= kRBackward;
      restrict(offset + a, offset + b, rel);
    }
  }
}

namespace {

struct SearchState {
  int n;
  std::array<VertexMask, kMaxVertices> h{};
  std::array<VertexMask, kMaxVertices> r{};
  std::array<VertexMask, kMaxVertices> assigned{};
};

bool chain_ok(const std::array<VertexMask, kMaxVertices>& rel, int x, int y, int z) {
  // x < y < z forces x < z
  if ((rel[x] >> y & 1u) && (rel[y] >> z & 1u)) return rel[x] >> z & 1u;
  return true;
}

bool triangle_ok(const SearchState& s, int a, int b, int c) {
  const int t[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      const int k = 3 - i - j;
      if (!chain_ok(s.h, t[i], t[j], t[k]) || !chain_ok(s.r, t[i], t[j], t[k])) return false;
    }
  }
  return true;
}

void set_relation(SearchState& s, int a, int b, PairRelations rel, bool on) {
  auto apply = [on](VertexMask& m, int v) {
    if (on) {
      m |= bit(v);
    } else {
      m &= ~bit(v);
    }
  };
  switch (rel) {
    case kHForward: apply(s.h[a], b); break;
    case kHBackward: apply(s.h[b], a); break;
    case kRForward: apply(s.r[a], b); break;
    case kRBackward: apply(s.r[b], a); break;
    default: assert(false);
  }
  apply(s.assigned[a], b);
  apply(s.assigned[b], a);
}

}  // namespace

void PlaneAssembly::for_each(const std::function<void(const DoublePoset&)>& visit) const {
  std::vector<std::pair<int, int>> pairs;
  for (int b = 1; b < n_; ++b) {
    for (int a = 0; a < b; ++a) pairs.emplace_back(a, b);
  }
  SearchState state{n_};

  std::function<void(std::size_t)> dfs = [&](std::size_t idx) {
    if (idx == pairs.size()) {
      visit(DoublePoset::from_masks(n_, std::span(state.h.data(), n_), std::span(state.r.data(), n_)));
      return;
    }
    const auto [a, b] = pairs[idx];
    const PairRelations allowed = allowed_[a][b];
    for (PairRelations rel : {kHForward, kHBackward, kRForward, kRBackward}) {
      if (!(allowed & rel)) continue;
      set_relation(state, a, b, rel, true);
      bool ok = true;
      VertexMask common = state.assigned[a] & state.assigned[b];
      while (common && ok) {
        const int w = std::countr_zero(common);
        common &= common - 1;
        ok = triangle_ok(state, a, b, w);
      }
      if (ok) dfs(idx + 1);
      set_relation(state, a, b, rel, false);
    }
  };
  dfs(0);
}

std::vector<DoublePoset> PlaneAssembly::solutions() const {
  std::vector<DoublePoset> out;
  for_each([&out](const DoublePoset& p) { out.push_back(p); });
  return out;
}

}  // namespace dposet
