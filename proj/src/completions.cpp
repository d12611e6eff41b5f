#include "dposet/completions.hpp"

#include <algorithm>
#include <set>

#include "dposet/assembly.hpp"
#include "dposet/errors.hpp"

namespace dposet {

SinglePoset n_shape() {
  const std::pair<int, int> gens[] = {{1, 3}, {2, 3}, {2, 4}};
  return SinglePoset::from_generators(4, gens);
}

SinglePoset crown_poset(int n) {
  if (n < 1 || 2 * n > kMaxVertices) throw RangeError("crown size out of range");
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < n; ++i) {
    gens.emplace_back(i + 1, n + i + 1);
    gens.emplace_back(i + 1, n + (i + 1) % n + 1);
  }
  return SinglePoset::from_generators(2 * n, gens);
}

std::vector<DoublePoset> plane_completions(const SinglePoset& q) {
  PlaneAssembly search(q.size());
  for (int x = 0; x < q.size(); ++x) {
    for (int y = x + 1; y < q.size(); ++y) {
      if (q.less(x, y)) {
        search.restrict(x, y, kHForward);
      } else if (q.less(y, x)) {
        search.restrict(x, y, kHBackward);
      } else {
        search.restrict(x, y, kRForward | kRBackward);
      }
    }
  }
  std::set<DoublePoset> found;
  search.for_each([&found](const DoublePoset& p) { found.insert(canonical(p)); });
  return {found.begin(), found.end()};
}

std::vector<DoublePoset> wn_completions(const SinglePoset& q) {
  auto all = plane_completions(q);
  std::erase_if(all, [](const DoublePoset& p) { return !is_wn(p); });
  return all;
}

bool has_induced_n(const SinglePoset& q) {
  if (q.size() < 4) return false;
  static const SinglePoset shape = canonical(n_shape());
  for (VertexMask s = 0; s <= full_mask(q.size()); ++s) {
    if (popcount(s) != 4) continue;
    const SinglePoset sub = induced_subposet(q, s);
    int pairs = 0;
    for (int v = 0; v < 4; ++v) pairs += popcount(sub.successors(v));
    if (pairs == 3 && canonical(sub) == shape) return true;
  }
  return false;
}

}  // namespace dposet
