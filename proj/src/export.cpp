#include "dposet/export.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace dposet {

namespace {

// Length of the longest <_1 chain ending at each vertex.
std::vector<int> heights(const DoublePoset& p) {
  std::vector<int> order(p.size());
  for (int v = 0; v < p.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(p.predecessors(Order::h, a)) < popcount(p.predecessors(Order::h, b));
  });
  std::vector<int> height(p.size(), 0);
  for (int v : order) {
    for (VertexMask m = p.predecessors(Order::h, v); m; m &= m - 1) {
      height[v] = std::max(height[v], height[std::countr_zero(m)] + 1);
    }
  }
  return height;
}

}  // namespace

std::string export_dot(const DoublePoset& p) {
  std::string out = "digraph P {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int v = 0; v < p.size(); ++v) out += "  " + std::to_string(v + 1) + ";\n";
  for (const auto& [a, b] : hasse_covers(p, Order::h)) {
    out += "  " + std::to_string(a + 1) + " -> " + std::to_string(b + 1) + ";\n";
  }
  const auto height = heights(p);
  std::map<int, std::vector<int>> levels;
  std::vector<int> position(p.size());
  if (is_plane(p)) {
    const auto order = plane_total_order(p);
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
  } else {
    for (int v = 0; v < p.size(); ++v) position[v] = v;
  }
  for (int v = 0; v < p.size(); ++v) levels[height[v]].push_back(v);
  for (auto& [h, vs] : levels) {
    if (vs.size() < 2) continue;
    std::sort(vs.begin(), vs.end(), [&](int a, int b) { return position[a] < position[b]; });
    out += "  { rank=same;";
    for (int v : vs) out += " " + std::to_string(v + 1) + ";";
    out += " }\n";
    if (is_plane(p)) {
      for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        out += "  " + std::to_string(vs[i] + 1) + " -> " + std::to_string(vs[i + 1] + 1) +
               " [style=invis, constraint=false];\n";
      }
    }
  }
  return out + "}\n";
}

std::string export_json(const DoublePoset& p) {
  nlohmann::ordered_json j;
  j["n"] = p.size();
  for (auto [key, o] : {std::pair{"h", Order::h}, std::pair{"r", Order::r}}) {
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (int x = 0; x < p.size(); ++x) {
      for (int y = 0; y < p.size(); ++y) {
        if (p.less(o, x, y)) pairs.push_back({x + 1, y + 1});
      }
    }
    j[key] = pairs;
  }
  return j.dump();
}

}  // namespace dposet
