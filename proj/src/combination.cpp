#include "dposet/combination.hpp"

#include "dposet/text.hpp"

namespace dposet {

int grade(const LinComb& c) {
  int g = -1;
  for (const auto& [p, coeff] : c) {
    if (g == -1) {
      g = p.size();
    } else if (g != p.size()) {
      return -1;
    }
  }
  return g;
}

std::string to_string(const LinComb& c) {
  if (c.empty()) return "0\n";
  std::string out;
  for (const auto& [p, coeff] : c) out += coeff.get_str() + " * " + to_string(p) + "\n";
  return out;
}

std::string to_string(const TensorComb& c) {
  if (c.empty()) return "0\n";
  std::string out;
  for (const auto& [t, coeff] : c) {
    out += coeff.get_str() + " * " + to_string(t.first) + " (x) " + to_string(t.second) + "\n";
  }
  return out;
}

}  // namespace dposet
