#pragma once

#include <string>

#include "dposet/poset.hpp"

namespace dposet {

// Graphviz digraph of the <=_1 Hasse diagram, drawn bottom to top. Vertices
// of equal height share a rank; for plane posets they are laid out left to
// right along <=_2.
std::string export_dot(const DoublePoset& p);

// {"n":N,"h":[[i,j],...],"r":[[i,j],...]} with the full strict relations,
// 1-based, sorted.
std::string export_json(const DoublePoset& p);

}  // namespace dposet
