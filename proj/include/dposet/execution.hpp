#pragma once

namespace dposet {

// Kernels with an OpenMP path keep a plain serial loop next to it; results
// are identical either way.
enum class Execution { serial, parallel };

}  // namespace dposet
