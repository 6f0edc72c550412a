#pragma once

#include <string>

#include "algebra.hpp"

namespace iiq {

// DOT graph of the enumerated idempotent pairs modulo LR-equivalence, edges
// the covering relations of LR-dominance, nodes labeled with dim eAf and
// strict classes highlighted.
std::string poset_dot(const Algebra& a, int budget);

}  // namespace iiq
