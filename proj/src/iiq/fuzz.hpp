#pragma once

#include <cstdint>
#include <string>

#include "scalars.hpp"

namespace iiq {

struct FuzzOptions {
    std::uint64_t seed = 42;
    int count = 100;
    int max_dim = 12;
    Field field = Field::rationals();
    std::string out_dir;        // where counterexample files go; empty = cwd
    bool inject_mutant = false;  // corrupt one structure constant per algebra
};

struct FuzzResult {
    int violations = 0;
    std::string summary;  // deterministic function of the options
};

// Generates seeded corpus algebras and runs the whole invariant suite on each.
// Violations are written out as self-contained algebra files plus a JSON
// report, and counted in the result.
FuzzResult run_fuzz(const FuzzOptions& opts);

}  // namespace iiq
