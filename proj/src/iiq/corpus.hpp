#pragma once

#include "inner.hpp"

namespace iiq {

// One summand of the radical bimodule: a copy of the natural S_i-S_j-bimodule
// U_ij, with index 0 standing for the one-sided or trivial actions (U_i0,
// U_0j, U_00). Block indices are 1-based.
struct BimoduleCopy {
    int i = 0;
    int j = 0;
    int multiplicity = 1;
};

struct BimoduleSpec {
    std::vector<BimoduleCopy> copies;
    enum class Nilpotency { square_zero, chained } nilpotency = Nilpotency::square_zero;
    int chain_cap = 3;  // highest level of composite copies in chained mode
};

Algebra build_matrix_algebra(int n, const Field& f);
Algebra build_direct_sum(const std::vector<Algebra>& parts);
Algebra build_triangular(int n, bool strict, const Field& f);

// S + R with S = direct sum of full matrix blocks and R the requested
// bimodule; chained mode closes the declared copies under composition up to
// the chain cap, giving radical length chain_cap + 1.
Algebra build_semidirect(const std::vector<int>& block_sizes, const BimoduleSpec& spec,
                         const Field& f);

// The subalgebra A_1 of n_4 + n_4 together with the Jordan-Lie non-regular
// inner ideal B = span{b1, b2, b}, in A_1 coordinates.
std::pair<Algebra, Subspace> example_nr(const Field& f);

struct RandomParams {
    int max_block = 3;
    int num_blocks = 2;
    int bimodule_density_pct = 60;  // chance that a candidate copy is included
    int nilpotency = 2;             // 2 for square-zero, 3+ for chained levels
    int dim_cap = 16;
    bool allow_size_one_blocks = false;
};

Algebra random_algebra(std::uint64_t seed, const RandomParams& params, const Field& f);

// All 0/1 diagonal-pattern idempotent pairs of the Levi blocks, optionally
// conjugated by a seeded unipotent (conjugate_seed != 0).
std::vector<IdempotentPair> enumerate_idempotent_pairs(const Algebra& a, int budget,
                                                       bool* truncated = nullptr,
                                                       std::uint64_t conjugate_seed = 0);

// Seeded element of the radical, for conjugation fixtures.
Vec random_radical_element(const Algebra& a, std::uint64_t seed);

}  // namespace iiq
