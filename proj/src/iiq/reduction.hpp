#pragma once

#include "inner.hpp"

namespace iiq {

// Conjugator chain transporting the stored Levi subalgebra to one that
// splits B, plus the two halves of the split.
struct SplitWitness {
    std::vector<Vec> conjugators;  // apply x -> (1+q) x (1+q)^{-1} in list order
    Subspace levi_prime;
    Subspace part_s;  // B cap levi_prime
    Subspace part_r;  // B cap radical
};

struct ReductionResult {
    IdempotentPair pair;   // strict orthogonal
    Subspace b_prime;      // = eAf, contained in the input B with equal bar image
    std::vector<std::string> trace;
};

// e with e^2 = e and the same image as x in A/R; x^2 - x must lie in R.
Vec lift_idempotent(const Algebra& a, const Vec& x);

// Orthogonal idempotent pair over given orthogonal idempotents of A/R
// (arguments in bar coordinates).
IdempotentPair lift_strict_pair(const Algebra& a, const Vec& ebar, const Vec& fbar);

// Bar-minimal reduction of a Jordan-Lie candidate: a strict orthogonal pair
// with eAf inside B and the same bar image.
ReductionResult bar_minimal_reduce(const InnerIdealCandidate& cand);

bool is_bar_minimal(const InnerIdealCandidate& cand);

SplitWitness split_witness(const InnerIdealCandidate& cand);

// Internal engine, exposed for tests: conjugator chain (q_j in R^j) carrying B
// to a subspace containing the pattern E exactly. Also used by split_witness.
struct LayeredContainment {
    std::vector<Vec> chain;  // applied in order: B -> (1+q) B (1+q)^{-1}
    Subspace b_final;
};
LayeredContainment layered_pattern_containment(const Algebra& a, const Subspace& pattern,
                                               const Subspace& b);

// (1+q)^{-1} x (1+q): inverse of conjugate_by_unipotent.
Vec conjugate_by_unipotent_inverse(const Algebra& a, const Vec& q, const Vec& x);

InnerIdealReport analyze_candidate(const InnerIdealCandidate& cand);

}  // namespace iiq
