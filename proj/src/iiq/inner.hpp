#pragma once

#include "lie.hpp"

namespace iiq {

// A subspace B of L = A^(k), the object every predicate here is about.
struct InnerIdealCandidate {
    LieView view;
    Subspace B;
};

InnerIdealCandidate make_candidate(LieView view, Subspace b);

struct IdempotentPair {
    Vec e, f;
    bool orthogonal = false;
    bool strict = false;
};

// Validates idempotency and computes the orthogonality and strictness flags.
IdempotentPair make_pair(const Algebra& a, Vec e, Vec f);

struct PairRelations {
    bool leq_LR = false;   // e' e = e and f f' = f
    bool leq = false;      // two-sided domination of both components
    bool equiv_LR = false;
};

struct RegularWitness {
    Subspace left_ideal;   // contains B, annihilates right_ideal from the left
    Subspace right_ideal;
};

bool is_inner_ideal(const InnerIdealCandidate& cand);
bool is_jordan_lie(const InnerIdealCandidate& cand);

// Fixed point of B_{n} = [B_{n-1}, [B_{n-1}, L]]. Requires an inner ideal.
Subspace core_subspace(const InnerIdealCandidate& cand);
bool is_L_perfect(const InnerIdealCandidate& cand);

bool is_regular(const InnerIdealCandidate& cand);
RegularWitness regular_witness(const InnerIdealCandidate& cand);

// span{ e b_i f }, the inner ideal generated by an idempotent pair.
Subspace eAf_subspace(const Algebra& a, const Vec& e, const Vec& f);
// The candidate eAf cap A^(k); requires f e = 0.
InnerIdealCandidate eAf(const Algebra& a, const IdempotentPair& p, int k);

// g = f - ef: orthogonal to e with eAf = eAg. Requires fe = 0.
Vec make_orthogonal(const Algebra& a, const Vec& e, const Vec& f);

PairRelations pair_relations(const Algebra& a, const IdempotentPair& p, const IdempotentPair& q);

// For p le_LR q, the pair (e q_e, q_f f) dominated by q, LR-equivalent to p,
// spanning the same eAf.
IdempotentPair reduce_pair_under(const Algebra& a, const IdempotentPair& p,
                                 const IdempotentPair& q);

bool is_strict_pair(const Algebra& a, const Vec& e, const Vec& f);

// B = direct sum of B cap S_i over the simple components; semisimple ambient.
std::vector<InnerIdealCandidate> component_split(const InnerIdealCandidate& cand);

// The canonical strict orthogonal pair with eAf = B, for Jordan-Lie B in a
// split semisimple algebra. Verification failure means B was not an inner
// ideal and raises a diagnostic.
IdempotentPair recover_pair_semisimple(const InnerIdealCandidate& cand);

// Shared with the reduction module: canonical strict orthogonal pair in the
// Levi subalgебra of `a` whose pattern matches the bar image of B.
IdempotentPair pattern_pair_from_bar(const Algebra& a, const Subspace& b);

struct SplitWitness;

// One product b x b' that escapes B, witnessing failure of regularity.
struct RegularityViolation {
    Vec left, middle, right, product;
};

// Everything recomputable about one candidate, bundled for reporting.
struct InnerIdealReport {
    bool inner = false;
    bool jordan_lie = false;
    bool regular = false;
    bool l_perfect = false;
    std::optional<bool> bar_minimal;  // absent when not Jordan-Lie
    Subspace core;
    Subspace bar;
    std::optional<IdempotentPair> pair;
    std::optional<RegularWitness> witness;
    std::shared_ptr<const SplitWitness> split;  // present when Jordan-Lie
    std::optional<RegularityViolation> regular_violation;
};

}  // namespace iiq
