#pragma once

#include "algebra.hpp"

namespace iiq {

// The Lie algebra L = A^(k) of an associative algebra A, with its nil radical
// N = R cap L and, when the Levi data is available, the complement Q = S^(k).
struct LieView {
    Algebra parent;
    int k = 0;
    Subspace L;
    Subspace N;
};

// Span of the k-th derived member of A under [x,y] = xy - yx.
Subspace derived_member(const Algebra& a, int k);
// Stabilization A^(infinity) of the derived series.
Subspace derived_limit(const Algebra& a);
// Derived series of an arbitrary subspace that is closed under the bracket.
Subspace derived_member_of(const Algebra& a, const Subspace& start, int k);

LieView make_lie_view(const Algebra& a, int k);

Subspace nil_radical(const LieView& view);

// Q = S^(k) from the Levi data and N, with L = Q + N as a direct sum (k >= 1).
std::pair<Subspace, Subspace> quasi_levi(const LieView& view);

// Perfect with semisimple central quotient. Characteristic zero uses the
// Killing form of Q/Z(Q); positive characteristic is decided structurally
// from the Levi block data and raises an error when Q is not recognized.
bool is_quasi_semisimple(const Algebra& a, const Subspace& q);

// Image of U in the bar algebra A/R, in bar coordinates.
Subspace bar_image(const Algebra& a, const Subspace& u);

}  // namespace iiq
