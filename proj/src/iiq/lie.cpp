#include "lie.hpp"

namespace iiq {

Subspace derived_member_of(const Algebra& a, const Subspace& start, int k) {
    require(k >= 0, "derived member index must be nonnegative");
    Subspace cur = start;
    for (int step = 0; step < k; ++step) {
        std::vector<Vec> gens;
        for (const Vec& x : cur.basis())
            for (const Vec& y : cur.basis()) gens.push_back(a.commutator(x, y));
        Subspace next = a.span(gens);
        if (next == cur) return cur;  // stabilized; all later members agree
        cur = next;
    }
    return cur;
}

Subspace derived_member(const Algebra& a, int k) {
    return derived_member_of(a, a.full_space(), k);
}

Subspace derived_limit(const Algebra& a) { return derived_member(a, a.dim() + 1); }

LieView make_lie_view(const Algebra& a, int k) {
    Subspace l = derived_member(a, k);
    Subspace n = a.radical().intersect(l);
    return LieView{a, k, std::move(l), std::move(n)};
}

Subspace nil_radical(const LieView& view) { return view.N; }

std::pair<Subspace, Subspace> quasi_levi(const LieView& view) {
    require(view.k >= 1, "quasi Levi decomposition needs k >= 1");
    const Algebra& a = view.parent;
    const LeviDecomposition& ld = a.levi();
    Subspace q = derived_member_of(a, ld.semisimple, view.k);
    Subspace n = view.N;
    require(q.sum(n) == view.L && q.intersect(n).is_zero(),
            "S^(k) does not complement the nil radical", Errc::internal);
    return {q, n};
}

namespace {

// sl_n span of one matrix-unit block: off-diagonal units plus consecutive
// diagonal differences.
Subspace sl_span(const Algebra& a, const MatrixUnitSystem& blk) {
    std::vector<Vec> gens;
    for (int i = 0; i < blk.n; ++i)
        for (int j = 0; j < blk.n; ++j)
            if (i != j) gens.push_back(blk.unit(i, j));
    for (int i = 0; i + 1 < blk.n; ++i)
        gens.push_back(vec_sub(a.field(), blk.unit(i, i), blk.unit(i + 1, i + 1)));
    return a.span(gens);
}

}  // namespace

bool is_quasi_semisimple(const Algebra& a, const Subspace& q) {
    // Q must be a Lie subalgebra.
    std::vector<Vec> brackets;
    for (const Vec& x : q.basis())
        for (const Vec& y : q.basis()) brackets.push_back(a.commutator(x, y));
    Subspace derived = a.span(brackets);
    require(q.contains(derived), "subspace is not a Lie subalgebra");

    if (derived != q) return false;  // not perfect
    if (q.is_zero()) return true;

    if (!a.field().is_prime_field()) {
        // Characteristic zero: Q/Z(Q) is semisimple iff its Killing form is
        // nondegenerate (Cartan).
        const Field& f = a.field();
        const int m = q.dim();
        // Center of Q as a Lie algebra.
        Mat cm(m * a.dim(), m);
        for (int j = 0; j < m; ++j)
            for (int t = 0; t < m; ++t) {
                Vec br = a.commutator(q.basis()[j], q.basis()[t]);
                for (int r = 0; r < a.dim(); ++r) cm.at(t * a.dim() + r, j) = br[r];
            }
        Subspace z = Subspace::span(f, m, kernel_basis(f, cm));  // coords in q-basis
        // Quotient coordinates of Q/Z(Q).
        std::vector<int> comp = z.complement_coords();
        const int c = static_cast<int>(comp.size());
        if (c == 0) return false;  // abelian nonzero
        // ad operators on the quotient.
        auto q_coords = [&](const Vec& x) {
            auto co = q.coordinates(x);
            require(co.has_value(), "bracket left the subalgebra", Errc::internal);
            Vec red = z.reduce(*co);
            Vec out = zero_vec(c);
            for (int t = 0; t < c; ++t) out[t] = red[comp[t]];
            return out;
        };
        std::vector<Mat> ad(c, Mat(c, c));
        for (int s = 0; s < c; ++s)
            for (int t = 0; t < c; ++t) {
                Vec br = a.commutator(q.basis()[comp[s]], q.basis()[comp[t]]);
                Vec co = q_coords(br);
                for (int r = 0; r < c; ++r) ad[s].at(r, t) = co[r];
            }
        Mat killing(c, c);
        for (int s = 0; s < c; ++s)
            for (int t = s; t < c; ++t) {
                Scalar acc(0);
                for (int x = 0; x < c; ++x)
                    for (int y = 0; y < c; ++y) acc += ad[s].at(x, y) * ad[t].at(y, x);
                killing.at(s, t) = f.reduce(acc);
                killing.at(t, s) = killing.at(s, t);
            }
        return kernel_basis(f, killing).empty();
    }

    // Positive characteristic: recognize Q as a sum of sl blocks of the Levi
    // decomposition; anything else is undecidable here.
    const LeviDecomposition& ld = a.levi();
    Subspace assembled(a.field(), a.dim());
    for (const auto& blk : ld.blocks) {
        if (blk.n < 2) continue;
        Subspace sl = sl_span(a, blk);
        if (q.contains(sl)) assembled = assembled.sum(sl);
    }
    if (assembled == q) return true;
    fail(Errc::precondition,
         "cannot decide quasi-semisimplicity in characteristic p: subspace does not come "
         "from the Levi block data");
}

Subspace bar_image(const Algebra& a, const Subspace& u) {
    return a.bar().project_subspace(u);
}

}  // namespace iiq
