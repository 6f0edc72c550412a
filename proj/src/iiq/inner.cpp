#include "inner.hpp"

namespace iiq {

InnerIdealCandidate make_candidate(LieView view, Subspace b) {
    require(b.ambient() == view.parent.dim() && b.field() == view.parent.field(),
            "candidate subspace lives in a different space");
    require(view.L.contains(b), "candidate subspace is not contained in A^(k)");
    return InnerIdealCandidate{std::move(view), std::move(b)};
}

IdempotentPair make_pair(const Algebra& a, Vec e, Vec f) {
    require(a.is_idempotent(e), "e is not idempotent");
    require(a.is_idempotent(f), "f is not idempotent");
    IdempotentPair p;
    p.orthogonal = is_zero_vec(a.multiply(e, f)) && is_zero_vec(a.multiply(f, e));
    p.strict = is_strict_pair(a, e, f);
    p.e = std::move(e);
    p.f = std::move(f);
    return p;
}

bool is_inner_ideal(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    for (const Vec& b : cand.B.basis())
        for (const Vec& b2 : cand.B.basis())
            for (const Vec& x : cand.view.L.basis())
                if (!cand.B.contains(a.commutator(b, a.commutator(b2, x)))) return false;
    return true;
}

bool is_jordan_lie(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    for (const Vec& b : cand.B.basis())
        for (const Vec& b2 : cand.B.basis())
            if (!is_zero_vec(a.multiply(b, b2))) return false;
    for (const Vec& b : cand.B.basis())
        for (const Vec& b2 : cand.B.basis())
            for (const Vec& x : cand.view.L.basis())
                if (!cand.B.contains(a.triple_product(b, x, b2))) return false;
    return true;
}

namespace {

Subspace core_step(const Algebra& a, const Subspace& b, const Subspace& l) {
    std::vector<Vec> gens;
    for (const Vec& x : b.basis())
        for (const Vec& y : b.basis())
            for (const Vec& z : l.basis()) gens.push_back(a.commutator(x, a.commutator(y, z)));
    return a.span(gens);
}

}  // namespace

Subspace core_subspace(const InnerIdealCandidate& cand) {
    require(is_inner_ideal(cand), "core is defined for inner ideals only");
    const Algebra& a = cand.view.parent;
    Subspace cur = cand.B;
    for (;;) {
        Subspace next = core_step(a, cur, cand.view.L);
        require(cur.contains(next), "core step left the inner ideal", Errc::internal);
        if (next == cur) return cur;
        cur = next;
    }
}

bool is_L_perfect(const InnerIdealCandidate& cand) {
    return core_step(cand.view.parent, cand.B, cand.view.L) == cand.B;
}

bool is_regular(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    for (const Vec& b : cand.B.basis())
        for (const Vec& b2 : cand.B.basis())
            if (!is_zero_vec(a.multiply(b, b2))) return false;
    for (const Vec& b : cand.B.basis())
        for (int i = 0; i < a.dim(); ++i) {
            Vec ei = zero_vec(a.dim());
            ei[i] = Scalar(1);
            Vec bx = a.multiply(b, ei);
            for (const Vec& b2 : cand.B.basis())
                if (!cand.B.contains(a.multiply(bx, b2))) return false;
        }
    return true;
}

RegularWitness regular_witness(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    const Field& f = a.field();
    // Locate the violating product for the diagnostic before giving up.
    for (const Vec& b : cand.B.basis())
        for (const Vec& b2 : cand.B.basis())
            if (!is_zero_vec(a.multiply(b, b2)))
                fail(Errc::precondition, "witness requested for non-regular B: B^2 != 0");
    for (const Vec& b : cand.B.basis())
        for (int i = 0; i < a.dim(); ++i) {
            Vec ei = zero_vec(a.dim());
            ei[i] = Scalar(1);
            for (const Vec& b2 : cand.B.basis())
                if (!cand.B.contains(a.multiply(a.multiply(b, ei), b2)))
                    fail(Errc::precondition,
                         "witness requested for non-regular B: b " + a.labels()[i] +
                             " b' escapes B");
        }

    // L = B + AB and R = B + BA, the one-sided ideals generated in the
    // unitalization and restricted back to A.
    std::vector<Vec> lgens = cand.B.basis();
    std::vector<Vec> rgens = cand.B.basis();
    for (int i = 0; i < a.dim(); ++i) {
        Vec ei = zero_vec(a.dim());
        ei[i] = Scalar(1);
        for (const Vec& b : cand.B.basis()) {
            lgens.push_back(a.multiply(ei, b));
            rgens.push_back(a.multiply(b, ei));
        }
    }
    RegularWitness w;
    w.left_ideal = a.span(lgens);
    w.right_ideal = a.span(rgens);

    Subspace whole = a.full_space();
    require(w.left_ideal.contains(a.subspace_product(whole, w.left_ideal)),
            "witness left ideal is not a left ideal", Errc::internal);
    require(w.right_ideal.contains(a.subspace_product(w.right_ideal, whole)),
            "witness right ideal is not a right ideal", Errc::internal);
    require(a.subspace_product(w.left_ideal, w.right_ideal).is_zero(), "LR != 0",
            Errc::internal);
    require(cand.B.contains(a.subspace_product(w.right_ideal, w.left_ideal)), "RL not in B",
            Errc::internal);
    require(w.left_ideal.intersect(w.right_ideal).contains(cand.B), "B not in R cap L",
            Errc::internal);
    (void)f;
    return w;
}

Subspace eAf_subspace(const Algebra& a, const Vec& e, const Vec& f) {
    std::vector<Vec> gens;
    for (int i = 0; i < a.dim(); ++i) {
        Vec ei = zero_vec(a.dim());
        ei[i] = Scalar(1);
        gens.push_back(a.multiply(a.multiply(e, ei), f));
    }
    return a.span(gens);
}

InnerIdealCandidate eAf(const Algebra& a, const IdempotentPair& p, int k) {
    require(is_zero_vec(a.multiply(p.f, p.e)), "eAf needs fe = 0");
    Subspace w = eAf_subspace(a, p.e, p.f);
    LieView view = make_lie_view(a, k);
    if (k >= 2) w = w.intersect(view.L);
    return make_candidate(std::move(view), std::move(w));
}

Vec make_orthogonal(const Algebra& a, const Vec& e, const Vec& f) {
    require(a.is_idempotent(e), "e is not idempotent");
    require(a.is_idempotent(f), "f is not idempotent");
    require(is_zero_vec(a.multiply(f, e)), "make_orthogonal needs fe = 0");
    Vec g = vec_sub(a.field(), f, a.multiply(e, f));
    require(a.is_idempotent(g), "g = f - ef failed to be idempotent", Errc::internal);
    require(is_zero_vec(a.multiply(e, g)) && is_zero_vec(a.multiply(g, e)),
            "g = f - ef is not orthogonal to e", Errc::internal);
    require(eAf_subspace(a, e, f) == eAf_subspace(a, e, g), "eAf != eAg", Errc::internal);
    return g;
}

PairRelations pair_relations(const Algebra& a, const IdempotentPair& p,
                             const IdempotentPair& q) {
    PairRelations r;
    bool e_left = a.multiply(q.e, p.e) == p.e;
    bool f_right = a.multiply(p.f, q.f) == p.f;
    bool e_right = a.multiply(p.e, q.e) == p.e;
    bool f_left = a.multiply(q.f, p.f) == p.f;
    r.leq_LR = e_left && f_right;
    r.leq = e_left && e_right && f_right && f_left;
    bool e_left_rev = a.multiply(p.e, q.e) == q.e;
    bool f_right_rev = a.multiply(q.f, p.f) == q.f;
    r.equiv_LR = r.leq_LR && e_left_rev && f_right_rev;
    return r;
}

IdempotentPair reduce_pair_under(const Algebra& a, const IdempotentPair& p,
                                 const IdempotentPair& q) {
    require(pair_relations(a, p, q).leq_LR, "reduce_pair_under needs p le_LR q");
    Vec e2 = a.multiply(p.e, q.e);   // = q.e p.e q.e
    Vec f2 = a.multiply(q.f, p.f);   // mirrored
    IdempotentPair out = make_pair(a, std::move(e2), std::move(f2));
    require(pair_relations(a, out, q).leq, "reduced pair is not dominated", Errc::internal);
    PairRelations eq = pair_relations(a, out, p);
    require(eq.equiv_LR, "reduced pair is not LR-equivalent to p", Errc::internal);
    require(eAf_subspace(a, out.e, out.f) == eAf_subspace(a, p.e, p.f),
            "reduced pair spans a different eAf", Errc::internal);
    return out;
}

bool is_strict_pair(const Algebra& a, const Vec& e, const Vec& f) {
    const LeviDecomposition& ld = a.levi();
    Vec ec = ld.bar_unit_coeffs(a.field(), e);
    Vec fc = ld.bar_unit_coeffs(a.field(), f);
    int off = 0;
    for (const auto& blk : ld.blocks) {
        const int sz = blk.n * blk.n;
        bool e_zero = true, f_zero = true;
        for (int t = 0; t < sz; ++t) {
            if (!is_zero(ec[off + t])) e_zero = false;
            if (!is_zero(fc[off + t])) f_zero = false;
        }
        if (e_zero != f_zero) return false;
        off += sz;
    }
    return true;
}

std::vector<InnerIdealCandidate> component_split(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    require(a.radical().is_zero(), "component split needs a semisimple ambient algebra");
    const LeviDecomposition& ld = a.levi();
    std::vector<InnerIdealCandidate> parts;
    int total = 0;
    for (const auto& blk : ld.blocks) {
        Subspace s = a.span(blk.units);
        Subspace piece = cand.B.intersect(s);
        total += piece.dim();
        parts.push_back(InnerIdealCandidate{cand.view, std::move(piece)});
    }
    require(total == cand.B.dim(),
            "B is not the direct sum of its block components; it cannot be an inner ideal",
            Errc::violation);
    return parts;
}

namespace {

// Canonical complement data inside F^n: projector matrices are assembled
// column by column from the decomposition of the standard basis.
Mat projector(const Field& f, int n, const std::vector<Subspace>& parts, size_t image_index) {
    // parts must be independent with total dimension n; the projector fixes
    // parts[image_index] and kills the others.
    std::vector<Vec> cols;  // columns of the basis-change matrix, grouped by part
    std::vector<std::pair<size_t, int>> origin;
    for (size_t p = 0; p < parts.size(); ++p)
        for (const Vec& b : parts[p].basis()) {
            cols.push_back(b);
            origin.emplace_back(p, 0);
        }
    require(static_cast<int>(cols.size()) == n, "projector parts do not fill the space",
            Errc::internal);
    Mat m(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    // Invert by augmenting with the identity.
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    auto piv = rref(f, aug);
    require(static_cast<int>(piv.size()) == n && (n == 0 || piv.back() < n),
            "projector basis is singular", Errc::internal);
    Mat proj(n, n);
    for (int t = 0; t < n; ++t) {
        if (origin[t].first != image_index) continue;
        // proj += col_t * row_t(inverse)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                proj.at(i, j) =
                    f.add(proj.at(i, j), f.mul(cols[t][i], aug.at(t, n + j)));
    }
    return proj;
}

Subspace canonical_complement_in(const Field& f, const Subspace& inner, const Subspace& outer) {
    // Canonical complement of `inner` inside `outer`: reduce the outer basis
    // against the inner one and re-span.
    std::vector<Vec> rows;
    for (const Vec& b : outer.basis()) rows.push_back(inner.reduce(b));
    Subspace w = Subspace::span(f, outer.ambient(), rows);
    require(w.dim() == outer.dim() - inner.dim(), "complement dimension mismatch",
            Errc::internal);
    return w;
}

}  // namespace

IdempotentPair pattern_pair_from_bar(const Algebra& a, const Subspace& b) {
    const Field& f = a.field();
    const LeviDecomposition& ld = a.levi();
    Vec e_total = zero_vec(a.dim());
    Vec f_total = zero_vec(a.dim());

    int off = 0;
    for (const auto& blk : ld.blocks) {
        const int n = blk.n;
        std::vector<Mat> mats;
        for (const Vec& x : b.basis()) {
            Vec coeffs = ld.bar_unit_coeffs(f, x);
            Mat m(n, n);
            bool nonzero = false;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    m.at(i, j) = coeffs[off + i * n + j];
                    nonzero = nonzero || !is_zero(m.at(i, j));
                }
            if (nonzero) mats.push_back(std::move(m));
        }
        off += n * n;
        if (mats.empty()) continue;  // zero component, zero idempotents

        // C = sum of column spaces, W = intersection of kernels.
        std::vector<Vec> colgens;
        for (const Mat& m : mats)
            for (int j = 0; j < n; ++j) {
                Vec col(n);
                for (int i = 0; i < n; ++i) col[i] = m.at(i, j);
                colgens.push_back(std::move(col));
            }
        Subspace c = Subspace::span(f, n, colgens);
        Mat stacked(static_cast<int>(mats.size()) * n, n);
        for (size_t t = 0; t < mats.size(); ++t)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    stacked.at(static_cast<int>(t) * n + i, j) = mats[t].at(i, j);
        Subspace w = Subspace::span(f, n, kernel_basis(f, stacked));
        require(w.contains(c), "B^2 = 0 fails at the bar level: columns escape kernels",
                Errc::violation);

        // f projects onto the canonical complement of W along W; e projects
        // onto C along (complement of C in W) + im f.
        Subspace cw(f, n);
        {
            std::vector<Vec> std_rows;
            for (int t : w.complement_coords()) {
                Vec v = zero_vec(n);
                v[t] = Scalar(1);
                std_rows.push_back(std::move(v));
            }
            cw = Subspace::span(f, n, std_rows);
        }
        Subspace d = canonical_complement_in(f, c, w);
        Mat fmat = projector(f, n, {w, cw}, 1);
        Mat emat = projector(f, n, {c, d, cw}, 0);

        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!is_zero(emat.at(i, j)))
                    e_total = vec_add(f, e_total, vec_scale(f, emat.at(i, j), blk.unit(i, j)));
                if (!is_zero(fmat.at(i, j)))
                    f_total = vec_add(f, f_total, vec_scale(f, fmat.at(i, j), blk.unit(i, j)));
            }
    }

    IdempotentPair p = make_pair(a, std::move(e_total), std::move(f_total));
    require(p.orthogonal, "recovered pair is not orthogonal", Errc::internal);
    require(p.strict, "recovered pair is not strict", Errc::internal);
    return p;
}

IdempotentPair recover_pair_semisimple(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    require(a.radical().is_zero(), "pair recovery needs a semisimple ambient algebra");
    require(is_jordan_lie(cand), "pair recovery needs a Jordan-Lie candidate");
    IdempotentPair p = pattern_pair_from_bar(a, cand.B);
    require(eAf_subspace(a, p.e, p.f) == cand.B,
            "recovered pair does not regenerate B: B is not an inner ideal", Errc::violation);
    return p;
}

}  // namespace iiq
