#include "reduction.hpp"

namespace iiq {

Vec lift_idempotent(const Algebra& a, const Vec& x) {
    const Field& f = a.field();
    Vec sq_defect = vec_sub(f, a.multiply(x, x), x);
    require(a.radical().contains(sq_defect), "image of x in A/R is not idempotent");
    Vec e = x;
    for (int guard = 0; !a.is_idempotent(e); ++guard) {
        require(guard <= 64, "idempotent lifting did not converge", Errc::internal);
        Vec e2 = a.multiply(e, e);
        Vec e3 = a.multiply(e2, e);
        e = vec_sub(f, vec_scale(f, Scalar(3), e2), vec_scale(f, Scalar(2), e3));
    }
    return e;
}

IdempotentPair lift_strict_pair(const Algebra& a, const Vec& ebar, const Vec& fbar) {
    const QuotientMap& bar = a.bar();
    const Algebra& barA = *bar.target;
    require(barA.is_idempotent(ebar) && barA.is_idempotent(fbar),
            "bars must be idempotent in A/R");
    require(is_zero_vec(barA.multiply(ebar, fbar)) && is_zero_vec(barA.multiply(fbar, ebar)),
            "bars must be orthogonal in A/R");
    const Field& f = a.field();
    Vec e = lift_idempotent(a, bar.lift(ebar));
    // Push the preimage of fbar into the corner (1-e)A(1-e); the cubic
    // iteration stays in the corner, so ef = fe = 0 exactly.
    Vec y = bar.lift(fbar);
    Vec ey = a.multiply(e, y);
    Vec ye = a.multiply(y, e);
    Vec eye = a.multiply(e, ye);
    y = vec_add(f, vec_sub(f, vec_sub(f, y, ey), ye), eye);
    Vec ff = lift_idempotent(a, y);
    require(bar.project(e) == ebar && bar.project(ff) == fbar,
            "lifted pair has wrong bar image", Errc::internal);
    IdempotentPair p = make_pair(a, std::move(e), std::move(ff));
    require(p.orthogonal, "lifted pair is not orthogonal", Errc::internal);
    return p;
}

Vec conjugate_by_unipotent_inverse(const Algebra& a, const Vec& q, const Vec& x) {
    const Field& f = a.field();
    // (1+q)^{-1} = 1 + qhat with qhat = -q + q^2 - q^3 + ...
    Vec qhat = zero_vec(a.dim());
    Vec power = vec_scale(f, Scalar(-1), q);
    for (int guard = 0; !is_zero_vec(power); ++guard) {
        require(guard <= a.dim() + 1, "conjugator is not nilpotent", Errc::internal);
        qhat = vec_add(f, qhat, power);
        power = a.multiply(power, vec_scale(f, Scalar(-1), q));
    }
    return a.conjugate_by_unipotent(qhat, x);
}

namespace {

Subspace conjugate_subspace(const Algebra& a, const Vec& q, const Subspace& u) {
    std::vector<Vec> rows;
    for (const Vec& b : u.basis()) rows.push_back(a.conjugate_by_unipotent(q, b));
    return a.span(rows);
}

std::string repro_note(const Algebra& a, const Subspace& b) {
    return " [algebra dim " + std::to_string(a.dim()) + " over " + a.field().to_string() +
           ", candidate dim " + std::to_string(b.dim()) + "]";
}

}  // namespace

LayeredContainment layered_pattern_containment(const Algebra& a, const Subspace& pattern,
                                               const Subspace& b) {
    const Field& f = a.field();
    LayeredContainment out;
    out.b_final = b;
    if (pattern.is_zero()) return out;

    Subspace rad = a.radical();
    Subspace rad_power = rad;  // R^j for the current layer j
    for (int layer = 1; !rad_power.is_zero(); ++layer) {
        require(layer <= a.dim() + 1, "radical filtration did not terminate", Errc::internal);
        if (out.b_final.contains(pattern)) break;
        Subspace next_power = a.subspace_product(rad_power, rad);
        Subspace target = out.b_final.sum(next_power);
        require(out.b_final.sum(rad_power).contains(pattern),
                "pattern containment invariant broke at layer " + std::to_string(layer),
                Errc::internal);

        // Affine system for q = sum q_t g_t over the layer basis:
        // eps - [q, eps] in target  for every pattern basis vector eps.
        const auto& gens = rad_power.basis();
        const int m = static_cast<int>(gens.size());
        const int rows_per = a.dim();
        Mat sys(static_cast<int>(pattern.basis().size()) * rows_per, m);
        Vec rhs = zero_vec(sys.rows);
        for (size_t p = 0; p < pattern.basis().size(); ++p) {
            const Vec& eps = pattern.basis()[p];
            Vec res = target.reduce(eps);
            for (int r = 0; r < rows_per; ++r) rhs[static_cast<int>(p) * rows_per + r] = res[r];
            for (int t = 0; t < m; ++t) {
                Vec col = target.reduce(a.commutator(gens[t], eps));
                for (int r = 0; r < rows_per; ++r)
                    sys.at(static_cast<int>(p) * rows_per + r, t) = col[r];
            }
        }
        auto sol = solve(f, sys, rhs);
        if (!sol)
            fail(Errc::reduction_failed,
                 "layered conjugator solve infeasible at layer " + std::to_string(layer) +
                     repro_note(a, b));
        Vec q = zero_vec(a.dim());
        for (int t = 0; t < m; ++t)
            if (!is_zero(sol->particular[t]))
                q = vec_add(f, q, vec_scale(f, sol->particular[t], gens[t]));
        if (!is_zero_vec(q)) {
            out.chain.push_back(q);
            out.b_final = conjugate_subspace(a, q, out.b_final);
        }
        rad_power = std::move(next_power);
        require(out.b_final.sum(rad_power).contains(pattern),
                "layer solve did not reach the next precision", Errc::internal);
    }
    require(out.b_final.contains(pattern),
            "pattern containment incomplete after the last layer" + repro_note(a, b),
            Errc::internal);
    return out;
}

namespace {

// Pattern subspace e S f spanned by the matrix units between the pair.
Subspace pattern_span(const Algebra& a, const IdempotentPair& p) {
    const LeviDecomposition& ld = a.levi();
    std::vector<Vec> gens;
    for (const auto& blk : ld.blocks)
        for (const Vec& u : blk.units) gens.push_back(a.multiply(a.multiply(p.e, u), p.f));
    return a.span(gens);
}

Vec pull_back(const Algebra& a, const std::vector<Vec>& chain, Vec x) {
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        x = conjugate_by_unipotent_inverse(a, *it, x);
    return x;
}

Subspace pull_back_subspace(const Algebra& a, const std::vector<Vec>& chain, const Subspace& u) {
    std::vector<Vec> rows;
    for (const Vec& b : u.basis()) rows.push_back(pull_back(a, chain, b));
    return a.span(rows);
}

}  // namespace

ReductionResult bar_minimal_reduce(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    require(is_jordan_lie(cand), "bar-minimal reduction needs a Jordan-Lie candidate");

    ReductionResult out;
    out.trace.push_back("core");
    Subspace core = core_subspace(cand);

    out.trace.push_back("restrict-to-1perfect-radical");
    Subspace p1 = a.one_perfect_radical();
    require(p1.contains(core), "core of an L-perfect candidate escapes the 1-perfect radical",
            Errc::internal);
    SubalgebraMap pm = a.subalgebra(p1);
    const Algebra& P = *pm.sub;
    Subspace bp = pm.restrict_subspace(core);

    out.trace.push_back("bar-classification");
    IdempotentPair pairP = pattern_pair_from_bar(P, bp);
    Subspace pattern = pattern_span(P, pairP);
    require(bar_image(P, pattern) == bar_image(P, bp),
            "pattern has the wrong bar image", Errc::internal);

    out.trace.push_back("layered-lifting");
    LayeredContainment lc = layered_pattern_containment(P, pattern, bp);

    // e P f is contained in the conjugated candidate; this is forced once the
    // pattern is inside (triple products of pattern elements sweep out the
    // radical rectangle). A failure here is a genuine counterexample.
    Subspace epf = eAf_subspace(P, pairP.e, pairP.f);
    if (!lc.b_final.contains(epf))
        fail(Errc::reduction_failed,
             "pattern is inside the candidate but e P f is not" + repro_note(a, cand.B));

    out.trace.push_back("pull-back");
    Vec e = pm.embed(pull_back(P, lc.chain, pairP.e));
    Vec ff = pm.embed(pull_back(P, lc.chain, pairP.f));
    out.b_prime = eAf_subspace(a, e, ff);

    require(pm.embed_subspace(pull_back_subspace(P, lc.chain, epf)) == out.b_prime,
            "eAf differs between the ideal and the full algebra", Errc::internal);
    require(cand.B.contains(out.b_prime), "reduced eAf escapes B", Errc::internal);
    require(bar_image(a, out.b_prime) == bar_image(a, cand.B),
            "reduced eAf has the wrong bar image", Errc::internal);

    out.pair = make_pair(a, std::move(e), std::move(ff));
    require(out.pair.orthogonal, "reduced pair is not orthogonal", Errc::internal);
    require(out.pair.strict, "reduced pair is not strict", Errc::internal);
    return out;
}

bool is_bar_minimal(const InnerIdealCandidate& cand) {
    return bar_minimal_reduce(cand).b_prime == cand.B;
}

SplitWitness split_witness(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    require(is_jordan_lie(cand), "split witness needs a Jordan-Lie candidate");
    const Field& f = a.field();
    const LeviDecomposition& ld = a.levi();

    IdempotentPair pat_pair = pattern_pair_from_bar(a, cand.B);
    Subspace pattern = pattern_span(a, pat_pair);
    require(bar_image(a, pattern) == bar_image(a, cand.B), "pattern has the wrong bar image",
            Errc::internal);

    LayeredContainment lc = layered_pattern_containment(a, pattern, cand.B);

    // The conjugated candidate now splits along the stored Levi subalgebra:
    // pattern containment pins its semisimple half exactly.
    Subspace s_part = lc.b_final.intersect(ld.semisimple);
    Subspace r_part = lc.b_final.intersect(ld.radical);
    if (s_part != pattern || s_part.sum(r_part) != lc.b_final)
        fail(Errc::reduction_failed,
             "candidate does not split after the conjugator chain" + repro_note(a, cand.B));

    SplitWitness w;
    // Conjugators carrying the stored Levi to the splitting one: the inverses
    // of the chain, applied in reverse order.
    for (auto it = lc.chain.rbegin(); it != lc.chain.rend(); ++it) {
        Vec qhat = zero_vec(a.dim());
        Vec power = vec_scale(f, Scalar(-1), *it);
        while (!is_zero_vec(power)) {
            qhat = vec_add(f, qhat, power);
            power = a.multiply(power, vec_scale(f, Scalar(-1), *it));
        }
        w.conjugators.push_back(std::move(qhat));
    }
    w.levi_prime = pull_back_subspace(a, lc.chain, ld.semisimple);
    w.part_s = cand.B.intersect(w.levi_prime);
    w.part_r = cand.B.intersect(ld.radical);
    require(w.part_s == pull_back_subspace(a, lc.chain, s_part), "split parts disagree",
            Errc::internal);
    require(w.part_s.sum(w.part_r) == cand.B && w.part_s.intersect(w.part_r).is_zero(),
            "B is not the direct sum of its split parts", Errc::internal);
    return w;
}

InnerIdealReport analyze_candidate(const InnerIdealCandidate& cand) {
    const Algebra& a = cand.view.parent;
    InnerIdealReport rep;
    rep.inner = is_inner_ideal(cand);
    rep.jordan_lie = is_jordan_lie(cand);
    rep.regular = is_regular(cand);
    rep.l_perfect = is_L_perfect(cand);
    rep.bar = bar_image(a, cand.B);
    if (rep.inner) rep.core = core_subspace(cand);
    if (rep.jordan_lie) {
        ReductionResult rr = bar_minimal_reduce(cand);
        rep.bar_minimal = (rr.b_prime == cand.B);
        rep.pair = rr.pair;
        rep.split = std::make_shared<SplitWitness>(split_witness(cand));
    }
    if (rep.regular) {
        rep.witness = regular_witness(cand);
    } else {
        // Surface one concrete violation: either a nonzero square or a
        // product b x b' escaping B.
        for (const Vec& b : cand.B.basis())
            for (const Vec& b2 : cand.B.basis()) {
                Vec prod = a.multiply(b, b2);
                if (!is_zero_vec(prod) && !rep.regular_violation)
                    rep.regular_violation = RegularityViolation{b, zero_vec(a.dim()), b2, prod};
            }
        for (int i = 0; i < a.dim() && !rep.regular_violation; ++i) {
            Vec x = zero_vec(a.dim());
            x[i] = Scalar(1);
            for (const Vec& b : cand.B.basis())
                for (const Vec& b2 : cand.B.basis()) {
                    Vec prod = a.multiply(a.multiply(b, x), b2);
                    if (!cand.B.contains(prod) && !rep.regular_violation)
                        rep.regular_violation = RegularityViolation{b, x, b2, prod};
                }
        }
    }
    return rep;
}

}  // namespace iiq
