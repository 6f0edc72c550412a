#include "fuzz.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "report.hpp"
#include "util.hpp"

namespace iiq {

namespace {

struct CaseContext {
    const FuzzOptions& opts;
    int index;
    std::ostringstream& log;
    int& violations;
    const Algebra* algebra = nullptr;
    const Subspace* candidate = nullptr;
};

void record_violation(CaseContext& ctx, const std::string& law, const std::string& detail) {
    ++ctx.violations;
    ctx.log << "algebra " << ctx.index << ": VIOLATION " << law << ": " << detail << "\n";
    if (!ctx.algebra) return;
    std::string base = (ctx.opts.out_dir.empty() ? std::string(".") : ctx.opts.out_dir) +
                       "/cex_" + std::to_string(ctx.index);
    AlgebraDocument doc{*ctx.algebra, {}, {}};
    if (ctx.candidate) doc.subspaces.emplace("counterexample", *ctx.candidate);
    // Write atomically: temp file then rename.
    std::string tmp = base + ".alg.tmp";
    {
        std::ofstream out(tmp);
        out << emit_algebra_file(doc);
    }
    std::rename(tmp.c_str(), (base + ".alg").c_str());
    Json rep;
    rep["law"] = law;
    rep["detail"] = detail;
    rep["seed"] = ctx.opts.seed;
    rep["index"] = ctx.index;
    tmp = base + ".json.tmp";
    {
        std::ofstream out(tmp);
        out << rep.dump(2) << "\n";
    }
    std::rename(tmp.c_str(), (base + ".json").c_str());
}

// The per-algebra invariant suite. Each check names the law it instantiates.
void check_algebra(CaseContext& ctx, const Algebra& a, std::uint64_t case_seed) {
    ctx.algebra = &a;
    ctx.candidate = nullptr;

    // 1-perfect radical calculus.
    Subspace p1 = a.one_perfect_radical(1);
    for (std::uint64_t s = 2; s <= 3; ++s)
        if (a.one_perfect_radical(s) != p1) {
            record_violation(ctx, "one-perfect-radical-uniqueness",
                             "descent with different choices returned different ideals");
            return;
        }
    if (!a.is_ideal(p1))
        return record_violation(ctx, "one-perfect-radical-ideal", "P1(A) is not an ideal");
    SubalgebraMap pm = a.subalgebra(p1);
    if (a.subspace_product(p1, p1) != p1)
        return record_violation(ctx, "one-perfect-radical-idempotent", "P1(A)^2 != P1(A)");
    if (!pm.sub->is_1perfect())
        return record_violation(ctx, "one-perfect-radical-member", "P1(A) is not 1-perfect");
    if (!pm.sub->one_perfect_radical(1).contains(pm.sub->full_space()))
        return record_violation(ctx, "one-perfect-radical-fixed-point", "P1(P1(A)) != P1(A)");
    QuotientMap qm = a.quotient(p1);
    if (!qm.target->is_lie_solvable())
        return record_violation(ctx, "one-perfect-quotient-solvable",
                                "A/P1(A) is not Lie solvable");
    if (!qm.target->one_perfect_radical(1).is_zero())
        return record_violation(ctx, "one-perfect-quotient-trivial", "P1(A/P1(A)) != 0");
    if (derived_limit(a) != derived_member_of(a, p1, 1))
        return record_violation(ctx, "derived-limit-equals-p1-derived",
                                "A^(infinity) != P1(A)^(1)");

    // Idempotent pair calculus on a bounded sample.
    bool truncated = false;
    std::vector<IdempotentPair> pairs = enumerate_idempotent_pairs(a, 64, &truncated);
    SplitMix64 rng(mix_seed(case_seed, 0x10adULL));
    int comparisons = 0;
    for (const IdempotentPair& p : pairs) {
        if (!is_zero_vec(a.multiply(p.f, p.e))) continue;
        Subspace w = eAf_subspace(a, p.e, p.f);
        if (p.strict && !(is_zero_vec(p.e) && is_zero_vec(p.f)) && w.is_zero())
            return record_violation(ctx, "strict-pair-nonvanishing",
                                    "strict nonzero pair with eAf = 0");
        for (const IdempotentPair& q : pairs) {
            if (comparisons >= 128) break;
            ++comparisons;
            Subspace w2 = eAf_subspace(a, q.e, q.f);
            bool contained = w2.contains(w);
            bool dominated = pair_relations(a, p, q).leq_LR;
            if (p.strict && contained != dominated)
                return record_violation(ctx, "eAf-dominance",
                                        "containment and LR-dominance disagree");
            // The constructive side of dominance: a pair below q spanning
            // the same eAf (the call verifies its own postconditions).
            if (p.strict && dominated) (void)reduce_pair_under(a, p, q);
        }
    }

    // Jordan-Lie candidates: plain eAf, a conjugated copy, and a core.
    std::vector<std::pair<std::string, InnerIdealCandidate>> cands;
    for (const IdempotentPair& p : pairs) {
        if (!p.orthogonal || is_zero_vec(p.e) || cands.size() >= 2) continue;
        cands.emplace_back(p.strict ? "strict-eAf" : "eAf", eAf(a, p, 1));
    }
    if (!cands.empty() && !a.radical().is_zero()) {
        Vec q = random_radical_element(a, rng.next());
        const InnerIdealCandidate& base = cands.front().second;
        std::vector<Vec> rows;
        for (const Vec& b : base.B.basis()) rows.push_back(a.conjugate_by_unipotent(q, b));
        cands.emplace_back("conjugated-eAf",
                           make_candidate(base.view, a.span(rows)));
    }
    for (auto& [kind, cand] : cands) {
        ctx.candidate = &cand.B;
        if (!is_jordan_lie(cand)) {
            record_violation(ctx, "pair-generated-jordan-lie", kind + " is not Jordan-Lie");
            continue;
        }
        Subspace c = core_subspace(cand);
        if (!cand.B.contains(c) ||
            bar_image(a, c) != bar_image(a, cand.B))
            return record_violation(ctx, "core-bar-equality",
                                    "core changed the bar image on " + kind);
        ReductionResult rr = bar_minimal_reduce(cand);
        if (!cand.B.contains(rr.b_prime) ||
            bar_image(a, rr.b_prime) != bar_image(a, cand.B) || !rr.pair.strict ||
            !rr.pair.orthogonal)
            return record_violation(ctx, "bar-minimal-reduction", kind + " reduction posts fail");
        InnerIdealCandidate reduced = make_candidate(cand.view, rr.b_prime);
        if (!is_regular(reduced))
            return record_violation(ctx, "bar-minimal-regularity",
                                    "reduced " + kind + " is not regular");
        regular_witness(reduced);  // throws internal diagnostics on failure
        SplitWitness sw = split_witness(cand);
        if (sw.part_s.sum(sw.part_r) != cand.B)
            return record_violation(ctx, "levi-splitting", kind + " split parts do not sum");
        if (kind == "strict-eAf" && !is_bar_minimal(cand))
            return record_violation(ctx, "bar-minimal-iff-strict-pair",
                                    "eAf of a strict pair reported non-bar-minimal");
    }
    ctx.candidate = nullptr;

    // The bracket identity behind the Jordan-Lie equivalence, on random
    // square-zero pairs from the first candidate.
    if (!cands.empty()) {
        const Subspace& b = cands.front().second.B;
        const Field& f = a.field();
        for (int trial = 0; trial < 8 && !b.is_zero(); ++trial) {
            Vec x = zero_vec(a.dim());
            for (int i = 0; i < a.dim(); ++i) x[i] = Scalar(rng.range(-3, 3));
            Vec b1 = zero_vec(a.dim());
            Vec b2 = zero_vec(a.dim());
            for (const Vec& row : b.basis()) {
                b1 = vec_add(f, b1, vec_scale(f, Scalar(rng.range(-2, 2)), row));
                b2 = vec_add(f, b2, vec_scale(f, Scalar(rng.range(-2, 2)), row));
            }
            Vec lhs = a.commutator(b1, a.commutator(b2, x));
            Vec rhs = vec_scale(f, Scalar(-1),
                                vec_add(f, a.multiply(a.multiply(b1, x), b2),
                                        a.multiply(a.multiply(b2, x), b1)));
            if (lhs != rhs)
                return record_violation(ctx, "square-zero-bracket-identity",
                                        "[b,[b',x]] != -bxb' - b'xb on a square-zero pair");
        }
    }
}

}  // namespace

FuzzResult run_fuzz(const FuzzOptions& opts) {
    FuzzResult result;
    std::ostringstream log;
    log << "fuzz seed=" << opts.seed << " count=" << opts.count << " max-dim=" << opts.max_dim
        << " field=" << opts.field.to_string() << (opts.inject_mutant ? " mutant" : "") << "\n";

    for (int i = 0; i < opts.count; ++i) {
        std::uint64_t case_seed = mix_seed(opts.seed, static_cast<std::uint64_t>(i));
        RandomParams params;
        params.dim_cap = opts.max_dim;
        params.max_block = 3;
        params.num_blocks = 2;
        params.nilpotency = (case_seed % 3 == 0) ? 3 : 2;
        params.allow_size_one_blocks = (case_seed % 5 == 0);

        CaseContext ctx{opts, i, log, result.violations};
        try {
            Algebra a = random_algebra(case_seed, params, opts.field);
            if (opts.inject_mutant) {
                // Corrupt one structure constant; construction or the suite
                // must notice.
                SplitMix64 rng(mix_seed(case_seed, 0xbadULL));
                std::vector<SCEntry> entries = a.entries();
                if (!entries.empty()) {
                    SCEntry& e = entries[rng.below(entries.size())];
                    e.c = a.field().add(e.c, Scalar(1));
                    // No Levi hint: the corrupted table invalidates it.
                    Algebra mutant =
                        Algebra::create(a.field(), a.dim(), a.labels(), entries, {});
                    int before = result.violations;
                    check_algebra(ctx, mutant, case_seed);
                    if (result.violations == before)
                        record_violation(ctx, "mutant-survived",
                                         "corrupted structure constants passed every check");
                    continue;
                }
            }
            int before = result.violations;
            check_algebra(ctx, a, case_seed);
            if (result.violations == before)
                log << "algebra " << i << ": dim=" << a.dim() << " checks=ok\n";
        } catch (const Error& e) {
            if (opts.inject_mutant) {
                log << "algebra " << i << ": mutant rejected (" << e.what() << ")\n";
                ++result.violations;
            } else {
                record_violation(ctx, "internal-error", e.what());
            }
        }
    }
    log << "violations: " << result.violations << "\n";
    result.summary = log.str();
    return result;
}

}  // namespace iiq
