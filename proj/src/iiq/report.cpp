#include "report.hpp"

namespace iiq {

Json vec_json(const Vec& v) {
    Json out = Json::array();
    for (const Scalar& c : v) out.push_back(scalar_to_string(c));
    return out;
}

Json subspace_json(const Subspace& s) {
    Json out = Json::array();
    for (const Vec& row : s.basis()) out.push_back(vec_json(row));
    return out;
}

namespace {

Json pair_json(const IdempotentPair& p) {
    Json out;
    out["e"] = vec_json(p.e);
    out["f"] = vec_json(p.f);
    out["orthogonal"] = p.orthogonal;
    out["strict"] = p.strict;
    return out;
}

Json law(const char* id, const char* statement) {
    Json out;
    out["id"] = id;
    out["statement"] = statement;
    return out;
}

}  // namespace

Json analyze_report(const std::string& source, const std::string& subspace_name, int k,
                    const InnerIdealReport& rep, long long elapsed_ms) {
    Json out;
    out["source"] = source;
    out["subspace"] = subspace_name;
    out["k"] = k;
    Json checks;
    checks["inner"] = rep.inner;
    checks["jordan_lie"] = rep.jordan_lie;
    checks["regular"] = rep.regular;
    checks["l_perfect"] = rep.l_perfect;
    checks["bar_minimal"] = rep.bar_minimal ? Json(*rep.bar_minimal) : Json(nullptr);
    out["checks"] = checks;
    out["bar"] = subspace_json(rep.bar);
    out["core"] = subspace_json(rep.core);
    out["pair"] = rep.pair ? pair_json(*rep.pair) : Json(nullptr);
    if (rep.witness) {
        Json w;
        w["left_ideal"] = subspace_json(rep.witness->left_ideal);
        w["right_ideal"] = subspace_json(rep.witness->right_ideal);
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    if (rep.split) {
        Json s;
        Json chain = Json::array();
        for (const Vec& q : rep.split->conjugators) chain.push_back(vec_json(q));
        s["conjugators"] = chain;
        s["levi_prime"] = subspace_json(rep.split->levi_prime);
        s["part_semisimple"] = subspace_json(rep.split->part_s);
        s["part_radical"] = subspace_json(rep.split->part_r);
        out["split"] = s;
    } else {
        out["split"] = nullptr;
    }
    if (rep.regular_violation) {
        Json v;
        v["left"] = vec_json(rep.regular_violation->left);
        v["middle"] = vec_json(rep.regular_violation->middle);
        v["right"] = vec_json(rep.regular_violation->right);
        v["product"] = vec_json(rep.regular_violation->product);
        out["regular_violation"] = v;
    } else {
        out["regular_violation"] = nullptr;
    }
    out["laws"] = Json::array({
        law("inner-ideal-bracket-closure", "inner: [B,[B,L]] is contained in B"),
        law("square-zero-triple-closure",
            "jordan_lie: B^2 = 0 and {b,x,b'} lies in B for all b,b' in B, x in L"),
        law("square-zero-sandwich", "regular: B^2 = 0 and BAB is contained in B"),
        law("core-fixed-point", "l_perfect: B = [B,[B,L]]"),
        law("bar-minimal-iff-strict-pair",
            "bar_minimal: B is bar-minimal iff B = eAf for a strict orthogonal idempotent "
            "pair"),
        law("one-sided-ideal-sandwich",
            "witness: LR = 0 and RL is contained in B which lies in R cap L"),
        law("levi-splitting",
            "split: B = (B cap S') + (B cap R) for the transported Levi subalgebra S'"),
    });
    out["timings_ms"] = Json{{"total", elapsed_ms}};
    return out;
}

Json reduce_report(const std::string& source, const std::string& subspace_name, int k,
                   const ReductionResult& rr, const SplitWitness* split, long long elapsed_ms) {
    Json out;
    out["source"] = source;
    out["subspace"] = subspace_name;
    out["k"] = k;
    out["pair"] = pair_json(rr.pair);
    out["eAf"] = subspace_json(rr.b_prime);
    out["trace"] = rr.trace;
    if (split) {
        Json s;
        Json chain = Json::array();
        for (const Vec& q : split->conjugators) chain.push_back(vec_json(q));
        s["conjugators"] = chain;
        s["levi_prime"] = subspace_json(split->levi_prime);
        s["part_semisimple"] = subspace_json(split->part_s);
        s["part_radical"] = subspace_json(split->part_r);
        out["split"] = s;
    } else {
        out["split"] = nullptr;
    }
    out["laws"] = Json::array({
        law("bar-minimal-reduction",
            "pair is strict orthogonal with eAf inside B and equal bar images"),
        law("bar-minimal-regularity", "the reduced eAf is a regular inner ideal"),
        law("levi-splitting",
            "split: B = (B cap S') + (B cap R) for the transported Levi subalgebra S'"),
    });
    out["timings_ms"] = Json{{"total", elapsed_ms}};
    return out;
}

std::string witness_fragment(const Algebra& a, const ReductionResult& rr,
                             const SplitWitness& split) {
    AlgebraDocument doc{a, {}, {}};
    doc.subspaces.emplace("eAf", rr.b_prime);
    doc.subspaces.emplace("levi_prime", split.levi_prime);
    doc.subspaces.emplace("part_semisimple", split.part_s);
    doc.subspaces.emplace("part_radical", split.part_r);
    doc.elements.emplace("pair_e", rr.pair.e);
    doc.elements.emplace("pair_f", rr.pair.f);
    char name[16];
    for (size_t t = 0; t < split.conjugators.size(); ++t) {
        std::snprintf(name, sizeof name, "conj%02zu", t);
        doc.elements.emplace(name, split.conjugators[t]);
    }
    return emit_algebra_file(doc);
}

}  // namespace iiq
