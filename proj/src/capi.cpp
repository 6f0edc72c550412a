#include "innerideal.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <memory>

#include "iiq/format.hpp"
#include "iiq/fuzz.hpp"
#include "iiq/poset.hpp"
#include "iiq/report.hpp"

using namespace iiq;

struct iiq_algebra {
    AlgebraDocument doc;
};

namespace {

thread_local std::string g_last_error;

iiq_status status_of(const Error& e) {
    switch (e.code()) {
        case Errc::parse:
            return IIQ_PARSE;
        case Errc::precondition:
        case Errc::not_split:
        case Errc::unsupported_characteristic:
            return IIQ_PRECONDITION;
        case Errc::violation:
        case Errc::reduction_failed:
            return IIQ_VIOLATION;
        default:
            return IIQ_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
iiq_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return IIQ_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return IIQ_INTERNAL;
    }
}

const Subspace& named_subspace(const iiq_algebra* a, const char* name) {
    require(name != nullptr, "subspace name is required");
    auto it = a->doc.subspaces.find(name);
    require(it != a->doc.subspaces.end(), std::string("no subspace named '") + name + "'");
    return it->second;
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

extern "C" {

const char* iiq_last_error(void) { return g_last_error.c_str(); }

void iiq_string_free(char* s) { std::free(s); }

iiq_status iiq_algebra_parse(const char* text, iiq_algebra** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        auto handle = std::make_unique<iiq_algebra>(iiq_algebra{parse_algebra_file(text)});
        *out = handle.release();
    });
}

void iiq_algebra_free(iiq_algebra* a) { delete a; }

iiq_status iiq_algebra_emit(const iiq_algebra* a, char** out_text) {
    return guarded([&] {
        require(a != nullptr && out_text != nullptr, "null argument");
        *out_text = dup_string(emit_algebra_file(a->doc));
    });
}

int iiq_algebra_dim(const iiq_algebra* a) { return a ? a->doc.algebra.dim() : -1; }

int iiq_algebra_has_subspace(const iiq_algebra* a, const char* name) {
    return a && name && a->doc.subspaces.count(name) ? 1 : 0;
}

iiq_status iiq_analyze(const iiq_algebra* a, const char* subspace, int k, char** json_out) {
    return guarded([&] {
        require(a != nullptr && json_out != nullptr, "null argument");
        auto t0 = std::chrono::steady_clock::now();
        const Subspace& b = named_subspace(a, subspace);
        InnerIdealCandidate cand =
            make_candidate(make_lie_view(a->doc.algebra, k), b);
        InnerIdealReport rep = analyze_candidate(cand);
        *json_out =
            dup_string(analyze_report("input", subspace, k, rep, ms_since(t0)).dump(2) + "\n");
    });
}

iiq_status iiq_reduce(const iiq_algebra* a, const char* subspace, int k, int emit_witness,
                      char** json_out, char** fragment_out) {
    return guarded([&] {
        require(a != nullptr && json_out != nullptr, "null argument");
        auto t0 = std::chrono::steady_clock::now();
        const Subspace& b = named_subspace(a, subspace);
        InnerIdealCandidate cand =
            make_candidate(make_lie_view(a->doc.algebra, k), b);
        ReductionResult rr = bar_minimal_reduce(cand);
        SplitWitness sw = split_witness(cand);
        *json_out = dup_string(
            reduce_report("input", subspace, k, rr, &sw, ms_since(t0)).dump(2) + "\n");
        if (emit_witness && fragment_out)
            *fragment_out = dup_string(witness_fragment(a->doc.algebra, rr, sw));
    });
}

iiq_status iiq_poset(const iiq_algebra* a, int budget, char** dot_out) {
    return guarded([&] {
        require(a != nullptr && dot_out != nullptr, "null argument");
        require(budget > 0, "budget must be positive");
        *dot_out = dup_string(poset_dot(a->doc.algebra, budget));
    });
}

iiq_status iiq_fuzz(uint64_t seed, int count, int max_dim, const char* field,
                    const char* out_dir, int inject_mutant, char** summary_out) {
    iiq_status st = guarded([&] {
        require(count >= 0 && max_dim >= 1, "bounds must be positive");
        FuzzOptions opts;
        opts.seed = seed;
        opts.count = count;
        opts.max_dim = max_dim;
        if (field && std::strlen(field) > 0) {
            std::string spec(field);
            if (spec == "Q")
                opts.field = Field::rationals();
            else if (spec[0] == 'F')
                opts.field = Field::prime(std::stoul(spec.substr(1)));
            else
                fail(Errc::precondition, "unknown field '" + spec + "'");
        }
        if (out_dir) opts.out_dir = out_dir;
        opts.inject_mutant = inject_mutant != 0;
        FuzzResult res = run_fuzz(opts);
        if (summary_out) *summary_out = dup_string(res.summary);
        if (res.violations > 0) {
            g_last_error = std::to_string(res.violations) + " violation(s) found";
            throw Error(Errc::violation, g_last_error);
        }
    });
    return st;
}

}  // extern "C"
