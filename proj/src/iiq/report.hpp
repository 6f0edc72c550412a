#pragma once

#include <json.hpp>

#include "format.hpp"
#include "reduction.hpp"

namespace iiq {

using Json = nlohmann::ordered_json;

Json subspace_json(const Subspace& s);
Json vec_json(const Vec& v);

// Full predicate report for one candidate; every boolean is recomputable from
// the named inputs, and `laws` states what each check asserts.
Json analyze_report(const std::string& source, const std::string& subspace_name, int k,
                    const InnerIdealReport& rep, long long elapsed_ms);

Json reduce_report(const std::string& source, const std::string& subspace_name, int k,
                   const ReductionResult& rr, const SplitWitness* split, long long elapsed_ms);

// Emittable fragment holding the reduced pair and conjugator chain.
std::string witness_fragment(const Algebra& a, const ReductionResult& rr,
                             const SplitWitness& split);

}  // namespace iiq
