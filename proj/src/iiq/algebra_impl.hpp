#pragma once

// Shared internals of Algebra; included by algebra.cpp and wedderburn.cpp only.

#include <mutex>

#include "algebra.hpp"

namespace iiq {

struct Algebra::Impl {
    Field field;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<SCEntry> entries;
    // table[i*dim+j] = sparse product of b_i and b_j
    std::vector<std::vector<std::pair<int, Scalar>>> table;
    std::optional<Vec> unit;
    std::optional<std::vector<MatrixUnitSystem>> levi_hint;

    mutable std::mutex cache_mutex;
    mutable std::optional<Subspace> cached_center;
    mutable std::optional<Subspace> cached_radical;
    mutable std::optional<LeviDecomposition> cached_levi;
    mutable std::optional<QuotientMap> cached_bar;
};

struct AlgebraAccess {
    static Algebra wrap(std::shared_ptr<const Algebra::Impl> impl) {
        return Algebra(std::move(impl));
    }
    static const Algebra::Impl& impl(const Algebra& a) { return *a.impl_; }
};

}  // namespace iiq
