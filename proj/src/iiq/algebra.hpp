#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace iiq {

// One structure-constant entry: b_i * b_j has coefficient c on b_k.
struct SCEntry {
    int i, j, k;
    Scalar c;
};

// An n x n family of elements e_ij with e_ij e_kl = delta_jk e_il.
struct MatrixUnitSystem {
    int n = 0;
    std::vector<Vec> units;  // row-major, n*n entries

    const Vec& unit(int i, int j) const { return units[static_cast<size_t>(i) * n + j]; }
};

// Wedderburn-Malcev data: matrix-unit systems spanning a semisimple
// complement of the radical, plus the change of coordinates onto that basis.
struct LeviDecomposition {
    std::vector<MatrixUnitSystem> blocks;
    Subspace radical;
    Subspace semisimple;

    // (#units) x dim matrix: row u gives the functional extracting the
    // coefficient of unit u in x modulo the radical.
    Mat unit_coords;

    int total_units() const {
        int t = 0;
        for (const auto& b : blocks) t += b.n * b.n;
        return t;
    }
    // Coefficients of x on all matrix units (concatenated blocks, row-major).
    Vec bar_unit_coeffs(const Field& f, const Vec& x) const { return unit_coords.apply(f, x); }
};

class Algebra;

// Surjective algebra map A -> A/I together with a linear section.
struct QuotientMap {
    std::shared_ptr<const Algebra> target;
    Subspace ideal;
    Mat proj;     // target_dim x source_dim
    Mat section;  // source_dim x target_dim

    Vec project(const Vec& x) const;
    Vec lift(const Vec& y) const;
    Subspace project_subspace(const Subspace& u) const;
};

// A multiplicatively closed subspace packaged as an algebra of its own.
struct SubalgebraMap {
    std::shared_ptr<const Algebra> sub;
    Subspace space;

    Vec embed(const Vec& x) const;     // sub coords -> ambient coords
    Vec restrict(const Vec& x) const;  // ambient coords -> sub coords (must lie in space)
    Subspace embed_subspace(const Subspace& u) const;
    Subspace restrict_subspace(const Subspace& u) const;
};

enum class IdealSide { left, right, twosided };

// Finite dimensional associative algebra given by structure constants.
// Values are immutable; the radical/Levi/center/bar caches are computed once
// under a lock and then shared, so concurrent reads are safe.
class Algebra {
public:
    struct Options {
        std::optional<Vec> unit;                          // verified if given, else detected
        std::optional<std::vector<MatrixUnitSystem>> levi_blocks;  // verified if given
    };

    static Algebra create(Field field, int dim, std::vector<std::string> labels,
                          const std::vector<SCEntry>& entries, Options opts = {});

    const Field& field() const;
    int dim() const;
    const std::vector<std::string>& labels() const;
    const std::optional<Vec>& unit() const;
    const std::vector<SCEntry>& entries() const;

    // b_i * b_j as a sparse list of (k, coefficient).
    const std::vector<std::pair<int, Scalar>>& basis_product(int i, int j) const;

    Vec multiply(const Vec& a, const Vec& b) const;
    Vec commutator(const Vec& a, const Vec& b) const;
    // Jordan triple product {b, x, b'} = b x b' + b' x b.
    Vec triple_product(const Vec& b, const Vec& x, const Vec& b2) const;

    Subspace subspace_product(const Subspace& u, const Subspace& v) const;
    Subspace ideal_closure(const Subspace& x, IdealSide side) const;
    Subspace full_space() const { return Subspace::full(field(), dim()); }
    Subspace span(const std::vector<Vec>& vectors) const {
        return Subspace::span(field(), dim(), vectors);
    }

    const Subspace& center() const;
    const Subspace& radical() const;
    const LeviDecomposition& levi() const;
    const QuotientMap& bar() const;  // quotient by the radical

    Algebra unitalized() const;

    QuotientMap quotient(const Subspace& ideal) const;
    SubalgebraMap subalgebra(const Subspace& closed) const;

    // x -> (1+q) x (1+q)^{-1} for q in the radical, computed in the
    // unitalization via the finite geometric series.
    Vec conjugate_by_unipotent(const Vec& q, const Vec& x) const;

    bool is_lie_solvable() const;
    bool is_1perfect() const;
    // Largest 1-perfect ideal; the seed varies the descent choices (the
    // result is choice-independent, which tests assert).
    Subspace one_perfect_radical(std::uint64_t seed = 0) const;

    bool is_idempotent(const Vec& e) const;
    bool is_ideal(const Subspace& u) const;

    bool operator==(const Algebra& o) const { return impl_ == o.impl_; }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    friend struct AlgebraAccess;
};

}  // namespace iiq
