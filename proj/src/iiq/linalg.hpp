#pragma once

#include <optional>
#include <vector>

#include "scalars.hpp"

namespace iiq {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Scalar& c, const Vec& a);
// Lexicographic comparison in the canonical scalar order; used for
// deterministic tie-breaking only.
int vec_cmp(const Vec& a, const Vec& b);

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Scalar(0)) {}

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    Vec row(int i) const { return Vec(a.begin() + static_cast<size_t>(i) * cols,
                                      a.begin() + static_cast<size_t>(i + 1) * cols); }
    void set_row(int i, const Vec& v);

    static Mat from_rows(const std::vector<Vec>& rows, int cols);
    Vec apply(const Field& f, const Vec& x) const;  // Mat * column(x)
};

// In-place Gauss-Jordan reduction to reduced row echelon form.
// Returns the pivot column of each nonzero row, in increasing order.
std::vector<int> rref(const Field& f, Mat& m);

// Basis of { x : M x = 0 }, canonicalized.
std::vector<Vec> kernel_basis(const Field& f, const Mat& m);

// A linear subspace of F^n held by its unique reduced-echelon basis, so
// equality of subspaces is equality of basis lists.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, int ambient) : field_(f), ambient_(ambient) {}

    static Subspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);
    static Subspace full(const Field& f, int ambient);

    const Field& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    // Residue of v after elimination against the basis (zero iff contained).
    Vec reduce(const Vec& v) const;
    // Coordinates of v in the canonical basis; empty optional if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    // Ambient coordinates without a pivot; the corresponding standard basis
    // vectors span the canonical complement.
    std::vector<int> complement_coords() const;

    bool operator==(const Subspace& o) const {
        return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    Field field_;
    int ambient_ = 0;
    std::vector<Vec> basis_;
    std::vector<int> pivots_;
};

enum class CombineMode { sum, intersect };
Subspace subspace_combine(const Subspace& u, const Subspace& v, CombineMode mode);

struct LinearSolution {
    Vec particular;   // one solution of M x = b (free variables zero)
    Subspace kernel;  // canonical solution space of M x = 0
};

// Solves M x = b. Empty optional when the system is inconsistent.
std::optional<LinearSolution> solve(const Field& f, const Mat& m, const Vec& b);

}  // namespace iiq
