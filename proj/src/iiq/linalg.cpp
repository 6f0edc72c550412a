#include "linalg.hpp"

#include <algorithm>

namespace iiq {

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n), Scalar(0)); }

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return is_zero(s); });
}

static void check_same_dim(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vector dimension mismatch: " + std::to_string(a.size()) +
                                      " vs " + std::to_string(b.size()));
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& f, const Scalar& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

int vec_cmp(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (int c = scalar_cmp(a[i], b[i]); c != 0) return c;
    return 0;
}

void Mat::set_row(int i, const Vec& v) {
    require(static_cast<int>(v.size()) == cols, "row length mismatch");
    std::copy(v.begin(), v.end(), a.begin() + static_cast<size_t>(i) * cols);
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(static_cast<int>(i), rows[i]);
    return m;
}

Vec Mat::apply(const Field& f, const Vec& x) const {
    require(static_cast<int>(x.size()) == cols, "matrix-vector dimension mismatch");
    Vec r = zero_vec(rows);
    for (int i = 0; i < rows; ++i) {
        Scalar acc(0);
        for (int j = 0; j < cols; ++j)
            if (!is_zero(at(i, j)) && !is_zero(x[j])) acc += at(i, j) * x[j];
        r[i] = f.reduce(acc);
    }
    return r;
}

std::vector<int> rref(const Field& f, Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (!is_zero(m.at(i, col))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Scalar inv = f.inv(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(inv, m.at(row, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            Scalar c = m.at(i, col);
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<Vec> kernel_basis(const Field& f, const Mat& m) {
    Mat r = m;
    std::vector<int> pivots = rref(f, r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(m.cols);
        v[free] = Scalar(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(r.at(static_cast<int>(i), free));
        out.push_back(std::move(v));
    }
    // Free columns increase left to right, so the basis is already canonical.
    return out;
}

std::optional<LinearSolution> solve(const Field& f, const Mat& m, const Vec& b) {
    require(static_cast<int>(b.size()) == m.rows, "solve: rhs dimension mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    std::vector<int> pivots = rref(f, aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    LinearSolution sol;
    sol.particular = zero_vec(m.cols);
    for (size_t i = 0; i < pivots.size(); ++i)
        sol.particular[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
    sol.kernel = Subspace::span(f, m.cols, kernel_basis(f, m));
    return sol;
}

Subspace Subspace::span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors)
        require(static_cast<int>(v.size()) == ambient,
                "span: vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                    std::to_string(ambient));
    Subspace s(f, ambient);
    if (vectors.empty()) return s;
    Mat m = Mat::from_rows(vectors, ambient);
    s.pivots_ = rref(f, m);
    for (size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(m.row(static_cast<int>(i)));
    return s;
}

Subspace Subspace::full(const Field& f, int ambient) {
    std::vector<Vec> rows;
    for (int i = 0; i < ambient; ++i) {
        Vec v = zero_vec(ambient);
        v[i] = Scalar(1);
        rows.push_back(std::move(v));
    }
    return span(f, ambient, rows);
}

Vec Subspace::reduce(const Vec& v) const {
    require(static_cast<int>(v.size()) == ambient_, "reduce: ambient dimension mismatch");
    Vec r = v;
    for (size_t i = 0; i < basis_.size(); ++i) {
        const Scalar& c = r[pivots_[i]];
        if (iiq::is_zero(c)) continue;
        Scalar cc = c;  // r[pivot] is overwritten inside the loop
        for (int j = 0; j < ambient_; ++j) r[j] = field_.sub(r[j], field_.mul(cc, basis_[i][j]));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    require(ambient_ == other.ambient_ && field_ == other.field_,
            "contains: ambient mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    Vec r = v;
    Vec coords = zero_vec(dim());
    for (size_t i = 0; i < basis_.size(); ++i) {
        const Scalar c = r[pivots_[i]];
        if (iiq::is_zero(c)) continue;
        coords[i] = c;
        for (int j = 0; j < ambient_; ++j) r[j] = field_.sub(r[j], field_.mul(c, basis_[i][j]));
    }
    if (!is_zero_vec(r)) return std::nullopt;
    return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
    require(ambient_ == other.ambient_ && field_ == other.field_, "sum: ambient mismatch");
    std::vector<Vec> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(field_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
    require(ambient_ == other.ambient_ && field_ == other.field_, "intersect: ambient mismatch");
    if (is_zero() || other.is_zero()) return Subspace(field_, ambient_);
    // Columns are the two bases; kernel vectors give the coefficients of a
    // combination lying in both spans.
    int r = dim(), s = other.dim();
    Mat m(ambient_, r + s);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < ambient_; ++i) m.at(i, r + j) = field_.neg(other.basis_[j][i]);
    std::vector<Vec> ker = kernel_basis(field_, m);
    std::vector<Vec> gens;
    for (const Vec& k : ker) {
        Vec v = zero_vec(ambient_);
        for (int j = 0; j < r; ++j)
            if (!iiq::is_zero(k[j])) v = vec_add(field_, v, vec_scale(field_, k[j], basis_[j]));
        gens.push_back(std::move(v));
    }
    return span(field_, ambient_, gens);
}

std::vector<int> Subspace::complement_coords() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<int> out;
    for (int i = 0; i < ambient_; ++i)
        if (!is_pivot[i]) out.push_back(i);
    return out;
}

Subspace subspace_combine(const Subspace& u, const Subspace& v, CombineMode mode) {
    return mode == CombineMode::sum ? u.sum(v) : u.intersect(v);
}

}  // namespace iiq
