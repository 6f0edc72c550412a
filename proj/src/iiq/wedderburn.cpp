// Radical and Levi decomposition: trace-form radical, splitting of the
// semisimple quotient into matrix-unit blocks, and exact lifting of the
// block data through the radical.

#include <algorithm>

#include "algebra_impl.hpp"
#include "util.hpp"

namespace iiq {

namespace {

// ---------------------------------------------------------------- polynomials

using Poly = std::vector<Scalar>;  // low-to-high coefficients, trimmed

void poly_trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    poly_trim(r);
    return r;
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Scalar(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
    poly_trim(r);
    return r;
}

// a = q*b + r with deg r < deg b
std::pair<Poly, Poly> poly_divmod(const Field& f, Poly a, const Poly& b) {
    require(!b.empty(), "polynomial division by zero", Errc::internal);
    Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Scalar(0));
    Scalar lead_inv = f.inv(b.back());
    while (poly_deg(a) >= poly_deg(b)) {
        int shift = poly_deg(a) - poly_deg(b);
        Scalar c = f.mul(a.back(), lead_inv);
        q[shift] = f.add(q[shift], c);
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        poly_trim(a);
        if (a.empty()) break;
    }
    poly_trim(q);
    return {q, a};
}

Poly poly_monic(const Field& f, Poly p) {
    poly_trim(p);
    if (p.empty()) return p;
    Scalar inv = f.inv(p.back());
    for (Scalar& c : p) c = f.mul(inv, c);
    return p;
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

// s*a + t*b = gcd(a,b)
void poly_ext_gcd(const Field& f, Poly a, Poly b, Poly& s, Poly& t) {
    Poly s0{f.one()}, s1{}, t0{}, t1{f.one()};
    while (!b.empty()) {
        auto [q, r] = poly_divmod(f, a, b);
        a = std::move(b);
        b = std::move(r);
        Poly s2 = poly_sub(f, s0, poly_mul(f, q, s1));
        Poly t2 = poly_sub(f, t0, poly_mul(f, q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!a.empty()) {
        Scalar inv = f.inv(a.back());
        for (Scalar& c : s0) c = f.mul(inv, c);
        for (Scalar& c : t0) c = f.mul(inv, c);
    }
    s = std::move(s0);
    t = std::move(t0);
}

Poly poly_derivative(const Field& f, const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(f.mul(Scalar(static_cast<long>(i)), p[i]));
    poly_trim(r);
    return r;
}

// Divisors of |n| by trial division. Returns false when n is too large to
// factor within the budget, in which case root finding falls back to a small
// candidate set.
bool small_divisors(const mpz_class& n, std::vector<mpz_class>& out) {
    mpz_class m = abs(n);
    if (m == 0) return false;
    std::vector<std::pair<mpz_class, int>> fac;
    mpz_class d = 2;
    long steps = 0;
    while (m > 1) {
        if (++steps > 2000000) return false;
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            int e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
                m /= d;
                ++e;
            }
            fac.emplace_back(d, e);
        }
        d += (d == 2) ? 1 : 2;
        if (d * d > m && m > 1) {
            fac.emplace_back(m, 1);
            break;
        }
    }
    out = {mpz_class(1)};
    for (const auto& [p, e] : fac) {
        std::vector<mpz_class> next;
        mpz_class pk = 1;
        for (int k = 0; k <= e; ++k) {
            for (const mpz_class& v : out) next.push_back(v * pk);
            pk *= p;
        }
        out = std::move(next);
    }
    return true;
}

Scalar poly_eval_scalar(const Field& f, const Poly& p, const Scalar& x) {
    Scalar acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

// Roots in the base field with multiplicities, by candidate testing (rational
// root theorem over Q, exhaustive search over F_p) and repeated deflation.
std::vector<std::pair<Scalar, int>> field_roots(const Field& f, Poly p) {
    std::vector<std::pair<Scalar, int>> out;
    poly_trim(p);
    if (poly_deg(p) < 1) return out;

    std::vector<Scalar> candidates;
    if (f.is_prime_field()) {
        require(f.p <= 100000, "prime field too large for exhaustive root search");
        for (unsigned long r = 0; r < f.p; ++r) candidates.push_back(Scalar(static_cast<long>(r)));
    } else {
        // Clear denominators to an integer polynomial.
        mpz_class den_lcm = 1;
        for (const Scalar& c : p) den_lcm = lcm(den_lcm, c.get_den());
        std::vector<mpz_class> ip;
        for (const Scalar& c : p) ip.push_back(mpz_class(c * den_lcm));
        while (!ip.empty() && ip.front() == 0) {  // factor t^v
            ip.erase(ip.begin());
            candidates.push_back(Scalar(0));
        }
        if (!candidates.empty()) candidates.resize(1);
        std::vector<mpz_class> nums, dens;
        bool full = !ip.empty() && small_divisors(ip.front(), nums) &&
                    small_divisors(ip.back(), dens);
        if (!full) {
            nums.clear();
            dens.clear();
            for (long v = 1; v <= 64; ++v) nums.push_back(mpz_class(v));
            dens.push_back(mpz_class(1));
        }
        for (const mpz_class& num : nums)
            for (const mpz_class& den : dens) {
                candidates.push_back(Scalar(num, den));
                candidates.push_back(Scalar(-num, den));
            }
        for (Scalar& c : candidates) c.canonicalize();
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) < 0; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Scalar& cand : candidates) {
        if (poly_deg(p) < 1) break;
        int mult = 0;
        while (poly_deg(p) >= 1 && is_zero(poly_eval_scalar(f, p, cand))) {
            Poly lin{f.neg(cand), f.one()};
            p = poly_divmod(f, p, lin).first;
            ++mult;
        }
        if (mult > 0) out.emplace_back(cand, mult);
    }
    return out;
}

// ------------------------------------------------------- element-level helpers

Vec basis_vec(int dim, int i) {
    Vec v = zero_vec(dim);
    v[i] = Scalar(1);
    return v;
}

// Monic minimal polynomial of z in a unital algebra.
Poly min_poly(const Algebra& a, const Vec& z) {
    require(a.unit().has_value(), "minimal polynomial needs a unital algebra", Errc::internal);
    const Field& f = a.field();
    std::vector<Vec> powers{*a.unit()};
    for (;;) {
        const Vec& last = powers.back();
        Vec next = a.multiply(last, z);
        // Is `next` a combination of the previous powers?
        Mat m(a.dim(), static_cast<int>(powers.size()));
        for (size_t c = 0; c < powers.size(); ++c)
            for (int r = 0; r < a.dim(); ++r) m.at(r, static_cast<int>(c)) = powers[c][r];
        if (auto sol = solve(f, m, next)) {
            Poly p;
            for (const Scalar& c : sol->particular) p.push_back(f.neg(c));
            p.push_back(f.one());
            return p;
        }
        powers.push_back(std::move(next));
        require(static_cast<int>(powers.size()) <= a.dim() + 1,
                "minimal polynomial search did not terminate", Errc::internal);
    }
}

Vec poly_eval_element(const Algebra& a, const Poly& p, const Vec& z) {
    const Field& f = a.field();
    Vec acc = zero_vec(a.dim());
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = a.multiply(acc, z);
        if (!is_zero(*it)) acc = vec_add(f, acc, vec_scale(f, *it, *a.unit()));
    }
    return acc;
}

// ------------------------------------------------------------ center splitting

// Primitive idempotents of the (commutative, semisimple) center of a unital
// algebra, returned in the algebra's own coordinates.
std::vector<Vec> split_center(const Algebra& bar) {
    const Field& f = bar.field();
    SubalgebraMap zm = bar.subalgebra(bar.center());
    const Algebra& Z = *zm.sub;
    require(Z.unit().has_value(), "center of a semisimple algebra must be unital",
            Errc::internal);

    std::vector<Vec> idems{*Z.unit()};
    for (int t = 0; t < Z.dim(); ++t) {
        Vec zt = basis_vec(Z.dim(), t);
        std::vector<Vec> next;
        for (const Vec& u : idems) {
            // Restrict z_t to the corner u Z and decompose along its spectrum.
            Vec w = Z.multiply(zt, u);
            Subspace corner = Z.span([&] {
                std::vector<Vec> gens;
                for (int s = 0; s < Z.dim(); ++s)
                    gens.push_back(Z.multiply(basis_vec(Z.dim(), s), u));
                return gens;
            }());
            SubalgebraMap cm = Z.subalgebra(corner);
            const Algebra& C = *cm.sub;
            require(C.unit().has_value(), "corner lost its unit", Errc::internal);
            Vec wc = cm.restrict(w);
            Poly m = min_poly(C, wc);
            if (poly_deg(m) <= 1) {
                next.push_back(u);
                continue;
            }
            Poly g = poly_gcd(f, m, poly_derivative(f, m));
            require(poly_deg(g) == 0,
                    "center has a nilpotent direction; radical computation is wrong",
                    Errc::internal);
            auto roots = field_roots(f, m);
            int found = 0;
            for (const auto& [r, mult] : roots) found += mult;
            if (found < poly_deg(m))
                fail(Errc::not_split,
                     "semisimple quotient is not split over " + f.to_string() +
                         ": the center contains a proper field extension");
            for (const auto& [lambda, mult] : roots) {
                (void)mult;
                Vec proj = *C.unit();
                for (const auto& [mu, mmult] : roots) {
                    (void)mmult;
                    if (mu == lambda) continue;
                    Vec factor = vec_sub(f, wc, vec_scale(f, mu, *C.unit()));
                    proj = C.multiply(proj, vec_scale(f, f.inv(f.sub(lambda, mu)), factor));
                }
                require(C.is_idempotent(proj), "spectral projector is not idempotent",
                        Errc::internal);
                next.push_back(cm.embed(proj));
            }
        }
        idems = std::move(next);
    }
    std::vector<Vec> out;
    for (const Vec& u : idems) out.push_back(zm.embed(u));
    // Canonical order so the block list is deterministic.
    std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return vec_cmp(a, b) < 0; });
    return out;
}

// ---------------------------------------------------- inside one simple block

// A primitive idempotent of a (purportedly simple split) unital algebra,
// found by corner descent. Throws not_split when no splitting element shows up.
Vec primitive_idempotent(const Algebra& blk) {
    const Field& f = blk.field();
    Vec u = *blk.unit();
    for (;;) {
        std::vector<Vec> corner_gens;
        for (int s = 0; s < blk.dim(); ++s)
            corner_gens.push_back(blk.multiply(u, blk.multiply(basis_vec(blk.dim(), s), u)));
        Subspace corner = blk.span(corner_gens);
        if (corner.dim() == 1) return u;
        SubalgebraMap cm = blk.subalgebra(corner);
        const Algebra& C = *cm.sub;
        require(C.unit().has_value() && *C.unit() == cm.restrict(u), "corner unit mismatch",
                Errc::internal);

        std::vector<Vec> candidates;
        for (int t = 0; t < C.dim(); ++t) candidates.push_back(basis_vec(C.dim(), t));
        for (int s = 0; s < C.dim(); ++s)
            for (int t = s + 1; t < C.dim(); ++t)
                candidates.push_back(vec_add(f, basis_vec(C.dim(), s), basis_vec(C.dim(), t)));
        SplitMix64 rng(0xb10c5eedULL);
        for (int tries = 0; tries < 200; ++tries) {
            Vec v = zero_vec(C.dim());
            for (int t = 0; t < C.dim(); ++t)
                v[t] = Scalar(rng.range(-2, 2));
            candidates.push_back(std::move(v));
        }

        bool descended = false;
        for (const Vec& z : candidates) {
            Poly m = min_poly(C, z);
            if (poly_deg(m) <= 1) continue;
            auto roots = field_roots(f, m);
            if (roots.empty()) continue;
            const auto& [lambda, mult] = roots.front();
            Poly primary{f.one()};
            Poly lin{f.neg(lambda), f.one()};
            for (int i = 0; i < mult; ++i) primary = poly_mul(f, primary, lin);
            Poly cof = poly_divmod(f, m, primary).first;
            if (poly_deg(cof) == 0) continue;  // single primary component, useless
            Poly s, t;
            poly_ext_gcd(f, primary, cof, s, t);
            Vec idem = poly_eval_element(C, poly_mul(f, t, cof), z);
            if (is_zero_vec(idem) || idem == *C.unit()) continue;
            require(C.is_idempotent(idem), "CRT projector is not idempotent", Errc::internal);
            u = cm.embed(idem);
            descended = true;
            break;
        }
        if (!descended)
            fail(Errc::not_split,
                 "no splitting element found in a simple block over " + f.to_string() +
                     "; the block is a division algebra or the presentation is not recognized");
    }
}

// Matrix units of a simple split unital algebra, from a primitive idempotent.
std::vector<Vec> block_matrix_units(const Algebra& blk, const Vec& prim, int* out_n) {
    const Field& f = blk.field();
    std::vector<Vec> vgens;
    for (int s = 0; s < blk.dim(); ++s)
        vgens.push_back(blk.multiply(basis_vec(blk.dim(), s), prim));
    Subspace V = blk.span(vgens);  // minimal left ideal
    const int n = V.dim();
    require(n * n == blk.dim(), "block dimension is not the square of its module length",
            Errc::internal);
    *out_n = n;

    Subspace uspan = blk.span({prim});
    std::vector<Vec> reduced;
    for (const Vec& b : V.basis()) reduced.push_back(uspan.reduce(b));
    Subspace W = blk.span(reduced);
    require(W.dim() == n - 1, "complement of the primitive idempotent has wrong dimension",
            Errc::internal);
    std::vector<Vec> vbasis{prim};
    vbasis.insert(vbasis.end(), W.basis().begin(), W.basis().end());

    // E_ij is the unique element acting on the v-basis as the matrix unit.
    std::vector<Vec> units(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat m(n * blk.dim(), blk.dim());
            Vec rhs = zero_vec(n * blk.dim());
            for (int k = 0; k < n; ++k) {
                for (int col = 0; col < blk.dim(); ++col) {
                    Vec prod = blk.multiply(basis_vec(blk.dim(), col), vbasis[k]);
                    for (int r = 0; r < blk.dim(); ++r) m.at(k * blk.dim() + r, col) = prod[r];
                }
                if (k == j)
                    for (int r = 0; r < blk.dim(); ++r) rhs[k * blk.dim() + r] = vbasis[i][r];
            }
            auto sol = solve(f, m, rhs);
            require(sol.has_value() && sol->kernel.is_zero(),
                    "matrix unit solve failed; block is not simple", Errc::internal);
            units[static_cast<size_t>(i) * n + j] = sol->particular;
        }
    return units;
}

void verify_matrix_unit_systems(const Algebra& a, const std::vector<MatrixUnitSystem>& blocks,
                                Errc code) {
    const Field& f = a.field();
    for (size_t r = 0; r < blocks.size(); ++r)
        for (size_t q = 0; q < blocks.size(); ++q) {
            const auto& br = blocks[r];
            const auto& bq = blocks[q];
            for (int i = 0; i < br.n; ++i)
                for (int j = 0; j < br.n; ++j)
                    for (int k = 0; k < bq.n; ++k)
                        for (int l = 0; l < bq.n; ++l) {
                            Vec prod = a.multiply(br.unit(i, j), bq.unit(k, l));
                            Vec expect = (r == q && j == k) ? br.unit(i, l) : zero_vec(a.dim());
                            if (prod != expect)
                                fail(code, "matrix unit relations fail at blocks " +
                                               std::to_string(r) + "," + std::to_string(q));
                        }
            (void)f;
        }
}

}  // namespace

// ------------------------------------------------------------------- radical

const Subspace& Algebra::radical() const {
    {
        std::lock_guard<std::mutex> lk(impl_->cache_mutex);
        if (impl_->cached_radical) return *impl_->cached_radical;
    }
    const Field& f = field();
    const bool unital = unit().has_value();
    Algebra w = unital ? *this : unitalized();
    const int n = w.dim();

    // K[i][j] = tr(L_i L_j) for the left regular representation of w.
    std::vector<Mat> left(n, Mat(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, c] : w.basis_product(i, j)) left[i].at(k, j) = c;
    Mat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar acc(0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (!is_zero(left[i].at(a, b)) && !is_zero(left[j].at(b, a)))
                        acc += left[i].at(a, b) * left[j].at(b, a);
            gram.at(i, j) = f.reduce(acc);
            gram.at(j, i) = gram.at(i, j);
        }
    std::vector<Vec> ker = kernel_basis(f, gram);

    std::vector<Vec> restricted;
    for (const Vec& v : ker) {
        if (!unital) {
            require(is_zero(v[n - 1]), "radical escapes into the adjoined unit", Errc::internal);
            restricted.push_back(Vec(v.begin(), v.end() - 1));
        } else {
            restricted.push_back(v);
        }
    }
    Subspace rad = span(restricted);

    require(is_ideal(rad), "trace-form radical is not an ideal", Errc::internal);
    Subspace power = rad;
    for (int guard = 0; !power.is_zero(); ++guard) {
        require(guard <= dim() + 1, "trace-form radical is not nilpotent", Errc::internal);
        power = subspace_product(power, rad);
    }

    std::lock_guard<std::mutex> lk(impl_->cache_mutex);
    if (!impl_->cached_radical) impl_->cached_radical = std::move(rad);
    return *impl_->cached_radical;
}

const QuotientMap& Algebra::bar() const {
    {
        std::lock_guard<std::mutex> lk(impl_->cache_mutex);
        if (impl_->cached_bar) return *impl_->cached_bar;
    }
    QuotientMap qm = quotient(radical());
    std::lock_guard<std::mutex> lk(impl_->cache_mutex);
    if (!impl_->cached_bar) impl_->cached_bar = std::move(qm);
    return *impl_->cached_bar;
}

// ---------------------------------------------------------------------- levi

const LeviDecomposition& Algebra::levi() const {
    {
        std::lock_guard<std::mutex> lk(impl_->cache_mutex);
        if (impl_->cached_levi) return *impl_->cached_levi;
    }
    const Field& f = field();
    LeviDecomposition ld;
    ld.radical = radical();

    if (impl_->levi_hint) {
        ld.blocks = *impl_->levi_hint;
        verify_matrix_unit_systems(*this, ld.blocks, Errc::precondition);
    } else {
        const QuotientMap& barm = bar();
        const Algebra& barA = *barm.target;
        require(barA.radical().is_zero(), "quotient by the radical is not semisimple",
                Errc::internal);
        if (barA.dim() > 0) {
            require(barA.unit().has_value(), "semisimple quotient has no identity",
                    Errc::internal);
            std::vector<Vec> centrals = split_center(barA);

            // Matrix units of every block of the semisimple quotient.
            std::vector<MatrixUnitSystem> bar_blocks;
            for (const Vec& c : centrals) {
                std::vector<Vec> gens;
                for (int s = 0; s < barA.dim(); ++s)
                    gens.push_back(barA.multiply(c, barA.multiply(basis_vec(barA.dim(), s), c)));
                SubalgebraMap bm = barA.subalgebra(barA.span(gens));
                const Algebra& blk = *bm.sub;
                require(blk.unit().has_value(), "block lost its unit", Errc::internal);
                Vec prim = primitive_idempotent(blk);
                int n = 0;
                std::vector<Vec> units = block_matrix_units(blk, prim, &n);
                MatrixUnitSystem sys;
                sys.n = n;
                for (const Vec& u : units) sys.units.push_back(bm.embed(u));
                bar_blocks.push_back(std::move(sys));
            }
            verify_matrix_unit_systems(barA, bar_blocks, Errc::internal);

            // Lift the diagonal idempotents as one orthogonal family.
            std::vector<std::vector<Vec>> lifted_diag(bar_blocks.size());
            Vec usum = zero_vec(dim());
            for (size_t r = 0; r < bar_blocks.size(); ++r) {
                lifted_diag[r].resize(bar_blocks[r].n);
                for (int i = 0; i < bar_blocks[r].n; ++i) {
                    Vec x = barm.lift(bar_blocks[r].unit(i, i));
                    Vec ux = multiply(usum, x);
                    Vec xu = multiply(x, usum);
                    Vec uxu = multiply(usum, xu);
                    x = vec_add(f, vec_sub(f, vec_sub(f, x, ux), xu), uxu);
                    for (int guard = 0; !is_idempotent(x); ++guard) {
                        require(guard <= 64, "idempotent lifting did not converge",
                                Errc::internal);
                        Vec x2 = multiply(x, x);
                        Vec x3 = multiply(x2, x);
                        x = vec_sub(f, vec_scale(f, Scalar(3), x2), vec_scale(f, Scalar(2), x3));
                    }
                    require(barm.project(x) == bar_blocks[r].unit(i, i),
                            "lifted idempotent has the wrong image", Errc::internal);
                    lifted_diag[r][i] = x;
                    usum = vec_add(f, usum, x);
                }
            }

            // Off-diagonal units: fix the first row, then correct the first
            // column so the products close up exactly.
            for (size_t r = 0; r < bar_blocks.size(); ++r) {
                const int n = bar_blocks[r].n;
                MatrixUnitSystem sys;
                sys.n = n;
                sys.units.assign(static_cast<size_t>(n) * n, Vec());
                auto put = [&](int i, int j, Vec v) {
                    sys.units[static_cast<size_t>(i) * n + j] = std::move(v);
                };
                put(0, 0, lifted_diag[r][0]);
                const Vec& e11 = lifted_diag[r][0];
                for (int i = 1; i < n; ++i) {
                    const Vec& eii = lifted_diag[r][i];
                    Vec a1i = multiply(e11, multiply(barm.lift(bar_blocks[r].unit(0, i)), eii));
                    Vec bi1 = multiply(eii, multiply(barm.lift(bar_blocks[r].unit(i, 0)), e11));
                    Vec c = multiply(a1i, bi1);
                    Vec rho = vec_sub(f, c, e11);
                    Vec cinv = e11;
                    Vec term = rho;
                    Scalar sign(-1);
                    for (int guard = 0; !is_zero_vec(term); ++guard) {
                        require(guard <= dim() + 1, "corner correction did not terminate",
                                Errc::internal);
                        cinv = vec_add(f, cinv, vec_scale(f, sign, term));
                        term = multiply(term, rho);
                        sign = f.neg(sign);
                    }
                    Vec ei1 = multiply(bi1, cinv);
                    require(multiply(a1i, ei1) == e11 && multiply(ei1, a1i) == eii,
                            "first row/column correction failed", Errc::internal);
                    put(0, i, std::move(a1i));
                    put(i, 0, std::move(ei1));
                    put(i, i, eii);
                }
                for (int i = 1; i < n; ++i)
                    for (int j = 1; j < n; ++j) {
                        if (i == j) continue;
                        put(i, j, multiply(sys.unit(i, 0), sys.unit(0, j)));
                    }
                ld.blocks.push_back(std::move(sys));
            }
            verify_matrix_unit_systems(*this, ld.blocks, Errc::internal);
        }
    }

    std::vector<Vec> all_units;
    for (const auto& b : ld.blocks)
        all_units.insert(all_units.end(), b.units.begin(), b.units.end());
    ld.semisimple = span(all_units);
    require(ld.semisimple.dim() == static_cast<int>(all_units.size()),
            "matrix units are linearly dependent", Errc::internal);
    require(ld.semisimple.intersect(ld.radical).is_zero() &&
                ld.semisimple.dim() + ld.radical.dim() == dim(),
            "matrix units do not complement the radical",
            impl_->levi_hint ? Errc::precondition : Errc::internal);

    // unit_coords: first rows of the inverse of [units | radical basis].
    const int nu = static_cast<int>(all_units.size());
    Mat m(dim(), dim());
    for (int j = 0; j < nu; ++j)
        for (int i = 0; i < dim(); ++i) m.at(i, j) = all_units[j][i];
    for (int j = 0; j < ld.radical.dim(); ++j)
        for (int i = 0; i < dim(); ++i) m.at(i, nu + j) = ld.radical.basis()[j][i];
    Mat aug(dim(), 2 * dim());
    for (int i = 0; i < dim(); ++i) {
        for (int j = 0; j < dim(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, dim() + i) = Scalar(1);
    }
    auto pivots = rref(f, aug);
    require(static_cast<int>(pivots.size()) == dim() && (dim() == 0 || pivots.back() < dim()),
            "basis change matrix is singular", Errc::internal);
    ld.unit_coords = Mat(nu, dim());
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < dim(); ++j) ld.unit_coords.at(i, j) = aug.at(i, dim() + j);

    std::lock_guard<std::mutex> lk(impl_->cache_mutex);
    if (!impl_->cached_levi) impl_->cached_levi = std::move(ld);
    return *impl_->cached_levi;
}

}  // namespace iiq
