#pragma once

// Shared helpers for the test suites: deterministic generators and small
// independent oracles.

#include "iiq/corpus.hpp"
#include "iiq/reduction.hpp"
#include "iiq/util.hpp"

namespace iiq::testing {

inline Vec vec_of(std::initializer_list<long> vals) {
    Vec v;
    for (long x : vals) v.emplace_back(x);
    return v;
}

inline Subspace span_of(const Field& f, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec> vs;
    int ambient = 0;
    for (const auto& r : rows) {
        vs.push_back(vec_of(r));
        ambient = static_cast<int>(r.size());
    }
    return Subspace::span(f, ambient, vs);
}

inline Vec basis_at(const Algebra& a, const std::string& label) {
    auto it = std::find(a.labels().begin(), a.labels().end(), label);
    require(it != a.labels().end(), "no basis label " + label, Errc::internal);
    Vec v = zero_vec(a.dim());
    v[it - a.labels().begin()] = Scalar(1);
    return v;
}

inline Vec elem(const Algebra& a, std::initializer_list<const char*> labels) {
    Vec v = zero_vec(a.dim());
    for (const char* l : labels) v = vec_add(a.field(), v, basis_at(a, l));
    return v;
}

inline Vec random_element(const Algebra& a, SplitMix64& rng, long lo = -3, long hi = 3) {
    Vec v = zero_vec(a.dim());
    for (int i = 0; i < a.dim(); ++i) v[i] = Scalar(rng.range(lo, hi));
    return v;
}

inline Vec random_in(const Subspace& s, const Field& f, SplitMix64& rng, long lo = -2,
                     long hi = 2) {
    Vec v = zero_vec(s.ambient());
    for (const Vec& b : s.basis()) v = vec_add(f, v, vec_scale(f, Scalar(rng.range(lo, hi)), b));
    return v;
}

// ---- independent codimension-1 ideal oracle ---------------------------------
//
// Over a prime field: enumerate every hyperplane and test the ideal property
// directly. Over Q: a hyperplane ideal is the kernel of a functional that is a
// common eigenvector of all transposed multiplication operators, so enumerate
// rational eigenspace intersections.

namespace detail {

inline std::vector<Scalar> oracle_min_poly(const Field& f, const Mat& t) {
    const int d = t.rows;
    std::vector<Vec> powers;
    Mat cur(d, d);
    for (int i = 0; i < d; ++i) cur.at(i, i) = Scalar(1);
    for (;;) {
        powers.push_back(cur.a);
        Mat m(d * d, static_cast<int>(powers.size()));
        for (size_t c = 0; c < powers.size(); ++c)
            for (int r = 0; r < d * d; ++r) m.at(r, static_cast<int>(c)) = powers[c][r];
        Mat next(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                Scalar acc(0);
                for (int k = 0; k < d; ++k) acc += cur.at(i, k) * t.at(k, j);
                next.at(i, j) = f.reduce(acc);
            }
        if (auto sol = solve(f, m, next.a)) {
            std::vector<Scalar> p;
            for (const Scalar& c : sol->particular) p.push_back(f.neg(c));
            p.push_back(f.one());
            return p;
        }
        cur = std::move(next);
    }
}

inline std::vector<Scalar> oracle_rational_roots(const Field& f, std::vector<Scalar> p) {
    std::vector<Scalar> roots;
    auto eval = [&](const Scalar& x) {
        Scalar acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
        return acc;
    };
    std::vector<Scalar> candidates;
    if (f.is_prime_field()) {
        for (unsigned long r = 0; r < f.p; ++r) candidates.emplace_back(static_cast<long>(r));
    } else {
        while (!p.empty() && is_zero(p.front())) {
            p.erase(p.begin());
            if (roots.empty()) roots.emplace_back(0);
        }
        mpz_class den(1);
        for (const Scalar& c : p) den = lcm(den, c.get_den());
        std::vector<mpz_class> ip;
        for (const Scalar& c : p) ip.push_back(mpz_class(c * den));
        auto divisors = [](mpz_class n) {
            std::vector<mpz_class> out;
            n = abs(n);
            for (mpz_class d = 1; d * d <= n; ++d)
                if (n % d == 0) {
                    out.push_back(d);
                    out.push_back(n / d);
                }
            return out;
        };
        if (!ip.empty())
            for (const mpz_class& num : divisors(ip.front()))
                for (const mpz_class& q : divisors(ip.back())) {
                    Scalar c(num, q);
                    c.canonicalize();
                    candidates.push_back(c);
                    candidates.push_back(-c);
                }
    }
    for (const Scalar& c : candidates)
        if (is_zero(eval(c)) &&
            std::find(roots.begin(), roots.end(), c) == roots.end())
            roots.push_back(c);
    return roots;
}

}  // namespace detail

inline bool has_codim1_ideal_bruteforce(const Algebra& a) {
    const Field& f = a.field();
    const int d = a.dim();
    if (d == 0) return false;

    if (f.is_prime_field()) {
        // All hyperplanes, via functionals whose first nonzero entry is one.
        for (int lead = 0; lead < d; ++lead) {
            const int tail = d - lead - 1;
            std::uint64_t combos = 1;
            for (int t = 0; t < tail; ++t) combos *= f.p;
            for (std::uint64_t mask = 0; mask < combos; ++mask) {
                Vec phi = zero_vec(d);
                phi[lead] = Scalar(1);
                std::uint64_t rest = mask;
                for (int t = 0; t < tail; ++t) {
                    phi[lead + 1 + t] = Scalar(static_cast<long>(rest % f.p));
                    rest /= f.p;
                }
                Mat m(1, d);
                for (int j = 0; j < d; ++j) m.at(0, j) = phi[j];
                Subspace h = Subspace::span(f, d, kernel_basis(f, m));
                if (h.dim() == d - 1 && a.is_ideal(h)) return true;
            }
        }
        return false;
    }

    // Transposed multiplication operators on the dual.
    std::vector<Mat> ops;
    for (int i = 0; i < d; ++i) {
        Mat lt(d, d), rt(d, d);
        for (int j = 0; j < d; ++j) {
            for (const auto& [k, c] : a.basis_product(i, j)) lt.at(j, k) = c;
            for (const auto& [k, c] : a.basis_product(j, i)) rt.at(j, k) = c;
        }
        ops.push_back(std::move(lt));
        ops.push_back(std::move(rt));
    }
    std::vector<Subspace> live{Subspace::full(f, d)};
    for (const Mat& t : ops) {
        std::vector<Scalar> eigs =
            detail::oracle_rational_roots(f, detail::oracle_min_poly(f, t));
        std::vector<Subspace> next;
        for (const Scalar& lambda : eigs) {
            Mat shifted = t;
            for (int i = 0; i < d; ++i) shifted.at(i, i) = f.sub(shifted.at(i, i), lambda);
            Subspace eig = Subspace::span(f, d, kernel_basis(f, shifted));
            for (const Subspace& w : live) {
                Subspace meet = w.intersect(eig);
                if (!meet.is_zero()) next.push_back(std::move(meet));
            }
        }
        live = std::move(next);
        if (live.empty()) return false;
    }
    return true;
}

// Direct evaluation of the inner-ideal condition, used as the second route of
// the Jordan-Lie cross-check.
inline bool inner_by_definition(const Algebra& a, const Subspace& b, const Subspace& l) {
    for (const Vec& x : b.basis())
        for (const Vec& y : b.basis())
            for (const Vec& z : l.basis())
                if (!b.contains(a.commutator(x, a.commutator(y, z)))) return false;
    return true;
}

}  // namespace iiq::testing
