#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "algebra_impl.hpp"
#include "util.hpp"

namespace iiq {

namespace {

const std::vector<std::pair<int, Scalar>> kEmptyProduct;

Vec sparse_to_vec(int dim, const std::vector<std::pair<int, Scalar>>& sp) {
    Vec v = zero_vec(dim);
    for (const auto& [k, c] : sp) v[k] = c;
    return v;
}

}  // namespace

Vec QuotientMap::project(const Vec& x) const { return proj.apply(target->field(), x); }
Vec QuotientMap::lift(const Vec& y) const { return section.apply(target->field(), y); }

Subspace QuotientMap::project_subspace(const Subspace& u) const {
    std::vector<Vec> rows;
    for (const Vec& b : u.basis()) rows.push_back(project(b));
    return Subspace::span(target->field(), target->dim(), rows);
}

Vec SubalgebraMap::embed(const Vec& x) const {
    Vec r = zero_vec(space.ambient());
    const Field& f = sub->field();
    for (int i = 0; i < sub->dim(); ++i)
        if (!is_zero(x[i])) r = vec_add(f, r, vec_scale(f, x[i], space.basis()[i]));
    return r;
}

Vec SubalgebraMap::restrict(const Vec& x) const {
    auto coords = space.coordinates(x);
    require(coords.has_value(), "element does not lie in the subalgebra");
    return *coords;
}

Subspace SubalgebraMap::embed_subspace(const Subspace& u) const {
    std::vector<Vec> rows;
    for (const Vec& b : u.basis()) rows.push_back(embed(b));
    return Subspace::span(sub->field(), space.ambient(), rows);
}

Subspace SubalgebraMap::restrict_subspace(const Subspace& u) const {
    std::vector<Vec> rows;
    for (const Vec& b : u.basis()) rows.push_back(restrict(b));
    return Subspace::span(sub->field(), sub->dim(), rows);
}

Algebra Algebra::create(Field field, int dim, std::vector<std::string> labels,
                        const std::vector<SCEntry>& entries, Options opts) {
    require(dim >= 0, "negative dimension");
    auto impl = std::make_shared<Impl>();
    impl->field = field;
    impl->dim = dim;
    if (labels.empty())
        for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    require(static_cast<int>(labels.size()) == dim, "label count does not match dimension");
    {
        std::set<std::string> seen(labels.begin(), labels.end());
        require(static_cast<int>(seen.size()) == dim, "duplicate basis labels");
    }
    impl->labels = std::move(labels);

    impl->table.assign(static_cast<size_t>(dim) * dim, {});
    std::map<std::tuple<int, int, int>, Scalar> merged;
    for (const SCEntry& e : entries) {
        require(e.i >= 0 && e.i < dim && e.j >= 0 && e.j < dim && e.k >= 0 && e.k < dim,
                "structure constant index out of range");
        Scalar c = field.reduce(e.c);
        if (is_zero(c)) continue;
        auto [it, fresh] = merged.emplace(std::make_tuple(e.i, e.j, e.k), c);
        require(fresh, "duplicate structure constant entry");
        (void)it;
    }
    for (const auto& [key, c] : merged) {
        auto [i, j, k] = key;
        impl->table[static_cast<size_t>(i) * dim + j].emplace_back(k, c);
        impl->entries.push_back(SCEntry{i, j, k, c});
    }

    Algebra a = AlgebraAccess::wrap(impl);

    // Associativity on all basis triples.
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Vec ij = sparse_to_vec(dim, impl->table[static_cast<size_t>(i) * dim + j]);
            for (int k = 0; k < dim; ++k) {
                Vec jk = sparse_to_vec(dim, impl->table[static_cast<size_t>(j) * dim + k]);
                Vec ek = zero_vec(dim);
                ek[k] = Scalar(1);
                Vec ei = zero_vec(dim);
                ei[i] = Scalar(1);
                if (a.multiply(ij, ek) != a.multiply(ei, jk))
                    fail(Errc::violation,
                         "structure constants are not associative at triple (" +
                             impl->labels[i] + "," + impl->labels[j] + "," + impl->labels[k] + ")");
            }
        }

    // Two-sided identity: verify the hint or detect one by a linear solve.
    auto acts_as_unit = [&](const Vec& u) {
        for (int j = 0; j < dim; ++j) {
            Vec ej = zero_vec(dim);
            ej[j] = Scalar(1);
            if (a.multiply(u, ej) != ej || a.multiply(ej, u) != ej) return false;
        }
        return true;
    };
    if (opts.unit) {
        require(static_cast<int>(opts.unit->size()) == dim, "unit vector has wrong length");
        Vec u = *opts.unit;
        for (Scalar& c : u) c = field.reduce(c);
        require(acts_as_unit(u), "declared unit is not a two-sided identity");
        impl->unit = u;
    } else if (dim > 0) {
        Mat m(2 * dim * dim, dim);
        Vec rhs = zero_vec(2 * dim * dim);
        // row block 1: sum_i x_i (b_i b_j)_k = delta_jk ; row block 2: b_j x
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                int r1 = (j * dim + k);
                int r2 = dim * dim + r1;
                for (int i = 0; i < dim; ++i) {
                    for (const auto& [kk, c] : impl->table[static_cast<size_t>(i) * dim + j])
                        if (kk == k) m.at(r1, i) = c;
                    for (const auto& [kk, c] : impl->table[static_cast<size_t>(j) * dim + i])
                        if (kk == k) m.at(r2, i) = c;
                }
                if (j == k) {
                    rhs[r1] = Scalar(1);
                    rhs[r2] = Scalar(1);
                }
            }
        if (auto sol = solve(field, m, rhs)) impl->unit = sol->particular;
    }

    if (field.is_prime_field()) {
        unsigned long needed = static_cast<unsigned long>(dim) + (impl->unit ? 0 : 1);
        if (field.p <= needed)
            fail(Errc::unsupported_characteristic,
                 "characteristic " + std::to_string(field.p) + " too small for dimension " +
                     std::to_string(dim) + (impl->unit ? "" : " (non-unital)") +
                     "; the radical criterion needs p > " + std::to_string(needed));
    }

    if (opts.levi_blocks) impl->levi_hint = std::move(opts.levi_blocks);
    return a;
}

const Field& Algebra::field() const { return impl_->field; }
int Algebra::dim() const { return impl_->dim; }
const std::vector<std::string>& Algebra::labels() const { return impl_->labels; }
const std::optional<Vec>& Algebra::unit() const { return impl_->unit; }
const std::vector<SCEntry>& Algebra::entries() const { return impl_->entries; }

const std::vector<std::pair<int, Scalar>>& Algebra::basis_product(int i, int j) const {
    if (i < 0 || j < 0 || i >= impl_->dim || j >= impl_->dim) return kEmptyProduct;
    return impl_->table[static_cast<size_t>(i) * impl_->dim + j];
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
    const int d = impl_->dim;
    require(static_cast<int>(a.size()) == d && static_cast<int>(b.size()) == d,
            "multiply: element dimension mismatch");
    Vec acc = zero_vec(d);
    for (int i = 0; i < d; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j < d; ++j) {
            if (is_zero(b[j])) continue;
            Scalar ab = a[i] * b[j];
            for (const auto& [k, c] : impl_->table[static_cast<size_t>(i) * d + j])
                acc[k] += ab * c;
        }
    }
    for (Scalar& c : acc) c = impl_->field.reduce(c);
    return acc;
}

Vec Algebra::commutator(const Vec& a, const Vec& b) const {
    return vec_sub(impl_->field, multiply(a, b), multiply(b, a));
}

Vec Algebra::triple_product(const Vec& b, const Vec& x, const Vec& b2) const {
    return vec_add(impl_->field, multiply(multiply(b, x), b2), multiply(multiply(b2, x), b));
}

Subspace Algebra::subspace_product(const Subspace& u, const Subspace& v) const {
    std::vector<Vec> gens;
    for (const Vec& a : u.basis())
        for (const Vec& b : v.basis()) gens.push_back(multiply(a, b));
    return span(gens);
}

Subspace Algebra::ideal_closure(const Subspace& x, IdealSide side) const {
    Subspace cur = x;
    Subspace whole = full_space();
    for (;;) {
        Subspace next = cur;
        if (side != IdealSide::right) next = next.sum(subspace_product(whole, cur));
        if (side != IdealSide::left) next = next.sum(subspace_product(cur, whole));
        if (next == cur) return cur;
        cur = next;
    }
}

const Subspace& Algebra::center() const {
    std::lock_guard<std::mutex> lk(impl_->cache_mutex);
    if (!impl_->cached_center) {
        const int d = impl_->dim;
        // z is central iff z b_i - b_i z = 0 for every basis element.
        Mat m(d * d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                for (const auto& [k, c] : impl_->table[static_cast<size_t>(j) * d + i])
                    m.at(i * d + k, j) = impl_->field.add(m.at(i * d + k, j), c);
                for (const auto& [k, c] : impl_->table[static_cast<size_t>(i) * d + j])
                    m.at(i * d + k, j) = impl_->field.sub(m.at(i * d + k, j), c);
            }
        impl_->cached_center = Subspace::span(impl_->field, d, kernel_basis(impl_->field, m));
    }
    return *impl_->cached_center;
}

Algebra Algebra::unitalized() const {
    const int d = impl_->dim;
    std::vector<SCEntry> entries = impl_->entries;
    for (int i = 0; i <= d; ++i) {
        if (i < d) {
            entries.push_back(SCEntry{d, i, i, Scalar(1)});
            entries.push_back(SCEntry{i, d, i, Scalar(1)});
        } else {
            entries.push_back(SCEntry{d, d, d, Scalar(1)});
        }
    }
    std::vector<std::string> labels = impl_->labels;
    std::string one = "1";
    while (std::find(labels.begin(), labels.end(), one) != labels.end()) one += "_";
    labels.push_back(one);
    Options opts;
    Vec u = zero_vec(d + 1);
    u[d] = Scalar(1);
    opts.unit = u;
    return create(impl_->field, d + 1, std::move(labels), entries, std::move(opts));
}

QuotientMap Algebra::quotient(const Subspace& ideal) const {
    require(ideal.ambient() == dim() && ideal.field() == field(),
            "quotient: ideal lives in a different space");
    require(is_ideal(ideal), "quotient: subspace is not a two-sided ideal");

    const Field& f = field();
    std::vector<int> comp = ideal.complement_coords();
    const int c = static_cast<int>(comp.size());

    Mat proj(c, dim());
    for (int j = 0; j < dim(); ++j) {
        Vec ej = zero_vec(dim());
        ej[j] = Scalar(1);
        Vec r = ideal.reduce(ej);
        for (int t = 0; t < c; ++t) proj.at(t, j) = r[comp[t]];
    }
    Mat section(dim(), c);
    for (int t = 0; t < c; ++t) section.at(comp[t], t) = Scalar(1);

    std::vector<SCEntry> entries;
    for (int s = 0; s < c; ++s)
        for (int t = 0; t < c; ++t) {
            Vec es = zero_vec(dim());
            es[comp[s]] = Scalar(1);
            Vec et = zero_vec(dim());
            et[comp[t]] = Scalar(1);
            Vec prod = ideal.reduce(multiply(es, et));
            for (int u = 0; u < c; ++u)
                if (!is_zero(prod[comp[u]])) entries.push_back(SCEntry{s, t, u, prod[comp[u]]});
        }
    std::vector<std::string> labels;
    for (int t = 0; t < c; ++t) labels.push_back(impl_->labels[comp[t]]);

    QuotientMap qm;
    qm.ideal = ideal;
    Options opts;
    if (impl_->unit) {
        Vec pu = proj.apply(f, *impl_->unit);
        // The image of a unit is a unit of the quotient unless it collapses.
        if (!is_zero_vec(pu) || c == 0) opts.unit = pu;
    }
    qm.target = std::make_shared<Algebra>(create(f, c, std::move(labels), entries, std::move(opts)));
    qm.proj = std::move(proj);
    qm.section = std::move(section);
    return qm;
}

SubalgebraMap Algebra::subalgebra(const Subspace& closed) const {
    require(closed.ambient() == dim() && closed.field() == field(),
            "subalgebra: subspace lives in a different space");
    const int c = closed.dim();
    std::vector<SCEntry> entries;
    for (int s = 0; s < c; ++s)
        for (int t = 0; t < c; ++t) {
            Vec prod = multiply(closed.basis()[s], closed.basis()[t]);
            auto coords = closed.coordinates(prod);
            require(coords.has_value(), "subalgebra: subspace is not multiplicatively closed");
            for (int u = 0; u < c; ++u)
                if (!is_zero((*coords)[u])) entries.push_back(SCEntry{s, t, u, (*coords)[u]});
        }
    SubalgebraMap sm;
    sm.space = closed;
    sm.sub = std::make_shared<Algebra>(create(field(), c, {}, entries));
    return sm;
}

Vec Algebra::conjugate_by_unipotent(const Vec& q, const Vec& x) const {
    require(radical().contains(q), "conjugator must lie in the radical");
    const Field& f = field();
    // tail = sum_{i>=1} (-q)^i, the non-identity part of (1+q)^{-1}.
    Vec tail = zero_vec(dim());
    Vec power = vec_scale(f, Scalar(-1), q);
    for (int guard = 0; !is_zero_vec(power); ++guard) {
        require(guard <= dim() + 1, "radical element is not nilpotent", Errc::internal);
        tail = vec_add(f, tail, power);
        power = multiply(power, vec_scale(f, Scalar(-1), q));
    }
    // (1+q) x (1 + tail) = x + qx + x tail + q x tail
    Vec qx = multiply(q, x);
    Vec xt = multiply(x, tail);
    Vec qxt = multiply(qx, tail);
    return vec_add(f, vec_add(f, x, qx), vec_add(f, xt, qxt));
}

bool Algebra::is_lie_solvable() const {
    Subspace cur = full_space();
    for (;;) {
        std::vector<Vec> gens;
        for (const Vec& a : cur.basis())
            for (const Vec& b : cur.basis()) gens.push_back(commutator(a, b));
        Subspace next = span(gens);
        if (next == cur) return cur.is_zero();
        cur = next;
    }
}

bool Algebra::is_1perfect() const {
    Subspace whole = full_space();
    if (subspace_product(whole, whole) != whole) return false;
    for (const auto& b : levi().blocks)
        if (b.n == 1) return false;
    return true;
}

Subspace Algebra::one_perfect_radical(std::uint64_t seed) const {
    SplitMix64 rng(mix_seed(0x1b873593ULL, seed));
    // Descend through codimension-1 ideals until the current subalgebra is
    // 1-perfect; track the embedding back into *this.
    Algebra cur = *this;
    std::vector<Subspace> chain;  // chain[t] = space of stage t+1 inside stage t coords
    for (;;) {
        Subspace whole = cur.full_space();
        Subspace sq = cur.subspace_product(whole, whole);
        Subspace hyper(cur.field(), cur.dim());
        if (sq != whole) {
            // Any hyperplane containing A^2 is an ideal; pick one at random.
            std::vector<int> comp = sq.complement_coords();
            Vec row = zero_vec(cur.dim());
            bool nonzero = false;
            while (!nonzero) {
                for (int t : comp) {
                    row[t] = Scalar(static_cast<long>(rng.below(7)) - 3);
                    if (!is_zero(row[t])) nonzero = true;
                }
            }
            // Functional must also kill A^2: rewrite in quotient-mod-sq coordinates.
            Mat m(1, cur.dim());
            for (int j = 0; j < cur.dim(); ++j) {
                Vec ej = zero_vec(cur.dim());
                ej[j] = Scalar(1);
                Vec r = sq.reduce(ej);
                Scalar acc(0);
                for (int t = 0; t < cur.dim(); ++t) acc += row[t] * r[t];
                m.at(0, j) = cur.field().reduce(acc);
            }
            hyper = Subspace::span(cur.field(), cur.dim(), kernel_basis(cur.field(), m));
        } else {
            const LeviDecomposition& ld = cur.levi();
            std::vector<int> ones;
            for (size_t r = 0; r < ld.blocks.size(); ++r)
                if (ld.blocks[r].n == 1) ones.push_back(static_cast<int>(r));
            if (ones.empty()) break;  // 1-perfect
            int pick = ones[rng.below(ones.size())];
            int unit_row = 0;
            for (int r = 0; r < pick; ++r) unit_row += ld.blocks[r].n * ld.blocks[r].n;
            Mat m(1, cur.dim());
            for (int j = 0; j < cur.dim(); ++j) m.at(0, j) = ld.unit_coords.at(unit_row, j);
            hyper = Subspace::span(cur.field(), cur.dim(), kernel_basis(cur.field(), m));
        }
        require(hyper.dim() == cur.dim() - 1, "descent step must drop dimension by one",
                Errc::internal);
        require(cur.is_ideal(hyper), "descent hyperplane is not an ideal", Errc::internal);
        chain.push_back(hyper);
        cur = *cur.subalgebra(hyper).sub;
        if (cur.dim() == 0) break;
    }
    // Fold the chain back into coordinates of *this.
    Subspace result = cur.full_space();
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        std::vector<Vec> rows;
        const Field& f = field();
        for (const Vec& v : result.basis()) {
            Vec lifted = zero_vec(it->ambient());
            for (int i = 0; i < result.ambient(); ++i)
                if (!is_zero(v[i])) lifted = vec_add(f, lifted, vec_scale(f, v[i], it->basis()[i]));
            rows.push_back(std::move(lifted));
        }
        result = Subspace::span(f, it->ambient(), rows);
    }
    return result;
}

bool Algebra::is_idempotent(const Vec& e) const { return multiply(e, e) == e; }

bool Algebra::is_ideal(const Subspace& u) const {
    Subspace whole = full_space();
    return u.contains(subspace_product(whole, u)) && u.contains(subspace_product(u, whole));
}

}  // namespace iiq
