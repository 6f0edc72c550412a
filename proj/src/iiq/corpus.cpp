#include "corpus.hpp"

#include <algorithm>
#include <map>

#include "util.hpp"

namespace iiq {

namespace {

std::string unit_label(int i, int j) {
    return "e" + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

Algebra build_matrix_algebra(int n, const Field& f) {
    require(n >= 1, "matrix algebra size must be positive");
    const int d = n * n;
    auto idx = [n](int i, int j) { return i * n + j; };
    std::vector<SCEntry> entries;
    std::vector<std::string> labels(d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            labels[idx(i, j)] = unit_label(i, j);
            for (int k = 0; k < n; ++k)
                entries.push_back(SCEntry{idx(i, j), idx(j, k), idx(i, k), Scalar(1)});
        }
    Algebra::Options opts;
    Vec unit = zero_vec(d);
    for (int i = 0; i < n; ++i) unit[idx(i, i)] = Scalar(1);
    opts.unit = unit;
    MatrixUnitSystem sys;
    sys.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = zero_vec(d);
            v[idx(i, j)] = Scalar(1);
            sys.units.push_back(std::move(v));
        }
    opts.levi_blocks = std::vector<MatrixUnitSystem>{std::move(sys)};
    return Algebra::create(f, d, std::move(labels), entries, std::move(opts));
}

Algebra build_direct_sum(const std::vector<Algebra>& parts) {
    require(!parts.empty(), "direct sum needs at least one summand");
    const Field f = parts.front().field();
    int total = 0;
    for (const Algebra& p : parts) {
        require(p.field() == f, "direct sum over mixed fields");
        total += p.dim();
    }
    std::vector<SCEntry> entries;
    std::vector<std::string> labels;
    std::vector<MatrixUnitSystem> blocks;
    bool all_unital = true;
    Vec unit = zero_vec(total);
    int off = 0;
    for (size_t t = 0; t < parts.size(); ++t) {
        const Algebra& p = parts[t];
        std::string prefix = std::string(1, static_cast<char>('a' + t)) + ".";
        for (const std::string& l : p.labels()) labels.push_back(prefix + l);
        for (const SCEntry& e : p.entries())
            entries.push_back(SCEntry{e.i + off, e.j + off, e.k + off, e.c});
        if (p.unit()) {
            for (int i = 0; i < p.dim(); ++i) unit[off + i] = (*p.unit())[i];
        } else {
            all_unital = false;
        }
        for (const MatrixUnitSystem& b : p.levi().blocks) {
            MatrixUnitSystem shifted;
            shifted.n = b.n;
            for (const Vec& u : b.units) {
                Vec v = zero_vec(total);
                for (int i = 0; i < p.dim(); ++i) v[off + i] = u[i];
                shifted.units.push_back(std::move(v));
            }
            blocks.push_back(std::move(shifted));
        }
        off += p.dim();
    }
    Algebra::Options opts;
    if (all_unital) opts.unit = unit;
    opts.levi_blocks = std::move(blocks);
    return Algebra::create(f, total, std::move(labels), entries, std::move(opts));
}

Algebra build_triangular(int n, bool strict, const Field& f) {
    require(n >= 1, "triangular algebra size must be positive");
    std::vector<std::pair<int, int>> positions;
    for (int i = 0; i < n; ++i)
        for (int j = strict ? i + 1 : i; j < n; ++j) positions.emplace_back(i, j);
    const int d = static_cast<int>(positions.size());
    auto idx = [&](int i, int j) {
        auto it = std::find(positions.begin(), positions.end(), std::make_pair(i, j));
        return it == positions.end() ? -1 : static_cast<int>(it - positions.begin());
    };
    std::vector<SCEntry> entries;
    std::vector<std::string> labels(d);
    for (int t = 0; t < d; ++t) labels[t] = unit_label(positions[t].first, positions[t].second);
    for (const auto& [i, j] : positions)
        for (const auto& [k, l] : positions)
            if (j == k) entries.push_back(SCEntry{idx(i, j), idx(k, l), idx(i, l), Scalar(1)});
    Algebra::Options opts;
    std::vector<MatrixUnitSystem> blocks;
    if (!strict) {
        Vec unit = zero_vec(d);
        for (int i = 0; i < n; ++i) unit[idx(i, i)] = Scalar(1);
        opts.unit = unit;
        for (int i = 0; i < n; ++i) {
            MatrixUnitSystem sys;
            sys.n = 1;
            Vec v = zero_vec(d);
            v[idx(i, i)] = Scalar(1);
            sys.units.push_back(std::move(v));
            blocks.push_back(std::move(sys));
        }
    }
    opts.levi_blocks = std::move(blocks);
    return Algebra::create(f, d, std::move(labels), entries, std::move(opts));
}

namespace {

// One instantiated radical summand: a copy of U_{ij} at a chain level.
struct RadicalCopy {
    int i = 0, j = 0;   // 1-based block indices; 0 = outside action
    int level = 1;
    int instance = 0;   // disambiguates multiplicities at level 1
    int rows = 1, cols = 1;
    int offset = 0;     // first coordinate in the algebra
};

int side_dim(const std::vector<int>& blocks, int idx) {
    return idx == 0 ? 1 : blocks[idx - 1];
}

}  // namespace

Algebra build_semidirect(const std::vector<int>& block_sizes, const BimoduleSpec& spec,
                         const Field& f) {
    for (int n : block_sizes) require(n >= 1, "block sizes must be positive");
    const int nblocks = static_cast<int>(block_sizes.size());
    for (const BimoduleCopy& c : spec.copies) {
        require(c.i >= 0 && c.i <= nblocks && c.j >= 0 && c.j <= nblocks,
                "bimodule copy references an undeclared block");
        require(c.multiplicity >= 1, "bimodule multiplicity must be positive");
    }

    // Copies at level 1 from the spec, then composites up to the chain cap.
    std::vector<RadicalCopy> copies;
    for (const BimoduleCopy& c : spec.copies)
        for (int m = 0; m < c.multiplicity; ++m) {
            RadicalCopy rc;
            rc.i = c.i;
            rc.j = c.j;
            rc.level = 1;
            rc.instance = m;
            copies.push_back(rc);
        }
    if (spec.nilpotency == BimoduleSpec::Nilpotency::chained) {
        require(spec.chain_cap >= 1, "chain cap must be positive");
        // Composite copy (i,j,level) exists once any composable pair reaches
        // it; products through index 0 are allowed, the trivial U_00 never
        // composes.
        auto exists = [&](int i, int j, int level) {
            return std::any_of(copies.begin(), copies.end(), [&](const RadicalCopy& c) {
                return c.i == i && c.j == j && c.level == level;
            });
        };
        for (int level = 2; level <= spec.chain_cap; ++level)
            for (int a = 1; a < level; ++a) {
                int b = level - a;
                std::vector<std::tuple<int, int>> fresh;
                for (const RadicalCopy& x : copies)
                    for (const RadicalCopy& y : copies) {
                        // Compose only through a genuine block index; products
                        // through the outside index would not associate.
                        if (x.level != a || y.level != b || x.j != y.i || x.j == 0) continue;
                        if (!exists(x.i, y.j, level)) fresh.emplace_back(x.i, y.j);
                    }
                std::sort(fresh.begin(), fresh.end());
                fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
                for (auto [i, j] : fresh) {
                    RadicalCopy rc;
                    rc.i = i;
                    rc.j = j;
                    rc.level = level;
                    copies.push_back(rc);
                }
            }
    }

    // Coordinates: S blocks first, then the radical copies.
    int dim = 0;
    std::vector<int> block_off(nblocks);
    for (int r = 0; r < nblocks; ++r) {
        block_off[r] = dim;
        dim += block_sizes[r] * block_sizes[r];
    }
    for (RadicalCopy& c : copies) {
        c.rows = side_dim(block_sizes, c.i);
        c.cols = side_dim(block_sizes, c.j);
        c.offset = dim;
        dim += c.rows * c.cols;
    }

    std::vector<std::string> labels(dim);
    std::vector<SCEntry> entries;
    auto sidx = [&](int r, int i, int j) { return block_off[r] + i * block_sizes[r] + j; };
    auto midx = [&](const RadicalCopy& c, int i, int j) { return c.offset + i * c.cols + j; };

    for (int r = 0; r < nblocks; ++r) {
        const int n = block_sizes[r];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                labels[sidx(r, i, j)] = "s" + std::to_string(r + 1) + unit_label(i, j);
                for (int k = 0; k < n; ++k)
                    entries.push_back(SCEntry{sidx(r, i, j), sidx(r, j, k), sidx(r, i, k),
                                              Scalar(1)});
            }
    }
    for (size_t t = 0; t < copies.size(); ++t) {
        const RadicalCopy& c = copies[t];
        for (int i = 0; i < c.rows; ++i)
            for (int j = 0; j < c.cols; ++j)
                labels[midx(c, i, j)] = "m" + std::to_string(t) + "u" + std::to_string(c.i) +
                                        std::to_string(c.j) + "_" + std::to_string(i + 1) +
                                        std::to_string(j + 1);
        // Left action of S_i and right action of S_j by matrix multiplication.
        if (c.i >= 1) {
            const int r = c.i - 1, n = block_sizes[r];
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int j = 0; j < c.cols; ++j)
                        entries.push_back(
                            SCEntry{sidx(r, a, b), midx(c, b, j), midx(c, a, j), Scalar(1)});
        }
        if (c.j >= 1) {
            const int r = c.j - 1, n = block_sizes[r];
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int i = 0; i < c.rows; ++i)
                        entries.push_back(
                            SCEntry{midx(c, i, a), sidx(r, a, b), midx(c, i, b), Scalar(1)});
        }
    }
    if (spec.nilpotency == BimoduleSpec::Nilpotency::chained) {
        for (const RadicalCopy& x : copies)
            for (const RadicalCopy& y : copies) {
                if (x.j != y.i || x.j == 0) continue;
                const int level = x.level + y.level;
                const RadicalCopy* target = nullptr;
                for (const RadicalCopy& z : copies)
                    if (z.i == x.i && z.j == y.j && z.level == level && z.instance == 0) {
                        target = &z;
                        break;
                    }
                if (!target) continue;
                for (int i = 0; i < x.rows; ++i)
                    for (int k = 0; k < x.cols; ++k)
                        for (int j = 0; j < y.cols; ++j)
                            entries.push_back(SCEntry{midx(x, i, k), midx(y, k, j),
                                                      midx(*target, i, j), Scalar(1)});
            }
    }

    Algebra::Options opts;
    std::vector<MatrixUnitSystem> blocks;
    for (int r = 0; r < nblocks; ++r) {
        MatrixUnitSystem sys;
        sys.n = block_sizes[r];
        for (int i = 0; i < sys.n; ++i)
            for (int j = 0; j < sys.n; ++j) {
                Vec v = zero_vec(dim);
                v[sidx(r, i, j)] = Scalar(1);
                sys.units.push_back(std::move(v));
            }
        blocks.push_back(std::move(sys));
    }
    opts.levi_blocks = std::move(blocks);
    Algebra a = Algebra::create(f, dim, std::move(labels), entries, std::move(opts));

    bool expect_1perfect = true;
    for (int n : block_sizes)
        if (n == 1) expect_1perfect = false;
    for (const BimoduleCopy& c : spec.copies)
        if (c.i == 0 && c.j == 0) expect_1perfect = false;
    if (block_sizes.empty() && !spec.copies.empty()) expect_1perfect = false;
    require(a.is_1perfect() == expect_1perfect,
            "semidirect builder: 1-perfectness disagrees with the block data", Errc::internal);
    return a;
}

std::pair<Algebra, Subspace> example_nr(const Field& f) {
    Algebra n4 = build_triangular(4, true, f);
    Algebra amb = build_direct_sum({n4, n4});
    const int d = amb.dim();
    auto coord = [&](const std::string& label) {
        auto it = std::find(amb.labels().begin(), amb.labels().end(), label);
        require(it != amb.labels().end(), "missing label " + label, Errc::internal);
        return static_cast<int>(it - amb.labels().begin());
    };
    auto elem = [&](std::initializer_list<const char*> labels) {
        Vec v = zero_vec(d);
        for (const char* l : labels) v[coord(l)] = Scalar(1);
        return v;
    };
    Vec b1 = elem({"a.e12", "b.e34"});
    Vec b2 = elem({"a.e34", "b.e12"});
    Vec mid = elem({"a.e23", "b.e23"});
    Vec b = elem({"a.e14", "b.e14"});

    // A^4 = 0 and A^2 by brute force.
    Subspace whole = amb.full_space();
    Subspace a2 = amb.subspace_product(whole, whole);
    Subspace a4 = amb.subspace_product(a2, a2);
    require(a4.is_zero(), "ambient fourth power must vanish", Errc::internal);

    Subspace a1span = a2.sum(amb.span({b1, b2, mid}));
    require(a1span.dim() == a2.dim() + 3, "A_1 must extend A^2 by three dimensions",
            Errc::internal);
    SubalgebraMap sm = amb.subalgebra(a1span);
    const Algebra& a1 = *sm.sub;

    Subspace bsub = a1.span({sm.restrict(b1), sm.restrict(b2), sm.restrict(b)});
    require(a1.subspace_product(bsub, bsub).is_zero(), "B^2 must vanish", Errc::internal);

    LieView view = make_lie_view(a1, 0);
    InnerIdealCandidate cand = make_candidate(view, bsub);
    require(is_jordan_lie(cand), "B must be a Jordan-Lie inner ideal", Errc::internal);
    require(!is_regular(cand), "B must not be regular", Errc::internal);
    Vec viol = a1.multiply(a1.multiply(sm.restrict(b1), sm.restrict(mid)), sm.restrict(b2));
    require(viol == sm.restrict(elem({"a.e14"})), "violating product must be e14",
            Errc::internal);
    require(!bsub.contains(viol), "violating product must escape B", Errc::internal);

    return {a1, bsub};
}

Algebra random_algebra(std::uint64_t seed, const RandomParams& params, const Field& f) {
    SplitMix64 rng(mix_seed(0x7fb5d329ULL, seed));
    const int nblocks = 1 + static_cast<int>(rng.below(std::max(1, params.num_blocks)));
    std::vector<int> sizes;
    int dim = 0;
    for (int r = 0; r < nblocks; ++r) {
        int lo = params.allow_size_one_blocks ? 1 : 2;
        int n = static_cast<int>(rng.range(lo, std::max(lo, params.max_block)));
        if (dim + n * n > params.dim_cap) break;
        sizes.push_back(n);
        dim += n * n;
    }
    if (sizes.empty()) {
        sizes.push_back(2);
        dim = 4;
    }

    BimoduleSpec spec;
    spec.nilpotency = params.nilpotency >= 3 ? BimoduleSpec::Nilpotency::chained
                                             : BimoduleSpec::Nilpotency::square_zero;
    spec.chain_cap = std::max(2, params.nilpotency);
    const int nb = static_cast<int>(sizes.size());
    // Candidate copies in a deterministic order; 0-indexed sides come last.
    std::vector<std::pair<int, int>> cands;
    for (int i = 1; i <= nb; ++i)
        for (int j = 1; j <= nb; ++j) cands.emplace_back(i, j);
    for (int i = 1; i <= nb; ++i) {
        cands.emplace_back(i, 0);
        cands.emplace_back(0, i);
    }
    for (auto [i, j] : cands) {
        if (static_cast<int>(rng.below(100)) >= params.bimodule_density_pct) continue;
        int extra = side_dim(sizes, i) * side_dim(sizes, j);
        if (spec.nilpotency == BimoduleSpec::Nilpotency::chained) extra *= 2;
        if (dim + extra > params.dim_cap) continue;
        dim += extra;
        spec.copies.push_back(BimoduleCopy{i, j, 1});
    }
    Algebra a = build_semidirect(sizes, spec, f);
    if (a.dim() > params.dim_cap &&
        spec.nilpotency == BimoduleSpec::Nilpotency::chained) {
        // Composite copies blew the cap; fall back to a square-zero radical.
        spec.nilpotency = BimoduleSpec::Nilpotency::square_zero;
        a = build_semidirect(sizes, spec, f);
    }
    return a;
}

std::vector<IdempotentPair> enumerate_idempotent_pairs(const Algebra& a, int budget,
                                                       bool* truncated,
                                                       std::uint64_t conjugate_seed) {
    const LeviDecomposition& ld = a.levi();
    int total_diag = 0;
    for (const auto& blk : ld.blocks) total_diag += blk.n;
    if (truncated) *truncated = false;

    std::vector<Vec> idems;
    std::uint64_t count = total_diag >= 62 ? ~0ULL : (1ULL << total_diag);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Vec e = zero_vec(a.dim());
        int bit = 0;
        for (const auto& blk : ld.blocks)
            for (int i = 0; i < blk.n; ++i, ++bit)
                if (mask & (1ULL << bit)) e = vec_add(a.field(), e, blk.unit(i, i));
        idems.push_back(std::move(e));
        if (static_cast<int>(idems.size()) * static_cast<int>(idems.size()) > budget &&
            budget > 0) {
            if (truncated) *truncated = true;
            break;
        }
    }

    std::optional<Vec> conj;
    if (conjugate_seed != 0 && !ld.radical.is_zero())
        conj = random_radical_element(a, conjugate_seed);

    std::vector<IdempotentPair> pairs;
    for (const Vec& e : idems)
        for (const Vec& f : idems) {
            if (budget > 0 && static_cast<int>(pairs.size()) >= budget) {
                if (truncated) *truncated = true;
                return pairs;
            }
            Vec ee = e, ff = f;
            if (conj) {
                ee = a.conjugate_by_unipotent(*conj, ee);
                ff = a.conjugate_by_unipotent(*conj, ff);
            }
            pairs.push_back(make_pair(a, std::move(ee), std::move(ff)));
        }
    return pairs;
}

Vec random_radical_element(const Algebra& a, std::uint64_t seed) {
    SplitMix64 rng(mix_seed(0x9e2a5f13ULL, seed));
    const Subspace& rad = a.radical();
    Vec q = zero_vec(a.dim());
    for (const Vec& b : rad.basis()) {
        long c = rng.range(-2, 2);
        if (c != 0) q = vec_add(a.field(), q, vec_scale(a.field(), Scalar(c), b));
    }
    return q;
}

}  // namespace iiq
