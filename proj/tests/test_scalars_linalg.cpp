#include <doctest.h>

#include "support.hpp"

using namespace iiq;
using namespace iiq::testing;

TEST_CASE("prime field arithmetic reduces to canonical representatives") {
    Field f = Field::prime(19);
    CHECK(f.reduce(Scalar(-1)) == Scalar(18));
    CHECK(f.add(Scalar(10), Scalar(12)) == Scalar(3));
    CHECK(f.mul(Scalar(7), Scalar(11)) == Scalar(1));  // 77 = 4*19 + 1
    CHECK(f.inv(Scalar(7)) == Scalar(11));
    CHECK(f.reduce(Scalar(1, 2)) == Scalar(10));  // 2 * 10 = 20 = 1 mod 19
    CHECK_THROWS_AS((void)Field::prime(4), Error);
    CHECK_THROWS_AS((void)Field::prime(3), Error);
}

TEST_CASE("scalar parsing and printing round trip") {
    Field q = Field::rationals();
    CHECK(parse_scalar(q, "7") == Scalar(7));
    CHECK(parse_scalar(q, "-3/6") == Scalar(-1, 2));
    CHECK(scalar_to_string(Scalar(-1, 2)) == "-1/2");
    CHECK(scalar_to_string(Scalar(5)) == "5");
    CHECK_THROWS_AS(parse_scalar(q, "x"), Error);
    CHECK_THROWS_AS(parse_scalar(q, "1/0"), Error);
    Field f19 = Field::prime(19);
    CHECK(parse_scalar(f19, "-1") == Scalar(18));
    CHECK_THROWS_AS(parse_scalar(f19, "1/2"), Error);
}

TEST_CASE("canonicalize produces the unique reduced echelon basis") {
    Field q = Field::rationals();
    // {(1,1),(0,1)} spans the plane
    Subspace s = span_of(q, {{1, 1}, {0, 1}});
    CHECK(s == Subspace::full(q, 2));
    // empty span
    CHECK(Subspace::span(q, 3, {}).dim() == 0);
    // scaling normalization
    Subspace t = span_of(q, {{2, 4}});
    CHECK(t.basis().size() == 1);
    CHECK(t.basis()[0] == vec_of({1, 2}));
}

TEST_CASE("canonicalize is idempotent and order insensitive") {
    Field q = Field::rationals();
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int ambient = 2 + static_cast<int>(rng.below(5));
        std::vector<Vec> rows;
        int k = 1 + static_cast<int>(rng.below(4));
        for (int i = 0; i < k; ++i) {
            Vec v(ambient);
            for (int j = 0; j < ambient; ++j) v[j] = Scalar(rng.range(-4, 4));
            rows.push_back(std::move(v));
        }
        Subspace s = Subspace::span(q, ambient, rows);
        // shuffle deterministically
        std::vector<Vec> shuffled = rows;
        for (size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
        CHECK(Subspace::span(q, ambient, shuffled) == s);
        CHECK(Subspace::span(q, ambient, s.basis()) == s);
    }
}

TEST_CASE("subspace combine: sum, intersect, and the dimension identity") {
    Field q = Field::rationals();
    Subspace x_axis = span_of(q, {{1, 0}});
    Subspace y_axis = span_of(q, {{0, 1}});
    CHECK(subspace_combine(x_axis, y_axis, CombineMode::sum) == Subspace::full(q, 2));
    CHECK(subspace_combine(x_axis, y_axis, CombineMode::intersect).is_zero());
    CHECK(subspace_combine(x_axis, x_axis, CombineMode::sum) == x_axis);
    CHECK(subspace_combine(x_axis, x_axis, CombineMode::intersect) == x_axis);

    // Solved by hand from the stacked linear system.
    Subspace u = span_of(q, {{1, 0, 0}, {0, 1, 0}});
    Subspace v = span_of(q, {{0, 1, 0}, {0, 0, 1}});
    CHECK(u.intersect(v) == span_of(q, {{0, 1, 0}}));

    SplitMix64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int ambient = 3 + static_cast<int>(rng.below(4));
        auto rand_space = [&] {
            std::vector<Vec> rows;
            int k = static_cast<int>(rng.below(4));
            for (int i = 0; i < k; ++i) {
                Vec w(ambient);
                for (int j = 0; j < ambient; ++j) w[j] = Scalar(rng.range(-3, 3));
                rows.push_back(std::move(w));
            }
            return Subspace::span(q, ambient, rows);
        };
        Subspace a = rand_space(), b = rand_space();
        CHECK(a.dim() + b.dim() == a.sum(b).dim() + a.intersect(b).dim());
    }
}

TEST_CASE("membership and solve") {
    Field q = Field::rationals();
    Subspace u = span_of(q, {{1, 0}});
    CHECK(u.contains(vec_of({0, 0})));
    CHECK_FALSE(u.contains(vec_of({1, 1})));

    Mat m(2, 2);
    m.at(0, 0) = Scalar(1);
    m.at(0, 1) = Scalar(2);
    m.at(1, 0) = Scalar(2);
    m.at(1, 1) = Scalar(4);
    auto sol = solve(q, m, vec_of({1, 2}));
    REQUIRE(sol.has_value());
    CHECK(sol->particular == vec_of({1, 0}));
    CHECK(sol->kernel == span_of(q, {{-2, 1}}));
    CHECK_FALSE(solve(q, m, vec_of({1, 3})).has_value());

    CHECK_THROWS_AS(u.contains(vec_of({1, 0, 0})), Error);

    // membership(U, v) agrees with dim(U + span{v}) == dim(U).
    SplitMix64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int ambient = 2 + static_cast<int>(rng.below(4));
        std::vector<Vec> rows;
        for (int i = 0; i < 2; ++i) {
            Vec w(ambient);
            for (int j = 0; j < ambient; ++j) w[j] = Scalar(rng.range(-2, 2));
            rows.push_back(std::move(w));
        }
        Subspace s = Subspace::span(q, ambient, rows);
        Vec v(ambient);
        for (int j = 0; j < ambient; ++j) v[j] = Scalar(rng.range(-2, 2));
        bool member = s.contains(v);
        Subspace bigger = s.sum(Subspace::span(q, ambient, {v}));
        CHECK(member == (bigger.dim() == s.dim()));
    }
}

TEST_CASE("prime field linear algebra works the same way") {
    Field f = Field::prime(19);
    Subspace u = Subspace::span(f, 2, {vec_of({2, 4})});
    CHECK(u.basis()[0] == vec_of({1, 2}));
    Subspace w = Subspace::span(f, 2, {vec_of({1, 1}), vec_of({0, 17})});
    CHECK(w == Subspace::full(f, 2));
}
