#include "support.hpp"

#include <doctest.h>

using namespace polydual;
using namespace testsupport;

TEST_CASE("weight system validation") {
    WeightSystem w = WeightSystem::create(2, 3, 7, 9);
    CHECK(w.degree() == 21);
    CHECK(WeightSystem::create(2, 3, 5, 7).degree() == 17);
    CHECK(WeightSystem::create(1, 1, 1, 1).degree() == 4);

    CHECK_THROWS_AS(WeightSystem::create(3, 2, 7, 9), std::invalid_argument);   // unordered
    CHECK_THROWS_AS(WeightSystem::create(0, 1, 2, 3), std::invalid_argument);   // nonpositive
    CHECK_THROWS_AS(WeightSystem::create(2, 4, 6, 9), std::invalid_argument);   // triple gcd 2
    CHECK_THROWS_AS(WeightSystem::create(2, 2, 4, 5), std::invalid_argument);
}

TEST_CASE("kernel basis spans the reference lattices") {
    const CaseFixture& q16 = fixture(CaseName::Q16);
    LatticeBasis canon = kernel_basis(q16.weights);
    for (int i = 0; i < 3; ++i) CHECK(satisfies_weight_equation(q16.weights, canon.e(i)));
    CHECK(spans_same_lattice(canon, q16.basis));
    CHECK(is_kernel_basis(q16.weights, q16.basis));

    const CaseFixture& s16 = fixture(CaseName::S16);
    LatticeBasis canon2 = kernel_basis(s16.weights);
    CHECK(spans_same_lattice(canon2, s16.basis));
    CHECK(is_kernel_basis(s16.weights, s16.basis));

    // deterministic
    CHECK(kernel_basis(q16.weights) == canon);

    // all-ones system: kernel vectors have coordinate sum zero
    LatticeBasis ones = kernel_basis(WeightSystem::create(1, 1, 1, 1));
    for (int i = 0; i < 3; ++i) {
        const Vec4& e = ones.e(i);
        CHECK(e[0] + e[1] + e[2] + e[3] == 0);
    }
}

TEST_CASE("spans_same_lattice is exact about index") {
    const LatticeBasis b = fixture(CaseName::Q16).basis;
    CHECK(spans_same_lattice(b, b));

    LatticeBasis swapped{b.e2, b.e1, b.e3};
    CHECK(spans_same_lattice(b, swapped));

    LatticeBasis doubled{{2 * b.e1[0], 2 * b.e1[1], 2 * b.e1[2], 2 * b.e1[3]}, b.e2, b.e3};
    CHECK_FALSE(spans_same_lattice(b, doubled));  // index-2 sublattice

    LatticeBasis dependent{b.e1, b.e1, b.e3};
    CHECK_THROWS_AS(spans_same_lattice(b, dependent), NonComparableBasesError);
}

TEST_CASE("lattice length matches direct segment enumeration") {
    struct Example {
        Vec3 u, v;
        Int length, total, interior;
    };
    // expected totals/interiors confirmed by segment_counts_oracle below
    std::vector<Example> examples{
        {{2, 0, -1}, {8, 6, 5}, 6, 7, 5},
        {{1, 0, -1}, {6, 5, 4}, 5, 6, 4},
        {{0, 0, 0}, {1, 0, 0}, 1, 2, 0},
    };
    for (const auto& ex : examples) {
        CHECK(lattice_length(ex.u, ex.v) == ex.length);
        auto [total, interior] = segment_counts_oracle(ex.u, ex.v);
        CHECK(total == ex.total);
        CHECK(interior == ex.interior);
        CHECK(total == lattice_length(ex.u, ex.v) + 1);
        CHECK(interior == lattice_length(ex.u, ex.v) - 1);
    }
}

TEST_CASE("basis coordinates solve exactly") {
    const CaseFixture& q16 = fixture(CaseName::Q16);
    CHECK(basis_coordinates(q16.basis, {8, 0, -1, -1}) == Vec3{1, 0, 0});
    CHECK(basis_coordinates(q16.basis, {-1, 3, -1, 0}) == Vec3{2, -2, -1});  // X^4Z exponents - 1
    CHECK_THROWS_AS(basis_coordinates(q16.basis, {1, 0, 0, 0}), NonRepresentableError);
}

TEST_CASE("hermite normal form is canonical") {
    std::mt19937 rng(7);
    const LatticeBasis b = fixture(CaseName::S16).basis;
    for (int trial = 0; trial < 50; ++trial) {
        // random unimodular recombination of the basis rows
        Mat3 u = random_unimodular(rng);
        auto comb = [&](int i) {
            Vec4 r{};
            for (int j = 0; j < 4; ++j)
                r[j] = u[i][0] * b.e1[j] + u[i][1] * b.e2[j] + u[i][2] * b.e3[j];
            return r;
        };
        LatticeBasis transformed{comb(0), comb(1), comb(2)};
        CHECK(hermite_normal_form({transformed.e1, transformed.e2, transformed.e3}) ==
              hermite_normal_form({b.e1, b.e2, b.e3}));
        CHECK(spans_same_lattice(transformed, b));
    }
}

TEST_CASE("kernel basis properties over random weight systems") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        WeightSystem w = random_weight_system(rng);
        LatticeBasis basis = kernel_basis(w);
        for (int i = 0; i < 3; ++i) CHECK(satisfies_weight_equation(w, basis.e(i)));
        CHECK(spans_same_lattice(basis, basis));
    }
}

TEST_CASE("spans_same_lattice is an equivalence relation") {
    std::mt19937 rng(29);
    const LatticeBasis base = fixture(CaseName::Q16).basis;
    auto transform = [&](const LatticeBasis& b) {
        Mat3 u = random_unimodular(rng);
        auto comb = [&](int i) {
            Vec4 r{};
            for (int j = 0; j < 4; ++j) r[j] = u[i][0] * b.e1[j] + u[i][1] * b.e2[j] + u[i][2] * b.e3[j];
            return r;
        };
        return LatticeBasis{comb(0), comb(1), comb(2)};
    };
    for (int trial = 0; trial < 40; ++trial) {
        LatticeBasis b1 = transform(base);
        LatticeBasis b2 = transform(b1);
        CHECK(spans_same_lattice(b1, b1));                            // reflexive
        CHECK(spans_same_lattice(b1, b2));
        CHECK(spans_same_lattice(b2, b1));                            // symmetric
        CHECK((spans_same_lattice(base, b1) && spans_same_lattice(base, b2)));  // transitive chain
    }
}

TEST_CASE("lattice length is unimodular and translation invariant") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        Vec3 u{rand_int(rng, -6, 6), rand_int(rng, -6, 6), rand_int(rng, -6, 6)};
        Vec3 v{rand_int(rng, -6, 6), rand_int(rng, -6, 6), rand_int(rng, -6, 6)};
        Mat3 m = random_unimodular(rng);
        Vec3 t{rand_int(rng, -5, 5), rand_int(rng, -5, 5), rand_int(rng, -5, 5)};
        CHECK(lattice_length(u, v) == lattice_length(add3(mat_vec(m, u), t), add3(mat_vec(m, v), t)));
        auto [total, interior] = segment_counts_oracle(u, v);
        if (u != v) {
            CHECK(total == lattice_length(u, v) + 1);
            CHECK(interior == lattice_length(u, v) - 1);
        }
    }
}
