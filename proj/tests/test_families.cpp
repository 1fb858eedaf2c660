#include "doctest.h"

#include <random>

#include "corings/families.hpp"

using namespace corings;

namespace {

GradedData kz2_regular(Field f) {
    GroupTable z2 = GroupTable::cyclic(2);
    return {group_algebra(f, z2), GSet::regular(z2)};
}

// ψ(x ⊗ a_g) = a_g ⊗ x g, written out directly from the action table.
Matrix graded_psi(const GradedData& g) {
    const Algebra& a = g.algebra.algebra;
    const std::size_t da = a.dim(), nx = g.gset.size;
    Matrix psi(a.field(), da * nx, nx * da);
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t s = 0; s < da; ++s) psi(s * nx + g.gset.act(x, g.algebra.degree[s]), x * da + s) = a.field().one();
    return psi;
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::residue(f.characteristic(), rng() % f.characteristic());
    return m;
}

}  // namespace

TEST_CASE("matrix coring of size one is the trivial coring") {
    Field f = Field::prime(3);
    auto a = share(truncated_polynomial_algebra(f, 2));
    Coring m = matrix_coring(a, 1), t = trivial_coring(a);
    CHECK(m.dim() == t.dim());
    CHECK(m.delta() == t.delta());
    CHECK(m.epsilon() == t.epsilon());
}

TEST_CASE("matrix coring comultiplication on e12") {
    Field f = Field::prime(2);
    Coring m = matrix_coring(share(Algebra::ground(f)), 2);
    CHECK(m.dim() == 4);
    Vector expected = zero_vector(f, 16);
    expected[0 * 4 + 1] = f.one();  // e11 ⊗ e12
    expected[1 * 4 + 3] = f.one();  // e12 ⊗ e22
    CHECK(m.delta_ambient(unit_vector(f, 4, 1)) == expected);
    CHECK(matrix_coring(share(group_algebra(f, GroupTable::cyclic(2)).algebra), 2).dim() == 8);
}

TEST_CASE("entwining axioms on standard examples") {
    for (Field f : {Field::rationals(), Field::prime(3)}) {
        auto k = share(Algebra::ground(f));
        auto c = share(grouplike_coalgebra(f, 2));
        CHECK(check_entwining({k, c, flip_psi(*k, 2)}).ok());
        GradedData g = kz2_regular(f);
        auto a = share(g.algebra.algebra);
        CHECK(check_entwining({a, c, graded_psi(g)}).ok());
        ValidationReport zero = check_entwining({a, c, Matrix(f, 4, 4)});
        CHECK_FALSE(zero.passed("ES3"));
    }
}

TEST_CASE("Takeuchi: coring axioms hold exactly for entwinings on sampled maps") {
    Field f = Field::prime(2);
    auto a = share(truncated_polynomial_algebra(f, 2));
    auto c = share(grouplike_coalgebra(f, 2));
    std::mt19937_64 rng(2024);
    std::vector<Matrix> candidates = {flip_psi(*a, 2), Matrix(f, 4, 4)};
    for (int i = 0; i < 300; ++i) candidates.push_back(random_matrix(f, 4, 4, rng));
    // Perturbations of the flip are the interesting near-misses.
    for (std::size_t i = 0; i < 16; ++i) {
        Matrix p = flip_psi(*a, 2);
        p(i / 4, i % 4) += f.one();
        candidates.push_back(p);
    }
    std::size_t valid = 0;
    for (const auto& psi : candidates) {
        EntwiningStructure e{a, c, psi};
        const bool ent = check_entwining(e).ok();
        CHECK(check_coring(coring_from_entwining(e)).ok() == ent);
        valid += ent;
    }
    CHECK(valid >= 1);
}

TEST_CASE("entwining over k with the flip gives back the coalgebra") {
    Field f = Field::prime(5);
    auto k = share(Algebra::ground(f));
    auto c = share(grouplike_coalgebra(f, 3));
    Coring ac = coring_from_entwining({k, c, flip_psi(*k, 3)});
    CHECK(ac.delta() == c->delta());
    CHECK(ac.epsilon() == c->epsilon());
}

TEST_CASE("graded coring comultiplication and free basis") {
    Field f = Field::prime(3);
    GradedData g = kz2_regular(f);
    Coring c = graded_coring(g);
    REQUIRE(check_coring(c).ok());
    const std::size_t nx = 2;
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t x = 0; x < nx; ++x) {
            // Δ(a ⊗ x) = (a ⊗ x) ⊗ (1 ⊗ x).
            Vector ax = unit_vector(f, 4, s * nx + x), one_x = unit_vector(f, 4, x);
            CHECK(c.delta() * ax == c.tensor2().pure(ax, one_x));
            // a_g ⊗ x = (1 ⊗ x g^{-1}) a_g.
            const std::size_t gi = g.gset.group.inverse(g.algebra.degree[s]);
            Vector lhs = c.carrier().right_action(s) * unit_vector(f, 4, g.gset.act(x, gi));
            CHECK(lhs == ax);
        }
}

TEST_CASE("DK data from gradings") {
    Field f = Field::prime(3);
    GroupTable e(1, {0});
    GradedData trivial{group_algebra(f, e), GSet::point(e)};
    DKStructure d0 = dk_from_graded(trivial);
    CHECK(check_dk(d0).ok());
    CHECK(graded_coring(trivial).dim() == 1);

    GradedData g = kz2_regular(f);
    DKStructure d = dk_from_graded(g);
    CHECK(check_dk(d).ok());
    EntwiningStructure en = entwining_from_dk(d);
    CHECK(check_entwining(en).ok());
    CHECK(en.psi == graded_psi(g));

    GroupTable z2 = GroupTable::cyclic(2);
    GradedData point{group_algebra(f, z2), GSet::point(z2)};
    Coring pc = graded_coring(point);
    CHECK(check_coring(pc).ok());
    CHECK(pc.dim() == 2);
    Coring tc = trivial_coring(share(point.algebra.algebra));
    CHECK(pc.carrier().right_actions() == tc.carrier().right_actions());
    CHECK(pc.epsilon() == tc.epsilon());
}

TEST_CASE("DK with the trivial bialgebra yields the flip") {
    Field f = Field::prime(2);
    auto k = share(Algebra::ground(f));
    auto hc = share(grouplike_coalgebra(f, 1));
    auto a = share(truncated_polynomial_algebra(f, 2));
    auto c = share(grouplike_coalgebra(f, 2));
    DKStructure d{k, hc, a, Matrix::identity(f, 2), c, {Matrix::identity(f, 2)}};
    CHECK(check_dk(d).ok());
    CHECK(entwining_from_dk(d).psi == flip_psi(*a, 2));
    DKStructure bad = d;
    bad.coalgebra_action = {Matrix(f, 2, 2)};
    CHECK_FALSE(check_dk(bad).ok());
    CHECK_THROWS_AS(entwining_from_dk(bad), StructureError);
}

TEST_CASE("H = kZ2 acting on A = k[Z2] and C = kZ2") {
    Field f = Field::prime(2);
    GradedData g = kz2_regular(f);
    CHECK(check_entwining(entwining_from_dk(dk_from_graded(g))).ok());
}

TEST_CASE("invalid graded data is rejected") {
    Field f = Field::prime(3);
    GroupTable z2 = GroupTable::cyclic(2);
    GradedData g{group_algebra(f, z2), GSet::regular(z2)};
    g.algebra.degree = {1, 0};  // unit placed in degree g
    CHECK_FALSE(check_graded(g).ok());
    CHECK_THROWS_AS(dk_from_graded(g), StructureError);
    GradedData h{group_algebra(f, z2), GSet{z2, 2, {0, 0, 1, 0}}};
    CHECK_FALSE(check_graded(h).ok());
}

TEST_CASE("entwined modules are comodules over A ⊗ C and conversely") {
    Field f = Field::prime(2);
    GradedData g = kz2_regular(f);
    auto a = share(g.algebra.algebra);
    auto c = share(grouplike_coalgebra(f, 2));
    EntwiningStructure e{a, c, graded_psi(g)};
    auto ac = share(coring_from_entwining(e));
    REQUIRE(check_coring(*ac).ok());
    Bimodule m = Bimodule::regular(a).forget_left();
    // All 256 k-linear ρ: A -> A ⊗ C.
    std::size_t entwined = 0;
    for (std::uint64_t code = 0; code < 256; ++code) {
        Matrix rho(f, 4, 2);
        std::uint64_t x = code;
        for (std::size_t i = 0; i < 8; ++i, x >>= 1) rho(i / 2, i % 2) = Scalar::residue(2, x & 1);
        const bool ent = check_entwined_module(e, m, rho).ok();
        CHECK(check_comodule(entwined_to_comodule(ac, e, m, rho)).ok() == ent);
        entwined += ent;
    }
    // The grading by degree, a_g -> a_g ⊗ g, is one of them.
    Matrix graded(f, 4, 2);
    for (std::size_t s = 0; s < 2; ++s) graded(s * 2 + g.algebra.degree[s], s) = f.one();
    CHECK(check_entwined_module(e, m, graded).ok());
    CHECK(entwined >= 1);

    // A ⊗ C over itself with ρ = Δ.
    Bimodule acm = ac->carrier().forget_left();
    Matrix rho(f, 8, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t x = 0; x < 2; ++x) rho((i * 2 + x) * 2 + x, i * 2 + x) = f.one();
    CHECK(check_entwined_module(e, acm, rho).ok());
}

TEST_CASE("comatrix coring on a free module is the matrix coring") {
    for (Field f : {Field::rationals(), Field::prime(2)}) {
        auto a = share(truncated_polynomial_algebra(f, 2));
        for (std::size_t n = 1; n <= 2; ++n) {
            auto m = share(matrix_coring(a, n));
            auto cm = share(comatrix_coring(a, n));
            REQUIRE(check_coring(*cm).ok());
            CHECK(cm->dim() == m->dim());
            CoringMorphism id = comatrix_identification(m, cm, n);
            CHECK(check_coring_morphism(id).ok());
            CHECK(is_isomorphism(id));
        }
    }
}
