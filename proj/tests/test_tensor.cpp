#include "doctest.h"

#include "corings/tensor.hpp"

using namespace corings;

namespace {

// k^2 as row vectors, a right M2(k)-module: (x M)_j = sum_i x_i M_ij.
Bimodule row_vectors(const AlgebraPtr& m2) {
    Field f = m2->field();
    std::vector<Matrix> right;
    for (std::size_t s = 0; s < 4; ++s) {
        const std::size_t i = s / 2, j = s % 2;
        Matrix r(f, 2, 2);
        r(j, i) = f.one();  // e_i e_ij = e_j
        right.push_back(r);
    }
    return Bimodule::right_module(m2, 2, right);
}

// k^2 as column vectors, a left M2(k)-module.
Bimodule column_vectors(const AlgebraPtr& m2) {
    Field f = m2->field();
    std::vector<Matrix> left;
    for (std::size_t s = 0; s < 4; ++s) {
        const std::size_t i = s / 2, j = s % 2;
        Matrix l(f, 2, 2);
        l(i, j) = f.one();  // e_ij e_j = e_i
        left.push_back(l);
    }
    return Bimodule::left_module(m2, 2, left);
}

}  // namespace

TEST_CASE("dimensions of tensor products agree with closed forms") {
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto m2 = share(matrix_algebra(f, 2));
        auto t3 = share(truncated_polynomial_algebra(f, 3));
        auto kz2 = share(group_algebra(f, GroupTable::cyclic(2)).algebra);
        auto k = share(Algebra::ground(f));
        // A^m ⊗_A A^n has dimension m n dim A.
        for (const auto& a : {m2, t3, kz2})
            for (std::size_t m = 1; m <= 2; ++m)
                for (std::size_t n = 1; n <= 2; ++n)
                    CHECK(TensorProduct(Bimodule::free(a, m), Bimodule::free(a, n)).dim() == m * n * a->dim());
        // Over k, the tensor product is the full ambient space.
        TensorProduct kk(Bimodule::free(k, 4), Bimodule::free(k, 4));
        CHECK(kk.dim() == 16);
        // Row vectors ⊗ column vectors over M2(k) is one-dimensional (the pairing).
        CHECK(TensorProduct(row_vectors(m2), column_vectors(m2)).dim() == 1);
    }
}

TEST_CASE("mismatched middle algebras are rejected") {
    Field f = Field::prime(2);
    auto a = share(matrix_algebra(f, 2));
    auto b = share(truncated_polynomial_algebra(f, 2));
    CHECK_THROWS_AS(TensorProduct(Bimodule::regular(a), Bimodule::regular(b)), StructureError);
}

TEST_CASE("projection kills relations and the section splits it") {
    Field f = Field::rationals();
    auto a = share(truncated_polynomial_algebra(f, 3));
    TensorProduct t(Bimodule::regular(a), Bimodule::free(a, 2));
    CHECK((t.project() * t.section()).is_identity());
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                Vector m = a->basis(i), n = unit_vector(f, 6, j);
                Vector lhs = zero_vector(f, t.ambient_dim()), rhs = lhs;
                Vector ma = t.left().right_action(s) * m, an = t.right().left_action(s) * n;
                for (std::size_t x = 0; x < 3; ++x)
                    for (std::size_t y = 0; y < 6; ++y) {
                        lhs[t.ambient_index(x, y)] = ma[x] * n[y];
                        rhs[t.ambient_index(x, y)] = m[x] * an[y];
                    }
                Vector r = sub(lhs, rhs);
                CHECK(t.is_relation(r));
                CHECK(is_zero(t.project(r)));
            }
    CHECK(t.pure(a->unit(), unit_vector(f, 6, 0)) == t.project(t.lift(t.pure(a->unit(), unit_vector(f, 6, 0)))));
}

TEST_CASE("unit maps are inverse to a -> 1 ⊗ a and m -> m ⊗ 1") {
    for (Field f : {Field::rationals(), Field::prime(2)}) {
        auto a = share(matrix_algebra(f, 2));
        Bimodule m = Bimodule::free(a, 2);
        TensorProduct am(Bimodule::regular(a), m), ma(m, Bimodule::regular(a));
        Matrix l = left_unit_map(am), r = right_unit_map(ma);
        CHECK(am.dim() == m.dim());
        CHECK(ma.dim() == m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i) {
            Vector x = unit_vector(f, m.dim(), i);
            CHECK(l * am.pure(a->unit(), x) == x);
            CHECK(r * ma.pure(x, a->unit()) == x);
        }
        CHECK(is_nonsingular(l));
        CHECK(is_nonsingular(r));
    }
}

TEST_CASE("induced map does not depend on the choice of representatives") {
    Field f = Field::prime(3);
    auto a = share(truncated_polynomial_algebra(f, 2));
    Bimodule m = Bimodule::free(a, 2);
    TensorProduct t(m, m);
    // Twist by the bimodule automorphism (x1, x2) -> (x2, x1) on the left factor.
    Matrix swap(f, 4, 4);
    for (std::size_t s = 0; s < 2; ++s) {
        swap(2 + s, s) = f.one();
        swap(s, 2 + s) = f.one();
    }
    Matrix amb = kron(swap, Matrix::identity(f, 4));
    Matrix g = induced_map(amb, t, t);
    // Second section: add relation vectors to every lifted basis vector.
    Matrix sec = t.section();
    const Echelon& rel = t.relations();
    REQUIRE(rel.rank() > 0);
    for (std::size_t k = 0; k < t.dim(); ++k) {
        Vector col = sec.column(k);
        axpy(col, Scalar::residue(3, k + 1), rel.rref.row(k % rel.rank()));
        CHECK(t.project(amb * col) == g.column(k));
    }
    CHECK((g * g).is_identity());
}

TEST_CASE("an unbalanced ambient map raises BalancednessError with the relation") {
    Field f = Field::rationals();
    auto a = share(truncated_polynomial_algebra(f, 2));
    Bimodule m = Bimodule::regular(a);
    TensorProduct t(m, m);
    // 1 ⊗ t and t ⊗ 1 agree in the quotient; a map separating them is unbalanced.
    Matrix bad(f, 1, 4);
    bad(0, t.ambient_index(0, 1)) = Scalar(1);
    try {
        descend(bad, t);
        FAIL("expected BalancednessError");
    } catch (const BalancednessError& e) {
        CHECK(t.is_relation(e.relation()));
        CHECK(!is_zero(bad * e.relation()));
    }
    Matrix good(f, 1, 4);
    good(0, t.ambient_index(0, 1)) = Scalar(1);
    good(0, t.ambient_index(1, 0)) = Scalar(1);
    CHECK_NOTHROW(descend(good, t));
}

TEST_CASE("associator is an isomorphism matching pure tensors") {
    Field f = Field::prime(2);
    auto a = share(truncated_polynomial_algebra(f, 2));
    Bimodule m = Bimodule::free(a, 2), n = Bimodule::regular(a), p = Bimodule::free(a, 2);
    TensorProduct np(n, p), mn(m, n);
    TensorProduct m_np(m, np.bimodule()), mn_p(mn.bimodule(), p);
    Matrix as = associator(m_np, np, mn_p, mn);
    CHECK(m_np.dim() == mn_p.dim());
    CHECK(m_np.dim() == 2 * 2 * a->dim());
    CHECK(is_nonsingular(as));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                Vector x = unit_vector(f, 4, i), y = unit_vector(f, 2, j), z = unit_vector(f, 4, k);
                CHECK(as * m_np.pure(x, np.pure(y, z)) == mn_p.pure(mn.pure(x, y), z));
            }
}
