#include "doctest.h"

#include "corings/unit_search.hpp"

using namespace corings;

namespace {

Matrix e(Field f, std::size_t i, std::size_t j) {
    Matrix m(f, 2, 2);
    m(i, j) = f.one();
    return m;
}

}  // namespace

TEST_CASE("span of e11, e12 in M2(F2) has no invertible element") {
    Field f = Field::prime(2);
    std::vector<Matrix> family{e(f, 0, 0), e(f, 0, 1)};
    auto r = find_nonsingular_combination(family, SearchBudget{}, 0);
    CHECK(r.status == SearchStatus::certified_none);
    CHECK(r.certainty.deterministic);
    CHECK(r.evaluations == 4);
}

TEST_CASE("span of e12, e21 in M2(F2) contains the swap") {
    Field f = Field::prime(2);
    std::vector<Matrix> family{e(f, 0, 1), e(f, 1, 0)};
    auto r = find_nonsingular_combination(family, SearchBudget{}, 0);
    REQUIRE(r.status == SearchStatus::witness);
    Matrix m = (*r.witness)[0] * family[0] + (*r.witness)[1] * family[1];
    CHECK(is_nonsingular(m));
}

TEST_CASE("rational grid search is complete and the random fallback reports a bound") {
    Field q = Field::rationals();
    std::vector<Matrix> family{e(q, 0, 0), e(q, 0, 1)};
    auto r = find_nonsingular_combination(family, SearchBudget{}, 0);
    CHECK(r.status == SearchStatus::certified_none);
    CHECK(r.certainty.deterministic);

    auto tiny = find_nonsingular_combination(family, SearchBudget{3}, 0);
    CHECK(tiny.status == SearchStatus::certified_none);
    CHECK_FALSE(tiny.certainty.deterministic);
    CHECK(tiny.certainty.failure_bound < 1e-150);

    // det(t0 I + t1 N) with N nilpotent is t0^2: only points with t0 != 0 work.
    std::vector<Matrix> fam2{Matrix::identity(q, 2), e(q, 0, 1)};
    auto w = find_nonsingular_combination(fam2, SearchBudget{}, 0);
    REQUIRE(w.status == SearchStatus::witness);
    CHECK_FALSE((*w.witness)[0].is_zero());
}

TEST_CASE("beyond the budget over F_p a miss is undecided") {
    Field f = Field::prime(1000003);
    std::vector<Matrix> family{e(f, 0, 0), e(f, 0, 1)};
    auto r = find_nonsingular_combination(family, SearchBudget{100}, 1);
    CHECK(r.status == SearchStatus::undecided);
    CHECK(r.evaluations == 100);
}

TEST_CASE("subspace_contains_unit returns a verified inverse") {
    Field f = Field::prime(3);
    // Algebra M2(F3) with coordinates (a11, a12, a21, a22).
    auto mul = [f](const Vector& x, const Vector& y) {
        Vector r(4, f.zero());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) r[i * 2 + j] += x[i * 2 + k] * y[k * 2 + j];
        return r;
    };
    Vector one{f.one(), f.zero(), f.zero(), f.one()};
    std::vector<Vector> basis{Vector{f.zero(), f.one(), f.zero(), f.zero()},
                              Vector{f.zero(), f.zero(), f.one(), f.zero()}};
    auto r = subspace_contains_unit(basis, mul, one, SearchBudget{}, 0);
    REQUIRE(r.status == SearchStatus::witness);
    CHECK(mul(*r.element, *r.inverse) == one);
    CHECK(mul(*r.inverse, *r.element) == one);
}
