#include "doctest.h"

#include <random>

#include "corings/convolution.hpp"
#include "corings/families.hpp"

using namespace corings;

namespace {

CoringPtr graded_kz2(Field f) {
    GroupTable z2 = GroupTable::cyclic(2);
    return share(graded_coring({group_algebra(f, z2), GSet::regular(z2)}));
}

Matrix random_in(const DualAlgebra& d, std::mt19937_64& rng) {
    const std::uint32_t p = d.coring->field().characteristic();
    Vector x;
    for (std::size_t i = 0; i < d.dim(); ++i) x.push_back(Scalar::residue(p, rng() % p));
    return d.element(x);
}

// Every vector of F_p^n, in lexicographic order.
std::vector<Vector> all_vectors(std::uint32_t p, std::size_t n) {
    std::vector<Vector> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
        Vector v;
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= p) v.push_back(Scalar::residue(p, c % p));
        out.push_back(v);
    }
    return out;
}

bool is_unit_brute_force(const Algebra& a, const Vector& b) {
    for (const auto& c : all_vectors(a.field().characteristic(), a.dim()))
        if (a.multiply(b, c) == a.unit() && a.multiply(c, b) == a.unit()) return true;
    return false;
}

// Basis of R-module maps f: M -> N with f(m·r) = f(m)·r.
std::size_t module_hom_dim(const Bimodule& m, const Bimodule& n) {
    Field k = m.field();
    auto residual = [&](const Vector& x) {
        Matrix f(k, n.dim(), m.dim());
        for (std::size_t i = 0; i < n.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) f(i, j) = x[i * m.dim() + j];
        Vector out;
        for (std::size_t s = 0; s < m.right_actions().size(); ++s) {
            Matrix r = f * m.right_action(s) - n.right_action(s) * f;
            for (std::size_t i = 0; i < r.rows(); ++i)
                for (std::size_t j = 0; j < r.cols(); ++j) out.push_back(r(i, j));
        }
        return out;
    };
    const std::size_t len = n.dim() * m.dim() * m.right_actions().size();
    return kernel_basis(matrix_of(k, n.dim() * m.dim(), len, residual)).size();
}

}  // namespace

TEST_CASE("dual algebras of small corings") {
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        auto k = share(Algebra::ground(f));
        auto tk = share(trivial_coring(k));
        CHECK(right_dual_algebra(tk)->dim() == 1);
        CHECK(left_dual_algebra(tk)->dim() == 1);
        auto g = share(grouplike_coalgebra(f, 3));
        for (const auto& d : {right_dual_algebra(g), left_dual_algebra(g)}) {
            CHECK(d->dim() == 3);
            CHECK(check_algebra(*d->algebra).ok());
        }
        auto m = share(matrix_coring(k, 2));
        auto md = right_dual_algebra(m);
        CHECK(md->dim() == 4);
        CHECK(check_algebra(*md->algebra).ok());
        const Algebra& ma = *md->algebra;
        bool commutative = true;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) commutative = commutative && ma.product(i, j) == ma.product(j, i);
        CHECK_FALSE(commutative);
    }
}

TEST_CASE("C* of a group-like coalgebra is the pointwise algebra") {
    Field f = Field::prime(5);
    auto g = share(grouplike_coalgebra(f, 3));
    std::mt19937_64 rng(5);
    auto d = right_dual_algebra(g);
    for (int t = 0; t < 20; ++t) {
        Matrix x = random_in(*d, rng), y = random_in(*d, rng);
        Matrix prod = convolve_right(*g, x, y);
        for (std::size_t s = 0; s < 3; ++s) CHECK(prod(0, s) == x(0, s) * y(0, s));
    }
    CHECK(d->element(d->algebra->unit()) == g->epsilon());
}

TEST_CASE("C* of the matrix coalgebra is the opposite matrix algebra") {
    // (f⋆g)(e_ij) = Σ_k g(e_ik) f(e_kj): the value matrix of f⋆g is G F.
    Field f = Field::prime(3);
    auto m = share(matrix_coring(share(Algebra::ground(f)), 2));
    std::mt19937_64 rng(9);
    auto d = right_dual_algebra(m);
    for (int t = 0; t < 20; ++t) {
        Matrix x = random_in(*d, rng), y = random_in(*d, rng);
        Matrix fx(f, 2, 2), gy(f, 2, 2);
        for (std::size_t i = 0; i < 4; ++i) {
            fx(i / 2, i % 2) = x(0, i);
            gy(i / 2, i % 2) = y(0, i);
        }
        Matrix expected = gy * fx, prod = convolve_right(*m, x, y);
        for (std::size_t i = 0; i < 4; ++i) CHECK(prod(0, i) == expected(i / 2, i % 2));
    }
}

TEST_CASE("convolution on the graded coring matches q(p(a⊗x)(1⊗x))") {
    Field f = Field::prime(3);
    auto c = graded_kz2(f);
    auto d = right_dual_algebra(c);
    CHECK(d->dim() == 4);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        Matrix p = random_in(*d, rng), q = random_in(*d, rng);
        Matrix prod = convolve_right(*c, q, p);
        for (std::size_t s = 0; s < 2; ++s)
            for (std::size_t x = 0; x < 2; ++x) {
                const std::size_t ax = s * 2 + x;
                Vector px = c->carrier().left_by(p.column(ax)) * unit_vector(f, 4, x);
                CHECK(prod.column(ax) == q * px);
            }
    }
    CHECK(left_dual_algebra(c)->dim() == 4);
}

TEST_CASE("convolution inverses") {
    Field f = Field::prime(3);
    auto g = share(grouplike_coalgebra(f, 2));
    auto e = convolution_inverse(g, g->epsilon());
    REQUIRE(e.has_value());
    CHECK(*e == g->epsilon());
    Matrix p(f, 1, 2);
    p(0, 0) = Scalar::residue(3, 1);
    p(0, 1) = Scalar::residue(3, 2);
    auto q = convolution_inverse(g, p);
    REQUIRE(q.has_value());
    CHECK((*q)(0, 0) == Scalar::residue(3, 1));
    CHECK((*q)(0, 1) == Scalar::residue(3, 2));
    p(0, 1) = f.zero();
    CHECK_FALSE(convolution_inverse(g, p).has_value());

    auto a = share(truncated_polynomial_algebra(f, 2));
    auto t = share(trivial_coring(a));
    Matrix not_linear(f, 2, 2);
    not_linear(0, 1) = f.one();  // t -> 1 is not right A-linear
    CHECK_THROWS_AS(convolution_inverse(t, not_linear), StructureError);
}

TEST_CASE("convolution inverse agrees with the unit search on all of (A⊗kX)*") {
    Field f = Field::prime(3);
    auto c = graded_kz2(f);
    auto d = right_dual_algebra(c);
    const Algebra& r = *d->algebra;
    std::size_t invertible = 0;
    for (const auto& x : all_vectors(3, d->dim())) {
        Matrix p = d->element(x);
        const bool inv = convolution_inverse(c, p).has_value();
        std::vector<Vector> family = {x};
        auto search = subspace_contains_unit(family, [&](const Vector& u, const Vector& v) { return r.multiply(u, v); },
                                             r.unit(), default_budget(), 0);
        CHECK(inv == (search.status == SearchStatus::witness));
        CHECK(search.status != SearchStatus::undecided);
        invertible += inv;
    }
    CHECK(invertible > 0);
    CHECK(invertible < 81);
}

TEST_CASE("on the trivial coring, p is invertible iff p(1) is a unit") {
    for (std::uint32_t p : {2u, 3u}) {
        Field f = Field::prime(p);
        for (const auto& a : {share(truncated_polynomial_algebra(f, 2)), share(group_algebra(f, GroupTable::cyclic(2)).algebra)}) {
            auto t = share(trivial_coring(a));
            for (const auto& b : all_vectors(p, a->dim())) {
                Matrix lb = a->left_mult_by(b);  // c -> b c is right A-linear
                CHECK(convolution_inverse(t, lb).has_value() == is_unit_brute_force(*a, b));
            }
        }
    }
}

TEST_CASE("comodules become modules over the dual ring") {
    Field f = Field::prime(2);
    auto g = share(grouplike_coalgebra(f, 2));
    Bicomodule reg = Bicomodule::regular_right(g);
    Bimodule m = comodule_to_dual_module(reg);
    auto r = left_dual_algebra(g);
    // g_s · f = f(g_s) g_s.
    for (std::size_t t = 0; t < r->dim(); ++t)
        for (std::size_t s = 0; s < 2; ++s)
            CHECK(m.right_action(t).column(s) == scale(r->basis[t](0, s), unit_vector(f, 2, s)));

    // Hom^C(M, N) equals Hom_R(M, N) for kZ2-comodules.
    auto graded = [&](std::vector<std::size_t> deg) {
        Matrix rho(f, deg.size() * 2, deg.size());
        for (std::size_t i = 0; i < deg.size(); ++i) rho(i * 2 + deg[i], i) = f.one();
        return Bicomodule::right_comodule(g, Bimodule::free(g->base(), deg.size()), rho);
    };
    std::vector<Bicomodule> comods = {reg, graded({0, 1, 1}), graded({0, 0}), graded({1})};
    for (const auto& x : comods)
        for (const auto& y : comods) {
            auto colinear = comodule_hom_space(x, y);
            Bimodule mx = comodule_to_dual_module(x), my = comodule_to_dual_module(y);
            CHECK(colinear.size() == module_hom_dim(mx, my));
            for (const auto& h : colinear)
                for (std::size_t t = 0; t < r->dim(); ++t) CHECK(h * mx.right_action(t) == my.right_action(t) * h);
        }

    auto a = share(truncated_polynomial_algebra(f, 2));
    auto tc = share(trivial_coring(a));
    Bimodule ta = comodule_to_dual_module(Bicomodule::regular_right(tc));
    CHECK(ta.dim() == 2);
}

TEST_CASE("dual algebras are memoized per coring") {
    Field f = Field::prime(2);
    auto g = share(grouplike_coalgebra(f, 2));
    CHECK(right_dual_algebra(g) == right_dual_algebra(g));
    auto h = share(grouplike_coalgebra(f, 2));
    CHECK(right_dual_algebra(g) != right_dual_algebra(h));
}
