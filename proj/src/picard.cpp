#include "corings/picard.hpp"

#include <stdexcept>

namespace corings {

namespace {

void append(Vector& out, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
}

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

std::vector<Vector> ambient_deltas(const Coring& c) {
    std::vector<Vector> out;
    for (std::size_t k = 0; k < c.dim(); ++k) out.push_back(c.delta_ambient(unit_vector(c.field(), c.dim(), k)));
    return out;
}

void require_automorphism(const CoringMorphism& f) {
    if (!same_coring(f.source, f.target)) throw StructureError("not an endomorphism: source and target differ");
    ValidationReport r = check_coring_morphism(f);
    if (!r.ok()) throw StructureError("invalid coring morphism:\n" + r.summary());
    if (!is_isomorphism(f)) throw StructureError("coring morphism is not bijective");
}

// Unit search for a convolution-invertible element in span(space) ⊂ C*.
void search_dual(const CoringPtr& c, const std::vector<Matrix>& space, SearchBudget budget, std::uint64_t seed,
                 InnerTestResult& out) {
    DualPtr dual = right_dual_algebra(c);
    std::vector<Vector> coords;
    for (const auto& m : space) {
        auto x = dual->coordinates(m);
        if (!x) throw std::logic_error("candidate is not right A-linear");
        coords.push_back(std::move(*x));
    }
    coords = independent_subset(c->field(), coords);
    out.space_dim = coords.size();
    if (coords.empty()) {
        out.status = InnerStatus::not_inner;
        out.certainty = {};
        return;
    }
    const Algebra& r = *dual->algebra;
    auto result = subspace_contains_unit(
        coords, [&](const Vector& x, const Vector& y) { return r.multiply(x, y); }, r.unit(), budget, seed);
    out.certainty = result.certainty;
    switch (result.status) {
        case SearchStatus::witness: {
            Matrix p = dual->element(*result.element);
            if (!convolution_inverse(c, p)) throw std::logic_error("unit search witness is not convolution-invertible");
            out.status = InnerStatus::inner;
            out.witness = std::move(p);
            break;
        }
        case SearchStatus::certified_none: out.status = InnerStatus::not_inner; break;
        case SearchStatus::undecided: out.status = InnerStatus::undecided; break;
    }
}

// h(c) = Σ p(c_(1)) c_(2).
Matrix h_of(const Coring& c, const Matrix& p) {
    const std::size_t d = c.dim();
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < d; ++i) act.push_back(c.carrier().left_by(p.column(i)));
    Matrix h(c.field(), d, d);
    auto amb = ambient_deltas(c);
    for (std::size_t k = 0; k < d; ++k) {
        Vector acc = zero_vector(c.field(), d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!amb[k][i * d + j].is_zero()) axpy(acc, amb[k][i * d + j], act[i].column(j));
        h.set_column(k, acc);
    }
    return h;
}

std::uint64_t checked_power(std::uint64_t p, std::size_t e, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (total > cap / p) return cap + 1;
        total *= p;
    }
    return total;
}

// Homogeneous component of degree h.
Vector component(const GradedData& g, const Vector& v, std::size_t h) {
    Vector out = v;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (g.algebra.degree[i] != h) out[i] = v[i].field().zero();
    return out;
}

std::vector<Vector> split_values(const GradedData& g, const Vector& x) {
    const std::size_t da = g.algebra.algebra.dim();
    std::vector<Vector> out;
    for (std::size_t i = 0; i < g.gset.size; ++i) out.emplace_back(x.begin() + i * da, x.begin() + (i + 1) * da);
    return out;
}

// Kernel of a linear condition on the values p(1⊗x), as elements of (A⊗kX)*.
std::vector<Matrix> graded_solutions(const GradedData& g, const std::function<Vector(const std::vector<Vector>&)>& cond) {
    const Field f = g.algebra.algebra.field();
    const std::size_t n = g.gset.size * g.algebra.algebra.dim();
    auto residual = [&](const Vector& x) { return cond(split_values(g, x)); };
    const std::size_t len = residual(zero_vector(f, n)).size();
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(matrix_of(f, n, len, residual))) out.push_back(graded_dual_element(g, split_values(g, v)));
    return out;
}

// p(a_i ⊗ x) = ρ(a_i) p(1 ⊗ x) for every homogeneous basis element.
void append_rho_condition(const GradedData& g, const Matrix& rho, const std::vector<Vector>& p, Vector& out) {
    const Algebra& a = g.algebra.algebra;
    const GroupTable& grp = g.gset.group;
    for (std::size_t x = 0; x < g.gset.size; ++x)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const std::size_t y = g.gset.act(x, grp.inverse(g.algebra.degree[i]));
            append(out, sub(a.right_mult(i) * p[y], a.left_mult_by(rho.column(i)) * p[x]));
        }
}

}  // namespace

std::string to_string(InnerStatus s) {
    switch (s) {
        case InnerStatus::inner: return "inner";
        case InnerStatus::not_inner: return "not-inner";
        case InnerStatus::undecided: return "undecided";
    }
    return "?";
}

std::vector<Matrix> inner_candidate_space(const CoringMorphism& f) {
    const Coring& c = *f.source;
    const Field k = c.field();
    const std::size_t d = c.dim();
    DualPtr dual = right_dual_algebra(f.source);
    auto amb = ambient_deltas(c);
    auto residual = [&](const Vector& x) {
        Matrix p = dual->element(x);
        Vector out;
        std::vector<Matrix> right, left;
        for (std::size_t j = 0; j < d; ++j) {
            right.push_back(c.carrier().right_by(p.column(j)));
            left.push_back(c.carrier().left_by(p.column(j)));
        }
        for (std::size_t kk = 0; kk < d; ++kk) {
            Vector acc = zero_vector(k, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) {
                    const Scalar& coef = amb[kk][i * d + j];
                    if (coef.is_zero()) continue;
                    axpy(acc, coef, right[j] * f.phi.column(i));
                    axpy(acc, -coef, left[i].column(j));
                }
            append(out, acc);
        }
        return out;
    };
    const std::size_t len = residual(zero_vector(k, dual->dim())).size();
    std::vector<Matrix> out;
    for (const auto& v : kernel_basis(matrix_of(k, dual->dim(), len, residual))) out.push_back(dual->element(v));
    return out;
}

InnerTestResult is_inner(const CoringMorphism& f, SearchBudget budget, std::uint64_t seed) {
    require_automorphism(f);
    InnerTestResult out{f, InnerStatus::undecided, std::nullopt, {}, 0};
    search_dual(f.source, inner_candidate_space(f), budget, seed, out);
    if (out.witness) {
        Matrix h = h_of(*f.source, *out.witness);
        if (!is_nonsingular(h) ||
            !check_bicomodule_morphism(twisted_bicomodule(f), Bicomodule::regular(f.source), h).ok())
            throw std::logic_error("is_inner: witness does not give a bicomodule isomorphism");
    }
    return out;
}

IsoSearchResult inner_via_bicomodule(const CoringMorphism& f, SearchBudget budget, std::uint64_t seed) {
    require_automorphism(f);
    return bicomodule_iso_exists(twisted_bicomodule(f), Bicomodule::regular(f.source), budget, seed);
}

AutomorphismSet enumerate_automorphisms(const CoringPtr& cp, bool fix_rho_identity, SearchBudget budget) {
    const Coring& c = *cp;
    const Field k = c.field();
    if (!k.is_prime_field()) throw StructureError("automorphism enumeration needs a finite field");
    const AlgebraPtr& a = c.base();
    const std::size_t d = c.dim(), da = a->dim();
    AutomorphismSet out{cp, {}, true};
    std::vector<AlgebraMorphism> rhos;
    if (fix_rho_identity) {
        rhos.push_back(identity_morphism(a));
    } else if (auto all = enumerate_algebra_automorphisms(a, budget.max_points)) {
        rhos = std::move(*all);
    } else {
        rhos.push_back(identity_morphism(a));
        out.complete = false;
    }
    Matrix amb(k, d * d, d);
    auto deltas = ambient_deltas(c);
    for (std::size_t j = 0; j < d; ++j) amb.set_column(j, deltas[j]);
    const Matrix& proj = c.tensor2().project();
    std::uint64_t remaining = budget.max_points;
    const std::uint64_t p = k.characteristic();

    for (const auto& rho : rhos) {
        std::vector<Matrix> left, right;
        for (std::size_t s = 0; s < da; ++s) {
            left.push_back(c.carrier().left_by(rho.matrix.column(s)));
            right.push_back(c.carrier().right_by(rho.matrix.column(s)));
        }
        auto unpack = [&](const Vector& x) {
            Matrix phi(k, d, d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t col = 0; col < d; ++col) phi(r, col) = x[r * d + col];
            return phi;
        };
        auto linear = [&](const Vector& x) {
            Matrix phi = unpack(x);
            Vector v;
            for (std::size_t s = 0; s < da; ++s) {
                append(v, phi * c.carrier().left_action(s) - left[s] * phi);
                append(v, phi * c.carrier().right_action(s) - right[s] * phi);
            }
            append(v, c.epsilon() * phi);
            return v;
        };
        const std::size_t len = linear(zero_vector(k, d * d)).size();
        Matrix system = matrix_of(k, d * d, len, linear);
        Vector rhs = zero_vector(k, len);
        Matrix target = rho.matrix * c.epsilon();
        for (std::size_t r = 0; r < da; ++r)
            for (std::size_t col = 0; col < d; ++col) rhs[len - da * d + r * d + col] = target(r, col);
        auto particular = solve_linear(system, rhs);
        if (!particular) continue;
        auto dirs = kernel_basis(system);
        std::uint64_t total = checked_power(p, dirs.size(), remaining);
        if (total > remaining) {
            out.complete = false;
            total = remaining;
        }
        remaining -= total;
        std::vector<std::uint64_t> digits(dirs.size(), 0);
        for (std::uint64_t n = 0; n < total; ++n) {
            Vector x = *particular;
            for (std::size_t i = 0; i < dirs.size(); ++i)
                if (digits[i]) axpy(x, Scalar::residue(static_cast<std::uint32_t>(p), digits[i]), dirs[i]);
            for (std::size_t i = 0; i < digits.size(); ++i) {
                if (++digits[i] < p) break;
                digits[i] = 0;
            }
            Matrix phi = unpack(x);
            if (!is_nonsingular(phi)) continue;
            if (c.delta() * phi != proj * (kron(phi, phi) * amb)) continue;
            CoringMorphism m{cp, cp, std::move(phi), rho};
            if (!check_coring_morphism(m).ok()) throw std::logic_error("enumerated automorphism fails validation");
            out.elements.push_back(std::move(m));
        }
    }
    return out;
}

ExactSequenceReport verify_exact_sequence(const AutomorphismSet& auts, SearchBudget budget, std::uint64_t seed) {
    ExactSequenceReport out;
    const auto& el = auts.elements;
    out.aut = el.size();
    for (std::size_t i = 0; i < el.size(); ++i) {
        InnerTestResult r = is_inner(el[i], budget, seed);
        IsoSearchResult b = inner_via_bicomodule(el[i], budget, seed);
        out.inner.push_back(r.status);
        out.bicomodule.push_back(b.status);
        if (r.status == InnerStatus::undecided || b.status == SearchStatus::undecided) {
            out.undecided = true;
            continue;
        }
        const bool agree = (r.status == InnerStatus::inner) == (b.status == SearchStatus::witness);
        out.agreement = out.agreement && agree;
        out.report.record("oracle agreement on automorphism " + std::to_string(i), agree,
                          "is_inner says " + to_string(r.status) + ", bicomodule search says " + to_string(b.status));
        out.inn += r.status == InnerStatus::inner;
    }
    auto status_of = [&](const CoringMorphism& m) {
        for (std::size_t i = 0; i < el.size(); ++i)
            if (el[i] == m) return out.inner[i];
        return is_inner(m, budget, seed).status;
    };
    std::vector<std::size_t> inn;
    for (std::size_t i = 0; i < el.size(); ++i)
        if (out.inner[i] == InnerStatus::inner) inn.push_back(i);
    std::string w;
    for (std::size_t i : inn)
        for (std::size_t j : inn)
            if (w.empty() && status_of(compose(el[j], el[i])) != InnerStatus::inner)
                w = "composite of " + std::to_string(j) + " and " + std::to_string(i) + " is not inner";
    out.report.record("Inn closed under composition", w.empty(), w);
    w.clear();
    for (std::size_t i : inn)
        if (w.empty() && status_of(inverse(el[i])) != InnerStatus::inner) w = "inverse of " + std::to_string(i);
    out.report.record("Inn closed under inverses", w.empty(), w + " is not inner");
    w.clear();
    for (std::size_t g = 0; g < el.size() && w.empty(); ++g)
        for (std::size_t i : inn)
            if (w.empty() && status_of(compose(el[g], compose(el[i], inverse(el[g])))) != InnerStatus::inner)
                w = "conjugate of " + std::to_string(i) + " by " + std::to_string(g) + " is not inner";
    out.report.record("Inn normal in Aut", w.empty(), w);

    if (auts.complete && !out.undecided) {
        std::vector<bool> assigned(el.size(), false);
        for (std::size_t i = 0; i < el.size(); ++i) {
            if (assigned[i]) continue;
            out.coset_representatives.push_back(i);
            CoringMorphism inv = inverse(el[i]);
            for (std::size_t j = i; j < el.size(); ++j)
                if (!assigned[j] && status_of(compose(inv, el[j])) == InnerStatus::inner) assigned[j] = true;
        }
        out.out = out.coset_representatives.size();
        out.report.record("|Aut| = |Inn| |Out|", out.aut == out.inn * *out.out,
                          std::to_string(out.aut) + " != " + std::to_string(out.inn) + " * " + std::to_string(*out.out));
    }
    return out;
}

Matrix graded_dual_element(const GradedData& g, const std::vector<Vector>& values) {
    const Algebra& a = g.algebra.algebra;
    const std::size_t da = a.dim(), nx = g.gset.size;
    if (values.size() != nx) throw DimensionError("graded dual element: one value per point of X is required");
    Matrix p(a.field(), da, da * nx);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t x = 0; x < nx; ++x) {
            const std::size_t y = g.gset.act(x, g.gset.group.inverse(g.algebra.degree[i]));
            p.set_column(i * nx + x, a.right_mult(i) * values[y]);
        }
    return p;
}

std::vector<Vector> graded_dual_values(const GradedData& g, const Matrix& p) {
    const Algebra& a = g.algebra.algebra;
    const std::size_t nx = g.gset.size;
    std::vector<Vector> out;
    for (std::size_t x = 0; x < nx; ++x) {
        Vector v = zero_vector(a.field(), a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!a.unit()[i].is_zero()) axpy(v, a.unit()[i], p.column(i * nx + x));
        out.push_back(v);
    }
    return out;
}

std::optional<std::vector<Vector>> graded_dual_invertible(const GradedData& g, const std::vector<Vector>& p) {
    const Algebra& a = g.algebra.algebra;
    const GroupTable& grp = g.gset.group;
    const std::size_t nx = g.gset.size, da = a.dim();
    if (p.size() != nx) throw DimensionError("graded dual element: one value per point of X is required");
    auto residual = [&](const Vector& flat) {
        auto q = split_values(g, flat);
        Vector out;
        for (std::size_t x = 0; x < nx; ++x) {
            Vector lhs = zero_vector(a.field(), da), rhs = lhs;
            for (std::size_t h = 0; h < grp.order(); ++h) {
                const std::size_t y = g.gset.act(x, grp.inverse(h));
                lhs = add(lhs, a.multiply(q[y], component(g, p[x], h)));
                rhs = add(rhs, a.multiply(p[y], component(g, q[x], h)));
            }
            append(out, lhs);
            append(out, rhs);
        }
        return out;
    };
    Matrix system = matrix_of(a.field(), nx * da, 2 * nx * da, residual);
    Vector target;
    for (std::size_t x = 0; x < 2 * nx; ++x) append(target, a.unit());
    auto sol = solve_linear(system, target);
    if (!sol) return std::nullopt;
    return split_values(g, *sol);
}

InnerTestResult graded_ker_omega(const GradedData& g, const CoringMorphism& f, SearchBudget budget,
                                 std::uint64_t seed) {
    require_automorphism(f);
    const Algebra& a = g.algebra.algebra;
    const GroupTable& grp = g.gset.group;
    const std::size_t nx = g.gset.size, da = a.dim();
    if (f.source->dim() != nx * da) throw StructureError("graded_ker_omega: coring is not A ⊗ kX");
    // φ(1 ⊗ x) = Σ_y a^x_y ⊗ y.
    std::vector<std::vector<Vector>> coef(nx, std::vector<Vector>(nx, zero_vector(a.field(), da)));
    for (std::size_t x = 0; x < nx; ++x) {
        Vector one_x = zero_vector(a.field(), da * nx);
        for (std::size_t i = 0; i < da; ++i) one_x[i * nx + x] = a.unit()[i];
        Vector image = f.phi * one_x;
        for (std::size_t y = 0; y < nx; ++y)
            for (std::size_t i = 0; i < da; ++i) coef[x][y][i] = image[i * nx + y];
    }
    auto space = graded_solutions(g, [&](const std::vector<Vector>& p) {
        Vector out;
        for (std::size_t x = 0; x < nx; ++x)
            for (std::size_t y = 0; y < nx; ++y)
                for (std::size_t h = 0; h < grp.order(); ++h)
                    if (g.gset.act(y, h) != x) append(out, a.multiply(coef[x][y], component(g, p[x], h)));
        append_rho_condition(g, f.rho.matrix, p, out);
        return out;
    });
    InnerTestResult out{f, InnerStatus::undecided, std::nullopt, {}, 0};
    search_dual(f.source, space, budget, seed, out);
    return out;
}

CoringMorphism entwining_induced(const EntwiningStructure& e, const CoringPtr& ac, const Matrix& alpha,
                                 const Matrix& gamma) {
    if (ac->dim() != e.algebra->dim() * e.coalgebra->dim()) throw DimensionError("entwining coring has the wrong dimension");
    return {ac, ac, kron(alpha, gamma), AlgebraMorphism{ac->base(), ac->base(), alpha}};
}

InnerTestResult entwining_ker_membership(const EntwiningStructure& e, const CoringPtr& ac, const Matrix& alpha,
                                         const Matrix& gamma, SearchBudget budget, std::uint64_t seed) {
    const Algebra& a = *e.algebra;
    const Coring& c = *e.coalgebra;
    const Field k = a.field();
    const std::size_t da = a.dim(), dc = c.dim(), d = ac->dim();
    AlgebraMorphism am{e.algebra, e.algebra, alpha};
    if (!check_algebra_morphism(am).ok() || !is_nonsingular(alpha))
        throw StructureError("entwining automorphism: alpha is not an algebra automorphism");
    CoringMorphism cm{e.coalgebra, e.coalgebra, gamma, identity_morphism(c.base())};
    if (!check_coring_morphism(cm).ok() || !is_nonsingular(gamma))
        throw StructureError("entwining automorphism: gamma is not a coalgebra automorphism");
    if (kron(alpha, gamma) * e.psi != e.psi * kron(gamma, alpha))
        throw StructureError("entwining automorphism: (alpha⊗gamma)psi != psi(gamma⊗alpha)");
    CoringMorphism induced = entwining_induced(e, ac, alpha, gamma);
    DualPtr dual = right_dual_algebra(ac);
    auto one = [&](std::size_t cc) {
        Vector v = zero_vector(k, d);
        for (std::size_t u = 0; u < da; ++u) v[u * dc + cc] = a.unit()[u];
        return v;
    };
    auto deltas = ambient_deltas(c);
    auto residual = [&](const Vector& x) {
        Matrix p = dual->element(x);
        Vector out;
        for (std::size_t s = 0; s < da; ++s)
            for (std::size_t cc = 0; cc < dc; ++cc) {
                Vector acc = zero_vector(k, d);
                for (std::size_t c1 = 0; c1 < dc; ++c1)
                    for (std::size_t c2 = 0; c2 < dc; ++c2) {
                        const Scalar& w = deltas[cc][c1 * dc + c2];
                        if (w.is_zero()) continue;
                        Vector lhs = ac->carrier().right_by(p * one(c2)) * induced.phi.column(s * dc + c1);
                        Vector rhs = ac->carrier().left_by(p.column(s * dc + c1)) * one(c2);
                        axpy(acc, w, sub(lhs, rhs));
                    }
                append(out, acc);
            }
        return out;
    };
    const std::size_t len = da * dc * d;
    std::vector<Matrix> space;
    for (const auto& v : kernel_basis(matrix_of(k, dual->dim(), len, residual))) space.push_back(dual->element(v));
    InnerTestResult out{induced, InnerStatus::undecided, std::nullopt, {}, 0};
    search_dual(ac, space, budget, seed, out);
    return out;
}

ValidationReport check_dk_automorphism(const DKStructure& d, const Matrix& hbar, const Matrix& alpha,
                                       const Matrix& gamma) {
    ValidationReport report;
    const Field k = d.h_algebra->field();
    report.record("hbar algebra automorphism",
                  check_algebra_morphism({d.h_algebra, d.h_algebra, hbar}).ok() && is_nonsingular(hbar),
                  "hbar is not an algebra automorphism of H");
    report.record("hbar coalgebra automorphism",
                  check_coring_morphism({d.h_coalgebra, d.h_coalgebra, hbar, identity_morphism(d.h_coalgebra->base())}).ok(),
                  "hbar is not a coalgebra map of H");
    report.record("alpha algebra automorphism",
                  check_algebra_morphism({d.algebra, d.algebra, alpha}).ok() && is_nonsingular(alpha),
                  "alpha is not an algebra automorphism of A");
    report.record("gamma coalgebra automorphism",
                  check_coring_morphism({d.coalgebra, d.coalgebra, gamma, identity_morphism(d.coalgebra->base())}).ok() &&
                      is_nonsingular(gamma),
                  "gamma is not a coalgebra automorphism of C");
    report.record("alpha colinear", d.algebra_coaction * alpha == kron(alpha, hbar) * d.algebra_coaction,
                  "rho_A(alpha(a)) != alpha(a_(0)) ⊗ hbar(a_(1))");
    bool ok = true;
    for (std::size_t s = 0; s < d.coalgebra_action.size() && ok; ++s) {
        Matrix act(k, gamma.rows(), gamma.rows());
        for (std::size_t t = 0; t < d.coalgebra_action.size(); ++t)
            if (!hbar(t, s).is_zero()) act += hbar(t, s) * d.coalgebra_action[t];
        ok = gamma * d.coalgebra_action[s] == act * gamma;
    }
    report.record("gamma linear", ok, "gamma(ch) != gamma(c) hbar(h)");
    return report;
}

InnerTestResult dk_ker_membership(const DKStructure& d, const CoringPtr& ac, const Matrix& hbar, const Matrix& alpha,
                                  const Matrix& gamma, SearchBudget budget, std::uint64_t seed) {
    ValidationReport r = check_dk_automorphism(d, hbar, alpha, gamma);
    if (!r.ok()) throw StructureError("invalid DK automorphism: " + r.failures().front());
    return entwining_ker_membership(entwining_from_dk(d), ac, alpha, gamma, budget, seed);
}

ValidationReport check_graded_automorphism(const GradedData& g, const GradedAutomorphism& t) {
    ValidationReport report;
    const GroupTable& grp = g.gset.group;
    const std::size_t n = grp.order(), nx = g.gset.size;
    const Algebra& a = g.algebra.algebra;
    auto bijective = [](const std::vector<std::size_t>& m, std::size_t size) {
        if (m.size() != size) return false;
        std::vector<bool> seen(size, false);
        for (auto v : m) {
            if (v >= size || seen[v]) return false;
            seen[v] = true;
        }
        return true;
    };
    bool ok = bijective(t.group_map, n);
    for (std::size_t s = 0; s < n && ok; ++s)
        for (std::size_t u = 0; u < n && ok; ++u) ok = t.group_map[grp.op(s, u)] == grp.op(t.group_map[s], t.group_map[u]);
    report.record("group automorphism", ok, "f is not a bijective group homomorphism");
    const bool group_ok = ok;
    ok = bijective(t.set_map, nx);
    for (std::size_t x = 0; x < nx && ok && group_ok; ++x)
        for (std::size_t s = 0; s < n && ok; ++s) ok = t.set_map[g.gset.act(x, s)] == g.gset.act(t.set_map[x], t.group_map[s]);
    report.record("set map equivariant", ok && group_ok, "phi(xg) != phi(x)f(g)");
    report.record("alpha algebra automorphism",
                  t.alpha.rows() == a.dim() && t.alpha.cols() == a.dim() &&
                      check_algebra_morphism({share(a), share(a), t.alpha}).ok() && is_nonsingular(t.alpha),
                  "alpha is not an algebra automorphism");
    ok = group_ok && t.alpha.rows() == a.dim() && t.alpha.cols() == a.dim();
    for (std::size_t i = 0; i < a.dim() && ok; ++i)
        for (std::size_t j = 0; j < a.dim() && ok; ++j)
            ok = t.alpha(j, i).is_zero() || g.algebra.degree[j] == t.group_map[g.algebra.degree[i]];
    report.record("alpha graded", ok, "alpha(A_g) is not contained in A_f(g)");
    return report;
}

CoringMorphism graded_induced(const GradedData& g, const CoringPtr& c, const GradedAutomorphism& t) {
    const std::size_t nx = g.gset.size, da = g.algebra.algebra.dim();
    Matrix phi(c->field(), da * nx, da * nx);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t x = 0; x < nx; ++x)
            for (std::size_t j = 0; j < da; ++j) phi(j * nx + t.set_map[x], i * nx + x) = t.alpha(j, i);
    return {c, c, std::move(phi), AlgebraMorphism{c->base(), c->base(), t.alpha}};
}

InnerTestResult graded_triple_ker_membership(const GradedData& g, const CoringPtr& c, const GradedAutomorphism& t,
                                             SearchBudget budget, std::uint64_t seed) {
    ValidationReport r = check_graded_automorphism(g, t);
    if (!r.ok()) throw StructureError("invalid graded automorphism: " + r.failures().front());
    const GroupTable& grp = g.gset.group;
    const std::size_t nx = g.gset.size;
    auto space = graded_solutions(g, [&](const std::vector<Vector>& p) {
        Vector out;
        for (std::size_t x = 0; x < nx; ++x)
            for (std::size_t h = 0; h < grp.order(); ++h)
                if (g.gset.act(t.set_map[x], h) != x) append(out, component(g, p[x], h));
        append_rho_condition(g, t.alpha, p, out);
        return out;
    });
    InnerTestResult out{graded_induced(g, c, t), InnerStatus::undecided, std::nullopt, {}, 0};
    search_dual(c, space, budget, seed, out);
    return out;
}

}  // namespace corings
