#include "corings/families.hpp"

namespace corings {

namespace {

// Ambient coordinates of m ⊗ n in M ⊗_k N.
Vector ambient_pure(const Vector& m, const Vector& n) {
    Vector out(m.size() * n.size(), m.empty() ? Scalar(0) : m[0].field().zero());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_zero()) continue;
        for (std::size_t j = 0; j < n.size(); ++j)
            if (!n[j].is_zero()) out[i * n.size() + j] = m[i] * n[j];
    }
    return out;
}

std::string name_of(const std::vector<std::string>& names, std::size_t i, const char* prefix) {
    return i < names.size() ? names[i] : prefix + std::to_string(i);
}

// ψ(c ⊗ a) for a basis element c and an arbitrary a, in A ⊗ C coordinates.
Vector psi_apply(const EntwiningStructure& e, std::size_t c, const Vector& a) {
    const std::size_t da = e.algebra->dim();
    Vector out = zero_vector(e.algebra->field(), da * e.coalgebra->dim());
    for (std::size_t s = 0; s < da; ++s)
        if (!a[s].is_zero()) axpy(out, a[s], e.psi.column(c * da + s));
    return out;
}

}  // namespace

Coring matrix_coring(const AlgebraPtr& a, std::size_t n) {
    if (n == 0) throw StructureError("matrix coring: n must be positive");
    const Field f = a->field();
    const std::size_t da = a->dim(), d = n * n * da;
    Bimodule carrier = Bimodule::free(a, n * n);
    auto slot = [&](std::size_t i, std::size_t j, const Vector& x) {
        Vector v = zero_vector(f, d);
        for (std::size_t s = 0; s < da; ++s) v[(i * n + j) * da + s] = x[s];
        return v;
    };
    Matrix delta(f, d * d, d), eps(f, da, d);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < da; ++s) {
                const std::size_t col = (i * n + j) * da + s;
                Vector acc = zero_vector(f, d * d);
                for (std::size_t k = 0; k < n; ++k)
                    acc = add(acc, ambient_pure(slot(i, k, a->basis(s)), slot(k, j, a->unit())));
                delta.set_column(col, acc);
                if (i == j) eps(s, col) = f.one();
                std::string e = "e" + std::to_string(i + 1) + std::to_string(j + 1);
                names.push_back(da == 1 ? e : name_of(a->names(), s, "a") + "*" + e);
            }
    return Coring::from_ambient(std::move(carrier), delta, std::move(eps), std::move(names));
}

Coring grouplike_coalgebra(Field f, std::size_t size, std::vector<std::string> names) {
    if (size == 0) throw StructureError("group-like coalgebra: index set must be nonempty");
    auto k = share(Algebra::ground(f));
    Matrix delta(f, size * size, size), eps(f, 1, size);
    for (std::size_t s = 0; s < size; ++s) {
        delta(s * size + s, s) = f.one();
        eps(0, s) = f.one();
    }
    if (names.empty())
        for (std::size_t s = 0; s < size; ++s) names.push_back("g" + std::to_string(s));
    return Coring::from_ambient(Bimodule::free(k, size), delta, std::move(eps), std::move(names));
}

Matrix flip_psi(const Algebra& a, std::size_t dc) {
    const std::size_t da = a.dim();
    Matrix psi(a.field(), da * dc, dc * da);
    for (std::size_t c = 0; c < dc; ++c)
        for (std::size_t s = 0; s < da; ++s) psi(s * dc + c, c * da + s) = a.field().one();
    return psi;
}

ValidationReport check_entwining(const EntwiningStructure& e) {
    ValidationReport report;
    const Algebra& a = *e.algebra;
    const Coring& c = *e.coalgebra;
    const Field f = a.field();
    const std::size_t da = a.dim(), dc = c.dim();
    if (c.base()->dim() != 1) throw StructureError("entwining: C must be a coalgebra over k");
    if (e.psi.rows() != da * dc || e.psi.cols() != dc * da) throw DimensionError("entwining: psi has the wrong shape");
    auto cname = [&](std::size_t i) { return c.basis_name(i); };
    auto aname = [&](std::size_t i) { return name_of(a.names(), i, "a"); };

    // ES1: ψ(c ⊗ ab) = Σ a_ψ b_ψ ⊗ c^ψ^ψ.
    std::string w;
    for (std::size_t ci = 0; ci < dc && w.empty(); ++ci)
        for (std::size_t i = 0; i < da && w.empty(); ++i) {
            Vector first = psi_apply(e, ci, a.basis(i));
            for (std::size_t j = 0; j < da; ++j) {
                Vector lhs = psi_apply(e, ci, a.product(i, j));
                Vector rhs = zero_vector(f, da * dc);
                for (std::size_t x = 0; x < da; ++x)
                    for (std::size_t y = 0; y < dc; ++y) {
                        const Scalar& coef = first[x * dc + y];
                        if (coef.is_zero()) continue;
                        Vector second = psi_apply(e, y, a.basis(j));
                        for (std::size_t u = 0; u < da; ++u)
                            for (std::size_t v = 0; v < dc; ++v) {
                                const Scalar& c2 = second[u * dc + v];
                                if (c2.is_zero()) continue;
                                const Vector& prod = a.product(x, u);
                                for (std::size_t t = 0; t < da; ++t)
                                    if (!prod[t].is_zero()) rhs[t * dc + v] += coef * c2 * prod[t];
                            }
                    }
                if (lhs != rhs) {
                    w = "at c=" + cname(ci) + ", a=" + aname(i) + ", b=" + aname(j);
                    break;
                }
            }
        }
    report.record("ES1", w.empty(), w);

    // ES2: (A ⊗ Δ)ψ(c ⊗ a) = (ψ ⊗ C)(C ⊗ ψ)(Δc ⊗ a), in A ⊗ C ⊗ C.
    w.clear();
    for (std::size_t ci = 0; ci < dc && w.empty(); ++ci) {
        Vector dcv = c.delta_ambient(unit_vector(f, dc, ci));
        for (std::size_t s = 0; s < da; ++s) {
            Vector p = psi_apply(e, ci, a.basis(s));
            Vector lhs = zero_vector(f, da * dc * dc);
            for (std::size_t x = 0; x < da; ++x)
                for (std::size_t y = 0; y < dc; ++y) {
                    const Scalar& coef = p[x * dc + y];
                    if (coef.is_zero()) continue;
                    Vector dy = c.delta_ambient(unit_vector(f, dc, y));
                    for (std::size_t q = 0; q < dc * dc; ++q)
                        if (!dy[q].is_zero()) lhs[x * dc * dc + q] += coef * dy[q];
                }
            Vector rhs = zero_vector(f, da * dc * dc);
            for (std::size_t c1 = 0; c1 < dc; ++c1)
                for (std::size_t c2 = 0; c2 < dc; ++c2) {
                    const Scalar& coef = dcv[c1 * dc + c2];
                    if (coef.is_zero()) continue;
                    Vector inner = psi_apply(e, c2, a.basis(s));
                    for (std::size_t x = 0; x < da; ++x)
                        for (std::size_t y = 0; y < dc; ++y) {
                            const Scalar& k1 = inner[x * dc + y];
                            if (k1.is_zero()) continue;
                            Vector outer = psi_apply(e, c1, a.basis(x));
                            for (std::size_t u = 0; u < da; ++u)
                                for (std::size_t v = 0; v < dc; ++v)
                                    if (!outer[u * dc + v].is_zero())
                                        rhs[(u * dc + v) * dc + y] += coef * k1 * outer[u * dc + v];
                        }
                }
            if (lhs != rhs) {
                w = "at c=" + cname(ci) + ", a=" + aname(s);
                break;
            }
        }
    }
    report.record("ES2", w.empty(), w);

    // ES3: ψ(c ⊗ 1) = 1 ⊗ c.
    w.clear();
    for (std::size_t ci = 0; ci < dc; ++ci) {
        Vector expected = zero_vector(f, da * dc);
        for (std::size_t s = 0; s < da; ++s) expected[s * dc + ci] = a.unit()[s];
        if (psi_apply(e, ci, a.unit()) != expected) {
            w = "at c=" + cname(ci);
            break;
        }
    }
    report.record("ES3", w.empty(), w);

    // ES4: (A ⊗ ε)ψ(c ⊗ a) = ε(c) a.
    w.clear();
    for (std::size_t ci = 0; ci < dc && w.empty(); ++ci)
        for (std::size_t s = 0; s < da; ++s) {
            Vector p = psi_apply(e, ci, a.basis(s));
            Vector lhs = zero_vector(f, da);
            for (std::size_t x = 0; x < da; ++x)
                for (std::size_t y = 0; y < dc; ++y)
                    if (!p[x * dc + y].is_zero()) lhs[x] += p[x * dc + y] * c.epsilon()(0, y);
            if (lhs != scale(c.epsilon()(0, ci), a.basis(s))) {
                w = "at c=" + cname(ci) + ", a=" + aname(s);
                break;
            }
        }
    report.record("ES4", w.empty(), w);
    return report;
}

Coring coring_from_entwining(const EntwiningStructure& e) {
    const Algebra& a = *e.algebra;
    const Coring& c = *e.coalgebra;
    const Field f = a.field();
    const std::size_t da = a.dim(), dc = c.dim(), d = da * dc;
    if (c.base()->dim() != 1) throw StructureError("entwining: C must be a coalgebra over k");
    if (e.psi.rows() != d || e.psi.cols() != d) throw DimensionError("entwining: psi has the wrong shape");
    Matrix idc = Matrix::identity(f, dc);
    std::vector<Matrix> left, right;
    for (std::size_t s = 0; s < da; ++s) left.push_back(kron(a.left_mult(s), idc));
    for (std::size_t s = 0; s < da; ++s) {
        Matrix r(f, d, d);
        for (std::size_t j = 0; j < dc; ++j) {
            Vector p = e.psi.column(j * da + s);
            for (std::size_t x = 0; x < da; ++x)
                for (std::size_t y = 0; y < dc; ++y) {
                    const Scalar& coef = p[x * dc + y];
                    if (coef.is_zero()) continue;
                    for (std::size_t i = 0; i < da; ++i) {
                        const Vector& prod = a.product(i, x);
                        for (std::size_t t = 0; t < da; ++t)
                            if (!prod[t].is_zero()) r(t * dc + y, i * dc + j) += coef * prod[t];
                    }
                }
        }
        right.push_back(std::move(r));
    }
    Bimodule carrier(e.algebra, e.algebra, d, std::move(left), std::move(right));

    Matrix delta(f, d * d, d), eps(f, da, d);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < dc; ++j) {
            Vector dj = c.delta_ambient(unit_vector(f, dc, j));
            for (std::size_t c1 = 0; c1 < dc; ++c1)
                for (std::size_t c2 = 0; c2 < dc; ++c2) {
                    const Scalar& coef = dj[c1 * dc + c2];
                    if (coef.is_zero()) continue;
                    for (std::size_t u = 0; u < da; ++u)
                        if (!a.unit()[u].is_zero())
                            delta((i * dc + c1) * d + (u * dc + c2), i * dc + j) += coef * a.unit()[u];
                }
            eps(i, i * dc + j) = c.epsilon()(0, j);
            names.push_back(name_of(a.names(), i, "a") + "⊗" + c.basis_name(j));
        }
    return Coring::from_ambient(std::move(carrier), delta, std::move(eps), std::move(names));
}

Bicomodule entwined_to_comodule(const CoringPtr& ac, const EntwiningStructure& e, const Bimodule& m,
                                const Matrix& rho) {
    const Algebra& a = *e.algebra;
    const Field f = a.field();
    const std::size_t dm = m.dim(), dc = e.coalgebra->dim(), d = ac->dim();
    if (rho.rows() != dm * dc || rho.cols() != dm) throw DimensionError("entwined module: rho has the wrong shape");
    Matrix amb(f, dm * d, dm);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t x = 0; x < dm; ++x)
            for (std::size_t y = 0; y < dc; ++y) {
                const Scalar& coef = rho(x * dc + y, i);
                if (coef.is_zero()) continue;
                for (std::size_t u = 0; u < a.dim(); ++u)
                    if (!a.unit()[u].is_zero()) amb(x * d + u * dc + y, i) += coef * a.unit()[u];
            }
    TensorProduct t(m, ac->carrier());
    return Bicomodule::right_comodule(ac, m, t.project() * amb);
}

ValidationReport check_entwined_module(const EntwiningStructure& e, const Bimodule& m, const Matrix& rho) {
    ValidationReport report;
    const Algebra& a = *e.algebra;
    const Coring& c = *e.coalgebra;
    const Field f = a.field();
    const std::size_t dm = m.dim(), dc = c.dim(), da = a.dim();
    ValidationReport mod = check_bimodule(m);
    report.merge(mod, "module ");

    Matrix counit(f, dm, dm * dc), coassoc_l(f, dm * dc * dc, dm * dc), coassoc_r(f, dm * dc * dc, dm * dc);
    for (std::size_t x = 0; x < dm; ++x)
        for (std::size_t y = 0; y < dc; ++y) {
            counit(x, x * dc + y) = c.epsilon()(0, y);
            Vector dy = c.delta_ambient(unit_vector(f, dc, y));
            for (std::size_t q = 0; q < dc * dc; ++q) coassoc_r(x * dc * dc + q, x * dc + y) = dy[q];
        }
    Matrix idc = Matrix::identity(f, dc);
    coassoc_l = kron(rho, idc);
    report.record("coaction counit", (counit * rho).is_identity(), "(M⊗ε)ρ is not the identity");
    report.record("coaction coassociativity", coassoc_l * rho == coassoc_r * rho, "(ρ⊗C)ρ != (M⊗Δ)ρ");

    std::string w;
    for (std::size_t i = 0; i < dm && w.empty(); ++i)
        for (std::size_t s = 0; s < da; ++s) {
            Vector lhs = rho * m.right_action(s).column(i);
            Vector rhs = zero_vector(f, dm * dc);
            for (std::size_t x = 0; x < dm; ++x)
                for (std::size_t y = 0; y < dc; ++y) {
                    const Scalar& coef = rho(x * dc + y, i);
                    if (coef.is_zero()) continue;
                    Vector p = psi_apply(e, y, a.basis(s));
                    for (std::size_t u = 0; u < da; ++u)
                        for (std::size_t v = 0; v < dc; ++v) {
                            const Scalar& k = p[u * dc + v];
                            if (k.is_zero()) continue;
                            for (std::size_t t = 0; t < dm; ++t)
                                if (!m.right_action(u)(t, x).is_zero())
                                    rhs[t * dc + v] += coef * k * m.right_action(u)(t, x);
                        }
                }
            if (lhs != rhs) {
                w = "at m" + std::to_string(i) + ", " + name_of(a.names(), s, "a");
                break;
            }
        }
    report.record("entwined compatibility", w.empty(), w);
    return report;
}

ValidationReport check_dk(const DKStructure& d) {
    ValidationReport report;
    const Algebra& h = *d.h_algebra;
    const Coring& hc = *d.h_coalgebra;
    const Algebra& a = *d.algebra;
    const Coring& c = *d.coalgebra;
    const Field f = h.field();
    const std::size_t dh = h.dim(), da = a.dim(), dc = c.dim();
    if (hc.dim() != dh || hc.base()->dim() != 1 || c.base()->dim() != 1 || d.algebra_coaction.rows() != da * dh ||
        d.algebra_coaction.cols() != da || d.coalgebra_action.size() != dh) {
        report.fail("shape", "DK data has inconsistent dimensions");
        return report;
    }
    report.merge(check_algebra(h), "H algebra ");
    report.merge(check_coring(hc), "H coalgebra ");
    report.merge(check_algebra(a), "A ");
    report.merge(check_coring(c), "C ");
    if (!report.ok()) return report;

    auto hdelta = [&](const Vector& x) { return hc.delta_ambient(x); };
    auto heps = [&](const Vector& x) { return (hc.epsilon() * x)[0]; };
    // Product in H ⊗ H (or A ⊗ H) of ambient tensors.
    auto tensor_product = [&](const Algebra& l, const Algebra& r, const Vector& x, const Vector& y) {
        const std::size_t dl = l.dim(), dr = r.dim();
        Vector out = zero_vector(f, dl * dr);
        for (std::size_t i = 0; i < dl * dr; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dl * dr; ++j) {
                if (y[j].is_zero()) continue;
                Scalar coef = x[i] * y[j];
                const Vector& pl = l.product(i / dr, j / dr);
                const Vector& pr = r.product(i % dr, j % dr);
                for (std::size_t u = 0; u < dl; ++u)
                    if (!pl[u].is_zero())
                        for (std::size_t v = 0; v < dr; ++v)
                            if (!pr[v].is_zero()) out[u * dr + v] += coef * pl[u] * pr[v];
            }
        }
        return out;
    };

    bool ok = true;
    for (std::size_t i = 0; i < dh && ok; ++i)
        for (std::size_t j = 0; j < dh && ok; ++j)
            ok = hdelta(h.product(i, j)) == tensor_product(h, h, hdelta(h.basis(i)), hdelta(h.basis(j)));
    report.record("H Delta multiplicative", ok, "Delta(gh) != Delta(g)Delta(h)");
    report.record("H Delta unital", hdelta(h.unit()) == ambient_pure(h.unit(), h.unit()), "Delta(1) != 1⊗1");
    ok = heps(h.unit()) == f.one();
    for (std::size_t i = 0; i < dh && ok; ++i)
        for (std::size_t j = 0; j < dh && ok; ++j)
            ok = heps(h.product(i, j)) == heps(h.basis(i)) * heps(h.basis(j));
    report.record("H epsilon multiplicative", ok, "epsilon is not an algebra map");

    const Matrix& rho = d.algebra_coaction;
    Matrix ida = Matrix::identity(f, da);
    // (ρ ⊗ H)ρ = (A ⊗ Δ)ρ in A ⊗ H ⊗ H.
    Matrix a_delta(f, da * dh * dh, da * dh);
    Matrix a_eps(f, da, da * dh);
    for (std::size_t x = 0; x < da; ++x)
        for (std::size_t y = 0; y < dh; ++y) {
            Vector dy = hdelta(h.basis(y));
            for (std::size_t q = 0; q < dh * dh; ++q) a_delta(x * dh * dh + q, x * dh + y) = dy[q];
            a_eps(x, x * dh + y) = heps(h.basis(y));
        }
    report.record("A coaction coassociative", kron(rho, Matrix::identity(f, dh)) * rho == a_delta * rho,
                  "(rho⊗H)rho != (A⊗Delta)rho");
    report.record("A coaction counital", a_eps * rho == ida, "(A⊗epsilon)rho is not the identity");
    ok = rho * a.unit() == ambient_pure(a.unit(), h.unit());
    for (std::size_t i = 0; i < da && ok; ++i)
        for (std::size_t j = 0; j < da && ok; ++j)
            ok = rho * a.product(i, j) == tensor_product(a, h, rho.column(i), rho.column(j));
    report.record("A coaction multiplicative", ok, "rho(ab) != rho(a)rho(b) or rho(1) != 1⊗1");

    const auto& act = d.coalgebra_action;
    auto act_by = [&](const Vector& x) {
        Matrix m(f, dc, dc);
        for (std::size_t s = 0; s < dh; ++s)
            if (!x[s].is_zero()) m += x[s] * act[s];
        return m;
    };
    ok = act_by(h.unit()).is_identity();
    for (std::size_t i = 0; i < dh && ok; ++i)
        for (std::size_t j = 0; j < dh && ok; ++j) ok = act_by(h.product(i, j)) == act[j] * act[i];
    report.record("C action", ok, "the H-action on C is not associative and unital");
    ok = true;
    for (std::size_t ci = 0; ci < dc && ok; ++ci)
        for (std::size_t s = 0; s < dh && ok; ++s) {
            Vector lhs = c.delta_ambient(act[s].column(ci));
            Vector dcv = c.delta_ambient(unit_vector(f, dc, ci));
            Vector dhv = hdelta(h.basis(s));
            Vector rhs = zero_vector(f, dc * dc);
            for (std::size_t p = 0; p < dc * dc; ++p) {
                if (dcv[p].is_zero()) continue;
                for (std::size_t q = 0; q < dh * dh; ++q) {
                    if (dhv[q].is_zero()) continue;
                    rhs = add(rhs, scale(dcv[p] * dhv[q],
                                         ambient_pure(act[q / dh].column(p / dc), act[q % dh].column(p % dc))));
                }
            }
            ok = lhs == rhs && (c.epsilon() * act[s].column(ci))[0] == c.epsilon()(0, ci) * heps(h.basis(s));
        }
    report.record("C module coalgebra", ok, "Delta(ch) != c1h1⊗c2h2 or epsilon(ch) != epsilon(c)epsilon(h)");
    return report;
}

EntwiningStructure entwining_from_dk(const DKStructure& d) {
    ValidationReport report = check_dk(d);
    if (!report.ok()) throw StructureError("invalid DK structure: " + report.failures().front());
    const Algebra& a = *d.algebra;
    const Field f = a.field();
    const std::size_t da = a.dim(), dh = d.h_algebra->dim(), dc = d.coalgebra->dim();
    Matrix psi(f, da * dc, dc * da);
    for (std::size_t c = 0; c < dc; ++c)
        for (std::size_t s = 0; s < da; ++s)
            for (std::size_t x = 0; x < da; ++x)
                for (std::size_t h = 0; h < dh; ++h) {
                    const Scalar& coef = d.algebra_coaction(x * dh + h, s);
                    if (coef.is_zero()) continue;
                    for (std::size_t y = 0; y < dc; ++y)
                        if (!d.coalgebra_action[h](y, c).is_zero())
                            psi(x * dc + y, c * da + s) += coef * d.coalgebra_action[h](y, c);
                }
    return {d.algebra, d.coalgebra, std::move(psi)};
}

GSet GSet::regular(const GroupTable& g) { return {g, g.order(), g.table()}; }

GSet GSet::point(const GroupTable& g) { return {g, 1, std::vector<std::size_t>(g.order(), 0)}; }

ValidationReport check_graded(const GradedData& g) {
    ValidationReport report;
    const GroupTable& grp = g.gset.group;
    const GSet& x = g.gset;
    const Algebra& a = g.algebra.algebra;
    bool ok = x.action.size() == x.size * grp.order();
    for (std::size_t v : x.action) ok = ok && v < x.size;
    for (std::size_t p = 0; p < x.size && ok; ++p) {
        ok = x.act(p, grp.identity()) == p;
        for (std::size_t s = 0; s < grp.order() && ok; ++s)
            for (std::size_t t = 0; t < grp.order() && ok; ++t) ok = x.act(x.act(p, s), t) == x.act(p, grp.op(s, t));
    }
    report.record("G-set action", ok, "x·e = x or (x·g)·h = x·(gh) fails");
    report.merge(check_algebra(a), "algebra ");
    std::string w;
    if (g.algebra.degree.size() != a.dim()) w = "degree list has the wrong length";
    for (auto deg : g.algebra.degree)
        if (w.empty() && deg >= grp.order()) w = "degree out of range";
    for (std::size_t i = 0; i < a.dim() && w.empty(); ++i)
        for (std::size_t j = 0; j < a.dim() && w.empty(); ++j) {
            const std::size_t deg = grp.op(g.algebra.degree[i], g.algebra.degree[j]);
            const Vector& p = a.product(i, j);
            for (std::size_t t = 0; t < a.dim(); ++t)
                if (!p[t].is_zero() && g.algebra.degree[t] != deg) {
                    w = "product of basis elements " + std::to_string(i) + ", " + std::to_string(j) + " is not homogeneous";
                    break;
                }
        }
    for (std::size_t t = 0; t < a.dim() && w.empty(); ++t)
        if (!a.unit()[t].is_zero() && g.algebra.degree[t] != grp.identity()) w = "unit is not of degree e";
    report.record("grading", w.empty(), w);
    return report;
}

DKStructure dk_from_graded(const GradedData& g) {
    ValidationReport report = check_graded(g);
    if (!report.ok()) throw StructureError("invalid graded data: " + report.failures().front());
    const Algebra& a = g.algebra.algebra;
    const Field f = a.field();
    const GroupTable& grp = g.gset.group;
    const std::size_t n = grp.order(), da = a.dim(), nx = g.gset.size;
    GradedAlgebra kg = group_algebra(f, grp);
    auto h = share(kg.algebra);
    auto hc = share(grouplike_coalgebra(f, n, kg.algebra.names()));
    Matrix coaction(f, da * n, da);
    for (std::size_t i = 0; i < da; ++i) coaction(i * n + g.algebra.degree[i], i) = f.one();
    std::vector<std::string> xnames;
    for (std::size_t x = 0; x < nx; ++x) xnames.push_back("x" + std::to_string(x));
    auto c = share(grouplike_coalgebra(f, nx, xnames));
    std::vector<Matrix> action;
    for (std::size_t s = 0; s < n; ++s) {
        Matrix m(f, nx, nx);
        for (std::size_t x = 0; x < nx; ++x) m(g.gset.act(x, s), x) = f.one();
        action.push_back(std::move(m));
    }
    return {h, hc, share(a), std::move(coaction), c, std::move(action)};
}

Coring graded_coring(const GradedData& g) { return coring_from_entwining(entwining_from_dk(dk_from_graded(g))); }

Coring comatrix_coring(const AlgebraPtr& a, std::size_t n) {
    const Field f = a->field();
    const std::size_t da = a->dim();
    Bimodule sigma = Bimodule::free(a, n);       // u_j a_s at j*dA + s
    Bimodule sigma_dual = Bimodule::free(a, n);  // u_i* a_s at i*dA + s
    TensorProduct p(sigma_dual, sigma);
    Bimodule carrier = p.bimodule();
    const std::size_t d = carrier.dim(), nd = n * da;
    auto u = [&](std::size_t k) {
        Vector v = zero_vector(f, nd);
        for (std::size_t s = 0; s < da; ++s) v[k * da + s] = a->unit()[s];
        return v;
    };
    Matrix delta(f, d * d, d);
    for (std::size_t q = 0; q < d; ++q) {
        const std::size_t amb = p.free_coordinate(q);
        Vector fv = unit_vector(f, nd, amb / nd), xv = unit_vector(f, nd, amb % nd);
        Vector acc = zero_vector(f, d * d);
        for (std::size_t k = 0; k < n; ++k) acc = add(acc, ambient_pure(p.pure(fv, u(k)), p.pure(u(k), xv)));
        delta.set_column(q, acc);
    }
    Matrix eps_amb(f, da, nd * nd);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < da; ++s)
            for (std::size_t t = 0; t < da; ++t) eps_amb.set_column((i * da + s) * nd + (i * da + t), a->product(s, t));
    Matrix eps = descend(eps_amb, p);
    return Coring::from_ambient(std::move(carrier), delta, std::move(eps));
}

CoringMorphism comatrix_identification(const CoringPtr& matrix, const CoringPtr& comatrix, std::size_t n) {
    const AlgebraPtr& a = matrix->base();
    const Field f = a->field();
    const std::size_t da = a->dim(), nd = n * da;
    TensorProduct p(Bimodule::free(a, n), Bimodule::free(a, n));
    Matrix phi(f, comatrix->dim(), matrix->dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t s = 0; s < da; ++s) {
                Vector fv = zero_vector(f, nd), xv = zero_vector(f, nd);
                fv[i * da + s] = f.one();
                for (std::size_t t = 0; t < da; ++t) xv[j * da + t] = a->unit()[t];
                phi.set_column((i * n + j) * da + s, p.pure(fv, xv));
            }
    return {matrix, comatrix, std::move(phi), identity_morphism(a)};
}

}  // namespace corings
