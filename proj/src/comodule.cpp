#include "corings/comodule.hpp"

#include <stdexcept>

namespace corings {

namespace {

bool first_difference(const Matrix& a, const Matrix& b, std::size_t& column) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) {
                column = j;
                return true;
            }
    return false;
}

// Solves e * x = b column by column; e has full column rank.
std::optional<Matrix> solve_columns(const Matrix& e, const Matrix& b) {
    Matrix x(e.field(), e.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto col = solve_linear(e, b.column(j));
        if (!col) return std::nullopt;
        x.set_column(j, *col);
    }
    return x;
}

void append(Vector& out, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
}

}  // namespace

Bicomodule::Bicomodule(CoringPtr left, CoringPtr right, Bimodule carrier, Matrix lambda, Matrix rho)
    : left_(std::move(left)), right_(std::move(right)), carrier_(std::move(carrier)),
      lambda_(std::move(lambda)), rho_(std::move(rho)) {
    if (!same_algebra(left_->base(), carrier_.left_algebra()) || !same_algebra(right_->base(), carrier_.right_algebra()))
        throw StructureError("bicomodule: carrier algebras do not match the corings");
    left_tensor_ = tensor_over(left_->carrier(), carrier_);
    right_tensor_ = tensor_over(carrier_, right_->carrier());
    if (lambda_.rows() != left_tensor_->dim() || lambda_.cols() != dim())
        throw DimensionError("bicomodule: lambda has the wrong shape");
    if (rho_.rows() != right_tensor_->dim() || rho_.cols() != dim())
        throw DimensionError("bicomodule: rho has the wrong shape");
}

CoringPtr ground_coring(Field f) { return share(trivial_coring(share(Algebra::ground(f)))); }

bool same_coring(const CoringPtr& a, const CoringPtr& b) {
    if (a == b) return true;
    return a->dim() == b->dim() && same_algebra(a->base(), b->base()) &&
           a->carrier().left_actions() == b->carrier().left_actions() &&
           a->carrier().right_actions() == b->carrier().right_actions() && a->delta() == b->delta() &&
           a->epsilon() == b->epsilon();
}

Bicomodule Bicomodule::right_comodule(const CoringPtr& c, Bimodule carrier, Matrix rho) {
    auto k = ground_coring(c->field());
    auto t = tensor_over(k->carrier(), carrier);
    Matrix lambda(c->field(), t->dim(), carrier.dim());
    for (std::size_t j = 0; j < carrier.dim(); ++j)
        lambda.set_column(j, t->pure(k->base()->unit(), unit_vector(c->field(), carrier.dim(), j)));
    Bicomodule m(k, c, std::move(carrier), std::move(lambda), std::move(rho));
    m.left_trivial_ = true;
    return m;
}

Bicomodule Bicomodule::left_comodule(const CoringPtr& c, Bimodule carrier, Matrix lambda) {
    auto k = ground_coring(c->field());
    auto t = tensor_over(carrier, k->carrier());
    Matrix rho(c->field(), t->dim(), carrier.dim());
    for (std::size_t j = 0; j < carrier.dim(); ++j)
        rho.set_column(j, t->pure(unit_vector(c->field(), carrier.dim(), j), k->base()->unit()));
    Bicomodule m(c, k, std::move(carrier), std::move(lambda), std::move(rho));
    m.right_trivial_ = true;
    return m;
}

Bicomodule Bicomodule::regular(const CoringPtr& c) {
    return Bicomodule(c, c, c->carrier(), c->delta(), c->delta());
}

Bicomodule Bicomodule::regular_right(const CoringPtr& c) {
    return right_comodule(c, c->carrier().forget_left(), c->delta());
}

ValidationReport check_bicomodule(const Bicomodule& m) {
    ValidationReport report;
    ValidationReport bim = check_bimodule(m.carrier());
    report.merge(bim, "carrier ");
    if (!bim.ok()) {
        report.skip("coactions", "carrier is not a bimodule");
        return report;
    }
    const Bimodule& x = m.carrier();
    const Field f = m.field();
    Matrix id = Matrix::identity(f, m.dim());
    std::size_t j = 0;

    auto bilinear = [&](const std::string& name, const Matrix& coaction, const TensorProduct& t) {
        const Bimodule& tb = t.bimodule();
        for (std::size_t s = 0; s < x.left_actions().size(); ++s)
            if (first_difference(coaction * x.left_action(s), tb.left_action(s) * coaction, j)) {
                report.fail(name, "not left linear on basis vector " + std::to_string(j));
                return false;
            }
        for (std::size_t s = 0; s < x.right_actions().size(); ++s)
            if (first_difference(coaction * x.right_action(s), tb.right_action(s) * coaction, j)) {
                report.fail(name, "not right linear on basis vector " + std::to_string(j));
                return false;
            }
        report.pass(name);
        return true;
    };

    bool rho_ok = true, lambda_ok = true;
    if (!m.right_trivial()) {
        const Coring& c = *m.right_coring();
        const TensorProduct& tr = m.right_tensor();
        rho_ok = bilinear("rho bilinear", m.rho(), tr);
        if (rho_ok) {
            Matrix amb(f, m.dim(), tr.ambient_dim());
            for (std::size_t cj = 0; cj < c.dim(); ++cj) {
                Matrix act = x.right_by(c.epsilon().column(cj));
                for (std::size_t i = 0; i < m.dim(); ++i) amb.set_column(tr.ambient_index(i, cj), act.column(i));
            }
            Matrix composite = descend(amb, tr) * m.rho();
            bool bad = first_difference(composite, id, j);
            report.record("rho counit", !bad, bad ? "(M⊗ε)ρ differs from identity on basis vector " + std::to_string(j) : "");
            rho_ok = !bad;

            TensorProduct x1(x, c.tensor2().bimodule());
            TensorProduct x2(tr.bimodule(), c.carrier());
            Matrix assoc = associator(x1, c.tensor2(), x2, tr);
            Matrix lhs = assoc * induced_map(kron(Matrix::identity(f, m.dim()), c.delta()), tr, x1) * m.rho();
            Matrix rhs = induced_map(kron(m.rho(), Matrix::identity(f, c.dim())), tr, x2) * m.rho();
            bad = first_difference(lhs, rhs, j);
            report.record("rho coassociativity", !bad, bad ? "(M⊗Δ)ρ != (ρ⊗C)ρ on basis vector " + std::to_string(j) : "");
            rho_ok = rho_ok && !bad;
        } else {
            report.skip("rho counit", "rho is not bilinear");
            report.skip("rho coassociativity", "rho is not bilinear");
        }
    }
    if (!m.left_trivial()) {
        const Coring& c = *m.left_coring();
        const TensorProduct& tl = m.left_tensor();
        lambda_ok = bilinear("lambda bilinear", m.lambda(), tl);
        if (lambda_ok) {
            Matrix amb(f, m.dim(), tl.ambient_dim());
            for (std::size_t ci = 0; ci < c.dim(); ++ci) {
                Matrix act = x.left_by(c.epsilon().column(ci));
                for (std::size_t jj = 0; jj < m.dim(); ++jj) amb.set_column(tl.ambient_index(ci, jj), act.column(jj));
            }
            Matrix composite = descend(amb, tl) * m.lambda();
            bool bad = first_difference(composite, id, j);
            report.record("lambda counit", !bad,
                          bad ? "(ε⊗M)λ differs from identity on basis vector " + std::to_string(j) : "");
            lambda_ok = !bad;

            TensorProduct y1(c.carrier(), tl.bimodule());
            TensorProduct y2(c.tensor2().bimodule(), x);
            Matrix assoc = associator(y1, tl, y2, c.tensor2());
            Matrix lhs = assoc * induced_map(kron(Matrix::identity(f, c.dim()), m.lambda()), tl, y1) * m.lambda();
            Matrix rhs = induced_map(kron(c.delta(), Matrix::identity(f, m.dim())), tl, y2) * m.lambda();
            bad = first_difference(lhs, rhs, j);
            report.record("lambda coassociativity", !bad,
                          bad ? "(C'⊗λ)λ != (Δ'⊗M)λ on basis vector " + std::to_string(j) : "");
            lambda_ok = lambda_ok && !bad;
        } else {
            report.skip("lambda counit", "lambda is not bilinear");
            report.skip("lambda coassociativity", "lambda is not bilinear");
        }
    }
    if (!m.left_trivial() && !m.right_trivial()) {
        if (rho_ok && lambda_ok) {
            const TensorProduct& tl = m.left_tensor();
            const TensorProduct& tr = m.right_tensor();
            const Coring& cl = *m.left_coring();
            const Coring& cr = *m.right_coring();
            TensorProduct z1(cl.carrier(), tr.bimodule());
            TensorProduct z2(tl.bimodule(), cr.carrier());
            Matrix assoc = associator(z1, tr, z2, tl);
            Matrix lhs = induced_map(kron(m.lambda(), Matrix::identity(f, cr.dim())), tr, z2) * m.rho();
            Matrix rhs = assoc * induced_map(kron(Matrix::identity(f, cl.dim()), m.rho()), tl, z1) * m.lambda();
            bool bad = first_difference(lhs, rhs, j);
            report.record("coaction compatibility", !bad,
                          bad ? "(λ⊗C)ρ != (C'⊗ρ)λ on basis vector " + std::to_string(j) : "");
        } else {
            report.skip("coaction compatibility", "a coaction failed its own axioms");
        }
    }
    return report;
}

ValidationReport check_bicomodule_morphism(const Bicomodule& m, const Bicomodule& n, const Matrix& f) {
    ValidationReport report;
    if (f.rows() != n.dim() || f.cols() != m.dim()) {
        report.fail("shape", "map has the wrong shape");
        return report;
    }
    std::size_t j = 0;
    bool linear = true;
    for (std::size_t s = 0; s < m.carrier().left_actions().size() && linear; ++s)
        linear = !first_difference(f * m.carrier().left_action(s), n.carrier().left_action(s) * f, j);
    for (std::size_t s = 0; s < m.carrier().right_actions().size() && linear; ++s)
        linear = !first_difference(f * m.carrier().right_action(s), n.carrier().right_action(s) * f, j);
    report.record("bilinear", linear, "fails on basis vector " + std::to_string(j));
    if (!linear) {
        report.skip("right colinear", "map is not bilinear");
        report.skip("left colinear", "map is not bilinear");
        return report;
    }
    const Field k = m.field();
    Matrix rr = induced_map(kron(f, Matrix::identity(k, m.right_coring()->dim())), m.right_tensor(), n.right_tensor());
    bool bad = first_difference(n.rho() * f, rr * m.rho(), j);
    report.record("right colinear", !bad, "fails on basis vector " + std::to_string(j));
    Matrix ll = induced_map(kron(Matrix::identity(k, m.left_coring()->dim()), f), m.left_tensor(), n.left_tensor());
    bad = first_difference(n.lambda() * f, ll * m.lambda(), j);
    report.record("left colinear", !bad, "fails on basis vector " + std::to_string(j));
    return report;
}

std::vector<Matrix> bicomodule_hom_space(const Bicomodule& m, const Bicomodule& n) {
    if (!same_coring(m.left_coring(), n.left_coring()) || !same_coring(m.right_coring(), n.right_coring()))
        throw StructureError("bicomodule hom space: corings differ");
    const Field k = m.field();
    const std::size_t dm = m.dim(), dn = n.dim();
    const std::size_t dcl = m.left_coring()->dim(), dcr = m.right_coring()->dim();
    Matrix idl = Matrix::identity(k, dcl), idr = Matrix::identity(k, dcr);
    auto unpack = [&](const Vector& x) {
        Matrix f(k, dn, dm);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) f(r, c) = x[r * dm + c];
        return f;
    };
    auto residual = [&](const Vector& x) {
        Matrix f = unpack(x);
        Vector out;
        for (std::size_t s = 0; s < m.carrier().left_actions().size(); ++s)
            append(out, f * m.carrier().left_action(s) - n.carrier().left_action(s) * f);
        for (std::size_t s = 0; s < m.carrier().right_actions().size(); ++s)
            append(out, f * m.carrier().right_action(s) - n.carrier().right_action(s) * f);
        if (!m.right_trivial())
            append(out, n.rho() * f -
                            restrict_to_section(n.right_tensor().project() * kron(f, idr), m.right_tensor()) * m.rho());
        if (!m.left_trivial())
            append(out, n.lambda() * f -
                            restrict_to_section(n.left_tensor().project() * kron(idl, f), m.left_tensor()) * m.lambda());
        return out;
    };
    const std::size_t len = residual(zero_vector(k, dn * dm)).size();
    auto kernel = kernel_basis(matrix_of(k, dn * dm, len, residual));
    std::vector<Matrix> out;
    for (const auto& v : kernel) out.push_back(unpack(v));
    return out;
}

IsoSearchResult bicomodule_iso_exists(const Bicomodule& m, const Bicomodule& n, SearchBudget budget,
                                      std::uint64_t seed) {
    IsoSearchResult out;
    if (m.dim() != n.dim()) {
        out.status = SearchStatus::certified_none;
        return out;
    }
    auto basis = bicomodule_hom_space(m, n);
    auto search = find_nonsingular_combination(basis, budget, seed);
    out.status = search.status;
    out.certainty = search.certainty;
    if (search.status == SearchStatus::witness) {
        Matrix iso(m.field(), n.dim(), m.dim());
        for (std::size_t i = 0; i < basis.size(); ++i) iso += (*search.witness)[i] * basis[i];
        if (!is_nonsingular(iso) || !check_bicomodule_morphism(m, n, iso).ok())
            throw std::logic_error("bicomodule_iso_exists: witness failed verification");
        out.iso = std::move(iso);
    }
    return out;
}

CotensorResult cotensor(const Bicomodule& m, const Bicomodule& n) {
    if (!same_coring(m.right_coring(), n.left_coring())) throw StructureError("cotensor: middle corings differ");
    const Field k = m.field();
    const Coring& cl = *m.left_coring();
    const Coring& cr = *n.right_coring();
    auto t = tensor_over(m.carrier(), n.carrier());
    const TensorProduct& tmc = m.right_tensor();
    const TensorProduct& tcn = n.left_tensor();
    TensorProduct x(tmc.bimodule(), n.carrier());
    TensorProduct y(m.carrier(), tcn.bimodule());
    Matrix idm = Matrix::identity(k, m.dim()), idn = Matrix::identity(k, n.dim());
    Matrix omega = induced_map(kron(m.rho(), idn), *t, x) -
                   associator(y, tcn, x, tmc) * induced_map(kron(idm, n.lambda()), *t, y);
    auto kernel = kernel_basis(omega);
    Matrix e = Matrix::from_columns(k, t->dim(), kernel);
    if (kernel.empty()) e = Matrix(k, t->dim(), 0);

    const Bimodule& tb = t->bimodule();
    auto restrict_action = [&](const Matrix& action) {
        auto r = solve_columns(e, action * e);
        if (!r) throw std::logic_error("cotensor: kernel is not stable under the algebra actions");
        return *r;
    };
    std::vector<Matrix> left, right;
    for (const auto& a : tb.left_actions()) left.push_back(restrict_action(a));
    for (const auto& a : tb.right_actions()) right.push_back(restrict_action(a));
    Bimodule kb(tb.left_algebra(), tb.right_algebra(), kernel.size(), std::move(left), std::move(right));

    // λ on M ⊗ N is (λ_M ⊗ N) followed by (C' ⊗ M) ⊗ N -> C' ⊗ (M ⊗ N).
    const TensorProduct& tlm = m.left_tensor();
    TensorProduct v(tlm.bimodule(), n.carrier());
    TensorProduct w(cl.carrier(), tb);
    auto w_to_v = inverse(associator(w, *t, v, tlm));
    if (!w_to_v) throw std::logic_error("cotensor: associator is not invertible");
    Matrix lambda_t = *w_to_v * induced_map(kron(m.lambda(), idn), *t, v);
    TensorProduct tck(cl.carrier(), kb);
    Matrix ce = induced_map(kron(Matrix::identity(k, cl.dim()), e), tck, w);
    auto lambda_k = solve_columns(ce, lambda_t * e);

    const TensorProduct& tnr = n.right_tensor();
    TensorProduct u(tb, cr.carrier());
    TensorProduct z(m.carrier(), tnr.bimodule());
    Matrix rho_t = associator(z, tnr, u, *t) * induced_map(kron(idm, n.rho()), *t, z);
    TensorProduct tkc(kb, cr.carrier());
    Matrix ec = induced_map(kron(e, Matrix::identity(k, cr.dim())), tkc, u);
    auto rho_k = solve_columns(ec, rho_t * e);
    if (!lambda_k || !rho_k) throw std::logic_error("cotensor: kernel is not a sub-bicomodule");

    Bicomodule induced(m.left_coring(), n.right_coring(), std::move(kb), std::move(*lambda_k), std::move(*rho_k));
    induced.left_trivial_ = m.left_trivial();
    induced.right_trivial_ = n.right_trivial();
    auto report = check_bicomodule(induced);
    if (!report.ok()) throw std::logic_error("cotensor: induced structure fails the axioms:\n" + report.summary());
    return {m, n, t, std::move(e), std::move(induced)};
}

Matrix cotensor_left_unit(const CotensorResult& r) {
    const Coring& c = *r.left_factor.right_coring();
    const Bimodule& nb = r.right_factor.carrier();
    if (r.left_factor.dim() != c.dim()) throw StructureError("cotensor_left_unit: left factor is not the coring");
    const TensorProduct& t = *r.tensor;
    Matrix amb(c.field(), nb.dim(), t.ambient_dim());
    for (std::size_t i = 0; i < c.dim(); ++i) {
        Matrix act = nb.left_by(c.epsilon().column(i));
        for (std::size_t j = 0; j < nb.dim(); ++j) amb.set_column(t.ambient_index(i, j), act.column(j));
    }
    return descend(amb, t) * r.embedding;
}

Matrix cotensor_right_unit(const CotensorResult& r) {
    const Coring& c = *r.right_factor.left_coring();
    const Bimodule& mb = r.left_factor.carrier();
    if (r.right_factor.dim() != c.dim()) throw StructureError("cotensor_right_unit: right factor is not the coring");
    const TensorProduct& t = *r.tensor;
    Matrix amb(c.field(), mb.dim(), t.ambient_dim());
    for (std::size_t j = 0; j < c.dim(); ++j) {
        Matrix act = mb.right_by(c.epsilon().column(j));
        for (std::size_t i = 0; i < mb.dim(); ++i) amb.set_column(t.ambient_index(i, j), act.column(i));
    }
    return descend(amb, t) * r.embedding;
}

Bicomodule twisted_bicomodule(const CoringMorphism& f) {
    if (!is_isomorphism(f)) throw StructureError("twisted bicomodule: morphism is not an isomorphism");
    const Coring& c = *f.source;
    const Coring& d = *f.target;
    auto rho_inv = inverse(f.rho.matrix);
    std::vector<Matrix> left;
    for (std::size_t t = 0; t < d.base()->dim(); ++t) left.push_back(c.carrier().left_by(rho_inv->column(t)));
    Bimodule x(d.base(), c.base(), c.dim(), std::move(left), c.carrier().right_actions());
    TensorProduct dx(d.carrier(), x);
    Matrix lambda = induced_map(kron(f.phi, Matrix::identity(c.field(), c.dim())), c.tensor2(), dx) * c.delta();
    TensorProduct xc(x, c.carrier());
    Matrix rho = xc.project() * c.tensor2().section() * c.delta();
    Bicomodule out(f.target, f.source, std::move(x), std::move(lambda), std::move(rho));
    auto report = check_bicomodule(out);
    if (!report.ok()) throw StructureError("twisted bicomodule fails the axioms:\n" + report.summary());
    return out;
}

}  // namespace corings
