#include "corings/tensor.hpp"

namespace corings {

namespace {

Echelon balancing_relations(const Bimodule& m, const Bimodule& n) {
    if (!same_algebra(m.right_algebra(), n.left_algebra()))
        throw StructureError("tensor product: right algebra of M differs from left algebra of N");
    const Field f = m.field();
    const std::size_t dm = m.dim(), dn = n.dim(), da = m.right_algebra()->dim();
    Matrix rel(f, dm * da * dn, dm * dn);
    std::size_t row = 0;
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t s = 0; s < da; ++s) {
            const Matrix& ra = m.right_action(s);
            const Matrix& la = n.left_action(s);
            for (std::size_t j = 0; j < dn; ++j, ++row) {
                for (std::size_t r = 0; r < dm; ++r)
                    if (!ra(r, i).is_zero()) rel(row, r * dn + j) += ra(r, i);
                for (std::size_t r = 0; r < dn; ++r)
                    if (!la(r, j).is_zero()) rel(row, i * dn + r) -= la(r, j);
            }
        }
    return echelon(std::move(rel));
}

std::vector<std::size_t> free_columns(const Echelon& e, std::size_t n) {
    std::vector<bool> pivot(n, false);
    for (auto p : e.pivots) pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n; ++j)
        if (!pivot[j]) out.push_back(j);
    return out;
}

Matrix projection(Field f, const Echelon& e, const std::vector<std::size_t>& free, std::size_t n) {
    Matrix p(f, free.size(), n);
    for (std::size_t k = 0; k < free.size(); ++k) {
        p(k, free[k]) = f.one();
        for (std::size_t r = 0; r < e.rank(); ++r) p(k, e.pivots[r]) = -e.rref(r, free[k]);
    }
    return p;
}

// Induced actions, computed column by column on the quotient basis so that the
// ambient Kronecker matrices are never formed.
Bimodule quotient_bimodule(const Bimodule& m, const Bimodule& n, const std::vector<std::size_t>& free,
                           const Matrix& project) {
    const Field f = m.field();
    const std::size_t q = free.size(), dn = n.dim();
    auto build = [&](const Matrix& action, bool on_left) {
        Matrix out(f, q, q);
        for (std::size_t k = 0; k < q; ++k) {
            const std::size_t i = free[k] / dn, j = free[k] % dn;
            const std::size_t len = on_left ? m.dim() : dn;
            for (std::size_t r = 0; r < len; ++r) {
                const Scalar& c = on_left ? action(r, i) : action(r, j);
                if (c.is_zero()) continue;
                const std::size_t col = on_left ? r * dn + j : i * dn + r;
                for (std::size_t t = 0; t < q; ++t)
                    if (!project(t, col).is_zero()) out(t, k) += c * project(t, col);
            }
        }
        return out;
    };
    std::vector<Matrix> left, right;
    for (const auto& a : m.left_actions()) left.push_back(build(a, true));
    for (const auto& a : n.right_actions()) right.push_back(build(a, false));
    return Bimodule(m.left_algebra(), n.right_algebra(), q, std::move(left), std::move(right));
}

void check_kills(const Matrix& image_of, const TensorProduct& src, const std::string& what) {
    const Echelon& rel = src.relations();
    for (std::size_t r = 0; r < rel.rank(); ++r) {
        Vector v = rel.rref.row(r);
        if (!is_zero(image_of * v)) throw BalancednessError(what + ": map is not balanced on relation " + to_string(v), v);
    }
}

}  // namespace

TensorProduct::TensorProduct(Bimodule m, Bimodule n)
    : m_(std::move(m)), n_(std::move(n)),
      relations_(balancing_relations(m_, n_)),
      free_(free_columns(relations_, m_.dim() * n_.dim())),
      project_(projection(m_.field(), relations_, free_, m_.dim() * n_.dim())),
      bimodule_(quotient_bimodule(m_, n_, free_, project_)) {}

Matrix TensorProduct::section() const {
    Matrix s(field(), ambient_dim(), dim());
    for (std::size_t k = 0; k < dim(); ++k) s(free_[k], k) = field().one();
    return s;
}

Vector TensorProduct::lift(const Vector& q) const {
    Vector v = zero_vector(field(), ambient_dim());
    for (std::size_t k = 0; k < dim(); ++k) v[free_[k]] = q[k];
    return v;
}

Vector TensorProduct::pure(const Vector& m, const Vector& n) const {
    Vector amb = zero_vector(field(), ambient_dim());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].is_zero()) continue;
        for (std::size_t j = 0; j < n.size(); ++j)
            if (!n[j].is_zero()) amb[ambient_index(i, j)] = m[i] * n[j];
    }
    return project(amb);
}

bool TensorProduct::is_relation(const Vector& ambient) const { return is_zero(project(ambient)); }

namespace {

Matrix restrict_columns(const Matrix& a, const TensorProduct& src) {
    Matrix out(a.field(), a.rows(), src.dim());
    for (std::size_t k = 0; k < src.dim(); ++k) {
        const std::size_t c = src.free_coordinate(k);
        for (std::size_t r = 0; r < a.rows(); ++r) out(r, k) = a(r, c);
    }
    return out;
}

}  // namespace

Matrix induced_map(const Matrix& f, const TensorProduct& src, const TensorProduct& dst) {
    if (f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim())
        throw DimensionError("induced_map: ambient map has the wrong shape");
    Matrix pf = dst.project() * f;
    check_kills(pf, src, "induced_map");
    return restrict_columns(pf, src);
}

Matrix restrict_to_section(const Matrix& f, const TensorProduct& src) { return restrict_columns(f, src); }

Matrix descend(const Matrix& f, const TensorProduct& src) {
    if (f.cols() != src.ambient_dim()) throw DimensionError("descend: ambient map has the wrong shape");
    check_kills(f, src, "descend");
    return restrict_columns(f, src);
}

Matrix left_unit_map(const TensorProduct& am) {
    const Bimodule& m = am.right();
    Matrix f(am.field(), m.dim(), am.ambient_dim());
    for (std::size_t s = 0; s < m.left_algebra()->dim(); ++s)
        for (std::size_t j = 0; j < m.dim(); ++j) f.set_column(am.ambient_index(s, j), m.left_action(s).column(j));
    return descend(f, am);
}

Matrix right_unit_map(const TensorProduct& ma) {
    const Bimodule& m = ma.left();
    Matrix f(ma.field(), m.dim(), ma.ambient_dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t s = 0; s < m.right_algebra()->dim(); ++s)
            f.set_column(ma.ambient_index(i, s), m.right_action(s).column(i));
    return descend(f, ma);
}

Matrix associator(const TensorProduct& m_np, const TensorProduct& np, const TensorProduct& mn_p,
                  const TensorProduct& mn) {
    const Field f = m_np.field();
    const std::size_t dm = mn.left().dim(), dn = mn.right().dim(), dp = np.right().dim();
    if (m_np.left().dim() != dm || m_np.right().dim() != np.dim() || mn_p.left().dim() != mn.dim() ||
        mn_p.right().dim() != dp || np.left().dim() != dn)
        throw DimensionError("associator: factors do not match");
    // m_i ⊗ [t] -> sum over lift(t) = n_j ⊗ p_l of [m_i ⊗ n_j] ⊗ p_l.
    Matrix amb(f, mn_p.ambient_dim(), m_np.ambient_dim());
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t k = 0; k < np.dim(); ++k) {
            const std::size_t nl = np.free_coordinate(k);
            const std::size_t j = nl / dp, l = nl % dp;
            const std::size_t src = m_np.ambient_index(i, k);
            const std::size_t mn_col = mn.ambient_index(i, j);
            for (std::size_t u = 0; u < mn.dim(); ++u) {
                const Scalar& c = mn.project()(u, mn_col);
                if (!c.is_zero()) amb(mn_p.ambient_index(u, l), src) = c;
            }
        }
    return induced_map(amb, m_np, mn_p);
}

}  // namespace corings
