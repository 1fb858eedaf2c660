#include "corings/linalg.hpp"

namespace corings {

Echelon echelon(Matrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const Field f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix reduced(f, pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) reduced(i, j) = a(i, j);
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return echelon(a).rank(); }

std::vector<Vector> kernel_basis(const Matrix& a) {
    Echelon e = echelon(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(a.field(), n);
        v[free] = a.field().one();
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rref(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size())
        throw DimensionError("solve_linear: matrix has " + std::to_string(a.rows()) +
                             " rows but right-hand side has length " + std::to_string(b.size()));
    const Field f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i].in(f);
    }
    Echelon e = echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vector x = zero_vector(f, a.cols());
    for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.rref(i, a.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) return std::nullopt;
    const std::size_t n = a.rows();
    const Field f = a.field();
    if (n == 0) return Matrix(f, 0, 0);
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = f.one();
    }
    Echelon e = echelon(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

Scalar determinant(Matrix a) {
    if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    Scalar det = a.field().one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return a.field().zero();
        if (p != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        Scalar inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar factor = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!a(c, j).is_zero()) a(i, j) -= factor * a(c, j);
        }
    }
    return det;
}

bool is_nonsingular(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

bool reduce_by_rows(const Echelon& e, Vector& v) {
    for (std::size_t i = 0; i < e.rank(); ++i) {
        const std::size_t p = e.pivots[i];
        if (v[p].is_zero()) continue;
        Scalar factor = v[p];
        for (std::size_t j = p; j < v.size(); ++j)
            if (!e.rref(i, j).is_zero()) v[j] -= factor * e.rref(i, j);
    }
    return is_zero(v);
}

Matrix matrix_of(Field f, std::size_t domain_dim, std::size_t codomain_dim,
                 const std::function<Vector(const Vector&)>& map) {
    Matrix m(f, codomain_dim, domain_dim);
    for (std::size_t j = 0; j < domain_dim; ++j) {
        Vector image = map(unit_vector(f, domain_dim, j));
        if (image.size() != codomain_dim) throw DimensionError("matrix_of: wrong image length");
        m.set_column(j, image);
    }
    return m;
}

std::vector<Vector> independent_subset(Field f, const std::vector<Vector>& vs) {
    if (vs.empty()) return {};
    Matrix m = Matrix::from_columns(f, vs[0].size(), vs);
    Echelon e = echelon(m);
    std::vector<Vector> out;
    for (auto p : e.pivots) out.push_back(vs[p]);
    return out;
}

}  // namespace corings
