#include "corings/convolution.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace corings {

namespace {

Vector flatten(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

Matrix unflatten(Field f, std::size_t rows, std::size_t cols, const Vector& v) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
    return m;
}

// Maps p: C -> A with p * action_C(s) = mult_A(s) * p for every s.
std::vector<Matrix> linear_maps(const Coring& c, bool right) {
    const Field f = c.field();
    const Algebra& a = *c.base();
    const std::size_t da = a.dim(), d = c.dim();
    auto residual = [&](const Vector& x) {
        Matrix p = unflatten(f, da, d, x);
        Vector out;
        for (std::size_t s = 0; s < da; ++s) {
            Matrix r = right ? p * c.carrier().right_action(s) - a.right_mult(s) * p
                             : p * c.carrier().left_action(s) - a.left_mult(s) * p;
            Vector v = flatten(r);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    };
    auto kernel = kernel_basis(matrix_of(f, da * d, da * da * d, residual));
    std::vector<Matrix> out;
    for (const auto& v : kernel) out.push_back(unflatten(f, da, d, v));
    return out;
}

DualPtr build_dual(const CoringPtr& cp, DualSide side) {
    const Coring& c = *cp;
    const Field f = c.field();
    auto basis = side == DualSide::right ? right_linear_maps(c) : left_linear_maps(c);
    DualAlgebra out{cp, side, basis, nullptr, nullptr};
    const std::size_t n = basis.size();
    auto coords = [&](const Matrix& p) {
        auto x = out.coordinates(p);
        if (!x) throw std::logic_error("dual algebra: product left the hom space");
        return *x;
    };
    std::vector<Vector> products;
    products.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            products.push_back(coords(side == DualSide::right ? convolve_right(c, basis[i], basis[j])
                                                              : convolve_left(c, basis[i], basis[j])));
    Algebra alg(f, n, std::move(products), coords(c.epsilon()));
    if (!check_algebra(alg).ok()) throw std::logic_error("dual algebra: convolution is not associative and unital");
    out.opposite = share(alg.opposite());
    out.algebra = share(std::move(alg));
    return std::make_shared<const DualAlgebra>(std::move(out));
}

DualPtr memoized(const CoringPtr& c, DualSide side) {
    struct Entry {
        std::weak_ptr<const Coring> coring;
        DualPtr dual;
    };
    static std::mutex mutex;
    static std::map<std::pair<const Coring*, DualSide>, Entry> cache;
    const auto key = std::make_pair(c.get(), side);
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second.coring.lock() == c) return it->second.dual;
    }
    DualPtr dual = build_dual(c, side);
    std::lock_guard lock(mutex);
    for (auto it = cache.begin(); it != cache.end();)
        it = it->second.coring.expired() ? cache.erase(it) : std::next(it);
    cache[key] = {c, dual};
    return dual;
}

}  // namespace

std::optional<Vector> DualAlgebra::coordinates(const Matrix& p) const {
    const Field f = coring->field();
    const std::size_t len = coring->base()->dim() * coring->dim();
    if (p.rows() * p.cols() != len) throw DimensionError("dual element has the wrong shape");
    if (basis.empty()) return p.is_zero() ? std::optional<Vector>(Vector{}) : std::nullopt;
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    return solve_linear(Matrix::from_columns(f, len, cols), flatten(p));
}

Matrix DualAlgebra::element(const Vector& coords) const {
    Matrix out(coring->field(), coring->base()->dim(), coring->dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!coords[i].is_zero()) out += coords[i] * basis[i];
    return out;
}

std::vector<Matrix> right_linear_maps(const Coring& c) { return linear_maps(c, true); }
std::vector<Matrix> left_linear_maps(const Coring& c) { return linear_maps(c, false); }

Matrix convolve_right(const Coring& c, const Matrix& f, const Matrix& g) {
    const std::size_t d = c.dim();
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < d; ++i) act.push_back(c.carrier().left_by(g.column(i)));
    Matrix out(c.field(), f.rows(), d);
    for (std::size_t k = 0; k < d; ++k) {
        Vector amb = c.delta_ambient(unit_vector(c.field(), d, k));
        Vector acc = zero_vector(c.field(), d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!amb[i * d + j].is_zero()) axpy(acc, amb[i * d + j], act[i].column(j));
        out.set_column(k, f * acc);
    }
    return out;
}

Matrix convolve_left(const Coring& c, const Matrix& f, const Matrix& g) {
    const std::size_t d = c.dim();
    std::vector<Matrix> act;
    for (std::size_t j = 0; j < d; ++j) act.push_back(c.carrier().right_by(f.column(j)));
    Matrix out(c.field(), g.rows(), d);
    for (std::size_t k = 0; k < d; ++k) {
        Vector amb = c.delta_ambient(unit_vector(c.field(), d, k));
        Vector acc = zero_vector(c.field(), d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!amb[i * d + j].is_zero()) axpy(acc, amb[i * d + j], act[j].column(i));
        out.set_column(k, g * acc);
    }
    return out;
}

DualPtr right_dual_algebra(const CoringPtr& c) { return memoized(c, DualSide::right); }
DualPtr left_dual_algebra(const CoringPtr& c) { return memoized(c, DualSide::left); }

std::optional<Matrix> convolution_inverse(const CoringPtr& c, const Matrix& p) {
    DualPtr dual = right_dual_algebra(c);
    auto x = dual->coordinates(p);
    if (!x) throw StructureError("convolution inverse: map is not right A-linear");
    const Algebra& r = *dual->algebra;
    const std::size_t n = r.dim();
    Matrix left = r.right_mult_by(*x), right = r.left_mult_by(*x);  // y -> y x and y -> x y
    Matrix system(r.field(), 2 * n, n);
    Vector rhs(2 * n, r.field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        system.set_row(i, left.row(i));
        system.set_row(n + i, right.row(i));
        rhs[i] = rhs[n + i] = r.unit()[i];
    }
    auto y = solve_linear(system, rhs);
    if (!y) return std::nullopt;
    Matrix q = dual->element(*y);
    if (convolve_right(*c, q, p) != c->epsilon() || convolve_right(*c, p, q) != c->epsilon())
        throw std::logic_error("convolution inverse failed verification");
    return q;
}

Bimodule comodule_to_dual_module(const Bicomodule& m) {
    const CoringPtr& cp = m.right_coring();
    if (!is_projective_left(cp->carrier()))
        throw StructureError("comodule to dual module: C is not projective as a left A-module");
    DualPtr dual = left_dual_algebra(cp);
    const Bimodule& x = m.carrier();
    const std::size_t dm = x.dim(), d = cp->dim();
    const TensorProduct& t = m.right_tensor();
    std::vector<Vector> amb;
    for (std::size_t i = 0; i < dm; ++i) amb.push_back(t.lift(m.rho().column(i)));
    std::vector<Matrix> actions;
    for (const auto& f : dual->basis) {
        std::vector<Matrix> act;
        for (std::size_t y = 0; y < d; ++y) act.push_back(x.right_by(f.column(y)));
        Matrix a(m.field(), dm, dm);
        for (std::size_t i = 0; i < dm; ++i) {
            Vector acc = zero_vector(m.field(), dm);
            for (std::size_t u = 0; u < dm; ++u)
                for (std::size_t y = 0; y < d; ++y)
                    if (!amb[i][u * d + y].is_zero()) axpy(acc, amb[i][u * d + y], act[y].column(u));
            a.set_column(i, acc);
        }
        actions.push_back(std::move(a));
    }
    Bimodule out = Bimodule::right_module(dual->algebra, dm, std::move(actions));
    if (!check_bimodule(out).ok()) throw std::logic_error("comodule to dual module: module axioms fail");
    return out;
}

}  // namespace corings
