#include "corings/algebra.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace corings {

namespace {

std::string basis_name(const Algebra& a, std::size_t i) {
    if (i < a.names().size()) return a.names()[i];
    return "e" + std::to_string(i);
}

}  // namespace

Algebra::Algebra(Field f, std::size_t dim, std::vector<Vector> products, Vector unit,
                 std::vector<std::string> names)
    : field_(f), dim_(dim), products_(std::move(products)), unit_(std::move(unit)), names_(std::move(names)) {
    if (products_.size() != dim_ * dim_) throw DimensionError("algebra: need dim^2 structure-constant vectors");
    if (unit_.size() != dim_) throw DimensionError("algebra: unit has wrong length");
    for (auto& v : products_) {
        if (v.size() != dim_) throw DimensionError("algebra: structure-constant vector has wrong length");
        for (auto& s : v) s = s.in(f);
    }
    for (auto& s : unit_) s = s.in(f);
    left_.reserve(dim_);
    right_.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Matrix l(f, dim_, dim_), r(f, dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            l.set_column(j, product(i, j));
            r.set_column(j, product(j, i));
        }
        left_.push_back(std::move(l));
        right_.push_back(std::move(r));
    }
}

Algebra Algebra::ground(Field f) { return Algebra(f, 1, {Vector{f.one()}}, Vector{f.one()}, {"1"}); }

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw DimensionError("algebra multiply: wrong length");
    Vector r = zero_vector(field_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            axpy(r, x[i] * y[j], product(i, j));
        }
    }
    return r;
}

Matrix Algebra::left_mult_by(const Vector& a) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!a[i].is_zero()) m += a[i] * left_[i];
    return m;
}

Matrix Algebra::right_mult_by(const Vector& a) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!a[i].is_zero()) m += a[i] * right_[i];
    return m;
}

Algebra Algebra::opposite() const {
    std::vector<Vector> prods(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) prods[i * dim_ + j] = product(j, i);
    return Algebra(field_, dim_, std::move(prods), unit_, names_);
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

ValidationReport check_algebra(const Algebra& a) {
    ValidationReport report;
    const std::size_t n = a.dim();
    bool assoc_ok = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector lhs = a.right_mult(k) * ij;
                Vector rhs = a.left_mult(i) * a.product(j, k);
                if (lhs != rhs) {
                    assoc_ok = false;
                    report.fail("associativity(" + basis_name(a, i) + "," + basis_name(a, j) + "," +
                                    basis_name(a, k) + ")",
                                "(xy)z = " + to_string(lhs) + " but x(yz) = " + to_string(rhs));
                }
            }
        }
    if (assoc_ok) report.pass("associativity");
    bool unit_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        Vector e = a.basis(i);
        if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) {
            unit_ok = false;
            report.fail("unit(" + basis_name(a, i) + ")", "1*x or x*1 differs from x");
        }
    }
    if (unit_ok) report.pass("unit");
    return report;
}

Algebra matrix_algebra(Field f, std::size_t n) {
    const std::size_t d = n * n;
    std::vector<Vector> prods(d * d, zero_vector(f, d));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
            for (std::size_t l = 0; l < n; ++l) prods[(i * n + j) * d + (j * n + l)][i * n + l] = f.one();
        }
    Vector unit = zero_vector(f, d);
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
    return Algebra(f, d, std::move(prods), std::move(unit), std::move(names));
}

Algebra truncated_polynomial_algebra(Field f, std::size_t n) {
    std::vector<Vector> prods(n * n, zero_vector(f, n));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) prods[i * n + j][i + j] = f.one();
    }
    return Algebra(f, n, std::move(prods), unit_vector(f, n, 0), std::move(names));
}

GroupTable::GroupTable(std::size_t order, std::vector<std::size_t> table)
    : order_(order), table_(std::move(table)), inverse_(order) {
    if (order_ == 0) throw StructureError("group: empty table");
    if (table_.size() != order_ * order_) throw StructureError("group: table must have order^2 entries");
    for (auto v : table_)
        if (v >= order_) throw StructureError("group: table entry out of range");
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b)
            for (std::size_t c = 0; c < order_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw StructureError("group: not associative at (" + std::to_string(a) + "," +
                                         std::to_string(b) + "," + std::to_string(c) + ")");
    bool found = false;
    for (std::size_t e = 0; e < order_ && !found; ++e) {
        bool is_identity = true;
        for (std::size_t g = 0; g < order_; ++g)
            if (op(e, g) != g || op(g, e) != g) {
                is_identity = false;
                break;
            }
        if (is_identity) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) throw StructureError("group: no identity element");
    for (std::size_t g = 0; g < order_; ++g) {
        bool has_inverse = false;
        for (std::size_t h = 0; h < order_; ++h)
            if (op(g, h) == identity_ && op(h, g) == identity_) {
                inverse_[g] = h;
                has_inverse = true;
                break;
            }
        if (!has_inverse) throw StructureError("group: element " + std::to_string(g) + " has no inverse");
    }
}

GroupTable GroupTable::cyclic(std::size_t n) {
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return GroupTable(n, std::move(t));
}

GroupTable GroupTable::symmetric3() {
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<std::size_t, 3>& q) {
        return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::size_t> t(36);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> c{};
            for (std::size_t x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            t[a * 6 + b] = index(c);
        }
    return GroupTable(6, std::move(t));
}

GradedAlgebra group_algebra(Field f, const GroupTable& g) {
    const std::size_t n = g.order();
    std::vector<Vector> prods(n * n);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back("g" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) prods[a * n + b] = unit_vector(f, n, g.op(a, b));
    }
    std::vector<std::size_t> degree(n);
    for (std::size_t a = 0; a < n; ++a) degree[a] = a;
    return {Algebra(f, n, std::move(prods), unit_vector(f, n, g.identity()), std::move(names)), std::move(degree)};
}

ValidationReport check_algebra_morphism(const AlgebraMorphism& m) {
    ValidationReport report;
    const Algebra& s = *m.source;
    const Algebra& t = *m.target;
    if (m.matrix.rows() != t.dim() || m.matrix.cols() != s.dim()) {
        report.fail("shape", "matrix is " + std::to_string(m.matrix.rows()) + "x" + std::to_string(m.matrix.cols()));
        return report;
    }
    report.record("unital", m.apply(s.unit()) == t.unit(), "rho(1) = " + to_string(m.apply(s.unit())));
    std::string witness;
    for (std::size_t i = 0; i < s.dim() && witness.empty(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Vector lhs = m.apply(s.product(i, j));
            Vector rhs = t.multiply(m.matrix.column(i), m.matrix.column(j));
            if (lhs != rhs) {
                witness = "rho(e" + std::to_string(i) + "e" + std::to_string(j) + ") != rho(e" +
                          std::to_string(i) + ")rho(e" + std::to_string(j) + ")";
                break;
            }
        }
    report.record("multiplicative", witness.empty(), witness);
    return report;
}

AlgebraMorphism identity_morphism(const AlgebraPtr& a) {
    return {a, a, Matrix::identity(a->field(), a->dim())};
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
    if (!same_algebra(f.target, g.source)) throw StructureError("algebra morphisms are not composable");
    return {f.source, g.target, g.matrix * f.matrix};
}

std::optional<std::vector<AlgebraMorphism>> enumerate_algebra_automorphisms(const AlgebraPtr& a,
                                                                            std::uint64_t max_candidates) {
    const Field f = a->field();
    if (!f.is_prime_field()) throw StructureError("automorphism enumeration needs a finite field");
    const std::size_t n = a->dim();
    // Unknown: the n*n entries of rho (row-major); constraint rho(1) = 1.
    Matrix constraint(f, n, n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) constraint(r, r * n + c) = a->unit()[c];
    auto particular = solve_linear(constraint, a->unit());
    std::vector<Vector> directions = kernel_basis(constraint);
    const std::uint64_t p = f.characteristic();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < directions.size(); ++i) {
        if (total > max_candidates / p) return std::nullopt;
        total *= p;
    }
    std::vector<AlgebraMorphism> out;
    std::vector<std::uint64_t> digits(directions.size(), 0);
    for (std::uint64_t k = 0; k < total; ++k) {
        Vector x = *particular;
        for (std::size_t i = 0; i < directions.size(); ++i)
            if (digits[i]) axpy(x, Scalar::residue(f.characteristic(), digits[i]), directions[i]);
        Matrix rho(f, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) rho(r, c) = x[r * n + c];
        AlgebraMorphism m{a, a, rho};
        if (is_nonsingular(rho) && check_algebra_morphism(m).ok()) out.push_back(std::move(m));
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return out;
}

Bimodule::Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
                   std::vector<Matrix> right_action)
    : left_(std::move(left)), right_(std::move(right)), dim_(dim),
      left_action_(std::move(left_action)), right_action_(std::move(right_action)) {
    if (left_action_.size() != left_->dim() || right_action_.size() != right_->dim())
        throw DimensionError("bimodule: need one action matrix per algebra basis element");
    for (const auto* actions : {&left_action_, &right_action_})
        for (const auto& m : *actions)
            if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("bimodule: action matrix has wrong shape");
}

Bimodule Bimodule::regular(const AlgebraPtr& a) {
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        l.push_back(a->left_mult(i));
        r.push_back(a->right_mult(i));
    }
    return Bimodule(a, a, a->dim(), std::move(l), std::move(r));
}

Bimodule Bimodule::free(const AlgebraPtr& a, std::size_t n) {
    const Field f = a->field();
    Matrix id = Matrix::identity(f, n);
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        l.push_back(kron(id, a->left_mult(i)));
        r.push_back(kron(id, a->right_mult(i)));
    }
    return Bimodule(a, a, n * a->dim(), std::move(l), std::move(r));
}

Bimodule Bimodule::right_module(const AlgebraPtr& a, std::size_t dim, std::vector<Matrix> right_action) {
    auto k = share(Algebra::ground(a->field()));
    return Bimodule(k, a, dim, {Matrix::identity(a->field(), dim)}, std::move(right_action));
}

Bimodule Bimodule::left_module(const AlgebraPtr& a, std::size_t dim, std::vector<Matrix> left_action) {
    auto k = share(Algebra::ground(a->field()));
    return Bimodule(a, k, dim, std::move(left_action), {Matrix::identity(a->field(), dim)});
}

Matrix Bimodule::left_by(const Vector& b) const {
    Matrix m(field(), dim_, dim_);
    for (std::size_t i = 0; i < left_action_.size(); ++i)
        if (!b[i].is_zero()) m += b[i] * left_action_[i];
    return m;
}

Matrix Bimodule::right_by(const Vector& a) const {
    Matrix m(field(), dim_, dim_);
    for (std::size_t i = 0; i < right_action_.size(); ++i)
        if (!a[i].is_zero()) m += a[i] * right_action_[i];
    return m;
}

Bimodule Bimodule::forget_left() const {
    auto k = share(Algebra::ground(field()));
    return Bimodule(k, right_, dim_, {Matrix::identity(field(), dim_)}, right_action_);
}

Bimodule Bimodule::forget_right() const {
    auto k = share(Algebra::ground(field()));
    return Bimodule(left_, k, dim_, left_action_, {Matrix::identity(field(), dim_)});
}

Bimodule Bimodule::transport(const Matrix& t) const {
    auto tinv = inverse(t);
    if (!tinv) throw StructureError("bimodule transport: change of basis is singular");
    std::vector<Matrix> l, r;
    for (const auto& m : left_action_) l.push_back(t * m * *tinv);
    for (const auto& m : right_action_) r.push_back(t * m * *tinv);
    return Bimodule(left_, right_, dim_, std::move(l), std::move(r));
}

ValidationReport check_bimodule(const Bimodule& m) {
    ValidationReport report;
    const Algebra& b = *m.left_algebra();
    const Algebra& a = *m.right_algebra();
    const Field f = m.field();
    std::string w;
    for (std::size_t i = 0; i < b.dim() && w.empty(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (m.left_by(b.product(i, j)) != m.left_action(i) * m.left_action(j)) {
                w = "(b" + std::to_string(i) + "b" + std::to_string(j) + ")m != b" + std::to_string(i) + "(b" +
                    std::to_string(j) + "m)";
                break;
            }
    report.record("left action associative", w.empty(), w);
    report.record("left action unital", m.left_by(b.unit()).is_identity(), "1*m != m");
    w.clear();
    for (std::size_t i = 0; i < a.dim() && w.empty(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.right_by(a.product(i, j)) != m.right_action(j) * m.right_action(i)) {
                w = "m(a" + std::to_string(i) + "a" + std::to_string(j) + ") != (m a" + std::to_string(i) + ")a" +
                    std::to_string(j);
                break;
            }
    report.record("right action associative", w.empty(), w);
    report.record("right action unital", m.right_by(a.unit()).is_identity(), "m*1 != m");
    w.clear();
    for (std::size_t i = 0; i < b.dim() && w.empty(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (m.left_action(i) * m.right_action(j) != m.right_action(j) * m.left_action(i)) {
                w = "b" + std::to_string(i) + "(m a" + std::to_string(j) + ") != (b" + std::to_string(i) + " m)a" +
                    std::to_string(j);
                break;
            }
    report.record("actions commute", w.empty(), w);
    (void)f;
    return report;
}

namespace {

// Shared core of the projectivity tests. `actions[s]` is the action of basis
// element s of A on M, `regular[s]` its action on A itself, composed so that
// the A-linear maps are those commuting with all of them.
bool splits(const Algebra& alg, std::size_t dim, const std::vector<Matrix>& actions,
            const std::vector<Matrix>& regular, bool right) {
    const Field f = alg.field();
    const std::size_t n = dim, da = alg.dim();
    const std::size_t free_dim = n * da;
    // pi: A^n -> M, (generator i) * a  (or a * generator i) -> action of a on m_i.
    Matrix pi(f, n, free_dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t s = 0; s < da; ++s) pi.set_column(i * da + s, actions[s] * unit_vector(f, n, i));
    (void)right;
    // Unknown sigma: free_dim x n, row-major. Constraints: sigma commutes with
    // the actions and pi * sigma = identity.
    const std::size_t unknowns = free_dim * n;
    std::vector<Vector> rows;
    Vector rhs;
    auto sigma_of = [&](const Vector& x) {
        Matrix s(f, free_dim, n);
        for (std::size_t r = 0; r < free_dim; ++r)
            for (std::size_t c = 0; c < n; ++c) s(r, c) = x[r * n + c];
        return s;
    };
    Matrix id_n = Matrix::identity(f, n);
    std::vector<Matrix> free_actions;
    for (std::size_t s = 0; s < da; ++s) free_actions.push_back(kron(id_n, regular[s]));
    Matrix lin = matrix_of(f, unknowns, unknowns * 0 + free_dim * n * da + n * n, [&](const Vector& x) {
        Matrix s = sigma_of(x);
        Vector out;
        out.reserve(free_dim * n * da + n * n);
        for (std::size_t a = 0; a < da; ++a) {
            Matrix d = s * actions[a] - free_actions[a] * s;
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t c = 0; c < d.cols(); ++c) out.push_back(d(r, c));
        }
        Matrix ps = pi * s;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) out.push_back(ps(r, c));
        return out;
    });
    Vector target = zero_vector(f, free_dim * n * da + n * n);
    for (std::size_t r = 0; r < n; ++r) target[free_dim * n * da + r * n + r] = f.one();
    return solve_linear(lin, target).has_value();
}

}  // namespace

bool is_projective_right(const Bimodule& m) {
    const Algebra& a = *m.right_algebra();
    std::vector<Matrix> regular;
    for (std::size_t s = 0; s < a.dim(); ++s) regular.push_back(a.right_mult(s));
    return splits(a, m.dim(), m.right_actions(), regular, true);
}

bool is_projective_left(const Bimodule& m) {
    const Algebra& b = *m.left_algebra();
    std::vector<Matrix> regular;
    for (std::size_t s = 0; s < b.dim(); ++s) regular.push_back(b.left_mult(s));
    return splits(b, m.dim(), m.left_actions(), regular, false);
}

}  // namespace corings
