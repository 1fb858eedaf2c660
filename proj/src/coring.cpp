#include "corings/coring.hpp"

#include <mutex>
#include <stdexcept>

namespace corings {

struct Coring::Triple {
    std::once_flag once;
    TensorPtr left, right;
    Matrix assoc, assoc_inv;
};

Coring::Coring(Bimodule carrier, Matrix delta, Matrix epsilon, std::vector<std::string> names)
    : Coring(carrier, tensor_over(carrier, carrier), std::move(delta), std::move(epsilon), std::move(names)) {}

Coring::Coring(Bimodule carrier, TensorPtr tensor2, Matrix delta, Matrix epsilon, std::vector<std::string> names)
    : carrier_(std::move(carrier)), delta_(std::move(delta)), epsilon_(std::move(epsilon)), names_(std::move(names)),
      tensor2_(std::move(tensor2)), triple_(std::make_shared<Triple>()) {
    if (!same_algebra(carrier_.left_algebra(), carrier_.right_algebra()))
        throw StructureError("coring: carrier must be a bimodule over a single algebra");
    if (delta_.rows() != tensor2_->dim() || delta_.cols() != dim())
        throw DimensionError("coring: Delta must be " + std::to_string(tensor2_->dim()) + "x" + std::to_string(dim()));
    if (epsilon_.rows() != base()->dim() || epsilon_.cols() != dim())
        throw DimensionError("coring: epsilon must be " + std::to_string(base()->dim()) + "x" + std::to_string(dim()));
}

Coring Coring::from_ambient(Bimodule carrier, const Matrix& delta_ambient, Matrix epsilon,
                            std::vector<std::string> names) {
    const std::size_t d = carrier.dim();
    if (delta_ambient.rows() != d * d || delta_ambient.cols() != d)
        throw DimensionError("coring: ambient Delta must be dim^2 x dim");
    auto t = tensor_over(carrier, carrier);
    Matrix delta = t->project() * delta_ambient;
    return Coring(std::move(carrier), std::move(t), std::move(delta), std::move(epsilon), std::move(names));
}

Coring trivial_coring(const AlgebraPtr& a) {
    Bimodule carrier = Bimodule::regular(a);
    auto t = tensor_over(carrier, carrier);
    Matrix delta(a->field(), t->dim(), a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) delta.set_column(i, t->pure(a->unit(), a->basis(i)));
    return Coring(std::move(carrier), std::move(t), std::move(delta), Matrix::identity(a->field(), a->dim()), a->names());
}

std::string Coring::basis_name(std::size_t i) const {
    if (i < names_.size()) return names_[i];
    return "c" + std::to_string(i);
}

const Coring::Triple& Coring::triple() const {
    std::call_once(triple_->once, [this] {
        const Bimodule& t2 = tensor2_->bimodule();
        triple_->left = tensor_over(t2, carrier_);
        triple_->right = tensor_over(carrier_, t2);
        triple_->assoc = corings::associator(*triple_->right, *tensor2_, *triple_->left, *tensor2_);
        auto inv = inverse(triple_->assoc);
        if (!inv) throw std::logic_error("coring: associator is not invertible");
        triple_->assoc_inv = std::move(*inv);
    });
    return *triple_;
}

const TensorProduct& Coring::tensor3_left() const { return *triple().left; }
const TensorProduct& Coring::tensor3_right() const { return *triple().right; }
const Matrix& Coring::associator() const { return triple().assoc; }
const Matrix& Coring::associator_inverse() const { return triple().assoc_inv; }

Matrix delta_tensor_id(const Coring& c) {
    return induced_map(kron(c.delta(), Matrix::identity(c.field(), c.dim())), c.tensor2(), c.tensor3_left());
}

Matrix id_tensor_delta(const Coring& c) {
    return induced_map(kron(Matrix::identity(c.field(), c.dim()), c.delta()), c.tensor2(), c.tensor3_right());
}

namespace {

std::optional<std::size_t> first_differing_column(const Matrix& a, const Matrix& b) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j)) return j;
    return std::nullopt;
}

std::string algebra_name(const Algebra& a, std::size_t s) {
    return s < a.names().size() ? a.names()[s] : "a" + std::to_string(s);
}

// Both sides of (ε ⊗ C)Δ and (C ⊗ ε)Δ as ambient maps C ⊗_k C -> C.
Matrix counit_left_ambient(const Coring& c) {
    const Bimodule& m = c.carrier();
    const std::size_t d = c.dim();
    Matrix f(c.field(), d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        Matrix act = m.left_by(c.epsilon().column(i));
        for (std::size_t j = 0; j < d; ++j) f.set_column(i * d + j, act.column(j));
    }
    return f;
}

Matrix counit_right_ambient(const Coring& c) {
    const Bimodule& m = c.carrier();
    const std::size_t d = c.dim();
    Matrix f(c.field(), d, d * d);
    for (std::size_t j = 0; j < d; ++j) {
        Matrix act = m.right_by(c.epsilon().column(j));
        for (std::size_t i = 0; i < d; ++i) f.set_column(i * d + j, act.column(i));
    }
    return f;
}

}  // namespace

ValidationReport check_coring(const Coring& c) {
    ValidationReport report;
    const Algebra& a = *c.base();
    const Bimodule& m = c.carrier();
    const std::size_t d = c.dim();
    Matrix id = Matrix::identity(c.field(), d);

    ValidationReport bim = check_bimodule(m);
    report.merge(bim, "carrier ");
    const char* dependents[] = {"Delta left A-linear", "Delta right A-linear", "epsilon left A-linear",
                                "epsilon right A-linear", "left counit", "right counit", "coassociativity"};
    if (!bim.ok()) {
        for (const char* name : dependents) report.skip(name, "carrier is not a bimodule");
        return report;
    }

    const Bimodule& t2 = c.tensor2().bimodule();
    auto linearity = [&](const std::string& name, bool left, const Matrix& map, const std::vector<Matrix>& target_actions,
                         const std::string& map_name) {
        for (std::size_t s = 0; s < a.dim(); ++s) {
            Matrix lhs = map * (left ? m.left_action(s) : m.right_action(s));
            Matrix rhs = target_actions[s] * map;
            if (auto j = first_differing_column(lhs, rhs)) {
                std::string x = c.basis_name(*j), y = algebra_name(a, s);
                report.fail(name, left ? map_name + "(" + y + " " + x + ") != " + y + " " + map_name + "(" + x + ")"
                                       : map_name + "(" + x + " " + y + ") != " + map_name + "(" + x + ") " + y);
                return false;
            }
        }
        report.pass(name);
        return true;
    };
    std::vector<Matrix> a_left, a_right;
    for (std::size_t s = 0; s < a.dim(); ++s) {
        a_left.push_back(a.left_mult(s));
        a_right.push_back(a.right_mult(s));
    }
    bool delta_left = linearity("Delta left A-linear", true, c.delta(), t2.left_actions(), "Delta");
    bool delta_right = linearity("Delta right A-linear", false, c.delta(), t2.right_actions(), "Delta");
    bool eps_left = linearity("epsilon left A-linear", true, c.epsilon(), a_left, "epsilon");
    bool eps_right = linearity("epsilon right A-linear", false, c.epsilon(), a_right, "epsilon");

    if (eps_left && eps_right) {
        auto counit = [&](const std::string& name, const Matrix& ambient) {
            Matrix composite = descend(ambient, c.tensor2()) * c.delta();
            if (auto j = first_differing_column(composite, id))
                report.fail(name, "fails on " + c.basis_name(*j) + ": gives " + to_string(composite.column(*j)));
            else
                report.pass(name);
        };
        counit("left counit", counit_left_ambient(c));
        counit("right counit", counit_right_ambient(c));
    } else {
        report.skip("left counit", "epsilon is not A-bilinear");
        report.skip("right counit", "epsilon is not A-bilinear");
    }

    if (delta_left && delta_right) {
        Matrix lhs = c.associator() * id_tensor_delta(c) * c.delta();
        Matrix rhs = delta_tensor_id(c) * c.delta();
        if (auto j = first_differing_column(lhs, rhs))
            report.fail("coassociativity", "(C⊗Δ)Δ != (Δ⊗C)Δ on " + c.basis_name(*j));
        else
            report.pass("coassociativity");
    } else {
        report.skip("coassociativity", "Delta is not A-bilinear");
    }
    return report;
}

ValidationReport check_coring_morphism(const CoringMorphism& f) {
    ValidationReport report;
    const Coring& src = *f.source;
    const Coring& dst = *f.target;
    if (f.phi.rows() != dst.dim() || f.phi.cols() != src.dim() || !same_algebra(f.rho.source, src.base()) ||
        !same_algebra(f.rho.target, dst.base())) {
        report.fail("shape", "phi or rho does not match the source and target corings");
        return report;
    }
    ValidationReport rho = check_algebra_morphism(f.rho);
    report.merge(rho, "rho ");
    const Algebra& a = *src.base();
    bool linear = true;
    for (int side = 0; side < 2; ++side) {
        const bool left = side == 0;
        std::string witness;
        for (std::size_t s = 0; s < a.dim() && witness.empty(); ++s) {
            Vector image = f.rho.matrix.column(s);
            Matrix lhs = f.phi * (left ? src.carrier().left_action(s) : src.carrier().right_action(s));
            Matrix rhs = (left ? dst.carrier().left_by(image) : dst.carrier().right_by(image)) * f.phi;
            if (auto j = first_differing_column(lhs, rhs))
                witness = "phi(" + (left ? algebra_name(a, s) + " " + src.basis_name(*j)
                                         : src.basis_name(*j) + " " + algebra_name(a, s)) +
                          ") differs from the rho-twisted product";
        }
        report.record(left ? "phi left twisted-linear" : "phi right twisted-linear", witness.empty(), witness);
        linear = linear && witness.empty();
    }
    Matrix lhs = dst.epsilon() * f.phi, rhs = f.rho.matrix * src.epsilon();
    auto j = first_differing_column(lhs, rhs);
    report.record("counit compatibility", !j, j ? "epsilon_D phi != rho epsilon_C on " + src.basis_name(*j) : "");
    if (!linear || !rho.ok()) {
        report.skip("comultiplicativity", "phi is not rho-bilinear");
        return report;
    }
    Matrix pp = induced_map(kron(f.phi, f.phi), src.tensor2(), dst.tensor2());
    auto k = first_differing_column(dst.delta() * f.phi, pp * src.delta());
    report.record("comultiplicativity", !k, k ? "Delta_D phi != (phi⊗phi) Delta_C on " + src.basis_name(*k) : "");
    return report;
}

bool is_isomorphism(const CoringMorphism& f) {
    return f.phi.is_square() && f.rho.matrix.is_square() && is_nonsingular(f.phi) && is_nonsingular(f.rho.matrix);
}

CoringMorphism identity_morphism(const CoringPtr& c) {
    return {c, c, Matrix::identity(c->field(), c->dim()), identity_morphism(c->base())};
}

CoringMorphism compose(const CoringMorphism& g, const CoringMorphism& f) {
    if (f.target != g.source && !(f.target->dim() == g.source->dim() && same_algebra(f.target->base(), g.source->base()) &&
                                  f.target->delta() == g.source->delta() && f.target->epsilon() == g.source->epsilon()))
        throw StructureError("coring morphisms are not composable");
    return {f.source, g.target, g.phi * f.phi, compose(g.rho, f.rho)};
}

CoringMorphism inverse(const CoringMorphism& f) {
    auto phi = inverse(f.phi);
    auto rho = inverse(f.rho.matrix);
    if (!phi || !rho) throw StructureError("coring morphism is not invertible");
    return {f.target, f.source, std::move(*phi), AlgebraMorphism{f.rho.target, f.rho.source, std::move(*rho)}};
}

bool operator==(const CoringMorphism& f, const CoringMorphism& g) {
    return f.phi == g.phi && f.rho.matrix == g.rho.matrix;
}

namespace {

// (C ⊗ δ)(c ⊗ t) = c δ(t) on C ⊗ (C ⊗ C), and (δ ⊗ C)(t ⊗ c) = δ(t) c on
// (C ⊗ C) ⊗ C, as ambient maps into C.
Matrix id_tensor_cointegral(const Coring& c, const Matrix& delta) {
    const std::size_t d = c.dim(), q = c.tensor2().dim();
    Matrix f(c.field(), d, d * q);
    for (std::size_t k = 0; k < q; ++k) {
        Matrix act = c.carrier().right_by(delta.column(k));
        for (std::size_t i = 0; i < d; ++i) f.set_column(i * q + k, act.column(i));
    }
    return f;
}

Matrix cointegral_tensor_id(const Coring& c, const Matrix& delta) {
    const std::size_t d = c.dim(), q = c.tensor2().dim();
    Matrix f(c.field(), d, q * d);
    for (std::size_t k = 0; k < q; ++k) {
        Matrix act = c.carrier().left_by(delta.column(k));
        for (std::size_t j = 0; j < d; ++j) f.set_column(k * d + j, act.column(j));
    }
    return f;
}

}  // namespace

ValidationReport check_cointegral(const Cointegral& d) {
    ValidationReport report;
    const Coring& c = *d.coring;
    const Algebra& a = *c.base();
    const Bimodule& t2 = c.tensor2().bimodule();
    if (d.delta.rows() != a.dim() || d.delta.cols() != t2.dim()) {
        report.fail("shape", "delta must be dim A x dim(C⊗C)");
        return report;
    }
    bool bilinear = true;
    for (int side = 0; side < 2; ++side) {
        std::string witness;
        for (std::size_t s = 0; s < a.dim() && witness.empty(); ++s) {
            Matrix lhs = d.delta * (side == 0 ? t2.left_action(s) : t2.right_action(s));
            Matrix rhs = (side == 0 ? a.left_mult(s) : a.right_mult(s)) * d.delta;
            if (auto j = first_differing_column(lhs, rhs))
                witness = "fails for " + algebra_name(a, s) + " on tensor basis vector " + std::to_string(*j);
        }
        report.record(side == 0 ? "delta left A-linear" : "delta right A-linear", witness.empty(), witness);
        bilinear = bilinear && witness.empty();
    }
    auto j = first_differing_column(d.delta * c.delta(), c.epsilon());
    report.record("delta Delta = epsilon", !j, j ? "fails on " + c.basis_name(*j) : "");
    if (!bilinear) {
        report.skip("cointegral identity", "delta is not A-bilinear");
        return report;
    }
    Matrix lhs = descend(id_tensor_cointegral(c, d.delta), c.tensor3_right()) * c.associator_inverse() *
                 delta_tensor_id(c);
    Matrix rhs = descend(cointegral_tensor_id(c, d.delta), c.tensor3_left()) * c.associator() * id_tensor_delta(c);
    auto k = first_differing_column(lhs, rhs);
    report.record("cointegral identity", !k, k ? "(C⊗δ)(Δ⊗C) != (δ⊗C)(C⊗Δ) on tensor basis vector " + std::to_string(*k) : "");
    return report;
}

std::optional<Cointegral> find_cointegral(const CoringPtr& cp) {
    const Coring& c = *cp;
    if (!check_coring(c).ok()) throw StructureError("find_cointegral: not a valid coring");
    const Algebra& a = *c.base();
    const Bimodule& t2 = c.tensor2().bimodule();
    const Field f = c.field();
    const std::size_t da = a.dim(), q = t2.dim(), d = c.dim();
    const Matrix dti = delta_tensor_id(c), itd = id_tensor_delta(c);
    const Matrix left_path = c.associator_inverse() * dti;
    const Matrix right_path = c.associator() * itd;

    auto unpack = [&](const Vector& x) {
        Matrix m(f, da, q);
        for (std::size_t s = 0; s < da; ++s)
            for (std::size_t k = 0; k < q; ++k) m(s, k) = x[s * q + k];
        return m;
    };
    auto append = [](Vector& out, const Matrix& m) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t col = 0; col < m.cols(); ++col) out.push_back(m(r, col));
    };
    const std::size_t residual_len = 2 * da * da * q + da * d + d * q;
    Matrix system = matrix_of(f, da * q, residual_len, [&](const Vector& x) {
        Matrix delta = unpack(x);
        Vector out;
        out.reserve(residual_len);
        for (std::size_t s = 0; s < da; ++s) append(out, delta * t2.left_action(s) - a.left_mult(s) * delta);
        for (std::size_t s = 0; s < da; ++s) append(out, delta * t2.right_action(s) - a.right_mult(s) * delta);
        append(out, delta * c.delta());
        append(out, restrict_to_section(id_tensor_cointegral(c, delta), c.tensor3_right()) * left_path -
                        restrict_to_section(cointegral_tensor_id(c, delta), c.tensor3_left()) * right_path);
        return out;
    });
    Vector target = zero_vector(f, residual_len);
    for (std::size_t s = 0; s < da; ++s)
        for (std::size_t i = 0; i < d; ++i) target[2 * da * da * q + s * d + i] = c.epsilon()(s, i);
    auto x = solve_linear(system, target);
    if (!x) return std::nullopt;
    Cointegral result{cp, unpack(*x)};
    if (!check_cointegral(result).ok()) throw std::logic_error("find_cointegral: solution failed re-validation");
    return result;
}

}  // namespace corings
