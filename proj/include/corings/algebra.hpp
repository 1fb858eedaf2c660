#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corings/linalg.hpp"
#include "corings/report.hpp"

namespace corings {

/// Raised when input data does not describe the structure it claims to be
/// (a table that is not a group, mismatched base algebras, ...).
class StructureError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional unital algebra given by structure constants:
/// product(i, j) holds the coordinates of e_i * e_j.
class Algebra {
public:
    Algebra(Field f, std::size_t dim, std::vector<Vector> products, Vector unit,
            std::vector<std::string> names = {});

    /// The ground field k as a one-dimensional algebra.
    static Algebra ground(Field f);

    Field field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
    const Vector& unit() const noexcept { return unit_; }
    Vector basis(std::size_t i) const { return unit_vector(field_, dim_, i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    Vector multiply(const Vector& x, const Vector& y) const;
    /// Matrix of x -> e_i x.
    const Matrix& left_mult(std::size_t i) const { return left_[i]; }
    /// Matrix of x -> x e_i.
    const Matrix& right_mult(std::size_t i) const { return right_[i]; }
    Matrix left_mult_by(const Vector& a) const;
    Matrix right_mult_by(const Vector& a) const;

    Algebra opposite() const;

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.field_ == b.field_ && a.dim_ == b.dim_ && a.products_ == b.products_ && a.unit_ == b.unit_;
    }

private:
    Field field_;
    std::size_t dim_;
    std::vector<Vector> products_;
    Vector unit_;
    std::vector<std::string> names_;
    std::vector<Matrix> left_, right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline AlgebraPtr share(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Lists every violated associativity and unit instance.
ValidationReport check_algebra(const Algebra& a);

/// n x n matrices, basis e_ij at index i*n + j.
Algebra matrix_algebra(Field f, std::size_t n);
/// k[t]/(t^n), basis 1, t, ..., t^(n-1).
Algebra truncated_polynomial_algebra(Field f, std::size_t n);

/// Finite group by its multiplication table, elements 0..order-1.
class GroupTable {
public:
    /// Throws StructureError unless the table is associative with an identity
    /// and inverses.
    GroupTable(std::size_t order, std::vector<std::size_t> table);

    static GroupTable cyclic(std::size_t n);
    /// Permutations of {0,1,2} in lexicographic order, composed as (gh)(x) = g(h(x)).
    static GroupTable symmetric3();

    std::size_t order() const noexcept { return order_; }
    std::size_t op(std::size_t g, std::size_t h) const { return table_[g * order_ + h]; }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t inverse(std::size_t g) const { return inverse_[g]; }
    const std::vector<std::size_t>& table() const noexcept { return table_; }

private:
    std::size_t order_;
    std::vector<std::size_t> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
};

/// An algebra together with a homogeneous basis: degree[i] is the group
/// element labelling basis vector i.
struct GradedAlgebra {
    Algebra algebra;
    std::vector<std::size_t> degree;
};

/// kG with e_g e_h = e_{gh}; degree[g] = g.
GradedAlgebra group_algebra(Field f, const GroupTable& g);

/// Algebra map given by its matrix (target.dim x source.dim).
struct AlgebraMorphism {
    AlgebraPtr source;
    AlgebraPtr target;
    Matrix matrix;

    Vector apply(const Vector& x) const { return matrix * x; }
};

ValidationReport check_algebra_morphism(const AlgebraMorphism& m);
AlgebraMorphism identity_morphism(const AlgebraPtr& a);
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);
/// All algebra automorphisms of a finite-field algebra whose unit-fixing
/// candidate space has at most `max_candidates` points; nullopt otherwise.
std::optional<std::vector<AlgebraMorphism>> enumerate_algebra_automorphisms(const AlgebraPtr& a,
                                                                            std::uint64_t max_candidates);

/// A B-A bimodule: left_action(i) is the matrix of m -> b_i m, right_action(j)
/// the matrix of m -> m a_j.
class Bimodule {
public:
    Bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Matrix> left_action,
             std::vector<Matrix> right_action);

    /// A as an A-A bimodule.
    static Bimodule regular(const AlgebraPtr& a);
    /// A^n with b(x_1..x_n)a = (b x_1 a, ..., b x_n a); basis index i*dim A + s.
    static Bimodule free(const AlgebraPtr& a, std::size_t n);
    /// A right A-module viewed as a k-A bimodule.
    static Bimodule right_module(const AlgebraPtr& a, std::size_t dim, std::vector<Matrix> right_action);
    /// A left A-module viewed as an A-k bimodule.
    static Bimodule left_module(const AlgebraPtr& a, std::size_t dim, std::vector<Matrix> left_action);

    const AlgebraPtr& left_algebra() const noexcept { return left_; }
    const AlgebraPtr& right_algebra() const noexcept { return right_; }
    Field field() const { return left_->field(); }
    std::size_t dim() const noexcept { return dim_; }
    const Matrix& left_action(std::size_t i) const { return left_action_[i]; }
    const Matrix& right_action(std::size_t j) const { return right_action_[j]; }
    const std::vector<Matrix>& left_actions() const noexcept { return left_action_; }
    const std::vector<Matrix>& right_actions() const noexcept { return right_action_; }
    Matrix left_by(const Vector& b) const;
    Matrix right_by(const Vector& a) const;

    /// Same module with the left action forgotten (a k-A bimodule).
    Bimodule forget_left() const;
    /// Same module with the right action forgotten (a B-k bimodule).
    Bimodule forget_right() const;
    /// Transport of structure along an invertible change of basis t: N = t(M).
    Bimodule transport(const Matrix& t) const;

private:
    AlgebraPtr left_, right_;
    std::size_t dim_;
    std::vector<Matrix> left_action_, right_action_;
};

/// Associativity, unitality of both actions and the commutation a(mb) = (am)b.
ValidationReport check_bimodule(const Bimodule& m);

/// Whether the right A-module M is projective: the canonical surjection
/// A^n -> M (n = dim M, generators = the k-basis) admits an A-linear section.
bool is_projective_right(const Bimodule& m);
/// Same for the left module structure.
bool is_projective_left(const Bimodule& m);

}  // namespace corings
