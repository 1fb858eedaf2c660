#pragma once

#include <memory>

#include "corings/comodule.hpp"

namespace corings {

enum class DualSide { right, left };

/// Hom-space dual of a coring with its convolution product.
///
/// Right dual C*: right A-linear maps p: C -> A, (f⋆g)(c) = Σ f(g(c_(1)) c_(2)).
/// Left dual: left A-linear maps, with the product P(f, g)(c) = Σ g(c_(1) f(c_(2)))
/// stored in `algebra`; this is the ring R acting on right comodules by
/// m·f = Σ m_(0) f(m_(1)). `opposite` is *C with (f⋆g)(c) = Σ f(c_(1) g(c_(2))).
/// Elements are dim A x dim C matrices; the algebra works in coordinates
/// with respect to `basis`, and its unit is the coordinate vector of ε.
struct DualAlgebra {
    CoringPtr coring;
    DualSide side;
    std::vector<Matrix> basis;
    AlgebraPtr algebra;
    AlgebraPtr opposite;

    std::size_t dim() const noexcept { return basis.size(); }
    /// Coordinates of a map; nullopt when it is not in the hom space.
    std::optional<Vector> coordinates(const Matrix& p) const;
    Matrix element(const Vector& coords) const;
};

using DualPtr = std::shared_ptr<const DualAlgebra>;

/// Memoized per coring instance.
DualPtr right_dual_algebra(const CoringPtr& c);
DualPtr left_dual_algebra(const CoringPtr& c);

/// Basis of right (resp. left) A-linear maps C -> A.
std::vector<Matrix> right_linear_maps(const Coring& c);
std::vector<Matrix> left_linear_maps(const Coring& c);

/// (f⋆g)(c) = Σ f(g(c_(1)) c_(2)) for right A-linear f, g.
Matrix convolve_right(const Coring& c, const Matrix& f, const Matrix& g);
/// P(f, g)(c) = Σ g(c_(1) f(c_(2))) for left A-linear f, g.
Matrix convolve_left(const Coring& c, const Matrix& f, const Matrix& g);

/// Two-sided inverse of p in C*: q with q⋆p = p⋆q = ε, verified exactly.
/// Throws StructureError if p is not right A-linear.
std::optional<Matrix> convolution_inverse(const CoringPtr& c, const Matrix& p);

/// A right C-comodule as a right module over R, m·f = Σ m_(0) f(m_(1)),
/// with one action matrix per basis element of left_dual_algebra(C).
/// Throws StructureError unless _AC is finitely generated projective, and
/// std::logic_error if the result fails the module axioms.
Bimodule comodule_to_dual_module(const Bicomodule& m);

}  // namespace corings
