#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "corings/tensor.hpp"

namespace corings {

/// An A-coring: an A-bimodule C with Δ: C -> C ⊗_A C and ε: C -> A.
///
/// Δ is stored in quotient coordinates of C ⊗_A C (a q2 x dim C matrix), ε as
/// a dim A x dim C matrix. Coalgebras are corings over the ground algebra k.
/// The tensor spaces are built on first use and shared between copies.
class Coring {
public:
    Coring(Bimodule carrier, Matrix delta, Matrix epsilon, std::vector<std::string> names = {});
    /// Same, reusing an already built C ⊗_A C (must come from `carrier`).
    Coring(Bimodule carrier, TensorPtr tensor2, Matrix delta, Matrix epsilon, std::vector<std::string> names = {});

    /// Δ given by ambient representatives in C ⊗_k C (index i*dim C + j).
    static Coring from_ambient(Bimodule carrier, const Matrix& delta_ambient, Matrix epsilon,
                               std::vector<std::string> names = {});

    const AlgebraPtr& base() const noexcept { return carrier_.left_algebra(); }
    const Bimodule& carrier() const noexcept { return carrier_; }
    Field field() const { return carrier_.field(); }
    std::size_t dim() const noexcept { return carrier_.dim(); }
    const Matrix& delta() const noexcept { return delta_; }
    const Matrix& epsilon() const noexcept { return epsilon_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::string basis_name(std::size_t i) const;

    /// C ⊗_A C.
    const TensorProduct& tensor2() const { return *tensor2_; }
    /// (C ⊗_A C) ⊗_A C.
    const TensorProduct& tensor3_left() const;
    /// C ⊗_A (C ⊗_A C).
    const TensorProduct& tensor3_right() const;
    /// C ⊗ (C ⊗ C) -> (C ⊗ C) ⊗ C and its inverse.
    const Matrix& associator() const;
    const Matrix& associator_inverse() const;

    /// Ambient representative section(Δ(c)) in C ⊗_k C.
    Vector delta_ambient(const Vector& c) const { return tensor2_->lift(delta_ * c); }

private:
    struct Triple;
    const Triple& triple() const;

    Bimodule carrier_;
    Matrix delta_, epsilon_;
    std::vector<std::string> names_;
    TensorPtr tensor2_;
    std::shared_ptr<Triple> triple_;
};

using CoringPtr = std::shared_ptr<const Coring>;

inline CoringPtr share(Coring c) { return std::make_shared<const Coring>(std::move(c)); }

/// A as an A-coring: Δ(a) = 1 ⊗ a = a ⊗ 1, ε = id.
Coring trivial_coring(const AlgebraPtr& a);

/// Axioms in dependency order: carrier bimodule, A-bilinearity of Δ and ε,
/// counit laws, coassociativity. A check whose preconditions failed is
/// reported as skipped (which counts as failure).
ValidationReport check_coring(const Coring& c);

/// (Δ ⊗ C): C ⊗ C -> (C ⊗ C) ⊗ C and (C ⊗ Δ): C ⊗ C -> C ⊗ (C ⊗ C) on quotients.
Matrix delta_tensor_id(const Coring& c);
Matrix id_tensor_delta(const Coring& c);

/// A coring morphism (φ, ρ): C -> D over ρ: A -> B, with
/// φ(a c a') = ρ(a) φ(c) ρ(a').
struct CoringMorphism {
    CoringPtr source;
    CoringPtr target;
    Matrix phi;
    AlgebraMorphism rho;
};

ValidationReport check_coring_morphism(const CoringMorphism& f);
/// φ and ρ both bijective.
bool is_isomorphism(const CoringMorphism& f);
CoringMorphism identity_morphism(const CoringPtr& c);
/// g ∘ f; throws StructureError if f.target is not g.source.
CoringMorphism compose(const CoringMorphism& g, const CoringMorphism& f);
/// Inverse of an isomorphism; throws StructureError otherwise.
CoringMorphism inverse(const CoringMorphism& f);
bool operator==(const CoringMorphism& f, const CoringMorphism& g);

/// A-bilinear δ: C ⊗_A C -> A (dim A x q2) with δΔ = ε and
/// (C ⊗ δ)(Δ ⊗ C) = (δ ⊗ C)(C ⊗ Δ).
struct Cointegral {
    CoringPtr coring;
    Matrix delta;
};

ValidationReport check_cointegral(const Cointegral& d);
std::optional<Cointegral> find_cointegral(const CoringPtr& c);

}  // namespace corings
