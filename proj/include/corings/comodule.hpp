#pragma once

#include <optional>

#include "corings/coring.hpp"
#include "corings/unit_search.hpp"

namespace corings {

/// A C'-C bicomodule: an A'-A bimodule M with λ: M -> C' ⊗_{A'} M and
/// ρ: M -> M ⊗_A C, both stored in quotient coordinates.
///
/// One-sided comodules use the ground coring k on the other side with the
/// canonical coaction; such a side is marked trivial and skipped by checks.
struct CotensorResult;

class Bicomodule {
public:
    Bicomodule(CoringPtr left, CoringPtr right, Bimodule carrier, Matrix lambda, Matrix rho);

    /// Right C-comodule on a k-A bimodule.
    static Bicomodule right_comodule(const CoringPtr& c, Bimodule carrier, Matrix rho);
    /// Left C-comodule on an A-k bimodule.
    static Bicomodule left_comodule(const CoringPtr& c, Bimodule carrier, Matrix lambda);
    /// C as a C-C bicomodule, λ = ρ = Δ.
    static Bicomodule regular(const CoringPtr& c);
    /// C as a right C-comodule.
    static Bicomodule regular_right(const CoringPtr& c);

    const CoringPtr& left_coring() const noexcept { return left_; }
    const CoringPtr& right_coring() const noexcept { return right_; }
    const Bimodule& carrier() const noexcept { return carrier_; }
    Field field() const { return carrier_.field(); }
    std::size_t dim() const noexcept { return carrier_.dim(); }
    const Matrix& lambda() const noexcept { return lambda_; }
    const Matrix& rho() const noexcept { return rho_; }
    bool left_trivial() const noexcept { return left_trivial_; }
    bool right_trivial() const noexcept { return right_trivial_; }

    /// C' ⊗ M and M ⊗ C.
    const TensorProduct& left_tensor() const { return *left_tensor_; }
    const TensorProduct& right_tensor() const { return *right_tensor_; }

private:
    friend CotensorResult cotensor(const Bicomodule& m, const Bicomodule& n);

    CoringPtr left_, right_;
    Bimodule carrier_;
    Matrix lambda_, rho_;
    TensorPtr left_tensor_, right_tensor_;
    bool left_trivial_ = false, right_trivial_ = false;
};

/// k as a k-coring (shared instance per field is not required: algebras are
/// compared structurally).
CoringPtr ground_coring(Field f);

/// Same pointer, or equal base algebra, carrier actions, Δ and ε.
bool same_coring(const CoringPtr& a, const CoringPtr& b);

/// Bimodule axioms, bilinearity, counit and coassociativity of each
/// nontrivial coaction, and the compatibility (λ ⊗ C)ρ = (C' ⊗ ρ)λ.
ValidationReport check_bicomodule(const Bicomodule& m);
inline ValidationReport check_comodule(const Bicomodule& m) { return check_bicomodule(m); }

/// Whether f: M -> N is bilinear and colinear on both sides.
ValidationReport check_bicomodule_morphism(const Bicomodule& m, const Bicomodule& n, const Matrix& f);

/// Basis of the space of bicomodule maps M -> N (dim N x dim M matrices).
/// For right comodules this is Hom^C(M, N).
std::vector<Matrix> bicomodule_hom_space(const Bicomodule& m, const Bicomodule& n);
inline std::vector<Matrix> comodule_hom_space(const Bicomodule& m, const Bicomodule& n) {
    return bicomodule_hom_space(m, n);
}

struct IsoSearchResult {
    SearchStatus status = SearchStatus::undecided;
    std::optional<Matrix> iso;
    Certainty certainty;
};

/// Searches the bicomodule hom space for an invertible map. Any returned
/// isomorphism has been verified to be a bijective bicomodule map.
IsoSearchResult bicomodule_iso_exists(const Bicomodule& m, const Bicomodule& n, SearchBudget budget,
                                      std::uint64_t seed);

struct CotensorResult {
    Bicomodule left_factor;
    Bicomodule right_factor;
    TensorPtr tensor;    // M ⊗_A N
    Matrix embedding;    // columns: basis of ker ω inside M ⊗_A N
    Bicomodule induced;  // M □_C N as a C'-C'' bicomodule
};

/// M □_C N = ker(ρ_M ⊗ N - M ⊗ λ_N) with the induced bicomodule structure.
/// Throws StructureError on mismatched middle corings and std::logic_error if
/// the kernel is not a sub-bicomodule.
CotensorResult cotensor(const Bicomodule& m, const Bicomodule& n);

/// C □_C N -> N, c ⊗ n -> ε(c) n, and M □_C C -> M, m ⊗ c -> m ε(c).
Matrix cotensor_left_unit(const CotensorResult& r);
Matrix cotensor_right_unit(const CotensorResult& r);

/// _fC for a coring isomorphism f = (φ, ρ): C -> D: carrier C with
/// b·c = ρ^{-1}(b) c, λ(c) = φ(c_(1)) ⊗ c_(2), ρ = Δ.
Bicomodule twisted_bicomodule(const CoringMorphism& f);

}  // namespace corings
