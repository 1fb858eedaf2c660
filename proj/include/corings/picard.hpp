#pragma once

#include "corings/convolution.hpp"
#include "corings/families.hpp"

namespace corings {

enum class InnerStatus { inner, not_inner, undecided };
std::string to_string(InnerStatus s);

/// Outcome of an inner-automorphism or kernel-membership test. A witness p
/// is a convolution-invertible element of C* (dim A x dim C).
struct InnerTestResult {
    CoringMorphism morphism;
    InnerStatus status = InnerStatus::undecided;
    std::optional<Matrix> witness;
    Certainty certainty;
    std::size_t space_dim = 0;
};

/// {p ∈ C* : Σ φ(c_(1))p(c_(2)) = Σ p(c_(1))c_(2)} for an automorphism
/// f = (φ, ρ) of C.
std::vector<Matrix> inner_candidate_space(const CoringMorphism& f);

/// Whether f lies in Inn^r(C): a unit search in the candidate space inside
/// C*. Throws StructureError unless f is a valid automorphism. A witness is
/// verified by constructing h(c) = Σ p(c_(1))c_(2) and checking that it is a
/// bicomodule isomorphism _fC -> C.
InnerTestResult is_inner(const CoringMorphism& f, SearchBudget budget, std::uint64_t seed);

/// The independent route: search for a bicomodule isomorphism _fC -> C.
IsoSearchResult inner_via_bicomodule(const CoringMorphism& f, SearchBudget budget, std::uint64_t seed);

struct AutomorphismSet {
    CoringPtr coring;
    std::vector<CoringMorphism> elements;
    bool complete = false;
};

/// Coring automorphisms over a prime field. Candidates for φ range over the
/// affine space cut out by ε φ = ρ ε and ρ-twisted bilinearity, filtered by
/// invertibility and comultiplicativity. With fix_rho_identity only ρ = id
/// is tried, otherwise every algebra automorphism. complete is false when
/// the budget cut the enumeration short.
AutomorphismSet enumerate_automorphisms(const CoringPtr& c, bool fix_rho_identity, SearchBudget budget);

struct ExactSequenceReport {
    ValidationReport report;
    std::vector<InnerStatus> inner;
    std::vector<SearchStatus> bicomodule;
    std::size_t aut = 0;
    std::size_t inn = 0;
    /// |Aut| / |Inn| and one representative per coset, when complete.
    std::optional<std::size_t> out;
    std::vector<std::size_t> coset_representatives;
    bool agreement = true;
    bool undecided = false;
};

/// Runs both inner tests on every element, checks that they agree, that
/// Inn is closed under composition and inverses and stable under
/// conjugation by the tested automorphisms, and counts the cosets.
ExactSequenceReport verify_exact_sequence(const AutomorphismSet& auts, SearchBudget budget, std::uint64_t seed);

/// Values p(1 ⊗ x), x ∈ X, of an element of (A ⊗ kX)*, and back. The
/// coring must be graded_coring(g).
Matrix graded_dual_element(const GradedData& g, const std::vector<Vector>& values);
std::vector<Vector> graded_dual_values(const GradedData& g, const Matrix& p);

/// Solves Σ_h q(1⊗xh^{-1}) p(1⊗x)_h = 1 and Σ_h p(1⊗xh^{-1}) q(1⊗x)_h = 1
/// for all x; returns the values of q.
std::optional<std::vector<Vector>> graded_dual_invertible(const GradedData& g, const std::vector<Vector>& p);

/// Membership of an automorphism (φ, ρ) of A ⊗ kX in Inn^r through the
/// graded conditions: a^x_y p(1⊗x)_h = 0 whenever yh ≠ x, where
/// φ(1⊗x) = Σ_y a^x_y ⊗ y, and p(a⊗x) = ρ(a)p(1⊗x).
InnerTestResult graded_ker_omega(const GradedData& g, const CoringMorphism& f, SearchBudget budget,
                                 std::uint64_t seed);

/// Membership of the automorphism (α, γ) of an entwining structure, through
/// Σ (α(a)⊗γ(c_(1)))p(1⊗c_(2)) = Σ p(a⊗c_(1))(1⊗c_(2)). `ac` must be
/// coring_from_entwining(e). Throws StructureError if (α, γ) is not an
/// automorphism of (A, C, ψ).
InnerTestResult entwining_ker_membership(const EntwiningStructure& e, const CoringPtr& ac, const Matrix& alpha,
                                         const Matrix& gamma, SearchBudget budget, std::uint64_t seed);

/// The automorphism of A ⊗ C induced by (α, γ): a ⊗ c -> α(a) ⊗ γ(c).
CoringMorphism entwining_induced(const EntwiningStructure& e, const CoringPtr& ac, const Matrix& alpha,
                                 const Matrix& gamma);

/// Automorphism (ℏ, α, γ) of a DK structure. Validated against
/// ρ_A(α(a)) = α(a_(0)) ⊗ ℏ(a_(1)), γ(ch) = γ(c)ℏ(h) and the bialgebra,
/// algebra and coalgebra automorphism conditions; membership is then decided
/// for the induced entwining automorphism (α, γ).
ValidationReport check_dk_automorphism(const DKStructure& d, const Matrix& hbar, const Matrix& alpha,
                                       const Matrix& gamma);
InnerTestResult dk_ker_membership(const DKStructure& d, const CoringPtr& ac, const Matrix& hbar, const Matrix& alpha,
                                  const Matrix& gamma, SearchBudget budget, std::uint64_t seed);

/// Automorphism (f, φ, α) of graded data: f a group automorphism, φ a
/// permutation of X with φ(xg) = φ(x)f(g), α an algebra automorphism with
/// α(A_g) ⊂ A_{f(g)}.
struct GradedAutomorphism {
    std::vector<std::size_t> group_map;
    std::vector<std::size_t> set_map;
    Matrix alpha;
};
ValidationReport check_graded_automorphism(const GradedData& g, const GradedAutomorphism& t);
/// The automorphism a ⊗ x -> α(a) ⊗ φ(x) of graded_coring(g).
CoringMorphism graded_induced(const GradedData& g, const CoringPtr& c, const GradedAutomorphism& t);
/// Membership through p(a⊗x) = α(a)p(1⊗x) and p(1⊗x)_h = 0 whenever φ(x)h ≠ x.
InnerTestResult graded_triple_ker_membership(const GradedData& g, const CoringPtr& c, const GradedAutomorphism& t,
                                             SearchBudget budget, std::uint64_t seed);

}  // namespace corings
