#pragma once

#include "corings/comodule.hpp"

namespace corings {

/// Free A-bimodule on symbols e_ij (central), basis index ((i*n + j)*dim A + s)
/// for a_s e_ij, with Δ(e_ij) = Σ_k e_ik ⊗ e_kj and ε(e_ij) = δ_ij.
Coring matrix_coring(const AlgebraPtr& a, std::size_t n);

/// Coalgebra over k with basis S, Δ(s) = s ⊗ s, ε(s) = 1.
Coring grouplike_coalgebra(Field f, std::size_t size, std::vector<std::string> names = {});

/// (A, C, ψ) with C a coalgebra (a coring over k). ψ: C ⊗ A -> A ⊗ C is a
/// (dim A * dim C) x (dim C * dim A) matrix; input index c*dim A + a,
/// output index a*dim C + c.
struct EntwiningStructure {
    AlgebraPtr algebra;
    CoringPtr coalgebra;
    Matrix psi;
};

/// ψ(c ⊗ a) = a ⊗ c.
Matrix flip_psi(const Algebra& a, std::size_t coalgebra_dim);

/// ES1..ES4, one check each, with a witness basis triple on failure.
ValidationReport check_entwining(const EntwiningStructure& e);

/// A ⊗ C (index i*dim C + j) with b(a⊗c) = ba⊗c, (a⊗c)b = a ψ(c⊗b),
/// Δ(a⊗c) = Σ (a⊗c_(1)) ⊗_A (1⊗c_(2)), ε(a⊗c) = a ε(c). Built for any ψ;
/// check_coring decides validity.
Coring coring_from_entwining(const EntwiningStructure& e);

/// A right A-module M with a k-linear ρ: M -> M ⊗ C (index m*dim C + c) as a
/// right comodule over A ⊗ C: ρ'(m) = Σ m_(0) ⊗_A (1 ⊗ m_(1)).
Bicomodule entwined_to_comodule(const CoringPtr& ac, const EntwiningStructure& e, const Bimodule& m,
                                const Matrix& rho);

/// ρ(m a) = Σ m_(0) a_ψ ⊗ m_(1)^ψ on all basis pairs.
ValidationReport check_entwined_module(const EntwiningStructure& e, const Bimodule& m, const Matrix& rho);

/// Doi-Koppinen data: a bialgebra H (algebra plus coalgebra on the same
/// space), a right H-comodule algebra A (coaction index a*dim H + h) and a
/// right H-module coalgebra C (one action matrix per basis element of H).
struct DKStructure {
    AlgebraPtr h_algebra;
    CoringPtr h_coalgebra;
    AlgebraPtr algebra;
    Matrix algebra_coaction;
    CoringPtr coalgebra;
    std::vector<Matrix> coalgebra_action;
};

ValidationReport check_dk(const DKStructure& d);
/// ψ(c ⊗ a) = a_(0) ⊗ c a_(1). Throws StructureError naming the violated
/// axiom when the data is not a DK structure.
EntwiningStructure entwining_from_dk(const DKStructure& d);

/// A right G-set X with x·g = action[x*|G| + g].
struct GSet {
    GroupTable group;
    std::size_t size;
    std::vector<std::size_t> action;

    std::size_t act(std::size_t x, std::size_t g) const { return action[x * group.order() + g]; }
    static GSet regular(const GroupTable& g);
    static GSet point(const GroupTable& g);
};

/// G-graded algebra (homogeneous basis with degrees) and a right G-set X.
struct GradedData {
    GradedAlgebra algebra;
    GSet gset;
};

ValidationReport check_graded(const GradedData& g);
/// H = kG, A with a_g -> a_g ⊗ g, C = kX with x·g from the action table.
DKStructure dk_from_graded(const GradedData& g);
/// The coring A ⊗ kX, with A ⊗ kX index i*|X| + x.
Coring graded_coring(const GradedData& g);

/// Σ* ⊗_A Σ for Σ = A^n, built with the tensor machinery: Δ(f⊗x) = Σ_k
/// (f⊗u_k) ⊗ (u_k*⊗x), ε(f⊗x) = f(x).
Coring comatrix_coring(const AlgebraPtr& a, std::size_t n);
/// The identification matrix_coring(A, n) -> comatrix_coring(A, n),
/// a_s e_ij -> u_i* a_s ⊗ u_j, as a coring morphism over the identity of A.
CoringMorphism comatrix_identification(const CoringPtr& matrix, const CoringPtr& comatrix, std::size_t n);

}  // namespace corings
