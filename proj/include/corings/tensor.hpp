#pragma once

#include <memory>

#include "corings/algebra.hpp"

namespace corings {

/// An induced map that does not send balancing relations to balancing
/// relations. `relation` is the offending ambient vector of the source.
class BalancednessError : public StructureError {
public:
    BalancednessError(const std::string& what, Vector relation)
        : StructureError(what), relation_(std::move(relation)) {}
    const Vector& relation() const noexcept { return relation_; }

private:
    Vector relation_;
};

/// M ⊗_A N for a B-A bimodule M and an A-C bimodule N, realized as the
/// quotient of the ambient space M ⊗_k N (index i*dim N + j) by the span of
/// (m a) ⊗ n - m ⊗ (a n).
///
/// Quotient coordinates are the non-pivot ambient coordinates of the reduced
/// relation matrix; the section is the corresponding coordinate embedding.
class TensorProduct {
public:
    /// Throws StructureError if M's right algebra is not N's left algebra.
    TensorProduct(Bimodule m, Bimodule n);

    const Bimodule& left() const noexcept { return m_; }
    const Bimodule& right() const noexcept { return n_; }
    Field field() const { return m_.field(); }
    std::size_t ambient_dim() const noexcept { return m_.dim() * n_.dim(); }
    std::size_t dim() const noexcept { return free_.size(); }
    std::size_t ambient_index(std::size_t i, std::size_t j) const noexcept { return i * n_.dim() + j; }

    /// dim x ambient_dim.
    const Matrix& project() const noexcept { return project_; }
    /// ambient_dim x dim.
    Matrix section() const;
    /// Ambient coordinate that quotient basis vector k is the image of.
    std::size_t free_coordinate(std::size_t k) const { return free_[k]; }

    Vector project(const Vector& ambient) const { return project_ * ambient; }
    Vector lift(const Vector& q) const;
    /// Image of m ⊗ n in the quotient.
    Vector pure(const Vector& m, const Vector& n) const;
    /// Whether an ambient vector lies in the balancing subspace.
    bool is_relation(const Vector& ambient) const;
    /// Reduced basis of the balancing subspace (rows).
    const Echelon& relations() const noexcept { return relations_; }

    /// The quotient as a B-C bimodule, b(m⊗n)c = (bm)⊗(nc).
    const Bimodule& bimodule() const noexcept { return bimodule_; }

private:
    Bimodule m_, n_;
    Echelon relations_;
    std::vector<std::size_t> free_;
    Matrix project_;
    Bimodule bimodule_;
};

using TensorPtr = std::shared_ptr<const TensorProduct>;

inline TensorPtr tensor_over(const Bimodule& m, const Bimodule& n) {
    return std::make_shared<const TensorProduct>(m, n);
}

/// The map on quotients induced by an ambient map f: src ambient -> dst
/// ambient. Throws BalancednessError unless f sends every balancing relation
/// of src into the balancing subspace of dst.
Matrix induced_map(const Matrix& f, const TensorProduct& src, const TensorProduct& dst);

/// The map on src's quotient induced by an ambient map f: src ambient -> V
/// into a plain space. Throws BalancednessError unless f kills all relations.
Matrix descend(const Matrix& f, const TensorProduct& src);

/// f restricted to the section, with no balancedness check. Only for
/// building linear systems whose solutions are validated afterwards.
Matrix restrict_to_section(const Matrix& f, const TensorProduct& src);

/// A ⊗_A M -> M, a ⊗ m -> a m.
Matrix left_unit_map(const TensorProduct& am);
/// M ⊗_A A -> M, m ⊗ a -> m a.
Matrix right_unit_map(const TensorProduct& ma);

/// M ⊗ (N ⊗ P) -> (M ⊗ N) ⊗ P. `m_np` must be built from M and the bimodule of
/// `np`, `mn_p` from the bimodule of `mn` and P.
Matrix associator(const TensorProduct& m_np, const TensorProduct& np, const TensorProduct& mn_p,
                  const TensorProduct& mn);

/// f ⊗ g on ambient spaces, f: M -> M', g: N -> N' (just the Kronecker product,
/// named for readability at call sites).
inline Matrix tensor_maps(const Matrix& f, const Matrix& g) { return kron(f, g); }

}  // namespace corings
