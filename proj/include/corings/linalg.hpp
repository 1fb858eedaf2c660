#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "corings/matrix.hpp"

namespace corings {

/// Reduced row echelon form. Pivots are chosen left to right, taking the first
/// row with a nonzero entry in the column, so results are reproducible.
struct Echelon {
    Matrix rref;                     // only the `rank` nonzero rows are kept
    std::vector<std::size_t> pivots;  // pivot column of each row
    std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon echelon(Matrix a);
std::size_t rank(const Matrix& a);

/// Exact basis of the null space of `a`; empty when `a` is injective.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Some x with a*x = b, or nullopt when the system is inconsistent.
/// Throws DimensionError when a.rows() != b.size().
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

std::optional<Matrix> inverse(const Matrix& a);
Scalar determinant(Matrix a);
bool is_nonsingular(const Matrix& a);

/// Reduces `v` modulo the row space of an echelon form (in place); returns
/// true iff the remainder is zero, i.e. v lies in the row space.
bool reduce_by_rows(const Echelon& e, Vector& v);

/// Builds the matrix of a linear map given as a function on coordinate
/// vectors, by evaluating it on every unit vector. Used to turn linear
/// constraints ("probe each unknown") into a matrix.
Matrix matrix_of(Field f, std::size_t domain_dim, std::size_t codomain_dim,
                 const std::function<Vector(const Vector&)>& map);

/// Basis of the column span of the given vectors (echelon-selected subset).
std::vector<Vector> independent_subset(Field f, const std::vector<Vector>& vs);

}  // namespace corings
