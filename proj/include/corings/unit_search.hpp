#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "corings/linalg.hpp"

namespace corings {

enum class SearchStatus { witness, certified_none, undecided };

std::string to_string(SearchStatus s);

struct Certainty {
    bool deterministic = true;
    /// Upper bound on the probability that a certified-none answer is wrong.
    /// Zero when deterministic.
    double failure_bound = 0.0;
};

/// Limits for the search over coefficient vectors.
struct SearchBudget {
    /// Maximum number of evaluation points (exhaustive, grid, or sampled).
    std::uint64_t max_points = 1u << 20;
};

/// Default budget, overridable through the CORINGS_BUDGET environment
/// variable (a nonnegative integer).
SearchBudget default_budget();

struct UnitSearchResult {
    SearchStatus status = SearchStatus::undecided;
    std::optional<Vector> witness;   // coefficients t with sum t_i b_i invertible
    std::optional<Vector> element;   // the invertible element itself (algebra search)
    std::optional<Vector> inverse;   // its two-sided inverse (algebra search)
    Certainty certainty;
    std::uint64_t evaluations = 0;
};

/// Decides whether some linear combination sum t_i M_i of square matrices is
/// nonsingular. Over F_p the space is enumerated when p^m fits the budget
/// (otherwise only sampled: a hit is a witness, a miss is undecided). Over Q
/// the determinant is a polynomial of degree <= n in t, so the grid
/// {0..n}^m is complete; beyond the budget 20 random points from [0, 2^30)
/// are tried and a miss is reported with failure bound (n / 2^30)^20.
UnitSearchResult find_nonsingular_combination(std::span<const Matrix> family, SearchBudget budget,
                                              std::uint64_t seed);

using BilinearProduct = std::function<Vector(const Vector&, const Vector&)>;

/// Searches span(basis) for an invertible element of the finite-dimensional
/// associative unital algebra given by `multiply` and `one`. Every witness is
/// checked by computing its inverse and multiplying on both sides.
UnitSearchResult subspace_contains_unit(std::span<const Vector> basis, const BilinearProduct& multiply,
                                        const Vector& one, SearchBudget budget, std::uint64_t seed);

}  // namespace corings
