#include "corings/unit_search.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace corings {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::witness: return "witness";
        case SearchStatus::certified_none: return "certified-none";
        case SearchStatus::undecided: return "undecided";
    }
    return "?";
}

SearchBudget default_budget() {
    SearchBudget b;
    if (const char* env = std::getenv("CORINGS_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && env[0] != '-') b.max_points = v;
    }
    return b;
}

namespace {

// p^m, saturating at limit + 1.
std::uint64_t capped_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (limit + 1) / base) return limit + 1;
        r *= base;
        if (r > limit) return limit + 1;
    }
    return r;
}

class Combiner {
public:
    Combiner(std::span<const Matrix> family, Field f, std::size_t n)
        : family_(family), field_(f), n_(n) {}

    bool nonsingular(const Vector& t) const {
        Matrix m(field_, n_, n_);
        for (std::size_t i = 0; i < family_.size(); ++i)
            if (!t[i].is_zero()) m += t[i] * family_[i];
        return is_nonsingular(m);
    }

private:
    std::span<const Matrix> family_;
    Field field_;
    std::size_t n_;
};

}  // namespace

UnitSearchResult find_nonsingular_combination(std::span<const Matrix> family, SearchBudget budget,
                                              std::uint64_t seed) {
    UnitSearchResult out;
    if (family.empty()) {
        out.status = SearchStatus::certified_none;
        return out;
    }
    const Field f = family[0].field();
    const std::size_t n = family[0].rows();
    for (const auto& m : family)
        if (!m.is_square() || m.rows() != n || m.field() != f)
            throw DimensionError("unit search: inconsistent ambient dimensions");
    const std::size_t m = family.size();
    Combiner combine(family, f, n);

    auto try_point = [&](const Vector& t) {
        ++out.evaluations;
        if (combine.nonsingular(t)) {
            out.status = SearchStatus::witness;
            out.witness = t;
            return true;
        }
        return false;
    };

    std::mt19937_64 rng(seed);
    if (f.is_prime_field()) {
        const std::uint64_t p = f.characteristic();
        const std::uint64_t total = capped_power(p, m, budget.max_points);
        if (total <= budget.max_points) {
            std::vector<std::uint64_t> digits(m, 0);
            for (std::uint64_t k = 0; k < total; ++k) {
                Vector t(m);
                for (std::size_t i = 0; i < m; ++i) t[i] = Scalar::residue(f.characteristic(), digits[i]);
                if (try_point(t)) return out;
                for (std::size_t i = 0; i < m; ++i) {
                    if (++digits[i] < p) break;
                    digits[i] = 0;
                }
            }
            out.status = SearchStatus::certified_none;
            return out;
        }
        std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
        for (std::uint64_t k = 0; k < budget.max_points; ++k) {
            Vector t(m);
            for (auto& x : t) x = Scalar::residue(f.characteristic(), dist(rng));
            if (try_point(t)) return out;
        }
        out.status = SearchStatus::undecided;
        return out;
    }

    // Rationals: complete grid {0..n}^m when affordable.
    const std::uint64_t side = n + 1;
    const std::uint64_t grid = capped_power(side, m, budget.max_points);
    if (grid <= budget.max_points) {
        std::vector<std::uint64_t> digits(m, 0);
        for (std::uint64_t k = 0; k < grid; ++k) {
            Vector t(m);
            for (std::size_t i = 0; i < m; ++i) t[i] = Scalar(static_cast<std::int64_t>(digits[i]));
            if (try_point(t)) return out;
            for (std::size_t i = 0; i < m; ++i) {
                if (++digits[i] < side) break;
                digits[i] = 0;
            }
        }
        out.status = SearchStatus::certified_none;
        return out;
    }
    constexpr int kRepetitions = 20;
    std::uniform_int_distribution<std::int64_t> dist(0, (std::int64_t{1} << 30) - 1);
    for (int rep = 0; rep < kRepetitions; ++rep) {
        Vector t(m);
        for (auto& x : t) x = Scalar(dist(rng));
        if (try_point(t)) return out;
    }
    out.status = SearchStatus::certified_none;
    out.certainty.deterministic = false;
    out.certainty.failure_bound = std::pow(static_cast<double>(n) / std::ldexp(1.0, 30), kRepetitions);
    return out;
}

UnitSearchResult subspace_contains_unit(std::span<const Vector> basis, const BilinearProduct& multiply,
                                        const Vector& one, SearchBudget budget, std::uint64_t seed) {
    const std::size_t dim = one.size();
    if (dim == 0) throw DimensionError("unit search: zero-dimensional algebra");
    const Field f = one[0].field();
    std::vector<Matrix> operators;
    operators.reserve(basis.size());
    for (const auto& b : basis) {
        if (b.size() != dim) throw DimensionError("unit search: inconsistent ambient dimensions");
        operators.push_back(matrix_of(f, dim, dim, [&](const Vector& e) { return multiply(b, e); }));
    }
    UnitSearchResult out = find_nonsingular_combination(operators, budget, seed);
    if (out.status != SearchStatus::witness) return out;

    Vector x = zero_vector(f, dim);
    for (std::size_t i = 0; i < basis.size(); ++i) axpy(x, (*out.witness)[i], basis[i]);
    Matrix lx = matrix_of(f, dim, dim, [&](const Vector& e) { return multiply(x, e); });
    auto y = solve_linear(lx, one);
    if (!y || multiply(x, *y) != one || multiply(*y, x) != one)
        throw std::logic_error("unit search: witness failed exact inverse verification");
    out.element = std::move(x);
    out.inverse = std::move(*y);
    return out;
}

}  // namespace corings
