#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace corings {

class Scalar;

/// The ground field: either the rationals or a prime field F_p with p < 2^31.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field{}; }
    /// Throws std::invalid_argument unless p is a prime in [2, 2^31).
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    bool is_prime_field() const noexcept { return p_ != 0; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t v) const;
    Scalar from_fraction(std::int64_t num, std::int64_t den) const;

    std::string name() const;

    friend bool operator==(Field, Field) = default;

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Thrown on division by zero and on mixing two different prime fields.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exact field element.
///
/// Elements of F_p are stored as a residue in [0, p). Rationals are kept as a
/// reduced int64 fraction and promoted to a GMP rational once an operation
/// overflows; results that fit again are demoted. A rational that meets an
/// F_p element in a binary operation is reduced mod p first, so integer
/// literals such as `Scalar(1)` work in any field.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t v) : num_(v) {}  // NOLINT: integer literals are rationals

    static Scalar residue(std::uint32_t p, std::uint64_t v) {
        Scalar s;
        s.mod_ = p;
        s.num_ = static_cast<std::int64_t>(v % p);
        return s;
    }
    static Scalar rational(std::int64_t num, std::int64_t den);
    static Scalar rational(const mpq_class& q);

    std::uint32_t modulus() const noexcept { return mod_; }
    Field field() const;

    bool is_zero() const noexcept {
        return big_ ? false : num_ == 0;
    }
    bool is_one() const noexcept {
        return !big_ && num_ == 1 && den_ == 1;
    }

    /// Residue of an F_p element, throws for rationals.
    std::uint32_t value() const;
    /// Exact value of a rational as a GMP rational, throws for F_p elements.
    mpq_class to_mpq() const;

    Scalar inverse() const;

    /// Image of this scalar in `f` (rationals reduce mod p; identity otherwise).
    Scalar in(Field f) const;

    std::string to_string() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);
    std::uint64_t residue_mod(std::uint32_t p) const;
    void set_from_mpq(const mpq_class& q);
    void slow_add(const Scalar& o, bool negate);
    void slow_mul(const Scalar& o);

    std::uint32_t mod_ = 0;
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

inline Scalar& Scalar::operator+=(const Scalar& o) {
    if (mod_ != 0 && mod_ == o.mod_) {
        std::uint64_t r = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(o.num_);
        if (r >= mod_) r -= mod_;
        num_ = static_cast<std::int64_t>(r);
        return *this;
    }
    slow_add(o, false);
    return *this;
}

inline Scalar& Scalar::operator-=(const Scalar& o) {
    if (mod_ != 0 && mod_ == o.mod_) {
        std::int64_t r = num_ - o.num_;
        if (r < 0) r += mod_;
        num_ = r;
        return *this;
    }
    slow_add(o, true);
    return *this;
}

inline Scalar& Scalar::operator*=(const Scalar& o) {
    if (mod_ != 0 && mod_ == o.mod_) {
        num_ = static_cast<std::int64_t>(
            (static_cast<std::uint64_t>(num_) * static_cast<std::uint64_t>(o.num_)) % mod_);
        return *this;
    }
    slow_mul(o);
    return *this;
}

inline Scalar Field::zero() const { return p_ ? Scalar::residue(p_, 0) : Scalar(0); }
inline Scalar Field::one() const { return p_ ? Scalar::residue(p_, 1) : Scalar(1); }

}  // namespace corings
