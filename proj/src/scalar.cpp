#include "corings/scalar.hpp"

#include <limits>
#include <numeric>

namespace corings {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(__int128 v) {
    // Keep |v| <= INT64_MAX so negation never overflows.
    return v <= kMax && v >= -kMax;
}

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

mpq_class to_mpq_raw(std::int64_t num, std::int64_t den) {
    mpz_class n, d;
    mpz_set_si(n.get_mpz_t(), num);
    mpz_set_si(d.get_mpz_t(), den);
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("characteristic " + std::to_string(p) +
                                    " is not a prime below 2^31");
    return Field(static_cast<std::uint32_t>(p));
}

Scalar Field::from_int(std::int64_t v) const { return Scalar(v).in(*this); }

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
    return Scalar::rational(num, den).in(*this);
}

std::string Field::name() const { return p_ ? "F" + std::to_string(p_) : "Q"; }

Scalar Scalar::rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    __int128 n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Scalar s;
    if (fits(n) && fits(d)) {
        s.num_ = static_cast<std::int64_t>(n);
        s.den_ = static_cast<std::int64_t>(d);
    } else {
        s.set_from_mpq(to_mpq_raw(num, den));
    }
    return s;
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    mpq_class c(q);
    c.canonicalize();
    s.set_from_mpq(c);
    return s;
}

void Scalar::set_from_mpq(const mpq_class& q) {
    mod_ = 0;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_fits_slong_p(n.get_mpz_t()) && mpz_fits_slong_p(d.get_mpz_t())) {
        long ln = mpz_get_si(n.get_mpz_t());
        long ld = mpz_get_si(d.get_mpz_t());
        if (ln != std::numeric_limits<long>::min()) {
            num_ = ln;
            den_ = ld;
            big_.reset();
            return;
        }
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(q);
}

Field Scalar::field() const { return mod_ ? Field::prime(mod_) : Field::rationals(); }

std::uint32_t Scalar::value() const {
    if (mod_ == 0) throw ArithmeticError("value() called on a rational scalar");
    return static_cast<std::uint32_t>(num_);
}

mpq_class Scalar::to_mpq() const {
    if (mod_ != 0) throw ArithmeticError("to_mpq() called on an F_p scalar");
    if (big_) return *big_;
    return to_mpq_raw(num_, den_);
}

std::uint64_t Scalar::residue_mod(std::uint32_t p) const {
    if (mod_ != 0) return static_cast<std::uint64_t>(num_);
    auto reduce = [p](const mpz_class& z) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
        return r.get_ui();
    };
    std::uint64_t n, d;
    if (big_) {
        n = reduce(big_->get_num());
        d = reduce(big_->get_den());
    } else {
        __int128 nn = num_ % static_cast<std::int64_t>(p);
        if (nn < 0) nn += p;
        n = static_cast<std::uint64_t>(nn);
        d = static_cast<std::uint64_t>(den_ % static_cast<std::int64_t>(p));
    }
    if (d == 0)
        throw ArithmeticError("rational " + to_string() + " has no image in F" + std::to_string(p));
    return n * pow_mod(d, p - 2, p) % p;
}

Scalar Scalar::in(Field f) const {
    if (f.is_rational()) {
        if (mod_ != 0) throw ArithmeticError("cannot lift an F_p element to Q");
        return *this;
    }
    if (mod_ != 0) {
        if (mod_ != f.characteristic()) throw ArithmeticError("mixing different prime fields");
        return *this;
    }
    return residue(f.characteristic(), residue_mod(f.characteristic()));
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
    if (a.mod_ != 0 && b.mod_ != 0 && a.mod_ != b.mod_)
        throw ArithmeticError("mixing different prime fields");
    return a.mod_ ? a.mod_ : b.mod_;
}

void Scalar::slow_add(const Scalar& o, bool negate) {
    std::uint32_t p = common_modulus(*this, o);
    if (p != 0) {
        std::uint64_t x = residue_mod(p), y = o.residue_mod(p);
        if (negate) y = (p - y) % p;
        *this = residue(p, (x + y) % p);
        return;
    }
    if (!big_ && !o.big_) {
        __int128 on = negate ? -static_cast<__int128>(o.num_) : o.num_;
        __int128 n, d;
        if (den_ == 1 && o.den_ == 1) {
            n = static_cast<__int128>(num_) + on;
            d = 1;
        } else {
            n = static_cast<__int128>(num_) * o.den_ + on * den_;
            d = static_cast<__int128>(den_) * o.den_;
            __int128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return;
        }
    }
    mpq_class r = negate ? mpq_class(to_mpq() - o.to_mpq()) : mpq_class(to_mpq() + o.to_mpq());
    set_from_mpq(r);
}

void Scalar::slow_mul(const Scalar& o) {
    std::uint32_t p = common_modulus(*this, o);
    if (p != 0) {
        *this = residue(p, residue_mod(p) * o.residue_mod(p) % p);
        return;
    }
    if (!big_ && !o.big_) {
        __int128 n = static_cast<__int128>(num_) * o.num_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        if (d != 1) {
            __int128 g = gcd128(n, d);
            if (g > 1) {
                n /= g;
                d /= g;
            }
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return;
        }
    }
    set_from_mpq(to_mpq() * o.to_mpq());
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    if (mod_ != 0) return residue(mod_, pow_mod(static_cast<std::uint64_t>(num_), mod_ - 2, mod_));
    if (big_) return rational(1 / *big_);
    return rational(den_, num_);
}

Scalar Scalar::operator-() const {
    if (mod_ != 0) return residue(mod_, (mod_ - static_cast<std::uint64_t>(num_)) % mod_);
    if (big_) return rational(-*big_);
    Scalar s = *this;
    s.num_ = -num_;
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mod_ == b.mod_) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // canonical forms differ
    }
    std::uint32_t p = Scalar::common_modulus(a, b);
    return a.residue_mod(p) == b.residue_mod(p);
}

std::string Scalar::to_string() const {
    if (mod_ != 0) return std::to_string(num_);
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace corings
