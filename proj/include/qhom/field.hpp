#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhom {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact rational coefficients. The representation keeps values in lowest
/// terms with a positive denominator, which is exactly the invariant the
/// rest of the library relies on.
struct RationalField {
    using Elem = Rational;

    static constexpr std::uint64_t characteristic() noexcept { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }

    Elem from_integer(const Integer& n) const { return Elem(n); }
    Elem from_long(long long n) const { return Elem(n); }

    bool is_zero(const Elem& a) const { return a.is_zero(); }

    std::string to_string(const Elem& a) const { return a.str(); }

    bool operator==(const RationalField&) const = default;
};

/// Residue in [0, p) together with its modulus. Elements of different
/// moduli never mix; arithmetic checks this.
class FpElem {
public:
    FpElem() = default;
    FpElem(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {}

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend FpElem operator+(const FpElem& a, const FpElem& b) {
        std::uint64_t p = match(a, b);
        std::uint64_t s = a.v_ + b.v_;
        return FpElem(s >= p ? s - p : s, p);
    }
    friend FpElem operator-(const FpElem& a, const FpElem& b) {
        std::uint64_t p = match(a, b);
        return FpElem(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_, p);
    }
    friend FpElem operator*(const FpElem& a, const FpElem& b) {
        std::uint64_t p = match(a, b);
        return FpElem((a.v_ * b.v_) % p, p);
    }
    FpElem operator-() const { return FpElem(v_ == 0 ? 0 : p_ - v_, p_); }
    friend FpElem operator/(const FpElem& a, const FpElem& b) { return a * b.inverse(); }

    FpElem& operator+=(const FpElem& b) { return *this = *this + b; }
    FpElem& operator-=(const FpElem& b) { return *this = *this - b; }
    FpElem& operator*=(const FpElem& b) { return *this = *this * b; }

    FpElem inverse() const {
        if (v_ == 0) throw std::domain_error("FpElem: division by zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return FpElem(static_cast<std::uint64_t>(t), p_);
    }

    bool operator==(const FpElem&) const = default;

private:
    static std::uint64_t match(const FpElem& a, const FpElem& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("FpElem: modulus mismatch");
        return a.p_;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

/// Prime field F_p, p < 2^31 so products fit in a 64-bit word.
class PrimeField {
public:
    using Elem = FpElem;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31) || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime below 2^31");
    }

    std::uint64_t characteristic() const noexcept { return p_; }
    std::uint64_t modulus() const noexcept { return p_; }

    Elem zero() const { return Elem(0, p_); }
    Elem one() const { return Elem(1, p_); }

    Elem from_integer(const Integer& n) const {
        Integer r = n % p_;
        if (r < 0) r += p_;
        return Elem(r.convert_to<std::uint64_t>(), p_);
    }
    Elem from_long(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return Elem(static_cast<std::uint64_t>(r), p_);
    }

    bool is_zero(const Elem& a) const { return a.is_zero(); }

    std::string to_string(const Elem& a) const { return std::to_string(a.value()); }

    bool operator==(const PrimeField&) const = default;

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
};

template <class F>
typename F::Elem field_pow(const F& fld, typename F::Elem base, unsigned long long e) {
    typename F::Elem acc = fld.one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace qhom
