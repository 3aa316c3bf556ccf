#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

/*
 * The two semifield backends for the subtraction-free maps.
 *
 * PosRational wraps an exact arbitrary-precision rational that is
 * strictly positive by construction; the only operations are +, *, /
 * so positivity is an invariant, not a runtime hope.  Intermediate
 * values grow roughly cubically per composed map and the stress inputs
 * use 2^{+-30}, which is why the backing type is arbitrary precision.
 *
 * TropInt is the tropicalization: plus is min, times is integer
 * addition, divide is subtraction, all on int64 with checked overflow
 * (hard failure, never wraparound).
 *
 * Both satisfy the Semifield concept used by the map templates.
 */

namespace krc {

template <typename T>
concept Semifield = std::regular<T> && requires(T a, T b) {
    { a + b } -> std::same_as<T>;
    { a * b } -> std::same_as<T>;
    { a / b } -> std::same_as<T>;
};

class PosRational {
  public:
    using rep = boost::multiprecision::cpp_rational;

    PosRational() : v_(1) {}
    explicit PosRational(const rep& v) : v_(v) { require_positive(); }
    explicit PosRational(int64_t num, int64_t den = 1) : v_(rep(num) / den) { require_positive(); }

    /* "p/q" or "p" */
    static PosRational from_string(const std::string& text) {
        try {
            return PosRational(rep(text));
        } catch (const std::exception&) {
            throw std::invalid_argument("not a rational literal: '" + text + "'");
        }
    }

    std::string str() const {
        if (boost::multiprecision::denominator(v_) == 1)
            return boost::multiprecision::numerator(v_).str();
        return v_.str();
    }

    const rep& value() const { return v_; }

    PosRational operator+(const PosRational& o) const { return PosRational(rep(v_ + o.v_)); }
    PosRational operator*(const PosRational& o) const { return PosRational(rep(v_ * o.v_)); }
    PosRational operator/(const PosRational& o) const { return PosRational(rep(v_ / o.v_)); }

    bool operator==(const PosRational&) const = default;

  private:
    void require_positive() const {
        if (v_ <= 0) throw std::invalid_argument("rational semifield value must be strictly positive");
    }

    rep v_;
};

class TropInt {
  public:
    TropInt() : v_(0) {}
    explicit TropInt(int64_t v) : v_(v) {}

    static TropInt from_string(const std::string& text) {
        size_t used = 0;
        int64_t v = 0;
        try {
            v = std::stoll(text, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a tropical integer literal: '" + text + "'");
        }
        if (used != text.size()) throw std::invalid_argument("not a tropical integer literal: '" + text + "'");
        return TropInt(v);
    }

    std::string str() const { return std::to_string(v_); }
    int64_t value() const { return v_; }

    TropInt operator+(const TropInt& o) const { return TropInt(v_ < o.v_ ? v_ : o.v_); }
    TropInt operator*(const TropInt& o) const {
        int64_t r = 0;
        if (__builtin_add_overflow(v_, o.v_, &r)) throw std::overflow_error("tropical product overflow");
        return TropInt(r);
    }
    TropInt operator/(const TropInt& o) const {
        int64_t r = 0;
        if (__builtin_sub_overflow(v_, o.v_, &r)) throw std::overflow_error("tropical quotient overflow");
        return TropInt(r);
    }

    bool operator==(const TropInt&) const = default;

  private:
    int64_t v_;
};

static_assert(Semifield<PosRational>);
static_assert(Semifield<TropInt>);

} /* namespace krc */
