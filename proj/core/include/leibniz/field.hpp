#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace leibniz {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input (documents, scalar strings, bad indices).
struct ParseError : Error {
    using Error::Error;
};

/// A mathematical contract was violated (axiom failure, bad precondition).
struct ValidationError : Error {
    using Error::Error;
};

/// An enumeration or memory budget was exceeded; carries a size estimate.
struct BudgetError : Error {
    using Error::Error;
};

/// Mixing scalars of different ground fields.
struct FieldMismatchError : Error {
    using Error::Error;
};

bool is_prime_u32(std::uint32_t n);

/// num/den as a canonical rational; accepts any nonzero denominator sign.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Ground field descriptor: the rationals or a prime field GF(p), p < 2^31.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec{0}; }
    static FieldSpec prime_field(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    /// 0 for the rationals, p for GF(p).
    std::uint32_t characteristic() const { return p_; }

    std::uint32_t prime() const;

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;

private:
    explicit FieldSpec(std::uint32_t p) : p_(p) {}
    std::uint32_t p_;
};

/// Exact element of the ground field: a reduced fraction over the rationals
/// or a canonical residue in [0, p) over GF(p). Every scalar knows its field;
/// mixing fields throws FieldMismatchError.
class Scalar {
public:
    /// Rational zero. Prefer Scalar::zero(field) when a field is in scope.
    Scalar() = default;

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of(const FieldSpec& f, long long value);
    static Scalar of(const FieldSpec& f, const BigInt& value);
    static Scalar rational(const BigRational& q);
    static Scalar residue(std::uint32_t p, std::uint64_t value);

    /// Parses "a", "-a" or "a/b" exactly; reduces mod p over prime fields.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    const BigRational& rational_value() const;
    std::uint32_t residue_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);

    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Canonical text form: "a" or "a/b" over the rationals, the residue over GF(p).
    std::string to_string() const;

private:
    void check_same_field(const Scalar& rhs) const;

    BigRational q_;
    std::uint32_t r_ = 0;
    std::uint32_t p_ = 0;
};

/// n! as a field scalar (used by small exponential series; requires char 0
/// or n < p).
Scalar factorial_scalar(const FieldSpec& f, unsigned n);

/// Binomial coefficient C(n, k) as a field scalar.
Scalar binomial_scalar(const FieldSpec& f, unsigned n, unsigned k);

}  // namespace leibniz
