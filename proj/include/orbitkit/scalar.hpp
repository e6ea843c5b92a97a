#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbitkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two scalars from different ground fields met in one operation.
class FieldMismatchError : public Error {
public:
    using Error::Error;
};

/// Requested ground field is not supported (p = 2, composite, out of range).
class BadFieldError : public Error {
public:
    using Error::Error;
};

/// Inversion or division by zero.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (scalars, points, field names).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structural precondition failed (singular matrix, off-span element,
/// point not in the claimed orbit class, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class Scalar;

/// Ground field tag: the rationals, or F_p for an odd prime p < 2^31.
///
/// Characteristic 2 is rejected at construction; the unipotent group
/// elements need 1/2 in the field.
class Field {
public:
    /// Default field is Q.
    Field() = default;

    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    /// 0 for Q, p for F_p.
    std::uint64_t characteristic() const { return p_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;

    /// Accepts the serialized forms: "n" or "n/d" over Q, a decimal
    /// integer (reduced mod p, sign allowed) over F_p.
    Scalar parse(std::string_view text) const;

    /// "Q" or "Fp:<p>".
    std::string name() const;
    static Field parse_name(std::string_view text);

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

/// Immutable exact scalar: a reduced fraction over Q or a residue in [0,p)
/// over F_p. All arithmetic is exact; cross-field arithmetic throws
/// FieldMismatchError.
class Scalar {
public:
    /// Rational zero.
    Scalar() = default;

    static Scalar rational(long num, long den = 1);
    static Scalar rational(mpq_class value);
    static Scalar residue(std::uint64_t p, std::int64_t value);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Multiplicative inverse; throws DivisionByZeroError on zero.
    Scalar invert() const;
    Scalar operator-() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Scalars from different fields compare unequal.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "n/d" (the "/d" omitted when d = 1) over Q, decimal residue over F_p.
    std::string to_string() const;

    /// Rational payload; only meaningful over Q.
    const mpq_class& rational_value() const { return rat_; }
    /// Residue payload; only meaningful over F_p.
    std::uint64_t residue_value() const { return res_; }

private:
    friend class Field;
    Field field_;
    mpq_class rat_;
    std::uint64_t res_ = 0;
};

/// A square root of `a` in the base field, when one exists there.
/// Over F_p the smallest nonnegative root is returned (exhaustive search);
/// over Q the positive root. Non-squares yield nullopt, not an error.
std::optional<Scalar> sqrt_witness(const Scalar& a);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace orbitkit
