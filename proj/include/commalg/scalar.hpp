#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace commalg {

/// The base field: exact rationals (modulus 0) or GF(p) for a prime p < 2^32.
class Field {
public:
    constexpr Field() = default;

    static constexpr Field rational() { return Field{}; }
    /// Throws InvalidField unless p is prime and below 2^32.
    static Field prime(std::uint64_t p);
    /// Accepts "rational", "q", or "gf:<p>".
    static Field parse(std::string_view text);

    [[nodiscard]] constexpr bool is_rational() const noexcept { return modulus_ == 0; }
    [[nodiscard]] constexpr std::uint64_t modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(Field, Field) = default;

private:
    explicit constexpr Field(std::uint64_t p) : modulus_(p) {}
    std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are canonical in [0, p).
class Scalar {
public:
    Scalar() : Scalar(Field::rational(), 0) {}
    Scalar(Field field, long value);
    Scalar(Field field, const mpq_class& value);

    static Scalar zero(Field field) { return {field, 0}; }
    static Scalar one(Field field) { return {field, 1}; }
    /// Parses an integer or "num/den" into the given field.
    static Scalar parse(Field field, std::string_view text);

    [[nodiscard]] Field field() const noexcept { return field_; }
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;

    /// Rational value; only valid for rational scalars.
    [[nodiscard]] const mpq_class& rational() const;
    /// Residue value; only valid for prime-field scalars.
    [[nodiscard]] std::uint64_t residue() const;

    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] std::string to_string() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    /// *this -= a * b without a temporary Scalar.
    Scalar& sub_mul(const Scalar& a, const Scalar& b);
    /// *this += a * b without a temporary Scalar.
    Scalar& add_mul(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

private:
    void require_same_field(const Scalar& rhs) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace commalg
