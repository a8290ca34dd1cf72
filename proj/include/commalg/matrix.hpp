#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "commalg/scalar.hpp"

namespace commalg {

/// Coordinate vector, e.g. the row-major vectorization of an n x n matrix.
using Vector = std::vector<Scalar>;

/// Dense n x n matrix over a single field. Element access is 1-based, so
/// at(i, j) is the coefficient of E_{i,j}.
class Matrix {
public:
    Matrix(std::size_t n, Field field);

    static Matrix zero(std::size_t n, Field field) { return {n, field}; }
    static Matrix identity(std::size_t n, Field field);
    /// Inverse of vectorize(): coords has n*n entries in row-major order.
    static Matrix from_vector(std::size_t n, std::span<const Scalar> coords);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] Field field() const noexcept { return field_; }

    [[nodiscard]] const Scalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Scalar value);

    /// Row-major over 1-based (i, j): coordinate (i-1)*n + (j-1).
    [[nodiscard]] const Vector& vectorize() const noexcept { return entries_; }

    [[nodiscard]] bool is_zero() const noexcept;
    /// Number of nonzero entries.
    [[nodiscard]] std::size_t support_size() const noexcept;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Scalar& c);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const Scalar& c) { return lhs *= c; }
    friend Matrix operator*(const Scalar& c, Matrix rhs) { return rhs *= c; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

    friend bool operator==(const Matrix&, const Matrix&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void require_compatible(const Matrix& rhs) const;
    [[nodiscard]] std::size_t offset(std::size_t i, std::size_t j) const;

    std::size_t n_;
    Field field_;
    Vector entries_;
};

/// E_{i,j}: a single 1 at (i, j).
Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j, Field field = Field::rational());

Matrix mat_mul(const Matrix& a, const Matrix& b);

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// a^e with a^0 = identity.
Matrix mat_pow(const Matrix& a, unsigned e);

/// Checks that all matrices share side length and field; returns the side.
std::size_t require_uniform(std::span<const Matrix> mats);

}  // namespace commalg
