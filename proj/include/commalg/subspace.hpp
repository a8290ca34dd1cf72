#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "commalg/matrix.hpp"

namespace commalg {

/// A linear subspace of F^ambient held as its unique reduced row-echelon
/// basis. Two subspaces are equal iff their bases are identical, so
/// operator== is span equality.
///
/// Matrix subspaces use ambient = n*n with the row-major vectorization of
/// Matrix::vectorize().
class Subspace {
public:
    Subspace(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

    /// The zero subspace of M_n(F).
    static Subspace zero(std::size_t n, Field field) { return {field, n * n}; }
    /// All of M_n(F).
    static Subspace full(std::size_t n, Field field);

    [[nodiscard]] Field field() const noexcept { return field_; }
    [[nodiscard]] std::size_t ambient() const noexcept { return ambient_; }
    /// Side length n when ambient = n*n, else 0.
    [[nodiscard]] std::size_t side() const noexcept;
    [[nodiscard]] std::size_t dimension() const noexcept { return rows_.size(); }
    [[nodiscard]] const std::vector<Vector>& basis() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// Basis rows reshaped into n x n matrices.
    [[nodiscard]] std::vector<Matrix> basis_matrices() const;

    /// Residue of v after elimination against the basis; zero iff v is in the span.
    [[nodiscard]] Vector reduce(Vector v) const;
    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] bool contains(const Matrix& m) const;
    /// Every basis vector of other lies in *this.
    [[nodiscard]] bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    friend class SpanBuilder;
    void check_vector(const Vector& v) const;

    Field field_;
    std::size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Incremental RREF: each add() keeps the basis fully reduced, so the
/// result never depends on insertion order.
class SpanBuilder {
public:
    SpanBuilder(Field field, std::size_t ambient) : space_(field, ambient) {}
    explicit SpanBuilder(Subspace start) : space_(std::move(start)) {}

    /// Returns true when v was outside the current span.
    bool add(Vector v);
    bool add(const Matrix& m);
    void add_all(const Subspace& other);

    [[nodiscard]] const Subspace& view() const noexcept { return space_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return space_.dimension(); }
    Subspace build() && { return std::move(space_); }

private:
    Subspace space_;
};

/// Canonical span of coordinate rows of length `ambient`.
Subspace rref(std::span<const Vector> rows, Field field, std::size_t ambient);

/// Span of matrices inside M_n(F).
Subspace span_of(std::span<const Matrix> mats);
Subspace span_of(std::span<const Matrix> mats, std::size_t n, Field field);

bool subspace_contains(const Subspace& space, const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// Null space {x : A x = 0} where A has the given rows, each of length `columns`.
Subspace kernel(std::span<const Vector> map_rows, Field field, std::size_t columns);

}  // namespace commalg
