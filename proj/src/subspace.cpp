#include "commalg/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "commalg/error.hpp"

namespace commalg {

namespace {

bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

Subspace Subspace::full(std::size_t n, Field field) {
    SpanBuilder builder(field, n * n);
    for (std::size_t c = 0; c < n * n; ++c) {
        Vector e(n * n, Scalar::zero(field));
        e[c] = Scalar::one(field);
        builder.add(std::move(e));
    }
    return std::move(builder).build();
}

std::size_t Subspace::side() const noexcept {
    auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(ambient_))));
    return n * n == ambient_ ? n : 0;
}

std::vector<Matrix> Subspace::basis_matrices() const {
    const auto n = side();
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "subspace is not a space of square matrices");
    std::vector<Matrix> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(Matrix::from_vector(n, row));
    return out;
}

void Subspace::check_vector(const Vector& v) const {
    if (v.size() != ambient_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector length " + std::to_string(v.size()) + " != ambient " + std::to_string(ambient_));
    }
    for (const auto& s : v) {
        if (s.field() != field_) throw Error(ErrorKind::FieldMismatch, "vector entry over " + s.field().to_string());
    }
}

Vector Subspace::reduce(Vector v) const {
    check_vector(v);
    // RREF rows vanish on each other's pivots, so one pass suffices.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto p = pivots_[r];
        if (v[p].is_zero()) continue;
        const Scalar factor = v[p];
        const auto& row = rows_[r];
        for (std::size_t c = p; c < ambient_; ++c) {
            if (!row[c].is_zero()) v[c].sub_mul(factor, row[c]);
        }
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Matrix& m) const {
    if (m.n() * m.n() != ambient_) {
        throw Error(ErrorKind::DimensionMismatch, "matrix of side " + std::to_string(m.n()) +
                                                      " does not live in ambient " + std::to_string(ambient_));
    }
    return contains(m.vectorize());
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different ambients");
    if (other.field_ != field_) throw Error(ErrorKind::FieldMismatch, "subspaces over different fields");
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vector& v) { return contains(v); });
}

bool SpanBuilder::add(Vector v) {
    auto& s = space_;
    v = s.reduce(std::move(v));
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
    if (lead == v.end()) return false;
    const auto q = static_cast<std::size_t>(lead - v.begin());

    if (!v[q].is_one()) {
        const Scalar inv = v[q].inverse();
        for (std::size_t c = q; c < v.size(); ++c) {
            if (!v[c].is_zero()) v[c] *= inv;
        }
    }
    // Clear column q in the existing rows; only rows with pivot < q can be nonzero there.
    for (auto& row : s.rows_) {
        if (row[q].is_zero()) continue;
        const Scalar factor = row[q];
        for (std::size_t c = q; c < v.size(); ++c) {
            if (!v[c].is_zero()) row[c].sub_mul(factor, v[c]);
        }
    }
    auto pos = std::lower_bound(s.pivots_.begin(), s.pivots_.end(), q);
    const auto idx = pos - s.pivots_.begin();
    s.pivots_.insert(pos, q);
    s.rows_.insert(s.rows_.begin() + idx, std::move(v));
    return true;
}

bool SpanBuilder::add(const Matrix& m) {
    if (m.n() * m.n() != space_.ambient()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix side does not match subspace ambient");
    }
    return add(m.vectorize());
}

void SpanBuilder::add_all(const Subspace& other) {
    for (const auto& row : other.basis()) add(row);
}

Subspace rref(std::span<const Vector> rows, Field field, std::size_t ambient) {
    SpanBuilder builder(field, ambient);
    for (const auto& row : rows) builder.add(row);
    return std::move(builder).build();
}

Subspace span_of(std::span<const Matrix> mats) {
    if (mats.empty()) throw Error(ErrorKind::EmptySystem, "span_of needs a side length for an empty list");
    return span_of(mats, mats.front().n(), mats.front().field());
}

Subspace span_of(std::span<const Matrix> mats, std::size_t n, Field field) {
    SpanBuilder builder(field, n * n);
    for (const auto& m : mats) {
        if (m.field() != field) throw Error(ErrorKind::FieldMismatch, "matrix over " + m.field().to_string());
        builder.add(m);
    }
    return std::move(builder).build();
}

bool subspace_contains(const Subspace& space, const Matrix& m) {
    if (m.field() != space.field()) throw Error(ErrorKind::FieldMismatch, "matrix and subspace fields differ");
    return space.contains(m);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "subspaces of different ambients");
    if (a.field() != b.field()) throw Error(ErrorKind::FieldMismatch, "subspaces over different fields");
    SpanBuilder builder(a);
    builder.add_all(b);
    return std::move(builder).build();
}

Subspace kernel(std::span<const Vector> map_rows, Field field, std::size_t columns) {
    const Subspace row_space = rref(map_rows, field, columns);
    const auto& pivots = row_space.pivots();
    SpanBuilder null_space(field, columns);
    std::size_t next_pivot = 0;
    for (std::size_t f = 0; f < columns; ++f) {
        if (next_pivot < pivots.size() && pivots[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        Vector x(columns, Scalar::zero(field));
        x[f] = Scalar::one(field);
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -row_space.basis()[r][f];
        null_space.add(std::move(x));
    }
    return std::move(null_space).build();
}

}  // namespace commalg
