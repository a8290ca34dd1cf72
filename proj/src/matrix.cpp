#include "commalg/matrix.hpp"

#include <sstream>

#include "commalg/error.hpp"

namespace commalg {

Matrix::Matrix(std::size_t n, Field field) : n_(n), field_(field), entries_(n * n, Scalar::zero(field)) {
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "matrix side must be at least 1");
}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix out(n, field);
    for (std::size_t i = 1; i <= n; ++i) out.set(i, i, Scalar::one(field));
    return out;
}

Matrix Matrix::from_vector(std::size_t n, std::span<const Scalar> coords) {
    if (n == 0 || coords.size() != n * n) {
        throw Error(ErrorKind::DimensionMismatch,
                    "vector of length " + std::to_string(coords.size()) + " is not an " + std::to_string(n) + "x" +
                        std::to_string(n) + " matrix");
    }
    Matrix out(n, coords.front().field());
    for (std::size_t c = 0; c < coords.size(); ++c) {
        if (coords[c].field() != out.field_) throw Error(ErrorKind::FieldMismatch, "mixed fields in vector");
        out.entries_[c] = coords[c];
    }
    return out;
}

std::size_t Matrix::offset(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw Error(ErrorKind::IndexOutOfRange, "index (" + std::to_string(i) + "," + std::to_string(j) +
                                                    ") outside 1.." + std::to_string(n_));
    }
    return (i - 1) * n_ + (j - 1);
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const { return entries_[offset(i, j)]; }

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
    if (value.field() != field_) throw Error(ErrorKind::FieldMismatch, "entry field differs from matrix field");
    entries_[offset(i, j)] = std::move(value);
}

bool Matrix::is_zero() const noexcept {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

std::size_t Matrix::support_size() const noexcept {
    std::size_t count = 0;
    for (const auto& e : entries_) count += e.is_zero() ? 0 : 1;
    return count;
}

void Matrix::require_compatible(const Matrix& rhs) const {
    if (n_ != rhs.n_) {
        throw Error(ErrorKind::DimensionMismatch,
                    "side lengths " + std::to_string(n_) + " and " + std::to_string(rhs.n_) + " differ");
    }
    if (field_ != rhs.field_) {
        throw Error(ErrorKind::FieldMismatch, "fields " + field_.to_string() + " and " + rhs.field_.to_string());
    }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_compatible(rhs);
    for (std::size_t c = 0; c < entries_.size(); ++c) entries_[c] += rhs.entries_[c];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    require_compatible(rhs);
    for (std::size_t c = 0; c < entries_.size(); ++c) entries_[c] -= rhs.entries_[c];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
    for (auto& e : entries_) e *= c;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    lhs.require_compatible(rhs);
    const auto n = lhs.n_;
    Matrix out(n, lhs.field_);
    // Skip zero entries of lhs: the construction matrices are very sparse.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < n; ++t) {
            const auto& a = lhs.entries_[i * n + t];
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const auto& b = rhs.entries_[t * n + j];
                if (!b.is_zero()) out.entries_[i * n + j].add_mul(a, b);
            }
        }
    }
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << entries_[i * n_ + j].to_string();
        os << "]\n";
    }
    return os.str();
}

Matrix matrix_unit(std::size_t n, std::size_t i, std::size_t j, Field field) {
    Matrix out(n, field);
    out.set(i, j, Scalar::one(field));
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix mat_pow(const Matrix& a, unsigned e) {
    Matrix out = Matrix::identity(a.n(), a.field());
    for (unsigned s = 0; s < e; ++s) out = out * a;
    return out;
}

std::size_t require_uniform(std::span<const Matrix> mats) {
    if (mats.empty()) return 0;
    const auto& first = mats.front();
    for (const auto& m : mats) {
        if (m.n() != first.n()) throw Error(ErrorKind::DimensionMismatch, "matrices of different sizes");
        if (m.field() != first.field()) throw Error(ErrorKind::FieldMismatch, "matrices over different fields");
    }
    return first.n();
}

}  // namespace commalg
