#include "commalg/radical.hpp"

#include "commalg/error.hpp"
#include "commalg/length.hpp"

namespace commalg {

namespace {

Vector apply_to(const Matrix& x, const Vector& v) {
    const auto n = x.n();
    Vector out(n, Scalar::zero(x.field()));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (!x.at(i, j).is_zero() && !v[j - 1].is_zero()) out[i - 1].add_mul(x.at(i, j), v[j - 1]);
        }
    }
    return out;
}

// Monic minimal polynomial of e_1 under x, as coefficients c_0..c_{r-1}
// of t^r + c_{r-1} t^{r-1} + ... + c_0.
Vector local_min_poly(const Matrix& x) {
    const auto n = x.n();
    const auto field = x.field();
    std::vector<Vector> krylov;
    Vector w(n, Scalar::zero(field));
    w[0] = Scalar::one(field);
    SpanBuilder seen(field, n);
    while (seen.add(w)) {
        krylov.push_back(w);
        w = apply_to(x, w);
    }
    krylov.push_back(w);
    // The kernel of the n x (r+1) matrix with these columns is one-dimensional.
    const auto cols = krylov.size();
    std::vector<Vector> rows(n, Vector(cols, Scalar::zero(field)));
    for (std::size_t c = 0; c < cols; ++c) {
        for (std::size_t q = 0; q < n; ++q) rows[q][c] = krylov[c][q];
    }
    const auto relation = kernel(rows, field, cols).basis().front();
    const Scalar lead = relation.back();
    Vector coeffs;
    for (std::size_t c = 0; c + 1 < cols; ++c) coeffs.push_back(relation[c] / lead);
    return coeffs;
}

Scalar evaluate(const Vector& monic_coeffs, const Scalar& t) {
    Scalar acc = Scalar::one(t.field());
    for (auto it = monic_coeffs.rbegin(); it != monic_coeffs.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    return acc;
}

}  // namespace

Scalar scalar_part(const Matrix& x) {
    const auto field = x.field();
    const auto coeffs = local_min_poly(x);
    const auto r = coeffs.size();
    const Scalar degree(field, static_cast<long>(r));
    // (t - c)^r has t^{r-1} coefficient -r c.
    if (!degree.is_zero()) return -coeffs.back() / degree;
    // Characteristic p divides r: fall back to a root search over GF(p).
    for (std::uint64_t v = 0; v < field.modulus(); ++v) {
        const Scalar c(field, static_cast<long>(v));
        if (evaluate(coeffs, c).is_zero()) return c;
    }
    throw Error(ErrorKind::NotLocalForm, "element has no eigenvalue in " + field.to_string());
}

bool is_nilpotent(const Matrix& x) {
    Matrix power = x;
    for (std::size_t e = 1; e < x.n() && !power.is_zero(); ++e) power = power * x;
    return power.is_zero();
}

Subspace radical_span(const Subspace& algebra) {
    const auto n = algebra.side();
    if (n == 0) throw Error(ErrorKind::DimensionMismatch, "algebra is not a space of square matrices");
    const auto field = algebra.field();
    const Matrix identity = Matrix::identity(n, field);
    if (!algebra.contains(identity)) throw Error(ErrorKind::NotLocalForm, "algebra does not contain the identity");
    if (!is_multiplicatively_closed(algebra)) {
        throw Error(ErrorKind::NotASubalgebra, "subspace is not closed under multiplication");
    }

    SpanBuilder radical(field, n * n);
    for (const auto& y : algebra.basis_matrices()) {
        Matrix shifted = y - identity * scalar_part(y);
        if (!is_nilpotent(shifted)) {
            throw Error(ErrorKind::NotLocalForm, "basis element is not scalar plus nilpotent:\n" + y.to_string());
        }
        radical.add(shifted);
    }
    auto j = std::move(radical).build();
    if (j.dimension() + 1 != algebra.dimension()) {
        throw Error(ErrorKind::NotLocalForm, "nilpotent part has codimension " +
                                                 std::to_string(algebra.dimension() - j.dimension()));
    }
    if (!is_multiplicatively_closed(j)) throw Error(ErrorKind::NotLocalForm, "nilpotent part is not an ideal");
    for (const auto& x : j.basis_matrices()) {
        if (!is_nilpotent(x)) throw Error(ErrorKind::NotLocalForm, "radical basis element is not nilpotent");
    }
    return j;
}

std::vector<Subspace> radical_powers(const Subspace& radical, PowerSide side) {
    std::vector<Subspace> powers{radical};
    if (radical.dimension() == 0) return powers;
    if (!is_multiplicatively_closed(radical)) {
        throw Error(ErrorKind::NotASubalgebra, "radical candidate is not closed under multiplication");
    }
    const auto generators = radical.basis_matrices();
    while (powers.back().dimension() > 0) {
        const auto& current = powers.back();
        SpanBuilder next(radical.field(), radical.ambient());
        for (const auto& x : current.basis_matrices()) {
            for (const auto& y : generators) next.add(side == PowerSide::Right ? x * y : y * x);
        }
        if (next.dimension() >= current.dimension()) {
            throw Error(ErrorKind::NotNilpotent, "power dimension stalled at " + std::to_string(next.dimension()));
        }
        powers.push_back(std::move(next).build());
    }
    return powers;
}

std::size_t nilpotency_index(const Subspace& radical) { return radical_powers(radical).size(); }

RadicalReport bound_check(const GeneratingSystem& s) {
    const auto algebra = algebra_closure(s);
    const auto j = radical_span(algebra);
    const auto powers = radical_powers(j);
    RadicalReport report;
    report.radical_dim = j.dimension();
    for (const auto& p : powers) report.power_dims.push_back(p.dimension());
    report.nilpotency_index = powers.size();
    report.length = length_of_system(s, algebra);
    report.bound_holds = report.length + 1 <= report.nilpotency_index;
    return report;
}

}  // namespace commalg
