#pragma once

#include <cstddef>
#include <vector>

#include "commalg/constructions.hpp"
#include "commalg/subspace.hpp"

namespace commalg {

struct RadicalReport {
    std::size_t radical_dim = 0;
    std::size_t nilpotency_index = 0;
    /// dim J, dim J^2, ..., ending with 0.
    std::vector<std::size_t> power_dims;
    std::size_t length = 0;
    /// length <= nilpotency_index - 1
    bool bound_holds = false;
};

/// Scalar part of an element of a local algebra: the unique c with x - c*1
/// nilpotent. Throws NotLocalForm when x has no single eigenvalue in F.
Scalar scalar_part(const Matrix& x);

/// True iff x^n = 0 for the side length n.
bool is_nilpotent(const Matrix& x);

/// The radical J of an algebra A = F*1 + J: the span of x - scalar_part(x)*1
/// over a basis of A. Throws NotLocalForm unless every such element is
/// nilpotent, J is closed under multiplication and dim J = dim A - 1.
Subspace radical_span(const Subspace& algebra);

enum class PowerSide { Right, Left };

/// J, J^2, ..., ending at the zero space, with J^{i+1} spanned by
/// x*y (Right) or y*x (Left) for x in basis(J^i), y in basis(J).
/// Throws NotASubalgebra if J is not closed and NotNilpotent if the
/// dimensions stop decreasing.
std::vector<Subspace> radical_powers(const Subspace& radical, PowerSide side = PowerSide::Right);

/// Least N with J^N = 0; 1 for J = 0.
std::size_t nilpotency_index(const Subspace& radical);

/// Length of S against its closure A, the nilpotency index of J(A), and
/// whether length <= N - 1.
RadicalReport bound_check(const GeneratingSystem& s);

}  // namespace commalg
