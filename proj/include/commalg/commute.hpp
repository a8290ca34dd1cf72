#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "commalg/constructions.hpp"
#include "commalg/subspace.hpp"

namespace commalg {

struct CommutativityResult {
    bool commutative = true;
    /// First (i, j), i < j, in input order with a nonzero commutator.
    std::optional<std::pair<std::size_t, std::size_t>> witness;

    explicit operator bool() const noexcept { return commutative; }
};

CommutativityResult is_commutative(std::span<const Matrix> mats);

/// Linear constraints (one row per matrix entry) whose kernel is {X : XG = GX}.
std::vector<Vector> commutation_constraints(const Matrix& g);

/// {X : XG = GX for every G in mats}, the kernel of the stacked maps X -> XG - GX.
Subspace centralizer(std::span<const Matrix> mats);

struct MaximalityVerdict {
    std::size_t algebra_dim = 0;
    std::size_t centralizer_dim = 0;
    bool is_commutative = false;
    bool is_maximal = false;
    /// Labels of the first non-commuting pair of members.
    std::optional<std::pair<std::string, std::string>> noncommuting_pair;
    /// First centralizer basis vector (RREF order) outside the algebra.
    std::optional<Matrix> outside_element;
};

/// A commutative subalgebra is maximal iff its centralizer in M_n(F) equals it.
MaximalityVerdict is_maximal_commutative(const GeneratingSystem& s);

}  // namespace commalg
