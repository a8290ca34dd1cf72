#include "commalg/commute.hpp"

#include <algorithm>

#include "commalg/error.hpp"
#include "commalg/length.hpp"

namespace commalg {

CommutativityResult is_commutative(std::span<const Matrix> mats) {
    require_uniform(mats);
    for (std::size_t i = 0; i < mats.size(); ++i) {
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            if (!commutator(mats[i], mats[j]).is_zero()) return {false, std::pair{i, j}};
        }
    }
    return {};
}

std::vector<Vector> commutation_constraints(const Matrix& g) {
    const auto n = g.n();
    const auto field = g.field();
    auto var = [n](std::size_t a, std::size_t b) { return (a - 1) * n + (b - 1); };
    std::vector<Vector> rows;
    rows.reserve(n * n);
    // (XG - GX)_{r,c} = sum_b x_{r,b} g_{b,c} - sum_a g_{r,a} x_{a,c}
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = 1; c <= n; ++c) {
            Vector row(n * n, Scalar::zero(field));
            for (std::size_t b = 1; b <= n; ++b) {
                if (!g.at(b, c).is_zero()) row[var(r, b)] += g.at(b, c);
            }
            for (std::size_t a = 1; a <= n; ++a) {
                if (!g.at(r, a).is_zero()) row[var(a, c)] -= g.at(r, a);
            }
            if (std::any_of(row.begin(), row.end(), [](const Scalar& x) { return !x.is_zero(); })) {
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

Subspace centralizer(std::span<const Matrix> mats) {
    if (mats.empty()) throw Error(ErrorKind::EmptySystem, "centralizer of an empty list has no side length");
    const auto n = require_uniform(mats);
    const auto field = mats.front().field();
    std::vector<Vector> rows;
    for (const auto& g : mats) {
        auto block = commutation_constraints(g);
        rows.insert(rows.end(), std::make_move_iterator(block.begin()), std::make_move_iterator(block.end()));
    }
    return kernel(rows, field, n * n);
}

MaximalityVerdict is_maximal_commutative(const GeneratingSystem& s) {
    if (s.empty()) throw Error(ErrorKind::EmptySystem, "generating system has no members");
    const auto mats = s.matrices();
    MaximalityVerdict verdict;

    const auto algebra = algebra_closure(s);
    const auto cent = centralizer(mats);
    verdict.algebra_dim = algebra.dimension();
    verdict.centralizer_dim = cent.dimension();

    // The generated algebra is commutative iff its generators commute.
    const auto comm = is_commutative(mats);
    verdict.is_commutative = comm.commutative;
    if (!comm.commutative) {
        const auto [i, j] = *comm.witness;
        verdict.noncommuting_pair = std::pair{s.members()[i].label, s.members()[j].label};
        return verdict;
    }

    for (const auto& x : cent.basis()) {
        if (!algebra.contains(x)) {
            verdict.outside_element = Matrix::from_vector(s.side(), x);
            break;
        }
    }
    verdict.is_maximal = !verdict.outside_element && cent == algebra;
    return verdict;
}

}  // namespace commalg
