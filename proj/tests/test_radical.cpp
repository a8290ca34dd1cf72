#include "doctest.h"

#include "commalg/error.hpp"
#include "commalg/length.hpp"
#include "commalg/radical.hpp"
#include "grid.hpp"

using namespace commalg;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("radical of the 8x8 example") {
    const auto a = algebra_closure(build_bkml({8, 1, 5, 2}));
    const auto j = radical_span(a);
    CHECK(j.dimension() == 8);
    for (const auto& x : j.basis_matrices()) CHECK(is_nilpotent(x));
    CHECK(nilpotency_index(j) == 4);

    const auto r = bound_check(witness_system({8, 1, 5, 2}));
    CHECK(r.length == 3);
    CHECK(r.nilpotency_index == 4);
    CHECK(r.bound_holds);
    CHECK(r.radical_dim == 8);
    CHECK(r.power_dims == std::vector<std::size_t>{8, 4, 2, 0});
}

TEST_CASE("degenerate radicals") {
    const auto q = Field::rational();
    const std::vector<Matrix> id{Matrix::identity(3, q)};
    CHECK(radical_span(span_of(id)).dimension() == 0);
    CHECK(nilpotency_index(Subspace::zero(3, q)) == 1);
    const std::vector<Matrix> e12{matrix_unit(2, 1, 2)};
    CHECK(nilpotency_index(span_of(e12)) == 2);
    CHECK(kind_of([&] { (void)radical_span(Subspace::full(2, q)); }) == ErrorKind::NotLocalForm);

    const auto r = bound_check(GeneratingSystem({{"I", Matrix::identity(4, q)}}, true));
    CHECK(r.length == 0);
    CHECK(r.nilpotency_index == 1);
    CHECK(r.bound_holds);

    const std::vector<Matrix> idem{matrix_unit(2, 1, 1)};
    CHECK(kind_of([&] { (void)nilpotency_index(span_of(idem)); }) == ErrorKind::NotNilpotent);
}

TEST_CASE("scalar part") {
    const auto q = Field::rational();
    auto x = Matrix::identity(4, q) * Scalar(q, 5) + matrix_unit(4, 1, 3) * Scalar(q, 2);
    CHECK(scalar_part(x) == Scalar(q, 5));
    CHECK(scalar_part(matrix_unit(4, 2, 3)).is_zero());
    const auto f = Field::prime(2);
    auto y = Matrix::identity(4, f) + matrix_unit(4, 1, 2, f) + matrix_unit(4, 2, 3, f);
    CHECK(scalar_part(y).is_one());
}

TEST_CASE("nilpotency index over the grid") {
    for (Field f : {Field::rational(), Field::prime(2)}) {
        for (const auto& p : grid::bkml_upto(10)) {
            const auto a = algebra_closure(build_bkml(p, f));
            const auto j = radical_span(a);
            CHECK(j.dimension() + 1 == a.dimension());
            CHECK(nilpotency_index(j) == static_cast<std::size_t>(p.k + 2));
        }
        for (const auto& p : grid::bkm_upto(10)) {
            const auto j = radical_span(algebra_closure(build_bkm(p, f)));
            CHECK(nilpotency_index(j) == static_cast<std::size_t>(p.k + 2));
        }
    }
}

TEST_CASE("powers shrink, nest, and agree on both sides") {
    for (const auto& p : grid::bkml_upto(10)) {
        const auto j = radical_span(algebra_closure(build_bkml(p)));
        const auto right = radical_powers(j, PowerSide::Right);
        const auto left = radical_powers(j, PowerSide::Left);
        REQUIRE(right.size() == left.size());
        for (std::size_t i = 0; i < right.size(); ++i) CHECK(right[i] == left[i]);
        for (std::size_t i = 0; i + 1 < right.size(); ++i) {
            CHECK(right[i].contains(right[i + 1]));
            CHECK(right[i].dimension() > right[i + 1].dimension());
        }
        CHECK(right.back().dimension() == 0);
        CHECK(right[right.size() - 2].dimension() > 0);

        // J^i from the closed form: powers of B1 and B2 of exponent >= i, plus the units at i = 1.
        const auto b1 = shift_matrix(p.n, p.m, p.k);
        const auto b2 = shift_matrix(p.n, p.l, p.k);
        const auto sets = index_sets(p);
        for (std::size_t i = 1; i <= right.size(); ++i) {
            std::vector<Matrix> direct;
            for (long s = static_cast<long>(i); s <= p.k + 1; ++s) {
                direct.push_back(mat_pow(b1, s));
                direct.push_back(mat_pow(b2, s));
            }
            if (i == 1)
                for (auto r : sets.rows)
                    for (auto c : sets.columns) direct.push_back(matrix_unit(p.n, r, c));
            CHECK(span_of(direct, p.n, Field::rational()) == right[i - 1]);
        }
    }
}

TEST_CASE("witness meets the bound with equality") {
    for (const auto& p : grid::bkml_upto(10)) {
        const auto r = bound_check(witness_system(p));
        CHECK(r.bound_holds);
        CHECK(r.length + 1 == r.nilpotency_index);
    }
    for (const auto& p : grid::bkm_upto(10)) {
        const auto r = bound_check(bkm_witness_system(p));
        CHECK(r.length == static_cast<std::size_t>(p.k + 1));
        CHECK(r.length + 1 == r.nilpotency_index);
    }
}

TEST_CASE("non-local algebra is refused") {
    const auto q = Field::rational();
    const GeneratingSystem s({{"P", matrix_unit(2, 1, 1)}, {"Q", matrix_unit(2, 2, 2)}}, true);
    CHECK(kind_of([&] { (void)bound_check(s); }) == ErrorKind::NotLocalForm);
    (void)q;
}
