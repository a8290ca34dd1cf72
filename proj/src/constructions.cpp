#include "commalg/constructions.hpp"

#include <algorithm>
#include <set>

#include "commalg/error.hpp"

namespace commalg {

namespace {

[[noreturn]] void violated(const std::string& inequality, const std::string& detail) {
    throw Error(ErrorKind::InvalidParams, inequality + " violated (" + detail + ")");
}

std::string num(long v) { return std::to_string(v); }

std::size_t as_index(long v) { return static_cast<std::size_t>(v); }

}  // namespace

void ConstructionParams::validate() const {
    if (k < 1) violated("k >= 1", "k=" + num(k));
    if (m < 1) violated("m >= 1", "m=" + num(m));
    if (!(l > m + k + 1)) violated("l > m+k+1", "l=" + num(l) + ", m+k+1=" + num(m + k + 1));
    if (!(l + k + 1 <= n)) violated("l+k+1 <= n", "l+k+1=" + num(l + k + 1) + ", n=" + num(n));
}

bool ConstructionParams::is_valid() const noexcept { return k >= 1 && m >= 1 && l > m + k + 1 && l + k + 1 <= n; }

std::string ConstructionParams::to_string() const {
    return "(n=" + num(n) + ", m=" + num(m) + ", l=" + num(l) + ", k=" + num(k) + ")";
}

void BkmParams::validate() const {
    if (k < 1) violated("k >= 1", "k=" + num(k));
    if (m < 1) violated("m >= 1", "m=" + num(m));
    if (!(k + m + 1 <= n)) violated("k+m+1 <= n", "k+m+1=" + num(k + m + 1) + ", n=" + num(n));
}

bool BkmParams::is_valid() const noexcept { return k >= 1 && m >= 1 && k + m + 1 <= n; }

std::string BkmParams::to_string() const { return "(n=" + num(n) + ", m=" + num(m) + ", k=" + num(k) + ")"; }

GeneratingSystem::GeneratingSystem(std::vector<Generator> members, bool admit_empty_word)
    : members_(std::move(members)), admit_empty_word_(admit_empty_word) {
    std::set<std::string> seen;
    for (const auto& g : members_) {
        if (!seen.insert(g.label).second) throw Error(ErrorKind::InvalidParams, "duplicate generator label " + g.label);
        const auto& first = members_.front().matrix;
        if (g.matrix.n() != first.n()) throw Error(ErrorKind::DimensionMismatch, "generator " + g.label + " has another size");
        if (g.matrix.field() != first.field()) throw Error(ErrorKind::FieldMismatch, "generator " + g.label + " has another field");
    }
}

std::size_t GeneratingSystem::side() const noexcept { return members_.empty() ? 0 : members_.front().matrix.n(); }

Field GeneratingSystem::field() const {
    if (members_.empty()) throw Error(ErrorKind::EmptySystem, "empty generating system has no field");
    return members_.front().matrix.field();
}

std::vector<Matrix> GeneratingSystem::matrices() const {
    std::vector<Matrix> out;
    out.reserve(members_.size());
    for (const auto& g : members_) out.push_back(g.matrix);
    return out;
}

std::vector<std::string> GeneratingSystem::labels() const {
    std::vector<std::string> out;
    for (const auto& g : members_) out.push_back(g.label);
    return out;
}

const Matrix* GeneratingSystem::find(const std::string& label) const {
    auto it = std::find_if(members_.begin(), members_.end(), [&](const Generator& g) { return g.label == label; });
    return it == members_.end() ? nullptr : &it->matrix;
}

std::string unit_label(std::size_t i, std::size_t j) { return "E_" + std::to_string(i) + "_" + std::to_string(j); }

IndexSets index_sets(const ConstructionParams& p) {
    p.validate();
    IndexSets sets;
    for (long i = 1; i <= p.m; ++i) sets.rows.push_back(as_index(i));
    sets.rows.push_back(as_index(p.l));
    for (long j = p.m + p.k + 1; j <= p.l - 1; ++j) sets.columns.push_back(as_index(j));
    for (long j = p.l + p.k + 1; j <= p.n; ++j) sets.columns.push_back(as_index(j));
    for (auto i : sets.rows) {
        if (std::binary_search(sets.columns.begin(), sets.columns.end(), i)) {
            throw Error(ErrorKind::InvalidParams, "index sets W and M intersect at " + std::to_string(i));
        }
    }
    return sets;
}

Matrix shift_matrix(std::size_t n, std::size_t start, std::size_t k, Field field) {
    if (start < 1 || start + k + 1 > n) {
        throw Error(ErrorKind::IndexOutOfRange, "shift chain from " + std::to_string(start) + " of length " +
                                                    std::to_string(k) + " leaves 1.." + std::to_string(n));
    }
    Matrix out(n, field);
    for (std::size_t h = 0; h <= k; ++h) out.set(start + h, start + h + 1, Scalar::one(field));
    return out;
}

GeneratingSystem build_bkml(const ConstructionParams& p, Field field) {
    const auto sets = index_sets(p);
    const auto n = as_index(p.n);
    std::vector<Generator> members;
    members.push_back({"I", Matrix::identity(n, field)});
    members.push_back({"B1", shift_matrix(n, as_index(p.m), as_index(p.k), field)});
    members.push_back({"B2", shift_matrix(n, as_index(p.l), as_index(p.k), field)});
    for (auto i : sets.rows) {
        for (auto j : sets.columns) members.push_back({unit_label(i, j), matrix_unit(n, i, j, field)});
    }
    return {std::move(members), true};
}

GeneratingSystem build_bkm(const BkmParams& p, Field field) {
    p.validate();
    const auto n = as_index(p.n);
    std::vector<Generator> members;
    members.push_back({"I", Matrix::identity(n, field)});
    members.push_back({"B", shift_matrix(n, as_index(p.m), as_index(p.k), field)});
    for (long i = 1; i <= p.m; ++i) {
        for (long j = p.m + p.k + 1; j <= p.n; ++j) {
            members.push_back({unit_label(as_index(i), as_index(j)), matrix_unit(n, as_index(i), as_index(j), field)});
        }
    }
    return {std::move(members), true};
}

GeneratingSystem witness_system(const ConstructionParams& p, Field field) {
    const auto sets = index_sets(p);
    const auto n = as_index(p.n);
    const auto top1 = std::pair{as_index(p.m), as_index(p.m + p.k + 1)};
    const auto top2 = std::pair{as_index(p.l), as_index(p.l + p.k + 1)};
    std::vector<Generator> members;
    members.push_back({"B1", shift_matrix(n, as_index(p.m), as_index(p.k), field)});
    members.push_back({"B2", shift_matrix(n, as_index(p.l), as_index(p.k), field)});
    for (auto i : sets.rows) {
        for (auto j : sets.columns) {
            if (std::pair{i, j} == top1 || std::pair{i, j} == top2) continue;
            members.push_back({unit_label(i, j), matrix_unit(n, i, j, field)});
        }
    }
    return {std::move(members), true};
}

GeneratingSystem bkm_witness_system(const BkmParams& p, Field field) {
    p.validate();
    const auto n = as_index(p.n);
    std::vector<Generator> members;
    members.push_back({"B", shift_matrix(n, as_index(p.m), as_index(p.k), field)});
    for (long i = 1; i <= p.m; ++i) {
        for (long j = p.m + p.k + 1; j <= p.n; ++j) {
            if (i == p.m && j == p.m + p.k + 1) continue;
            members.push_back({unit_label(as_index(i), as_index(j)), matrix_unit(n, as_index(i), as_index(j), field)});
        }
    }
    return {std::move(members), true};
}

std::vector<std::string> coefficient_keys(const ConstructionParams& p) {
    const auto sets = index_sets(p);
    std::vector<std::string> keys{"gamma"};
    for (long s = 1; s <= p.k + 1; ++s) keys.push_back("alpha_" + num(s));
    for (long t = 1; t <= p.k + 1; ++t) keys.push_back("lambda_" + num(t));
    for (auto i : sets.rows) {
        for (auto j : sets.columns) keys.push_back("mu_" + std::to_string(i) + "_" + std::to_string(j));
    }
    return keys;
}

Matrix assemble_element(const ConstructionParams& p, const std::map<std::string, Scalar>& coeffs, Field field) {
    const auto keys = coefficient_keys(p);
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, value] : coeffs) {
        if (!allowed.contains(key)) throw Error(ErrorKind::UnknownCoefficientKey, "unknown coefficient key '" + key + "'");
        if (value.field() != field) throw Error(ErrorKind::FieldMismatch, "coefficient " + key + " over another field");
    }
    auto coeff = [&](const std::string& key) {
        auto it = coeffs.find(key);
        return it == coeffs.end() ? Scalar::zero(field) : it->second;
    };

    const auto n = as_index(p.n);
    const auto sets = index_sets(p);
    Matrix out = Matrix::identity(n, field) * coeff("gamma");
    const Matrix b1 = shift_matrix(n, as_index(p.m), as_index(p.k), field);
    const Matrix b2 = shift_matrix(n, as_index(p.l), as_index(p.k), field);
    Matrix power1 = b1;
    Matrix power2 = b2;
    for (long s = 1; s <= p.k + 1; ++s) {
        out += power1 * coeff("alpha_" + num(s));
        out += power2 * coeff("lambda_" + num(s));
        power1 = power1 * b1;
        power2 = power2 * b2;
    }
    for (auto i : sets.rows) {
        for (auto j : sets.columns) {
            out += matrix_unit(n, i, j, field) * coeff("mu_" + std::to_string(i) + "_" + std::to_string(j));
        }
    }
    return out;
}

long dimension_formula(const ConstructionParams& p) {
    p.validate();
    return 1 + 2 * p.k + (p.m + 1) * ((p.l - p.m - p.k - 1) + (p.n - p.l - p.k));
}

long dimension_formula(const BkmParams& p) {
    p.validate();
    return 1 + p.k + p.m * (p.n - p.m - p.k);
}

}  // namespace commalg
