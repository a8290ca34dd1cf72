#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "commalg/matrix.hpp"

namespace commalg {

/// Parameters of the two-chain family B_{k,m,l} in M_n(F).
/// Valid iff k >= 1, m >= 1, l > m+k+1 and l+k+1 <= n.
struct ConstructionParams {
    long n = 0;
    long m = 0;
    long l = 0;
    long k = 0;

    /// Throws InvalidParams naming the first violated inequality.
    void validate() const;
    [[nodiscard]] bool is_valid() const noexcept;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ConstructionParams&, const ConstructionParams&) = default;
    friend auto operator<=>(const ConstructionParams&, const ConstructionParams&) = default;
};

/// Parameters of the single-chain family B_{k,m}. Valid iff k >= 1, m >= 1, k+m+1 <= n.
struct BkmParams {
    long n = 0;
    long m = 0;
    long k = 0;

    void validate() const;
    [[nodiscard]] bool is_valid() const noexcept;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BkmParams&, const BkmParams&) = default;
    friend auto operator<=>(const BkmParams&, const BkmParams&) = default;
};

/// Row indices W = {1..m} u {l} and column indices M = {m+k+1..l-1} u {l+k+1..n}.
struct IndexSets {
    std::vector<std::size_t> rows;     // W
    std::vector<std::size_t> columns;  // M
};

struct Generator {
    std::string label;
    Matrix matrix;
};

/// Ordered, labelled generators. When admit_empty_word is set the identity
/// counts as the word of length 0 whether or not it is listed.
class GeneratingSystem {
public:
    GeneratingSystem(std::vector<Generator> members, bool admit_empty_word);

    [[nodiscard]] const std::vector<Generator>& members() const noexcept { return members_; }
    [[nodiscard]] bool admit_empty_word() const noexcept { return admit_empty_word_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    /// Side length; 0 for an empty system.
    [[nodiscard]] std::size_t side() const noexcept;
    [[nodiscard]] Field field() const;
    [[nodiscard]] std::vector<Matrix> matrices() const;
    [[nodiscard]] std::vector<std::string> labels() const;
    [[nodiscard]] const Matrix* find(const std::string& label) const;

private:
    std::vector<Generator> members_;
    bool admit_empty_word_;
};

IndexSets index_sets(const ConstructionParams& p);

/// E_{start,start+1} + ... + E_{start+k,start+k+1}.
Matrix shift_matrix(std::size_t n, std::size_t start, std::size_t k, Field field = Field::rational());

/// Identity, B1, B2 and every E_{i,j} with i in W, j in M. Labels I, B1, B2, E_i_j.
GeneratingSystem build_bkml(const ConstructionParams& p, Field field = Field::rational());

/// Identity, B and every E_{i,j} with 1 <= i <= m, m+k+1 <= j <= n.
GeneratingSystem build_bkm(const BkmParams& p, Field field = Field::rational());

/// {B1, B2} plus the W x M units except E_{m,m+k+1} and E_{l,l+k+1}, which
/// only appear as B1^{k+1} and B2^{k+1}. Its length is exactly k+1.
GeneratingSystem witness_system(const ConstructionParams& p, Field field = Field::rational());

/// {B} plus the units of build_bkm except E_{m,m+k+1} = B^{k+1}.
GeneratingSystem bkm_witness_system(const BkmParams& p, Field field = Field::rational());

/// Keys of the general element: gamma, alpha_1..alpha_{k+1}, lambda_1..lambda_{k+1},
/// mu_i_j for (i, j) in W x M.
std::vector<std::string> coefficient_keys(const ConstructionParams& p);

/// gamma*I + sum alpha_s B1^s + sum lambda_t B2^t + sum mu_{i,j} E_{i,j}.
/// Missing keys count as zero; a key outside coefficient_keys(p) throws
/// UnknownCoefficientKey.
Matrix assemble_element(const ConstructionParams& p, const std::map<std::string, Scalar>& coeffs,
                        Field field = Field::rational());

/// 1 + 2k + (m+1)((l-m-k-1) + (n-l-k)).
long dimension_formula(const ConstructionParams& p);

/// 1 + k + m(n-m-k).
long dimension_formula(const BkmParams& p);

/// Canonical label of E_{i,j}.
std::string unit_label(std::size_t i, std::size_t j);

}  // namespace commalg
