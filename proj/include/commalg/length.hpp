#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "commalg/constructions.hpp"
#include "commalg/subspace.hpp"

namespace commalg {

/// dims[i] = dim L_i(S) for i = 0..stabilization_step.
///
/// stabilization_step is the least i >= 1 with L_i = L_{i-1}, so the last
/// two entries of dims are always equal: {1} alone reports [1, 1].
/// length is the least i >= 0 with L_i equal to the target, or nullopt when
/// the system does not generate the target.
struct LengthReport {
    std::vector<std::size_t> dims;
    std::size_t stabilization_step = 0;
    std::optional<std::size_t> length;
    std::size_t target_dim = 0;
};

/// L_0(S), ..., L_s(S) up to the stabilization step s.
///
/// L_0 is F*1 when the empty word is admitted and 0 otherwise. Each step
/// left-multiplies only the vectors that were new at the previous step,
/// which spans the same space as multiplying the whole of L_i.
std::vector<Subspace> li_chain_spaces(const GeneratingSystem& s);

/// Chain report measured against the system's own closure.
LengthReport li_chain(const GeneratingSystem& s);

/// Chain report measured against target; length is nullopt when S does not
/// generate target. Throws NotASubalgebra if target is not multiplicatively closed.
LengthReport length_report(const GeneratingSystem& s, const Subspace& target);

/// Least i with L_i(S) = target. Throws NotGenerating or NotASubalgebra.
std::size_t length_of_system(const GeneratingSystem& s, const Subspace& target);

/// L(S): span of all words, including the empty word when admitted.
Subspace algebra_closure(const GeneratingSystem& s);

/// Products of every ordered pair of basis elements stay in the space.
bool is_multiplicatively_closed(const Subspace& space);

inline constexpr std::uint64_t kDefaultWordBudget = 1'000'000;

/// Every word of length <= max_len in shortlex order of index sequences,
/// starting with the identity when the empty word is admitted. Oracle use
/// only: throws BudgetExceeded when the word count would pass `budget`.
std::vector<Matrix> enumerate_words(const GeneratingSystem& s, std::size_t max_len,
                                    std::uint64_t budget = kDefaultWordBudget);

using WordVisitor = std::function<void(const Matrix& word, std::size_t length)>;

/// Depth-first walk over the same words as enumerate_words, holding only the
/// current prefix chain in memory. Same budget rule.
void for_each_word(const GeneratingSystem& s, std::size_t max_len, const WordVisitor& visit,
                   std::uint64_t budget = kDefaultWordBudget);

/// Number of words enumerate_words would return, saturating at UINT64_MAX.
std::uint64_t word_count(std::size_t alphabet, std::size_t max_len, bool admit_empty_word);

struct SamplingOptions {
    std::size_t max_rejections = 1000;
};

/// `count` random generating systems of target, each verified by recomputing
/// its closure. A sample starts from a random number of random sparse
/// combinations of target's basis and is augmented one element at a time
/// until it generates; samples that still fail are rejected. Deterministic in seed.
std::vector<GeneratingSystem> sample_generating_systems(const Subspace& target, std::size_t count,
                                                        std::uint64_t seed, SamplingOptions options = {});

}  // namespace commalg
