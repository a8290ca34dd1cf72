#include "commalg/length.hpp"

#include <limits>
#include <random>
#include <string>

#include "commalg/error.hpp"

namespace commalg {

namespace {

void require_nonempty(const GeneratingSystem& s) {
    if (s.empty()) throw Error(ErrorKind::EmptySystem, "generating system has no members");
}

LengthReport report_from_chain(const std::vector<Subspace>& chain, const Subspace& target) {
    LengthReport report;
    for (const auto& space : chain) report.dims.push_back(space.dimension());
    report.stabilization_step = chain.size() - 1;
    report.target_dim = target.dimension();
    if (chain.back() == target) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
            if (chain[i].dimension() == target.dimension()) {
                report.length = i;
                break;
            }
        }
    }
    return report;
}

Scalar random_nonzero(Field field, std::mt19937_64& rng) {
    if (field.is_rational()) {
        std::uniform_int_distribution<long> dist(1, 3);
        std::bernoulli_distribution negative(0.5);
        long v = dist(rng);
        return {field, negative(rng) ? -v : v};
    }
    std::uniform_int_distribution<std::uint64_t> dist(1, field.modulus() - 1);
    return {field, static_cast<long>(dist(rng))};
}

Matrix random_element(const std::vector<Matrix>& basis, std::mt19937_64& rng) {
    std::bernoulli_distribution keep(0.5);
    const auto field = basis.front().field();
    while (true) {
        Matrix out(basis.front().n(), field);
        for (const auto& b : basis) {
            if (keep(rng)) out += b * random_nonzero(field, rng);
        }
        if (!out.is_zero()) return out;
    }
}

GeneratingSystem labelled(std::vector<Matrix> mats) {
    std::vector<Generator> members;
    for (std::size_t i = 0; i < mats.size(); ++i) members.push_back({"x" + std::to_string(i + 1), std::move(mats[i])});
    return {std::move(members), true};
}

}  // namespace

std::vector<Subspace> li_chain_spaces(const GeneratingSystem& s) {
    // A memberless system has no side length, even when the empty word is admitted.
    if (s.empty()) throw Error(ErrorKind::EmptySystem, "generating system has no members");
    const auto n = s.side();
    const auto field = s.field();
    const Matrix identity = Matrix::identity(n, field);
    const auto gens = s.matrices();

    SpanBuilder current(field, n * n);
    if (s.admit_empty_word()) current.add(identity);
    std::vector<Subspace> chain{current.view()};

    // Words of the previous length that were independent of everything before them.
    std::vector<Matrix> frontier{identity};
    while (true) {
        std::vector<Matrix> next;
        for (const auto& f : frontier) {
            for (const auto& g : gens) {
                Matrix word = g * f;
                if (current.add(word)) next.push_back(std::move(word));
            }
        }
        chain.push_back(current.view());
        if (next.empty()) return chain;
        frontier = std::move(next);
    }
}

LengthReport li_chain(const GeneratingSystem& s) {
    auto chain = li_chain_spaces(s);
    return report_from_chain(chain, chain.back());
}

bool is_multiplicatively_closed(const Subspace& space) {
    const auto basis = space.basis_matrices();
    for (const auto& a : basis) {
        for (const auto& b : basis) {
            if (!space.contains(a * b)) return false;
        }
    }
    return true;
}

LengthReport length_report(const GeneratingSystem& s, const Subspace& target) {
    if (!is_multiplicatively_closed(target)) {
        throw Error(ErrorKind::NotASubalgebra, "target subspace is not closed under multiplication");
    }
    const auto chain = li_chain_spaces(s);
    if (chain.back().ambient() != target.ambient() || chain.back().field() != target.field()) {
        throw Error(ErrorKind::DimensionMismatch, "generating system and target live in different spaces");
    }
    return report_from_chain(chain, target);
}

std::size_t length_of_system(const GeneratingSystem& s, const Subspace& target) {
    const auto report = length_report(s, target);
    if (!report.length) {
        throw Error(ErrorKind::NotGenerating, "chain stabilizes at dimension " + std::to_string(report.dims.back()) +
                                                  " without reaching the target (dimension " +
                                                  std::to_string(report.target_dim) + ")");
    }
    return *report.length;
}

Subspace algebra_closure(const GeneratingSystem& s) {
    require_nonempty(s);
    return li_chain_spaces(s).back();
}

std::uint64_t word_count(std::size_t alphabet, std::size_t max_len, bool admit_empty_word) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = admit_empty_word ? 1 : 0;
    std::uint64_t layer = 1;
    for (std::size_t t = 1; t <= max_len; ++t) {
        if (alphabet != 0 && layer > cap / alphabet) return cap;
        layer *= alphabet;
        if (total > cap - layer) return cap;
        total += layer;
    }
    return total;
}

namespace {

std::uint64_t check_budget(const GeneratingSystem& s, std::size_t max_len, std::uint64_t budget) {
    require_nonempty(s);
    const auto count = word_count(s.size(), max_len, s.admit_empty_word());
    if (count > budget) {
        throw Error(ErrorKind::BudgetExceeded, std::to_string(s.size()) + " generators up to length " +
                                                   std::to_string(max_len) + " exceed the word budget of " +
                                                   std::to_string(budget));
    }
    return count;
}

void visit_below(const Matrix& prefix, std::size_t len, std::size_t max_len, const std::vector<Matrix>& gens,
                 const WordVisitor& visit) {
    if (len == max_len) return;
    for (const auto& g : gens) {
        const Matrix word = prefix * g;
        visit(word, len + 1);
        visit_below(word, len + 1, max_len, gens, visit);
    }
}

}  // namespace

std::vector<Matrix> enumerate_words(const GeneratingSystem& s, std::size_t max_len, std::uint64_t budget) {
    const auto count = check_budget(s, max_len, budget);
    const auto gens = s.matrices();
    std::vector<Matrix> out;
    out.reserve(count);
    if (s.admit_empty_word()) out.push_back(Matrix::identity(s.side(), s.field()));

    std::vector<Matrix> layer{Matrix::identity(s.side(), s.field())};
    for (std::size_t t = 1; t <= max_len; ++t) {
        std::vector<Matrix> next;
        next.reserve(layer.size() * gens.size());
        // Prefix-major order keeps index sequences lexicographic within a length.
        for (const auto& prefix : layer) {
            for (const auto& g : gens) next.push_back(prefix * g);
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

void for_each_word(const GeneratingSystem& s, std::size_t max_len, const WordVisitor& visit, std::uint64_t budget) {
    check_budget(s, max_len, budget);
    const auto identity = Matrix::identity(s.side(), s.field());
    if (s.admit_empty_word()) visit(identity, 0);
    visit_below(identity, 0, max_len, s.matrices(), visit);
}

std::vector<GeneratingSystem> sample_generating_systems(const Subspace& target, std::size_t count,
                                                        std::uint64_t seed, SamplingOptions options) {
    std::vector<GeneratingSystem> out;
    if (count == 0) return out;
    const auto n = target.side();
    if (n == 0 || target.dimension() == 0) {
        throw Error(ErrorKind::NotASubalgebra, "sampling target must be a nonzero space of square matrices");
    }
    if (!target.contains(Matrix::identity(n, target.field()))) {
        throw Error(ErrorKind::NotASubalgebra, "sampling target does not contain the identity");
    }
    if (!is_multiplicatively_closed(target)) {
        throw Error(ErrorKind::NotASubalgebra, "sampling target is not closed under multiplication");
    }

    const auto basis = target.basis_matrices();
    const auto dim = basis.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, dim);

    for (std::size_t sample = 0; sample < count; ++sample) {
        std::size_t rejections = 0;
        while (true) {
            std::vector<Matrix> mats;
            const auto initial = size_dist(rng);
            for (std::size_t i = 0; i < initial; ++i) mats.push_back(random_element(basis, rng));
            bool generates = algebra_closure(labelled(mats)) == target;
            while (!generates && mats.size() < dim) {
                mats.push_back(random_element(basis, rng));
                generates = algebra_closure(labelled(mats)) == target;
            }
            if (generates) {
                out.push_back(labelled(std::move(mats)));
                break;
            }
            if (++rejections >= options.max_rejections) {
                throw Error(ErrorKind::SamplingExhausted,
                            "no generating system found after " + std::to_string(rejections) + " rejections");
            }
        }
    }
    return out;
}

}  // namespace commalg
