#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commalg/constructions.hpp"
#include "commalg/wire.hpp"

namespace commalg {

struct VerifyOptions {
    Field field = Field::rational();
    std::size_t samples = 25;
    std::uint64_t seed = 0;
};

struct SampleSummary {
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> lengths;
    bool all_within_bound = true;
};

/// Aggregated verdicts for one construction or one user-supplied system.
///
/// For a family, the measured system is the lower-bound witness and the
/// certified length is k+1. For a file, the measured system is the file
/// itself and nothing is certified.
struct VerificationReport {
    std::string family;  // "bkml", "bkm" or "file"
    json params;
    Field field;
    std::size_t algebra_dim = 0;
    std::optional<long> dimension_formula;
    bool commutative = false;
    bool maximal = false;
    std::size_t centralizer_dim = 0;
    std::optional<std::size_t> length_certified;
    std::optional<std::size_t> length_measured;
    std::string measured_system;
    std::vector<std::size_t> li_dims;
    std::optional<std::size_t> radical_n;
    std::vector<std::size_t> radical_power_dims;
    std::optional<bool> bound_holds;
    std::optional<std::string> radical_error;
    SampleSummary samples;
    std::vector<std::string> failures;
    double elapsed_ms = 0.0;

    [[nodiscard]] bool passed() const noexcept { return failures.empty(); }
};

VerificationReport verify_bkml(const ConstructionParams& p, const VerifyOptions& options);
VerificationReport verify_bkm(const BkmParams& p, const VerifyOptions& options);
VerificationReport verify_system(const GeneratingSystem& s, const VerifyOptions& options, const std::string& source);

/// elapsed_ms is included only when with_timing is set.
json to_json(const VerificationReport& report, bool with_timing = true);

}  // namespace commalg
