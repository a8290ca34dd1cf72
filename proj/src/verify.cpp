#include "commalg/verify.hpp"

#include <chrono>

#include "commalg/error.hpp"

namespace commalg {

namespace {

struct Expectations {
    std::optional<long> dimension;
    std::optional<std::size_t> length;
    std::optional<std::size_t> nilpotency_index;
    bool require_local = false;
};

VerificationReport run(VerificationReport report, const GeneratingSystem& full, const GeneratingSystem& measured,
                       const Expectations& expect, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    auto fail = [&report](std::string why) { report.failures.push_back(std::move(why)); };

    const auto verdict = is_maximal_commutative(full);
    const auto algebra = algebra_closure(full);
    report.algebra_dim = verdict.algebra_dim;
    report.centralizer_dim = verdict.centralizer_dim;
    report.commutative = verdict.is_commutative;
    report.maximal = verdict.is_maximal;
    report.dimension_formula = expect.dimension;
    if (!verdict.is_commutative) {
        fail("generators " + verdict.noncommuting_pair->first + " and " + verdict.noncommuting_pair->second +
             " do not commute");
    } else if (!verdict.is_maximal) {
        fail("centralizer (dim " + std::to_string(verdict.centralizer_dim) + ") exceeds the algebra (dim " +
             std::to_string(verdict.algebra_dim) + ")");
    }
    if (expect.dimension && *expect.dimension != static_cast<long>(report.algebra_dim)) {
        fail("algebra dimension " + std::to_string(report.algebra_dim) + " differs from the closed form " +
             std::to_string(*expect.dimension));
    }

    const auto chain = length_report(measured, algebra);
    report.li_dims = chain.dims;
    report.length_measured = chain.length;
    if (!chain.length) fail("measured system does not generate the algebra");
    report.length_certified = expect.length;
    if (expect.length && chain.length != expect.length) {
        fail("measured length differs from the certified value " + std::to_string(*expect.length));
    }

    try {
        const auto powers = radical_powers(radical_span(algebra));
        const auto n_index = powers.size();
        report.radical_n = n_index;
        for (const auto& p : powers) report.radical_power_dims.push_back(p.dimension());
        if (expect.nilpotency_index && n_index != *expect.nilpotency_index) {
            fail("nilpotency index " + std::to_string(n_index) + " differs from " +
                 std::to_string(*expect.nilpotency_index));
        }
        if (chain.length) {
            report.bound_holds = *chain.length + 1 <= n_index;
            if (!*report.bound_holds) fail("measured length exceeds N-1");
        }

        report.samples.count = options.samples;
        report.samples.seed = options.seed;
        for (const auto& sampled : sample_generating_systems(algebra, options.samples, options.seed)) {
            const auto len = length_of_system(sampled, algebra);
            report.samples.lengths.push_back(len);
            if (len + 1 > n_index) report.samples.all_within_bound = false;
        }
        if (!report.samples.all_within_bound) fail("a sampled generating system exceeds N-1");
    } catch (const Error& e) {
        report.radical_error = std::string(to_string(e.kind())) + ": " + e.what();
        if (expect.require_local || e.kind() == ErrorKind::SamplingExhausted) fail(*report.radical_error);
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

VerificationReport verify_bkml(const ConstructionParams& p, const VerifyOptions& options) {
    p.validate();
    VerificationReport report;
    report.family = "bkml";
    report.params = {{"n", p.n}, {"m", p.m}, {"l", p.l}, {"k", p.k}};
    report.field = options.field;
    report.measured_system = "witness";
    const auto k = static_cast<std::size_t>(p.k);
    return run(std::move(report), build_bkml(p, options.field), witness_system(p, options.field),
               {dimension_formula(p), k + 1, k + 2, true}, options);
}

VerificationReport verify_bkm(const BkmParams& p, const VerifyOptions& options) {
    p.validate();
    VerificationReport report;
    report.family = "bkm";
    report.params = {{"n", p.n}, {"m", p.m}, {"k", p.k}};
    report.field = options.field;
    report.measured_system = "witness";
    const auto k = static_cast<std::size_t>(p.k);
    return run(std::move(report), build_bkm(p, options.field), bkm_witness_system(p, options.field),
               {dimension_formula(p), k + 1, k + 2, true}, options);
}

VerificationReport verify_system(const GeneratingSystem& s, const VerifyOptions& options, const std::string& source) {
    if (s.field() != options.field) {
        throw Error(ErrorKind::FieldMismatch, "input is over " + s.field().to_string() + " but --field is " +
                                                  options.field.to_string());
    }
    VerificationReport report;
    report.family = "file";
    report.params = {{"source", source}};
    report.field = options.field;
    report.measured_system = "input";
    return run(std::move(report), s, s, {}, options);
}

json to_json(const VerificationReport& r, bool with_timing) {
    auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    json out = {{"family", r.family},
                {"params", r.params},
                {"field", r.field.to_string()},
                {"algebra_dim", r.algebra_dim},
                {"dimension_formula", opt(r.dimension_formula)},
                {"commutative", r.commutative},
                {"maximal", r.maximal},
                {"centralizer_dim", r.centralizer_dim},
                {"length_certified", opt(r.length_certified)},
                {"length_measured", opt(r.length_measured)},
                {"measured_system", r.measured_system},
                {"li_dims", r.li_dims},
                {"radical_N", opt(r.radical_n)},
                {"radical_power_dims", r.radical_power_dims},
                {"bound_holds", opt(r.bound_holds)},
                {"samples",
                 {{"count", r.samples.count},
                  {"seed", r.samples.seed},
                  {"lengths", r.samples.lengths},
                  {"all_within_bound", r.samples.all_within_bound}}},
                {"failures", r.failures},
                {"passed", r.passed()}};
    if (r.radical_error) out["radical_error"] = *r.radical_error;
    if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

}  // namespace commalg
