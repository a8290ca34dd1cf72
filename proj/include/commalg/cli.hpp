#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "commalg/verify.hpp"

namespace commalg {

/// Inclusive integer range; parsed from "a", "a..b" or "a:b".
struct Range {
    long lo = 0;
    long hi = -1;

    static Range parse(const std::string& text);
    [[nodiscard]] bool empty() const noexcept { return hi < lo; }
};

struct SweepSpec {
    std::string family = "bkml";
    Range n;
    Range m;
    Range l;
    Range k;
    VerifyOptions options;
    std::size_t jobs = 1;
    bool with_timing = true;
};

struct SweepResult {
    json doc;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t valid = 0;
};

/// One report per valid tuple in lexicographic (n, m, l, k) order, whatever
/// the number of workers; invalid tuples go to "skipped" with the reason.
SweepResult run_sweep(const SweepSpec& spec);

/// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace commalg
