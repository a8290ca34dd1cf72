#include "commalg/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "commalg/error.hpp"

namespace commalg {

Range Range::parse(const std::string& text) {
    auto to_long = [&text](const std::string& part) {
        try {
            std::size_t used = 0;
            long v = std::stol(part, &used);
            if (used == part.size()) return v;
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::ParseError, "bad range '" + text + "' (expected a, a..b or a:b)");
    };
    for (const std::string sep : {"..", ":"}) {
        auto pos = text.find(sep);
        if (pos != std::string::npos) return {to_long(text.substr(0, pos)), to_long(text.substr(pos + sep.size()))};
    }
    const long v = to_long(text);
    return {v, v};
}

namespace {

struct Tuple {
    long n, m, l, k;
};

json params_json(const std::string& family, const Tuple& t) {
    if (family == "bkm") return {{"n", t.n}, {"m", t.m}, {"k", t.k}};
    return {{"n", t.n}, {"m", t.m}, {"l", t.l}, {"k", t.k}};
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.family != "bkml" && spec.family != "bkm") {
        throw Error(ErrorKind::ParseError, "unknown family '" + spec.family + "'");
    }
    const bool bkm = spec.family == "bkm";
    const Range l_range = bkm ? Range{0, 0} : spec.l;

    std::vector<Tuple> valid;
    json skipped = json::array();
    for (long n = spec.n.lo; n <= spec.n.hi; ++n) {
        for (long m = spec.m.lo; m <= spec.m.hi; ++m) {
            for (long l = l_range.lo; l <= l_range.hi; ++l) {
                for (long k = spec.k.lo; k <= spec.k.hi; ++k) {
                    const Tuple t{n, m, l, k};
                    try {
                        if (bkm) {
                            BkmParams{n, m, k}.validate();
                        } else {
                            ConstructionParams{n, m, l, k}.validate();
                        }
                        valid.push_back(t);
                    } catch (const Error& e) {
                        skipped.push_back({{"params", params_json(spec.family, t)}, {"reason", e.what()}});
                    }
                }
            }
        }
    }

    std::vector<json> reports(valid.size());
    std::vector<char> ok(valid.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < valid.size(); i = next++) {
            const auto& t = valid[i];
            try {
                auto r = bkm ? verify_bkm({t.n, t.m, t.k}, spec.options)
                             : verify_bkml({t.n, t.m, t.l, t.k}, spec.options);
                ok[i] = r.passed() ? 1 : 0;
                reports[i] = to_json(r, spec.with_timing);
            } catch (const std::exception& e) {
                reports[i] = {{"family", spec.family}, {"params", params_json(spec.family, t)}, {"error", e.what()},
                              {"passed", false}};
            }
        }
    };
    const auto jobs = std::max<std::size_t>(1, std::min(spec.jobs, valid.size()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < jobs; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    SweepResult result;
    result.valid = valid.size();
    for (auto flag : ok) (flag ? result.passed : result.failed) += 1;
    result.doc = {{"family", spec.family},
                  {"field", spec.options.field.to_string()},
                  {"reports", reports},
                  {"skipped", skipped},
                  {"summary", {{"pass", result.passed}, {"fail", result.failed}, {"valid", result.valid}}}};
    return result;
}

namespace {

struct FamilyArgs {
    std::string family;
    long n = 0;
    long m = 0;
    long l = 0;
    long k = 0;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
    cmd->add_option("--family", args.family, "bkml or bkm")->check(CLI::IsMember({"bkml", "bkm"}));
    cmd->add_option("--n", args.n, "ambient matrix size");
    cmd->add_option("--m", args.m, "start of the first chain");
    cmd->add_option("--l", args.l, "start of the second chain (bkml only)");
    cmd->add_option("--k", args.k, "chain length parameter");
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << dump(doc);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    file << dump(doc);
}

GeneratingSystem family_system(const FamilyArgs& a, Field field, bool witness) {
    if (a.family == "bkm") {
        const BkmParams p{a.n, a.m, a.k};
        return witness ? bkm_witness_system(p, field) : build_bkm(p, field);
    }
    if (a.family == "bkml") {
        const ConstructionParams p{a.n, a.m, a.l, a.k};
        return witness ? witness_system(p, field) : build_bkml(p, field);
    }
    throw Error(ErrorKind::ParseError, "--family is required (bkml or bkm) unless --in is given");
}

int exit_for(bool passed) { return passed ? 0 : 1; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maximal commutative matrix subalgebras: construction, centralizers, lengths and radical bounds"};
    app.require_subcommand(1);

    std::string field_text = "rational";
    std::string out_path;
    std::string in_path;
    FamilyArgs fam;
    bool witness = false;
    std::size_t samples = 25;
    std::uint64_t seed = 0;
    std::uint64_t word_budget = kDefaultWordBudget;
    bool check_words = false;
    bool no_timing = false;
    std::string n_range, m_range, l_range, k_range;
    std::size_t jobs = 1;

    auto* construct = app.add_subcommand("construct", "write the generator set of a construction");
    add_family_options(construct, fam);
    construct->add_flag("--witness", witness, "write the lower-bound witness system instead");

    auto* verify = app.add_subcommand("verify", "check maximality, length and the radical bound");
    add_family_options(verify, fam);
    verify->add_option("--in", in_path, "generator set file");
    verify->add_option("--samples", samples, "random generating systems to test against the bound");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_flag("--no-timing", no_timing, "omit elapsed_ms");

    auto* length = app.add_subcommand("length", "L_i chain and length of a generator set");
    length->add_option("--in", in_path, "generator set file")->required();
    length->add_flag("--check-words", check_words, "cross-check each L_i against brute-force word enumeration");
    length->add_option("--word-budget", word_budget, "maximum number of enumerated words");

    auto* central = app.add_subcommand("centralizer", "basis of the centralizer of a generator set");
    add_family_options(central, fam);
    central->add_option("--in", in_path, "generator set file");

    auto* sweep = app.add_subcommand("sweep", "verify every valid tuple in a parameter grid");
    sweep->add_option("--family", fam.family, "bkml or bkm")->check(CLI::IsMember({"bkml", "bkm"}));
    sweep->add_option("--n", n_range, "range a, a..b or a:b")->required();
    sweep->add_option("--m", m_range, "range (default 1..max n)");
    sweep->add_option("--l", l_range, "range (default 1..max n)");
    sweep->add_option("--k", k_range, "range (default 1..max n)");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--samples", samples, "random generating systems per tuple");
    sweep->add_option("--seed", seed, "sampling seed");
    sweep->add_flag("--no-timing", no_timing, "omit elapsed_ms");

    for (auto* cmd : {construct, verify, length, central, sweep}) {
        cmd->add_option("--out", out_path, "output path (default stdout)");
    }
    for (auto* cmd : {construct, verify, central, sweep}) {
        cmd->add_option("--field", field_text, "rational or gf:<p>");
    }
    length->add_option("--field", field_text, "ignored; the file names its field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Field field = Field::parse(field_text);

        if (construct->parsed()) {
            emit(generator_set_to_json(family_system(fam, field, witness)), out_path, out);
            return 0;
        }
        if (verify->parsed()) {
            const VerifyOptions options{field, samples, seed};
            VerificationReport report;
            if (!in_path.empty()) {
                auto system = read_generator_file(in_path);
                report = verify_system(system, VerifyOptions{system.field(), samples, seed}, in_path);
            } else if (fam.family == "bkm") {
                report = verify_bkm({fam.n, fam.m, fam.k}, options);
            } else if (fam.family == "bkml") {
                report = verify_bkml({fam.n, fam.m, fam.l, fam.k}, options);
            } else {
                throw Error(ErrorKind::ParseError, "verify needs --in or --family");
            }
            emit(to_json(report, !no_timing), out_path, out);
            return exit_for(report.passed());
        }
        if (length->parsed()) {
            const auto system = read_generator_file(in_path);
            const auto chain = li_chain_spaces(system);
            auto doc = to_json(length_report(system, chain.back()));
            doc["source"] = in_path;
            doc["measured_system"] = "input";
            doc["admit_empty_word"] = system.admit_empty_word();
            bool passed = true;
            if (check_words) {
                json oracle = {{"budget", word_budget}};
                try {
                    for (std::size_t i = 0; i < chain.size(); ++i) {
                        const auto words = enumerate_words(system, i, word_budget);
                        if (span_of(words, system.side(), system.field()) != chain[i]) {
                            oracle["status"] = "disagrees";
                            oracle["first_mismatch"] = i;
                            passed = false;
                            break;
                        }
                    }
                    if (passed) oracle["status"] = "agrees";
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::BudgetExceeded) throw;
                    oracle["status"] = "budget exceeded";
                    oracle["message"] = e.what();
                }
                doc["word_oracle"] = oracle;
            }
            emit(doc, out_path, out);
            return exit_for(passed);
        }
        if (central->parsed()) {
            const auto system = in_path.empty() ? family_system(fam, field, false) : read_generator_file(in_path);
            const auto space = centralizer(system.matrices());
            auto doc = subspace_to_json(space);
            doc["algebra_dim"] = algebra_closure(system).dimension();
            emit(doc, out_path, out);
            return 0;
        }
        if (sweep->parsed()) {
            SweepSpec spec;
            spec.family = fam.family.empty() ? "bkml" : fam.family;
            spec.n = Range::parse(n_range);
            const std::string full = "1.." + std::to_string(spec.n.hi);
            spec.m = Range::parse(m_range.empty() ? full : m_range);
            spec.l = Range::parse(l_range.empty() ? full : l_range);
            spec.k = Range::parse(k_range.empty() ? full : k_range);
            spec.options = {field, samples, seed};
            spec.jobs = jobs;
            spec.with_timing = !no_timing;
            const auto result = run_sweep(spec);
            if (result.valid == 0) {
                err << "sweep: no valid parameter tuple in the given ranges\n";
                return 2;
            }
            emit(result.doc, out_path, out);
            err << "sweep: " << result.passed << " pass, " << result.failed << " fail\n";
            return exit_for(result.failed == 0);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace commalg
