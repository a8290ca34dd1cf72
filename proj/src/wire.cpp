#include "commalg/wire.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "commalg/error.hpp"

namespace commalg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

template <typename T>
T require(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) bad(std::string("missing key '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception& e) {
        bad(std::string("key '") + key + "': " + e.what());
    }
}

Scalar parse_value(const json& value, Field field) {
    try {
        if (value.is_string()) return Scalar::parse(field, value.get<std::string>());
        if (value.is_number_integer()) return {field, value.get<long>()};
    } catch (const Error& e) {
        bad(std::string("bad entry value: ") + e.what());
    }
    bad("entry value must be an integer or a \"num/den\" string");
}

}  // namespace

json matrix_entries(const Matrix& m) {
    json entries = json::array();
    for (std::size_t i = 1; i <= m.n(); ++i) {
        for (std::size_t j = 1; j <= m.n(); ++j) {
            if (!m.at(i, j).is_zero()) entries.push_back(json::array({i, j, m.at(i, j).to_string()}));
        }
    }
    return entries;
}

json generator_set_to_json(const GeneratingSystem& s) {
    if (s.empty()) throw Error(ErrorKind::EmptySystem, "cannot serialize an empty generating system");
    auto members = s.members();
    std::sort(members.begin(), members.end(), [](const Generator& a, const Generator& b) { return a.label < b.label; });
    json gens = json::array();
    for (const auto& g : members) gens.push_back({{"label", g.label}, {"entries", matrix_entries(g.matrix)}});
    return {{"admit_empty_word", s.admit_empty_word()},
            {"field", s.field().to_string()},
            {"n", s.side()},
            {"generators", gens}};
}

GeneratingSystem generator_set_from_json(const json& doc) {
    if (!doc.is_object()) bad("generator file must be a JSON object");
    const auto n_signed = require<long>(doc, "n");
    if (n_signed < 1) bad("n must be at least 1");
    const auto n = static_cast<std::size_t>(n_signed);
    Field field;
    try {
        field = Field::parse(require<std::string>(doc, "field"));
    } catch (const Error& e) {
        bad(e.what());
    }
    const auto admit = require<bool>(doc, "admit_empty_word");
    if (!doc.contains("generators") || !doc.at("generators").is_array()) bad("'generators' must be an array");
    const auto& gens = doc.at("generators");

    std::vector<Generator> members;
    std::set<std::string> labels;
    for (const auto& g : gens) {
        const auto label = require<std::string>(g, "label");
        if (!labels.insert(label).second) bad("duplicate label '" + label + "'");
        if (!g.contains("entries") || !g.at("entries").is_array()) bad("generator '" + label + "' has no entries array");
        Matrix m(n, field);
        std::set<std::pair<long, long>> cells;
        for (const auto& e : g.at("entries")) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
                bad("entry of '" + label + "' must be [i, j, value]");
            }
            const auto i = e[0].get<long>();
            const auto j = e[1].get<long>();
            if (i < 1 || j < 1 || i > n_signed || j > n_signed) {
                bad("entry (" + std::to_string(i) + "," + std::to_string(j) + ") of '" + label + "' outside 1.." +
                    std::to_string(n));
            }
            if (!cells.insert({i, j}).second) {
                bad("duplicate entry (" + std::to_string(i) + "," + std::to_string(j) + ") in '" + label + "'");
            }
            m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), parse_value(e[2], field));
        }
        members.push_back({label, std::move(m)});
    }
    if (members.empty()) bad("generator file lists no generators");
    return {std::move(members), admit};
}

GeneratingSystem read_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        bad("'" + path + "' is not valid JSON: " + e.what());
    }
    return generator_set_from_json(doc);
}

json to_json(const LengthReport& report) {
    return {{"dims", report.dims},
            {"stabilization_step", report.stabilization_step},
            {"length", report.length ? json(*report.length) : json("not generating")},
            {"target_dim", report.target_dim}};
}

json to_json(const MaximalityVerdict& verdict) {
    json out = {{"algebra_dim", verdict.algebra_dim},
                {"centralizer_dim", verdict.centralizer_dim},
                {"commutative", verdict.is_commutative},
                {"maximal", verdict.is_maximal}};
    if (verdict.noncommuting_pair) {
        out["noncommuting_pair"] = {verdict.noncommuting_pair->first, verdict.noncommuting_pair->second};
    }
    if (verdict.outside_element) out["outside_element"] = matrix_entries(*verdict.outside_element);
    return out;
}

json to_json(const RadicalReport& report) {
    return {{"radical_dim", report.radical_dim},
            {"nilpotency_index", report.nilpotency_index},
            {"power_dims", report.power_dims},
            {"length", report.length},
            {"bound_holds", report.bound_holds}};
}

json subspace_to_json(const Subspace& space) {
    json basis = json::array();
    for (const auto& m : space.basis_matrices()) basis.push_back(matrix_entries(m));
    return {{"n", space.side()}, {"field", space.field().to_string()}, {"dimension", space.dimension()}, {"basis", basis}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace commalg
