#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric4/census.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

/// Pair-file parse failure with its 1-based line number (0 when the file
/// as a whole is at fault).
struct ParseError : std::runtime_error {
    enum class Kind { MalformedLine, TooFewEdges, IntegerOverflow };

    Kind kind;
    std::size_t line;

    ParseError(Kind k, std::size_t ln, const std::string& message)
        : std::runtime_error(message), kind(k), line(ln) {}
};

/// Reads the pair-file grammar: '#'-prefixed lines are comments, blank
/// lines are skipped, and every remaining line holds the two integer
/// components of one characteristic vector, in cyclic edge order.
inline CharacteristicPair parse_pair_file(std::istream& in) {
    CharacteristicPair pair;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream fields(line);
        long long a = 0, b = 0;
        if (!(fields >> a >> b)) {
            // distinguish out-of-range integers from plain junk
            std::istringstream recheck(line);
            std::string ta, tb, rest;
            recheck >> ta >> tb;
            auto numeric = [](const std::string& t) {
                if (t.empty())
                    return false;
                std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
                if (i == t.size())
                    return false;
                for (; i < t.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(t[i])))
                        return false;
                return true;
            };
            if (numeric(ta) && numeric(tb))
                throw ParseError(ParseError::Kind::IntegerOverflow, line_no,
                                 "integer out of range on line " + std::to_string(line_no));
            throw ParseError(ParseError::Kind::MalformedLine, line_no,
                             "expected two integers on line " + std::to_string(line_no));
        }
        std::string trailing;
        if (fields >> trailing)
            throw ParseError(ParseError::Kind::MalformedLine, line_no,
                             "trailing content on line " + std::to_string(line_no));
        pair.vectors.push_back({static_cast<Int>(a), static_cast<Int>(b)});
    }
    if (pair.edge_count() < 3)
        throw ParseError(ParseError::Kind::TooFewEdges, 0,
                         "a characteristic pair needs at least 3 edges, got " +
                             std::to_string(pair.edge_count()));
    return pair;
}

inline CharacteristicPair parse_pair_text(const std::string& text) {
    std::istringstream in(text);
    return parse_pair_file(in);
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

inline Json edges_json(const CharacteristicPair& pair) {
    Json out = Json::array();
    for (const CharVector& v : pair.vectors)
        out.push_back(Json::array({v.a, v.b}));
    return out;
}

inline Json summand_json(const Summand& s) {
    switch (s.kind) {
    case SummandKind::Sphere: return Json{{"kind", "sphere"}, {"dim", s.dim}};
    case SummandKind::Moore: return Json{{"kind", "moore"}, {"dim", s.dim}, {"order", s.order}};
    case SummandKind::SuspendedCP2: return Json{{"kind", "suspended_cp2"}};
    }
    return Json();
}

inline Json splitting_json(const SplittingDescriptor& splitting) {
    Json out = Json::array();
    for (const Summand& s : splitting.summands)
        out.push_back(summand_json(s));
    return out;
}

inline Json spin_json(const SpinReport& spin) {
    Json out;
    out["is_quasi_toric"] = spin.is_quasi_toric;
    out["w2_vanishes"] = spin.w2_vanishes ? Json(*spin.w2_vanishes) : Json(nullptr);
    out["product_criterion"] =
        spin.product_criterion ? Json(*spin.product_criterion) : Json(nullptr);
    out["parity_criterion"] = spin.parity_criterion ? Json(*spin.parity_criterion) : Json(nullptr);
    return out;
}

inline Json cup_form_json(const CupFormResult& result) {
    if (!std::holds_alternative<CupForm>(result))
        return Json(nullptr);
    const CupForm& form = std::get<CupForm>(result);
    Json rows = Json::array();
    for (const auto& row : form.entries)
        rows.push_back(Json(row));
    return rows;
}

/// The full analysis report. Top-level keys are fixed; analyses that do
/// not apply are null, never omitted. Additional primes requested on the
/// command line append smooth_vertices_p<P> keys.
inline Json analyze_report(const CharacteristicPair& pair, const std::vector<Int>& extra_primes = {}) {
    require_strict(pair);
    const DeterminantTable table = det_table(pair);
    const CohomologyProfile profile = cohomology_profile(pair);
    const SteenrodProfile steenrod = steenrod_profile(pair);
    const SpinReport spin = spin_report(pair);
    const CupFormResult form = cup_form(pair);

    Json report;
    report["edges"] = edges_json(pair);
    Json dets = Json::array();
    for (std::size_t i = 1; i <= table.m; ++i)
        for (std::size_t j = i + 1; j <= table.m; ++j)
            dets.push_back(Json{{"i", i}, {"j", j}, {"d", table.at(i, j)}});
    report["det_table"] = dets;
    report["g"] = profile.torsion_order;
    report["betti2"] = profile.betti2;
    report["smooth_vertices_p2"] = p_local_smooth_vertices(table, 2).indices;
    report["sq1_h2"] = steenrod.sq1_h2_nontrivial;
    report["sq1_h3"] = steenrod.sq1_h3_nontrivial;
    report["sq2"] = steenrod.sq2_nontrivial;
    report["criterion_terms"] = steenrod.criterion_terms;
    report["witness_vertex"] = steenrod.witness_vertex;
    report["splitting"] = splitting_json(splitting_from_invariants(
        profile.betti2, profile.torsion_order, steenrod.sq2_nontrivial));
    report["spin"] = spin_json(spin);
    report["cup_form"] = cup_form_json(form);
    Json warnings = Json::array();
    if (std::holds_alternative<CupUnavailable>(form))
        warnings.push_back(std::get<CupUnavailable>(form) == CupUnavailable::TorsionPresent
                               ? "cup form unavailable: torsion present"
                               : "cup form unavailable: no smooth vertex");
    if (!spin.is_quasi_toric)
        warnings.push_back("spin criteria undefined: pair is not quasi-toric");
    report["warnings"] = warnings;
    for (Int p : extra_primes)
        if (p != 2)
            report["smooth_vertices_p" + std::to_string(p)] =
                p_local_smooth_vertices(table, p).indices;
    return report;
}

inline Json key_json(const CanonicalKey& key) {
    return Json{{"m", key.m}, {"table", key.table}};
}

/// One census output line. Field names are frozen.
inline Json census_record_json(const CensusRecord& record) {
    Json out;
    out["key"] = key_json(record.key);
    out["representative"] = edges_json(record.representative);
    out["betti2"] = record.profile.betti2;
    out["g"] = record.profile.torsion_order;
    out["sq1_h2"] = record.steenrod.sq1_h2_nontrivial;
    out["sq2"] = record.steenrod.sq2_nontrivial;
    out["splitting"] = splitting_json(record.splitting);
    out["spin"] = spin_json(record.spin);
    return out;
}

inline void write_census(std::ostream& out, const std::vector<CensusRecord>& records) {
    for (const CensusRecord& record : records)
        out << census_record_json(record).dump() << '\n';
}

} // namespace toric
