// Command-line front end for the invariant engine: analyze one pair,
// compare two, contract an edge, print a cup form, run a census, or run
// the property suite over a census.
//
// Exit codes: 0 success, 1 analysis error (bad pair, bad file), 2 usage.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric4/io.hpp"
#include "toric4/selfcheck.hpp"
#include "toric4/toric4.hpp"

namespace {

using namespace toric;

CharacteristicPair load_pair(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_pair_file(in);
}

CharacteristicPair load_strict_pair(const std::string& path) {
    CharacteristicPair pair = load_pair(path);
    const ValidationReport report = validate(pair, ValidationMode::Strict);
    if (!report.ok()) {
        std::string message = path + " is not a valid characteristic pair:";
        for (const Violation& v : report.violations) {
            switch (v.kind) {
            case ViolationKind::NonPrimitive:
                message += "\n  edge " + std::to_string(v.index) + ": vector is not primitive";
                break;
            case ViolationKind::AdjacentDependent:
                message += "\n  vertex " + std::to_string(v.index) +
                           ": adjacent vectors are linearly dependent";
                break;
            case ViolationKind::TooFewEdges:
                message += "\n  only " + std::to_string(v.index) + " edges";
                break;
            }
        }
        throw std::runtime_error(message);
    }
    return pair;
}

std::string summand_text(const Summand& s) {
    switch (s.kind) {
    case SummandKind::Sphere: return "S^" + std::to_string(s.dim);
    case SummandKind::Moore:
        return "P^" + std::to_string(s.dim) + "(" + std::to_string(s.order) + ")";
    case SummandKind::SuspendedCP2: return "Sigma CP^2";
    }
    return "?";
}

std::string splitting_text(const SplittingDescriptor& splitting) {
    std::string out;
    for (std::size_t i = 0; i < splitting.summands.size(); ++i) {
        if (i)
            out += " v ";
        out += summand_text(splitting.summands[i]);
    }
    return out.empty() ? "point" : out;
}

int cmd_analyze(const std::string& path, std::vector<Int> primes, bool json) {
    const CharacteristicPair pair = load_strict_pair(path);
    const Json report = analyze_report(pair, primes);
    if (json) {
        std::cout << report.dump(2) << '\n';
        return 0;
    }
    const DeterminantTable table = det_table(pair);
    std::cout << "edges (m=" << pair.edge_count() << "):";
    for (const CharVector& v : pair.vectors)
        std::cout << " (" << v.a << "," << v.b << ")";
    std::cout << '\n';
    std::cout << "betti2 (rank of H^2): " << report["betti2"] << '\n';
    std::cout << "g (order of H^3):     " << report["g"] << '\n';
    std::cout << "determinant table:   ";
    for (std::size_t i = 1; i <= table.m; ++i)
        for (std::size_t j = i + 1; j <= table.m; ++j)
            std::cout << " d" << i << j << "=" << table.at(i, j);
    std::cout << '\n';
    std::cout << "2-local smooth vertices:";
    for (const auto& v : report["smooth_vertices_p2"])
        std::cout << " v" << v;
    std::cout << '\n';
    for (Int p : primes)
        if (p != 2) {
            std::cout << p << "-local smooth vertices:";
            for (const auto& v : report["smooth_vertices_p" + std::to_string(p)])
                std::cout << " v" << v;
            std::cout << '\n';
        }
    std::cout << "Sq^1 on H^2: " << (report["sq1_h2"].get<bool>() ? "non-trivial" : "trivial")
              << '\n';
    std::cout << "Sq^1 on H^3: trivial\n";
    std::cout << "Sq^2 on H^2: " << (report["sq2"].get<bool>() ? "non-trivial" : "trivial")
              << "  (witness vertex v" << report["witness_vertex"] << ", terms";
    for (const auto& t : report["criterion_terms"])
        std::cout << " " << t;
    std::cout << ")\n";
    std::cout << "suspension splits as: " << splitting_text(stable_splitting(pair)) << '\n';
    const SpinReport spin = spin_report(pair);
    if (spin.is_quasi_toric)
        std::cout << "spin: " << (*spin.w2_vanishes ? "yes (w2 = 0)" : "no (w2 != 0)") << '\n';
    else
        std::cout << "spin: n/a (not quasi-toric)\n";
    const CupFormResult form = cup_form(pair);
    if (std::holds_alternative<CupForm>(form)) {
        const CupForm& cf = std::get<CupForm>(form);
        std::cout << "cup form (basis vertex v" << cf.basis_vertex << "):";
        for (const auto& row : cf.entries) {
            std::cout << " [";
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j];
            std::cout << "]";
        }
        std::cout << '\n';
    } else {
        std::cout << "cup form: unavailable ("
                  << (std::get<CupUnavailable>(form) == CupUnavailable::TorsionPresent
                          ? "torsion present"
                          : "no smooth vertex")
                  << ")\n";
    }
    for (const auto& w : report["warnings"])
        std::cout << "warning: " << w.get<std::string>() << '\n';
    return 0;
}

int cmd_compare(const std::string& path1, const std::string& path2, Int bound, bool json) {
    const CharacteristicPair a = load_strict_pair(path1);
    const CharacteristicPair b = load_strict_pair(path2);
    const RigidityVerdict verdict = compare_rigidity(a, b, bound);
    if (json) {
        Json out;
        out["tier"] = to_string(verdict.tier);
        out["evidence"] = verdict.evidence;
        if (verdict.witness) {
            Json rows = Json::array();
            for (const auto& row : verdict.witness->matrix)
                rows.push_back(Json(row));
            out["witness"] = Json{{"matrix", rows}, {"epsilon", verdict.witness->epsilon}};
        } else {
            out["witness"] = nullptr;
        }
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << to_string(verdict.tier) << '\n' << verdict.evidence << '\n';
    }
    return 0;
}

int cmd_contract(const std::string& path, std::size_t edge, bool json) {
    const CharacteristicPair pair = load_strict_pair(path);
    const std::size_t m = pair.edge_count();
    const SteenrodProfile profile = steenrod_profile(pair);
    const long rotation = detail::rotation_sending_vertex_last(profile.witness_vertex, m);
    const CharacteristicPair normalized = relabel(pair, rotation, false);
    const DegenerateTriple triple = edge_contract(normalized, edge);
    const DegenerateClassification cls = classify_degenerate_triangle(triple);
    const bool sq2 = degenerate_sq2(triple);
    if (json) {
        Json out;
        out["witness_vertex"] = profile.witness_vertex;
        out["rotation"] = rotation;
        out["source_edge"] = triple.source_edge;
        Json vecs = Json::array();
        for (const CharVector& v : triple.vectors)
            vecs.push_back(Json::array({v.a, v.b}));
        out["vectors"] = vecs;
        out["d12"] = triple.d12;
        out["d13"] = triple.d13;
        out["d23"] = triple.d23;
        out["kind"] = cls.kind == DegenerateKind::ToricOrbifoldTriangle
                          ? "toric_orbifold_triangle"
                          : "wedge_susp_lens_and_sphere";
        out["lens_order"] = cls.lens_order;
        out["g"] = cls.g;
        out["sq2"] = sq2;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "normalized with witness vertex v" << profile.witness_vertex << " (rotation "
              << rotation << ")\n";
    std::cout << "contracted to triangle carrying";
    for (const CharVector& v : triple.vectors)
        std::cout << " (" << v.a << "," << v.b << ")";
    std::cout << "\ndeterminants: d12=" << triple.d12 << " d13=" << triple.d13
              << " d23=" << triple.d23 << '\n';
    if (cls.kind == DegenerateKind::ToricOrbifoldTriangle)
        std::cout << "classification: toric orbifold triangle, g_i=" << cls.g << '\n';
    else
        std::cout << "classification: Sigma(S^3/Z_" << cls.lens_order << ") v S^2, g_i=" << cls.g
                  << '\n';
    std::cout << "Sq^2 on the contraction: " << (sq2 ? "non-trivial" : "trivial") << '\n';
    return 0;
}

int cmd_cup(const std::string& path, bool json) {
    const CharacteristicPair pair = load_strict_pair(path);
    const CupFormResult form = cup_form(pair);
    if (json) {
        Json out;
        out["cup_form"] = cup_form_json(form);
        if (std::holds_alternative<CupForm>(form)) {
            out["reason"] = nullptr;
            out["basis_vertex"] = std::get<CupForm>(form).basis_vertex;
        } else {
            out["reason"] = std::get<CupUnavailable>(form) == CupUnavailable::TorsionPresent
                                ? "TorsionPresent"
                                : "NoSmoothVertex";
            out["basis_vertex"] = nullptr;
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (std::holds_alternative<CupForm>(form)) {
        const CupForm& cf = std::get<CupForm>(form);
        std::cout << "cup form on the cellular degree-2 basis (smooth vertex v"
                  << cf.basis_vertex << "):\n";
        for (const auto& row : cf.entries) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "") << row[j];
            std::cout << '\n';
        }
        std::cout << "det = " << cf.det() << '\n';
    } else {
        std::cout << "unavailable: "
                  << (std::get<CupUnavailable>(form) == CupUnavailable::TorsionPresent
                          ? "torsion present (g > 1)"
                          : "no smooth vertex")
                  << '\n';
    }
    return 0;
}

int cmd_census(std::size_t edges, Int bound, const std::string& filter_name,
               const std::string& out_path, unsigned workers) {
    const RecordFilter filter = named_filter(filter_name);
    const std::vector<CensusRecord> records = census_run(edges, bound, filter, workers);
    if (out_path.empty()) {
        write_census(std::cout, records);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open " + out_path + " for writing");
        write_census(out, records);
    }
    std::cerr << records.size() << " record(s)\n";
    return 0;
}

int cmd_selfcheck(std::size_t edges, Int bound) {
    const std::vector<PropertyResult> results = run_property_suite(edges, bound);
    bool all_passed = true;
    for (const PropertyResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checks
                  << " checks)" << '\n';
        if (!r.passed) {
            std::cout << "       " << r.detail << '\n';
            all_passed = false;
        }
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariants of 4-dimensional toric orbifolds from polygon characteristic data"};
    app.require_subcommand(1);

    std::string file1, file2, out_path, filter_name;
    std::vector<Int> primes;
    bool json = false;
    Int bound = 2;
    std::size_t edge = 1, edges = 3;
    unsigned workers = 1;

    auto prime_check = CLI::Validator(
        [](std::string& value) -> std::string {
            try {
                if (!toric::is_prime(std::stoll(value)))
                    return value + " is not prime";
            } catch (...) {
                return "not an integer: " + value;
            }
            return {};
        },
        "PRIME");

    CLI::App* analyze = app.add_subcommand("analyze", "full invariant report for one pair file");
    analyze->add_option("file", file1, "pair file")->required();
    analyze->add_option("--prime", primes, "additional primes for smooth-vertex reporting")
        ->check(prime_check);
    analyze->add_flag("--json", json, "emit the JSON report");

    CLI::App* compare = app.add_subcommand("compare", "rigidity comparison of two pair files");
    compare->add_option("file1", file1, "first pair file")->required();
    compare->add_option("file2", file2, "second pair file")->required();
    compare->add_option("--bound", bound, "entry bound for the congruence search")
        ->check(CLI::PositiveNumber);
    compare->add_flag("--json", json, "emit JSON");

    CLI::App* contract = app.add_subcommand("contract", "contract one edge to a triangle datum");
    contract->add_option("file", file1, "pair file")->required();
    contract->add_option("--edge", edge, "edge index to keep, 1..m-2 after normalization")
        ->required()
        ->check(CLI::PositiveNumber);
    contract->add_flag("--json", json, "emit JSON");

    CLI::App* cup = app.add_subcommand("cup", "cup-product matrix, when defined");
    cup->add_option("file", file1, "pair file")->required();
    cup->add_flag("--json", json, "emit JSON");

    CLI::App* census = app.add_subcommand("census", "enumerate all pairs up to symmetry");
    census->add_option("--edges", edges, "polygon edge count")->required()->check(CLI::Range(3, 12));
    census->add_option("--bound", bound, "max |entry| of characteristic vectors")
        ->required()
        ->check(CLI::PositiveNumber);
    census->add_option("--filter", filter_name,
                       "g-even, g-odd, sq2, sq2-trivial, quasi-toric, or spin")
        ->check(CLI::IsMember({"g-even", "g-odd", "sq2", "sq2-trivial", "quasi-toric", "spin"}));
    census->add_option("--out", out_path, "output path (default: stdout)");
    census->add_option("--workers", workers, "enumeration threads")->check(CLI::PositiveNumber);

    CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the property suite over a census");
    selfcheck->add_option("--edges", edges, "polygon edge count")
        ->required()
        ->check(CLI::Range(3, 12));
    selfcheck->add_option("--bound", bound, "max |entry| of characteristic vectors")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(file1, primes, json);
        if (compare->parsed())
            return cmd_compare(file1, file2, bound, json);
        if (contract->parsed())
            return cmd_contract(file1, edge, json);
        if (cup->parsed())
            return cmd_cup(file1, json);
        if (census->parsed())
            return cmd_census(edges, bound, filter_name, out_path, workers);
        if (selfcheck->parsed())
            return cmd_selfcheck(edges, bound);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
