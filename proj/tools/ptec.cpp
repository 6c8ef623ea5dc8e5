// ptec — exact arithmetic for the elliptic-curve family y^2 = x(x-a^2)(x-b^2)
// built from primitive Pythagorean triples.

#include "ptec/descent.hpp"
#include "ptec/errors.hpp"
#include "ptec/survey.hpp"
#include "ptec/tables.hpp"
#include "ptec/torsion.hpp"
#include "ptec/triples.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ptec;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int cmd_gen_triples(int64_t max_ij, const std::string& format) {
    const auto triples = gen_triples_even(max_ij);
    std::cout << (format == "csv" ? triples_to_csv(triples) : triples_to_jsonl(triples));
    // The bound is strict (i, j < max_ij), the convention the published
    // tables follow; report the inclusive count as well so either reading
    // of a "range N" claim can be checked.
    const size_t strict = triples.size();
    const size_t inclusive = gen_triples_even(max_ij + 1).size();
    std::cerr << "generated " << strict << " triples with i,j < " << max_ij << " ("
              << inclusive << " with i,j <= " << max_ij << ")";
    if (strict == 202461)
        std::cerr << "; the strict count matches the published survey size 202461";
    else if (inclusive == 202461)
        std::cerr << "; the inclusive count matches the published survey size 202461";
    std::cerr << "\n";
    return kExitOk;
}

std::vector<CurvePoint> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open points file: " + path);
    std::vector<CurvePoint> points;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < 2) throw std::runtime_error("bad point line: " + line);
        points.emplace_back(parse_rational(fields[0]), parse_rational(fields[1]));
    }
    return points;
}

int cmd_curve(const std::vector<int64_t>& abc, bool torsion, bool witness, bool rank,
              int64_t search_bound, bool selmer, const std::string& points_file,
              bool as_json) {
    const PythagoreanTriple t = make_triple(abc.at(0), abc.at(1), abc.at(2));
    const FamilyCurve curve = curve_from_triple(t);
    std::vector<CurvePoint> extra;
    if (!points_file.empty()) extra = read_points_file(points_file);

    DescentConfig config;
    config.search_bound = search_bound;
    config.selmer_enabled = selmer;

    nlohmann::json rec;
    rec["triple"] = {t.a, t.b, t.c};
    rec["params"] = {t.params.i, t.params.j};
    rec["curve"]["A"] = curve.A.str();
    rec["curve"]["B"] = curve.B.str();
    rec["discriminant"] = curve.D.str();

    if (torsion) {
        const TorsionReport report = torsion_subgroup(curve, config.torsion_prime_cap);
        rec["torsion"]["structure"] = "Z/2Z x Z/2Z";
        rec["torsion"]["order"] = TorsionReport::order;
        auto& ev = rec["torsion"]["evidence"];
        ev = nlohmann::json::array();
        for (const auto& [p, n] : report.order_bound_evidence) ev.push_back({p, n});
        auto& pts = rec["torsion"]["two_torsion"];
        pts = nlohmann::json::array();
        for (const CurvePoint& pt : report.two_torsion)
            pts.push_back({format_rational(pt.x()), format_rational(pt.y())});
    }
    if (witness) {
        const WitnessCertificate cert = infinite_order_witness(curve);
        rec["witness"]["point"] = {format_rational(cert.point.x()),
                                   format_rational(cert.point.y())};
        rec["witness"]["on_curve"] = cert.on_curve;
        rec["witness"]["y_divides_discriminant"] = cert.y_divides_disc;
        rec["witness"]["multiples_checked"] = cert.multiples_checked;
        rec["witness"]["conclusion"] = "rank >= 1";
    }
    if (rank) {
        const RankInterval interval = rank_interval(curve, config, extra);
        rec["rank"]["lower"] = interval.lower;
        rec["rank"]["upper"] = interval.upper;
        rec["rank"]["notes"] = interval.method_notes;
        auto& wits = rec["rank"]["lower_witnesses"];
        wits = nlohmann::json::array();
        for (const CurvePoint& pt : interval.lower_witnesses)
            wits.push_back({format_rational(pt.x()), format_rational(pt.y())});
    }

    if (as_json) {
        std::cout << rec.dump() << "\n";
        return kExitOk;
    }
    std::cout << "triple (" << t.a << "," << t.b << "," << t.c << ")  from (i,j)=("
              << t.params.i << "," << t.params.j << ")\n";
    std::cout << "curve  y^2 = x^3 " << (curve.A < 0 ? "- " : "+ ")
              << boost::multiprecision::abs(curve.A) << "x^2 + " << curve.B << "x\n";
    std::cout << "discriminant " << curve.D << "\n";
    if (torsion) {
        std::cout << "torsion Z/2Z x Z/2Z, order 4; evidence";
        for (const auto& ev : rec["torsion"]["evidence"])
            std::cout << " #E(F_" << ev[0] << ")=" << ev[1];
        std::cout << "\n";
    }
    if (witness)
        std::cout << "witness (" << rec["witness"]["point"][0].get<std::string>() << ", "
                  << rec["witness"]["point"][1].get<std::string>()
                  << "): abc does not divide D, nP != O for n in {1..10,12}; rank >= 1\n";
    if (rank)
        std::cout << "rank in [" << rec["rank"]["lower"] << ", " << rec["rank"]["upper"]
                  << "]  (" << rec["rank"]["notes"].get<std::string>() << ")\n";
    return kExitOk;
}

int cmd_verify_tables(const std::string& data_dir, std::vector<std::string> tables,
                      int64_t search_bound, bool selmer, bool t2_ranks) {
    if (tables.empty()) tables = {"T1", "T2", "T3", "T4", "T5", "T6"};
    DescentConfig config;
    config.search_bound = search_bound;
    config.selmer_enabled = selmer;

    std::vector<CheckResult> results;
    for (const std::string& id : tables) {
        if (id == "T1") {
            auto r = verify_table1(data_dir);
            results.insert(results.end(), r.begin(), r.end());
        } else if (id == "T4") {
            auto r = verify_table4(data_dir);
            results.insert(results.end(), r.begin(), r.end());
        } else if (id == "T2" || id == "T3" || id == "T5" || id == "T6") {
            auto r = verify_table_coefficients(data_dir, id);
            results.insert(results.end(), r.begin(), r.end());
            if (id != "T2" || t2_ranks) {
                // Table 2 rank intervals need a Selmer pass over ~12-digit
                // discriminant supports; opt in via --t2-ranks.
                auto rr = verify_table_ranks(data_dir, id, config);
                results.insert(results.end(), rr.begin(), rr.end());
            } else {
                DescentConfig quick = config;
                quick.selmer_enabled = false;
                auto rr = verify_table_ranks(data_dir, id, quick);
                results.insert(results.end(), rr.begin(), rr.end());
            }
        } else {
            throw std::invalid_argument("unknown table selector: " + id);
        }
    }
    size_t passed = 0;
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.label;
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        if (r.pass) ++passed;
    }
    std::cout << passed << "/" << results.size() << " checks passed\n";
    return passed == results.size() ? kExitOk : kExitVerificationFailure;
}

int cmd_survey(int64_t max_ij, const std::string& out, bool resume, int jobs,
               int64_t search_bound, bool selmer, int64_t prime_cap) {
    SurveyConfig config;
    config.max_ij = max_ij;
    config.descent.search_bound = search_bound;
    config.descent.selmer_enabled = selmer;
    config.descent.torsion_prime_cap = prime_cap;
    const SurveySummary summary = run_survey(config, out, resume, jobs);
    std::cout << "survey wrote " << summary.records << " records to " << out;
    if (summary.reused > 0) std::cout << " (" << summary.reused << " reused)";
    std::cout << "\nrank lower-bound histogram:\n";
    for (const auto& [lower, count] : summary.lower_histogram)
        std::cout << "  lower=" << lower << ": " << count << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic curves with positive rank from Pythagorean triples"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-triples", "generate primitive triples");
    int64_t gen_max_ij = 10;
    std::string gen_format = "csv";
    gen->add_option("--max-ij", gen_max_ij, "strict bound: 1 <= j < i < max-ij")->required();
    gen->add_option("--format", gen_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* curve = app.add_subcommand("curve", "analyze the curve of one triple");
    std::vector<int64_t> curve_triple;
    bool curve_torsion = false, curve_witness = false, curve_rank = false,
         curve_json = false, curve_no_selmer = false;
    int64_t curve_search_bound = 2000;
    std::string curve_points;
    curve->add_option("--triple", curve_triple, "a,b,c")->required()->delimiter(',')
        ->expected(3);
    curve->add_flag("--torsion", curve_torsion, "report the torsion subgroup");
    curve->add_flag("--witness", curve_witness, "certify the (c^2, abc) witness");
    curve->add_flag("--rank", curve_rank, "compute the rank interval");
    curve->add_option("--search-bound", curve_search_bound, "point search height");
    curve->add_flag("--no-selmer", curve_no_selmer, "skip the Selmer upper bound");
    curve->add_option("--points", curve_points, "file of extra points, one x,y per line");
    curve->add_flag("--json", curve_json, "machine-readable output");

    auto* verify = app.add_subcommand("verify-tables", "check the bundled published tables");
    std::string verify_data = "data";
    std::vector<std::string> verify_tables;
    int64_t verify_search_bound = 2000;
    bool verify_no_selmer = false, verify_t2_ranks = false;
    verify->add_option("--data", verify_data, "data directory (default: data)");
    verify->add_option("--table", verify_tables, "subset of T1..T6 (default: all)");
    verify->add_option("--search-bound", verify_search_bound, "point search height");
    verify->add_flag("--no-selmer", verify_no_selmer, "skip Selmer upper bounds");
    verify->add_flag("--t2-ranks", verify_t2_ranks, "run the full Selmer pass on Table 2");

    auto* survey = app.add_subcommand("survey", "run the family over a parameter range");
    int64_t survey_max_ij = 30;
    std::string survey_out;
    bool survey_resume = false, survey_no_selmer = false;
    int survey_jobs = 1;
    int64_t survey_search_bound = 2000, survey_prime_cap = 1000;
    survey->add_option("--max-ij", survey_max_ij, "strict bound on i, j")->required();
    survey->add_option("--out", survey_out, "JSON-lines output file")->required();
    survey->add_flag("--resume", survey_resume, "reuse records from an earlier run");
    survey->add_option("--jobs", survey_jobs, "worker threads");
    survey->add_option("--search-bound", survey_search_bound, "point search height");
    survey->add_flag("--no-selmer", survey_no_selmer, "cap upper bounds instead of Selmer");
    survey->add_option("--prime-cap", survey_prime_cap, "torsion evidence prime cap");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen_triples(gen_max_ij, gen_format);
        if (curve->parsed())
            return cmd_curve(curve_triple, curve_torsion, curve_witness, curve_rank,
                             curve_search_bound, !curve_no_selmer, curve_points, curve_json);
        if (verify->parsed())
            return cmd_verify_tables(verify_data, verify_tables, verify_search_bound,
                                     !verify_no_selmer, verify_t2_ranks);
        if (survey->parsed())
            return cmd_survey(survey_max_ij, survey_out, survey_resume, survey_jobs,
                              survey_search_bound, !survey_no_selmer, survey_prime_cap);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ptec::InternalInvariantError& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ptec::CheckpointMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
