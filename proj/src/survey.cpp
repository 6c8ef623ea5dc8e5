#include "ptec/survey.hpp"

#include "ptec/errors.hpp"
#include "ptec/tables.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

namespace ptec {

using nlohmann::json;

std::string SurveyConfig::fingerprint() const {
    std::ostringstream os;
    os << "max_ij=" << max_ij << ";search_bound=" << descent.search_bound
       << ";selmer=" << (descent.selmer_enabled ? 1 : 0)
       << ";prime_cap=" << descent.torsion_prime_cap
       << ";depth=" << descent.lifting_depth_override;
    uint64_t h = 1469598103934665603ULL;
    for (char ch : os.str()) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ULL;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return hex.str();
}

SurveyRecord compute_survey_record(const PythagoreanTriple& t, const DescentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    SurveyRecord record;
    record.triple = t;
    const FamilyCurve curve = curve_from_triple(t);
    record.A = curve.A;
    record.B = curve.B;
    record.torsion_evidence = torsion_subgroup(curve, config.torsion_prime_cap)
                                  .order_bound_evidence;
    record.rank = rank_interval(curve, config);
    record.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return record;
}

std::string record_to_json(const SurveyRecord& record, const std::string& config_fp) {
    json rec;
    rec["i"] = record.triple.params.i;
    rec["j"] = record.triple.params.j;
    rec["triple"] = {record.triple.a, record.triple.b, record.triple.c};
    rec["curve"]["A"] = record.A.str();
    rec["curve"]["B"] = record.B.str();
    rec["torsion"]["structure"] = "Z/2Z x Z/2Z";
    auto& ev = rec["torsion"]["evidence"];
    ev = json::array();
    for (const auto& [p, n] : record.torsion_evidence) ev.push_back({p, n});
    rec["rank"]["lower"] = record.rank.lower;
    rec["rank"]["upper"] = record.rank.upper;
    auto& wit = rec["witnesses"];
    wit = json::array();
    for (const CurvePoint& pt : record.rank.lower_witnesses) {
        json p;
        p["x"] = format_rational(pt.x());
        p["y"] = format_rational(pt.y());
        wit.push_back(std::move(p));
    }
    rec["timing_ms"] = record.timing_ms;
    rec["config"] = config_fp;
    return rec.dump();
}

namespace {

struct ExistingRecords {
    std::map<std::pair<int64_t, int64_t>, std::string> lines;
};

ExistingRecords read_checkpoint(const std::filesystem::path& path, const std::string& fp) {
    ExistingRecords existing;
    std::ifstream in(path);
    if (!in) return existing;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded()) break;  // partial tail from an interrupted run
        if (!rec.contains("config") || !rec.contains("i") || !rec.contains("j")) break;
        if (rec["config"].get<std::string>() != fp)
            throw CheckpointMismatchError(
                "survey checkpoint was written with a different configuration");
        existing.lines.emplace(
            std::make_pair(rec["i"].get<int64_t>(), rec["j"].get<int64_t>()), line);
    }
    return existing;
}

}  // namespace

SurveySummary run_survey(const SurveyConfig& config, const std::filesystem::path& out_path,
                         bool resume, int jobs) {
    if (jobs < 1) jobs = 1;
    const std::string fp = config.fingerprint();
    const auto triples = gen_triples_even(config.max_ij);

    ExistingRecords existing;
    if (resume && std::filesystem::exists(out_path)) existing = read_checkpoint(out_path, fp);

    SurveySummary summary;
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open survey output: " + out_path.string());

    const size_t batch = std::max<size_t>(static_cast<size_t>(jobs) * 8, 32);
    std::vector<std::string> lines(triples.size());

    for (size_t base = 0; base < triples.size(); base += batch) {
        const size_t end = std::min(base + batch, triples.size());
        auto worker = [&](size_t offset) {
            for (size_t k = base + offset; k < end; k += static_cast<size_t>(jobs)) {
                const auto& t = triples[k];
                const auto key = std::make_pair(t.params.i, t.params.j);
                if (auto it = existing.lines.find(key); it != existing.lines.end()) {
                    lines[k] = it->second;
                } else {
                    lines[k] = record_to_json(compute_survey_record(t, config.descent), fp);
                }
            }
        };
        if (jobs == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, static_cast<size_t>(w));
            for (auto& th : pool) th.join();
        }
        for (size_t k = base; k < end; ++k) {
            out << lines[k] << "\n";
            const json rec = json::parse(lines[k]);
            ++summary.records;
            if (existing.lines.count({rec["i"].get<int64_t>(), rec["j"].get<int64_t>()}))
                ++summary.reused;
            ++summary.lower_histogram[rec["rank"]["lower"].get<int>()];
        }
        out.flush();
    }
    return summary;
}

}  // namespace ptec
