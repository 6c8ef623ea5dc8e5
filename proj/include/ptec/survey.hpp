#pragma once

#include "ptec/descent.hpp"
#include "ptec/torsion.hpp"
#include "ptec/triples.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace ptec {

struct CheckpointMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SurveyConfig {
    int64_t max_ij = 30;
    DescentConfig descent;

    /// FNV-1a 64 hash of the numeric knobs, recorded in every output record;
    /// resuming against a file written with different knobs is refused.
    std::string fingerprint() const;
};

struct SurveyRecord {
    PythagoreanTriple triple;
    BigInt A, B;
    std::vector<std::pair<int64_t, int64_t>> torsion_evidence;
    RankInterval rank;
    int64_t timing_ms = 0;
};

SurveyRecord compute_survey_record(const PythagoreanTriple& t, const DescentConfig& config);

/// One JSON-lines record; keys are emitted in sorted order so output is
/// reproducible byte for byte.
std::string record_to_json(const SurveyRecord& record, const std::string& config_fp);

struct SurveySummary {
    size_t records = 0;
    size_t reused = 0;
    std::map<int, size_t> lower_histogram;
};

/// Runs curves in canonical (i, j) order with a share-nothing worker pool
/// and writes records in that order regardless of completion order. With
/// resume, previously written records are kept verbatim.
SurveySummary run_survey(const SurveyConfig& config, const std::filesystem::path& out_path,
                         bool resume, int jobs);

}  // namespace ptec
