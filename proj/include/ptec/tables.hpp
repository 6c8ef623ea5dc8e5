#pragma once

#include "ptec/curves.hpp"
#include "ptec/descent.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ptec {

/// A row of one of the bundled published tables. Rows whose printed form
/// carries a typo are stored with the fixed value, corrected = true, and
/// the original text kept alongside.
struct Table1Row {
    int64_t i, j, a, b, c;
    bool corrected = false;
    std::string original;
};

struct CurveTableRow {
    int n = 0;  // row number where the table has one
    int64_t i, j, a, b, c;
    BigInt A, B;
    int rank_lower = 0, rank_upper = 0;
    bool corrected = false;
    std::string original;
};

struct Table4Row {
    int n = 0;
    std::vector<CurvePoint> points;
};

std::vector<Table1Row> load_table1(const std::filesystem::path& data_dir);
std::vector<CurveTableRow> load_curve_table(const std::filesystem::path& data_dir,
                                            const std::string& table_id);  // T2/T3/T5/T6
std::vector<Table4Row> load_table4(const std::filesystem::path& data_dir);

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail;
};

std::vector<CheckResult> verify_table1(const std::filesystem::path& data_dir);

/// Coefficient regeneration A = -c^2, B = (ab)^2 from (i, j).
std::vector<CheckResult> verify_table_coefficients(const std::filesystem::path& data_dir,
                                                   const std::string& table_id);

/// computed lower <= published rank <= computed upper per row.
std::vector<CheckResult> verify_table_ranks(const std::filesystem::path& data_dir,
                                            const std::string& table_id,
                                            const DescentConfig& config);

/// Every listed point lies on its Table 3 curve and each row certifies
/// independence 5.
std::vector<CheckResult> verify_table4(const std::filesystem::path& data_dir,
                                       int max_rows = 0);

// --- small CSV + rational formatting helpers shared with the CLI ---

std::vector<std::string> split_csv_line(const std::string& line);
std::string format_rational(const BigRat& r);  // "num/den"
BigRat parse_rational(const std::string& s);

// Triple list export/import; export -> import -> export is byte-identical.
std::string triples_to_csv(const std::vector<PythagoreanTriple>& triples);
std::vector<PythagoreanTriple> triples_from_csv(const std::string& text);
std::string triples_to_jsonl(const std::vector<PythagoreanTriple>& triples);
std::vector<PythagoreanTriple> triples_from_jsonl(const std::string& text);

}  // namespace ptec
