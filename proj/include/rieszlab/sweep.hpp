#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rieszlab/descriptors.hpp"
#include "rieszlab/sequences.hpp"

namespace rieszlab {

enum class Criterion { Landau, MV, Basis, GramTrend, ProjectionSum, Witness };

const char* criterion_name(Criterion c);

inline constexpr long long kDefaultCellCap = 10000;

// Batch experiment description.  A cell is one (set, seq, window) triple;
// every requested criterion produces one row per cell.
struct SweepConfig {
    std::vector<SetDescriptor> sets;
    std::vector<SeqDescriptor> seqs;
    std::vector<Window> windows;
    std::vector<Criterion> criteria;
    std::string out_path;            // empty = stdout
    bool json = false;
    int parallelism = 1;
    long long cell_cap = kDefaultCellCap;
    bool timing = false;             // measured runtime_ms breaks byte-identity
    int witness_m = 40;
    long long grid_resolution = 1 << 14;
    Rational arc_length{1, 256};

    long long cell_count() const {
        return static_cast<long long>(sets.size()) *
               static_cast<long long>(seqs.size()) *
               static_cast<long long>(windows.size());
    }
};

// Flat key/value config text, one key per line, '#' comments.  Repeated keys
// extend the lists (set / seq / window / criterion); scalar keys take the
// last value.  Errors carry line numbers; an empty config is rejected with
// "no cells".  RIESZ_LAB_CELL_CAP in the environment overrides cell-cap.
SweepConfig parse_config(const std::string& text);

struct ReportRow {
    long long cell_id = 0;
    std::string set_desc;
    std::string seq_desc;
    long long window_lo = 0;
    long long window_hi = 0;
    std::string criterion;
    std::string verdict;
    double value1, value2, value3, value4;   // NaN renders as an empty field
    std::string notes;
    long long runtime_ms = 0;

    ReportRow();
};

struct SweepOutcome {
    std::vector<ReportRow> rows;
    bool any_error = false;   // exit code 1 when set
};

// Runs all cells (worker pool of config.parallelism threads, nothing shared)
// and merges rows in deterministic (cell_id, criterion) order.  Per-cell
// failures become error rows and never abort the sweep.
SweepOutcome run_sweep(const SweepConfig& config);

// Versioned CSV: header row "riesz-lab-v1,..." where the version tag heads
// the cell_id column.  JSON mirrors the rows as an array of objects.
void write_csv(std::ostream& os, const std::vector<ReportRow>& rows);
void write_json(std::ostream& os, const std::vector<ReportRow>& rows);

// Serializes per config.out_path/json; throws IoError when the file cannot
// be written.
void write_report(const SweepConfig& config, const std::vector<ReportRow>& rows);

} // namespace rieszlab
