#include "rieszlab/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rieszlab/criteria.hpp"
#include "rieszlab/kernels.hpp"
#include "rieszlab/spectral.hpp"
#include "rieszlab/witness.hpp"

namespace rieszlab {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

ReportRow::ReportRow() : value1(kNaN), value2(kNaN), value3(kNaN), value4(kNaN) {}

const char* criterion_name(Criterion c) {
    switch (c) {
        case Criterion::Landau: return "landau";
        case Criterion::MV: return "mv";
        case Criterion::Basis: return "basis";
        case Criterion::GramTrend: return "gram-trend";
        case Criterion::ProjectionSum: return "projection-sum";
        case Criterion::Witness: return "witness";
    }
    return "?";
}

namespace {

Criterion parse_criterion(const std::string& name, int line) {
    for (Criterion c : {Criterion::Landau, Criterion::MV, Criterion::Basis,
                        Criterion::GramTrend, Criterion::ProjectionSum,
                        Criterion::Witness})
        if (name == criterion_name(c)) return c;
    throw ValidationError("line " + std::to_string(line) +
                          ": unknown criterion '" + name + "'");
}

// fills one row's verdict/values for a single criterion on a single cell
void run_criterion(const SweepConfig& config, const SetDescriptor& sd,
                   const SeqDescriptor& qd, Window window, Criterion crit,
                   ReportRow& row) {
    ArcUnion s = sd.resolve();
    switch (crit) {
        case Criterion::Landau: {
            CriterionReport rep = landau_necessary(s, generate(qd, window));
            row.verdict = rep.verdict_text();
            row.value1 = rep.margin;
            row.value2 = s.measure().to_double();
            row.notes = rep.notes;
            break;
        }
        case Criterion::MV: {
            CriterionReport rep =
                montgomery_vaughan_sufficient(s, generate(qd, window));
            row.verdict = rep.verdict_text();
            row.value1 = rep.margin;
            row.value2 = s.longest_arc_length().to_double();
            row.notes = rep.notes;
            break;
        }
        case Criterion::Basis: {
            if (qd.kind != SeqDescriptor::Kind::Periodic)
                throw InvalidArgument(
                    "basis criterion needs a periodic sequence descriptor");
            CriterionReport rep = arithmetic_riesz_basis(s, qd.period, qd.residue);
            row.verdict = rep.verdict_text();
            row.value1 = rep.margin;
            row.value2 = -rep.margin;   // uncovered measure
            row.notes = rep.notes;
            break;
        }
        case Criterion::GramTrend: {
            // dyadic sub-windows shrinking toward the cell window's center
            std::vector<Window> windows;
            long long center = (window.lo + window.hi) / 2;
            for (long long div = 8; div >= 1; div /= 2) {
                Window w{center - (center - window.lo) / div,
                         center + (window.hi - center) / div};
                if (div == 1) w = window;
                if (windows.empty() || windows.back().lo != w.lo ||
                    windows.back().hi != w.hi)
                    windows.push_back(w);
            }
            TrendReport trend =
                riesz_trend(s, qd, windows, kDecayThreshold, to_string(sd));
            row.verdict = trend.classification;
            row.value1 = trend.reports.front().lambda_min;
            row.value2 = trend.reports.back().lambda_min;
            row.value3 = trend.decay_ratio;
            row.value4 = static_cast<double>(trend.reports.back().eigenvalues.size());
            break;
        }
        case Criterion::ProjectionSum: {
            // Lemma-style reading: the diagonal marks Z \ Lambda in-window
            IndexSet lam = generate(qd, window);
            IndexSet comp;
            comp.window = window;
            for (long long k = window.lo; k <= window.hi; ++k)
                if (!lam.contains(k)) comp.members.push_back(k);
            comp.generator = SeqDescriptor::explicit_set(comp.members);
            SpectrumReport rep = projection_sum_spectrum(s, comp, window);
            row.verdict = "ok";
            row.value1 = rep.lambda_min;
            row.value2 = rep.lambda_max;
            row.value3 = rep.lambda_min > 0.0 ? std::sqrt(rep.lambda_min) : 0.0;
            row.notes = rep.notes;
            break;
        }
        case Criterion::Witness: {
            if (qd.kind != SeqDescriptor::Kind::Bohr)
                throw InvalidArgument(
                    "witness criterion needs a bohr sequence descriptor");
            BohrWitnessConfig wc;
            wc.alpha = qd.alpha;
            wc.delta = qd.delta;
            wc.head_m = config.witness_m;
            wc.grid_resolution = config.grid_resolution;
            wc.arc_length = config.arc_length;
            WitnessResult res = witness_ratio(s, wc);
            row.verdict = "ok";
            row.value1 = res.ratio;
            row.value2 = res.arc.start.to_double();
            row.value3 = res.arc_length.to_double();
            row.value4 = res.alpha_tail;
            row.notes = "stage=" + std::to_string(sd.cantor_stage_index());
            break;
        }
    }
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string value_field(double v) {
    return std::isnan(v) ? std::string() : format_number(v);
}

} // namespace

SweepConfig parse_config(const std::string& text) {
    SweepConfig config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_any = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string rest;
        std::getline(ls, rest);
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
            rest.erase(rest.begin());
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\r' ||
                                 rest.back() == '\t'))
            rest.pop_back();
        saw_any = true;
        try {
            if (key == "set") {
                config.sets.push_back(parse_set_descriptor(rest));
            } else if (key == "seq") {
                config.seqs.push_back(parse_seq_descriptor(rest));
            } else if (key == "window") {
                std::istringstream ws(rest);
                Window w;
                if (!(ws >> w.lo >> w.hi) || w.lo > w.hi)
                    throw BadDescriptor("window needs lo <= hi");
                config.windows.push_back(w);
            } else if (key == "criterion") {
                config.criteria.push_back(parse_criterion(rest, lineno));
            } else if (key == "out") {
                config.out_path = rest;
            } else if (key == "format") {
                if (rest == "csv") config.json = false;
                else if (rest == "json") config.json = true;
                else throw BadDescriptor("format must be csv or json");
            } else if (key == "parallelism") {
                config.parallelism = static_cast<int>(std::stoll(rest));
                if (config.parallelism < 1)
                    throw BadDescriptor("parallelism must be >= 1");
            } else if (key == "cell-cap") {
                config.cell_cap = std::stoll(rest);
            } else if (key == "timing") {
                config.timing = rest == "on" || rest == "true";
            } else if (key == "witness-m") {
                config.witness_m = static_cast<int>(std::stoll(rest));
            } else if (key == "grid") {
                config.grid_resolution = std::stoll(rest);
            } else if (key == "arc-length") {
                config.arc_length = Rational::parse(rest);
            } else {
                throw ValidationError("line " + std::to_string(lineno) +
                                      ": unknown key '" + key + "'");
            }
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const std::exception& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!saw_any || config.cell_count() == 0 || config.criteria.empty())
        throw ValidationError("no cells: config needs at least one set, seq, "
                              "window and criterion");
    if (const char* cap = std::getenv("RIESZ_LAB_CELL_CAP")) {
        try {
            config.cell_cap = std::stoll(cap);
        } catch (const std::exception&) {
            throw ValidationError("RIESZ_LAB_CELL_CAP is not an integer");
        }
    }
    if (config.cell_count() > config.cell_cap)
        throw ValidationError("sweep has " + std::to_string(config.cell_count()) +
                              " cells, above the cap " +
                              std::to_string(config.cell_cap));
    return config;
}

SweepOutcome run_sweep(const SweepConfig& config) {
    struct Cell {
        long long id;
        const SetDescriptor* set;
        const SeqDescriptor* seq;
        Window window;
    };
    std::vector<Cell> cells;
    long long id = 0;
    for (const auto& sd : config.sets)
        for (const auto& qd : config.seqs)
            for (const auto& w : config.windows)
                cells.push_back({id++, &sd, &qd, w});

    SweepOutcome outcome;
    outcome.rows.resize(cells.size() * config.criteria.size());
    std::atomic<bool> any_error{false};
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            size_t ci = next.fetch_add(1);
            if (ci >= cells.size()) return;
            const Cell& cell = cells[ci];
            for (size_t k = 0; k < config.criteria.size(); ++k) {
                ReportRow& row =
                    outcome.rows[ci * config.criteria.size() + k];
                row.cell_id = cell.id;
                row.set_desc = to_string(*cell.set);
                row.seq_desc = to_string(*cell.seq);
                row.window_lo = cell.window.lo;
                row.window_hi = cell.window.hi;
                row.criterion = criterion_name(config.criteria[k]);
                auto t0 = std::chrono::steady_clock::now();
                try {
                    run_criterion(config, *cell.set, *cell.seq, cell.window,
                                  config.criteria[k], row);
                } catch (const Error& e) {
                    row.verdict = "error";
                    row.notes = e.what();
                    any_error.store(true);
                } catch (const std::exception& e) {
                    row.verdict = "error";
                    row.notes = e.what();
                    any_error.store(true);
                }
                if (config.timing) {
                    auto dt = std::chrono::steady_clock::now() - t0;
                    row.runtime_ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(dt)
                            .count();
                }
            }
        }
    };

    int workers = std::max(1, config.parallelism);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    outcome.any_error = any_error.load();
    return outcome;
}

void write_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
    os << "riesz-lab-v1,set,seq,window_lo,window_hi,criterion,verdict,"
          "value1,value2,value3,value4,notes,runtime_ms\n";
    for (const ReportRow& r : rows) {
        os << r.cell_id << ',' << csv_escape(r.set_desc) << ','
           << csv_escape(r.seq_desc) << ',' << r.window_lo << ',' << r.window_hi
           << ',' << r.criterion << ',' << r.verdict << ','
           << value_field(r.value1) << ',' << value_field(r.value2) << ','
           << value_field(r.value3) << ',' << value_field(r.value4) << ','
           << csv_escape(r.notes) << ',' << r.runtime_ms << '\n';
    }
}

void write_json(std::ostream& os, const std::vector<ReportRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReportRow& r : rows) {
        nlohmann::json row;
        row["cell_id"] = r.cell_id;
        row["set"] = r.set_desc;
        row["seq"] = r.seq_desc;
        row["window_lo"] = r.window_lo;
        row["window_hi"] = r.window_hi;
        row["criterion"] = r.criterion;
        row["verdict"] = r.verdict;
        auto put = [&row](const char* key, double v) {
            if (std::isnan(v))
                row[key] = nullptr;
            else
                row[key] = v;
        };
        put("value1", r.value1);
        put("value2", r.value2);
        put("value3", r.value3);
        put("value4", r.value4);
        row["notes"] = r.notes;
        row["runtime_ms"] = r.runtime_ms;
        arr.push_back(std::move(row));
    }
    os << arr.dump(2) << "\n";
}

void write_report(const SweepConfig& config, const std::vector<ReportRow>& rows) {
    auto emit = [&](std::ostream& os) {
        if (config.json)
            write_json(os, rows);
        else
            write_csv(os, rows);
    };
    if (config.out_path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file " + config.out_path);
    emit(out);
    out.flush();
    if (!out) throw IoError("failed writing output file " + config.out_path);
}

} // namespace rieszlab
