// riesz-lab: numerical experiments on windowed exponential systems over the
// circle: exact arc-set arithmetic, index-set diagnostics, Gram/projection
// spectra, Riesz criteria and the Bohr-set witness construction.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rieszlab/criteria.hpp"
#include "rieszlab/descriptors.hpp"
#include "rieszlab/kernels.hpp"
#include "rieszlab/spectral.hpp"
#include "rieszlab/sweep.hpp"
#include "rieszlab/witness.hpp"

namespace {

using namespace rieszlab;

Window window_from(const std::vector<long long>& pair) {
    if (pair.size() != 2 || pair[0] > pair[1])
        throw BadDescriptor("--window needs LO HI with LO <= HI");
    return Window{pair[0], pair[1]};
}

std::string fmt(double x) { return format_number(x); }

void print_set_describe(const std::string& set_text) {
    SetDescriptor d = parse_set_descriptor(set_text);
    ArcUnion s = d.resolve();
    std::cout << "descriptor: " << to_string(d) << "\n";
    std::cout << "arcs: " << s.arcs().size() << "\n";
    for (const Arc& a : s.arcs())
        std::cout << "  [" << a.start.to_string() << ", " << a.end.to_string()
                  << ")\n";
    Rational mu = s.measure();
    std::cout << "measure: " << mu.to_string() << " = " << fmt(mu.to_double())
              << "\n";
    std::cout << "longest arc: " << s.longest_arc_length().to_string() << "\n";
}

void print_digits(const IndexSet& set) {
    std::string d = set.digits();
    if (set.window.lo < 0 && set.window.hi >= 0) {
        size_t split = static_cast<size_t>(-set.window.lo);
        std::cout << d.substr(0, split) << "." << d.substr(split) << "\n";
    } else {
        std::cout << d << "\n";
    }
}

void print_witness_header() {
    std::cout << "M,arc_start,arc_length,ratio,alpha_tail,beta_head,stage,"
                 "grid_resolution\n";
}

void print_witness_row(const WitnessResult& r) {
    std::cout << r.head_m << "," << r.arc.start.to_string() << ","
              << r.arc_length.to_string() << "," << fmt(r.ratio) << ","
              << fmt(r.alpha_tail) << "," << fmt(r.beta_head) << "," << r.stage
              << "," << r.grid_resolution << "\n";
}

int dispatch(CLI::App& app) {
    // ---- set ----
    auto* set_cmd = app.get_subcommand("set");
    if (set_cmd->parsed()) {
        std::string text = set_cmd->get_option("--set")->as<std::string>();
        auto* describe = set_cmd->get_subcommand("describe");
        auto* measure = set_cmd->get_subcommand("measure");
        auto* fourier = set_cmd->get_subcommand("fourier");
        if (describe->parsed()) {
            print_set_describe(text);
        } else if (measure->parsed()) {
            Rational mu = parse_set_descriptor(text).resolve().measure();
            std::cout << mu.to_string() << " = " << fmt(mu.to_double()) << "\n";
        } else if (fourier->parsed()) {
            ArcUnion s = parse_set_descriptor(text).resolve();
            long long k = fourier->get_option("--k")->as<long long>();
            long long kmax = fourier->get_option("--kmax")->as<long long>();
            if (kmax > 0) {
                for (long long j = -kmax; j <= kmax; ++j) {
                    auto z = fourier_coefficient(s, j);
                    std::cout << j << " " << fmt(z.real()) << " " << fmt(z.imag())
                              << "\n";
                }
            } else {
                auto z = fourier_coefficient(s, k);
                std::cout << fmt(z.real()) << " " << fmt(z.imag()) << "\n";
            }
        }
        return 0;
    }

    // ---- seq ----
    auto* seq_cmd = app.get_subcommand("seq");
    if (seq_cmd->parsed()) {
        std::string text = seq_cmd->get_option("--seq")->as<std::string>();
        Window w = window_from(
            seq_cmd->get_option("--window")->as<std::vector<long long>>());
        SeqDescriptor qd = parse_seq_descriptor(text);
        auto* generate_cmd = seq_cmd->get_subcommand("generate");
        auto* densities_cmd = seq_cmd->get_subcommand("densities");
        auto* syndetic_cmd = seq_cmd->get_subcommand("syndetic");
        auto* ap_cmd = seq_cmd->get_subcommand("ap-check");
        auto* code_cmd = seq_cmd->get_subcommand("blockcode");
        if (generate_cmd->parsed()) {
            IndexSet set = generate(qd, w);
            print_digits(set);
            if (generate_cmd->get_option("--members")->as<bool>()) {
                for (size_t i = 0; i < set.members.size(); ++i)
                    std::cout << (i ? "," : "") << set.members[i];
                std::cout << "\n";
            }
        } else if (densities_cmd->parsed()) {
            DensityReport rep = densities(generate(qd, w));
            std::cout << "beurling_lo = " << fmt(rep.beurling_lo)
                      << "\nbeurling_hi = " << fmt(rep.beurling_hi)
                      << "\nasymptotic_lo = " << fmt(rep.asymptotic_lo)
                      << "\nasymptotic_hi = " << fmt(rep.asymptotic_hi)
                      << "\nseparation = " << rep.separation
                      << "\nestimator_k = " << rep.window_k << "\n";
        } else if (syndetic_cmd->parsed()) {
            SyndeticReport rep = syndetic_report(generate(qd, w));
            long long budget = syndetic_cmd->get_option("--budget")->as<long long>();
            if (rep.max_gap)
                std::cout << "max_gap = " << *rep.max_gap << "\n";
            else
                std::cout << "max_gap = unbounded-in-window\n";
            std::cout << "thick_run = " << rep.thick_run << "\n";
            if (rep.piecewise)
                std::cout << "piecewise: gap_bound = " << rep.piecewise->gap_bound
                          << " run = [" << rep.piecewise->run_lo << ", "
                          << rep.piecewise->run_hi << "]\n";
            else
                std::cout << "piecewise: none\n";
            if (budget > 0)
                std::cout << (rep.max_gap && *rep.max_gap <= budget
                                  ? "syndetic at gap budget "
                                  : "not syndetic at gap budget ")
                          << budget << "\n";
        } else if (ap_cmd->parsed()) {
            int m = ap_cmd->get_option("--m")->as<int>();
            ApReport rep = almost_periodic_check(generate(qd, w), m);
            if (rep.gap)
                std::cout << "gap = " << *rep.gap << "\n";
            else
                std::cout << "gap = unbounded-in-window\n";
            std::cout << "returns = " << rep.return_set.members.size()
                      << " in window [" << rep.return_set.window.lo << ", "
                      << rep.return_set.window.hi << "]\n";
        } else if (code_cmd->parsed()) {
            BlockCode code =
                parse_block_code(code_cmd->get_option("--code")->as<std::string>());
            IndexSet out = sliding_block_code(generate(qd, w), code);
            std::cout << "window [" << out.window.lo << ", " << out.window.hi
                      << "]\n";
            print_digits(out);
        }
        return 0;
    }

    // ---- gram ----
    auto* gram_cmd = app.get_subcommand("gram");
    if (gram_cmd->parsed()) {
        std::string set_text = gram_cmd->get_option("--set")->as<std::string>();
        std::string seq_text = gram_cmd->get_option("--seq")->as<std::string>();
        SetDescriptor sd = parse_set_descriptor(set_text);
        SeqDescriptor qd = parse_seq_descriptor(seq_text);
        auto wopt = gram_cmd->get_option("--window")->as<std::vector<long long>>();
        auto resolve_window = [&]() -> Window {
            if (wopt.size() == 2) return window_from(wopt);
            if (qd.kind == SeqDescriptor::Kind::Explicit && !qd.members.empty()) {
                auto [lo, hi] =
                    std::minmax_element(qd.members.begin(), qd.members.end());
                return Window{*lo, *hi};
            }
            throw BadDescriptor("--window LO HI is required for this descriptor");
        };
        auto* assemble = gram_cmd->get_subcommand("assemble");
        auto* spectrum = gram_cmd->get_subcommand("spectrum");
        auto* trend = gram_cmd->get_subcommand("trend");
        if (assemble->parsed()) {
            HermitianMatrix h = gram_matrix(sd.resolve(), generate(qd, resolve_window()));
            std::string out = assemble->get_option("--out")->as<std::string>();
            if (out.empty()) {
                write_matrix(std::cout, h);
            } else {
                std::ofstream os(out, std::ios::binary);
                if (!os) throw IoError("cannot open " + out);
                write_matrix(os, h);
                if (!os.flush()) throw IoError("failed writing " + out);
            }
        } else if (spectrum->parsed()) {
            auto ev = hermitian_eigenvalues(
                gram_matrix(sd.resolve(), generate(qd, resolve_window())));
            for (size_t i = 0; i < ev.size(); ++i)
                std::cout << (i ? ", " : "") << fmt(ev[i]);
            std::cout << "\n";
        } else if (trend->parsed()) {
            std::vector<Window> windows;
            for (long long n :
                 trend->get_option("--sizes")->as<std::vector<long long>>())
                windows.push_back(Window{-n, n});
            TrendReport rep = riesz_trend(sd.resolve(), qd, windows,
                                          kDecayThreshold, to_string(sd));
            for (const SpectrumReport& r : rep.reports)
                std::cout << "window [" << r.window.lo << ", " << r.window.hi
                          << "] n = " << r.eigenvalues.size()
                          << " lambda_min = " << fmt(r.lambda_min)
                          << " lambda_max = " << fmt(r.lambda_max) << "\n";
            std::cout << rep.classification
                      << " (last/first = " << fmt(rep.decay_ratio) << ")\n";
        }
        return 0;
    }

    // ---- check ----
    auto* check_cmd = app.get_subcommand("check");
    if (check_cmd->parsed()) {
        auto* landau_cmd = check_cmd->get_subcommand("landau");
        auto* mv_cmd = check_cmd->get_subcommand("mv");
        auto* basis_cmd = check_cmd->get_subcommand("basis");
        auto* decompose_cmd = check_cmd->get_subcommand("decompose");
        auto* greedy_cmd = check_cmd->get_subcommand("greedy");
        if (landau_cmd->parsed()) {
            ArcUnion s = parse_set_descriptor(
                             landau_cmd->get_option("--set")->as<std::string>())
                             .resolve();
            IndexSet lam = generate(
                parse_seq_descriptor(
                    landau_cmd->get_option("--seq")->as<std::string>()),
                window_from(landau_cmd->get_option("--window")
                                ->as<std::vector<long long>>()));
            CriterionReport rep = landau_necessary(s, lam);
            std::cout << rep.verdict_text() << ", margin = " << fmt(rep.margin)
                      << "\n" << rep.notes << "\n";
        } else if (mv_cmd->parsed()) {
            ArcUnion s =
                parse_set_descriptor(mv_cmd->get_option("--set")->as<std::string>())
                    .resolve();
            IndexSet lam = generate(
                parse_seq_descriptor(mv_cmd->get_option("--seq")->as<std::string>()),
                window_from(
                    mv_cmd->get_option("--window")->as<std::vector<long long>>()));
            CriterionReport rep = montgomery_vaughan_sufficient(s, lam);
            if (rep.verdict == CriterionReport::Verdict::Pass)
                std::cout << "pass, epsilon1 = " << fmt(rep.margin) << "\n";
            else
                std::cout << rep.verdict_text() << ", " << rep.notes << "\n";
        } else if (basis_cmd->parsed()) {
            ArcUnion s = parse_set_descriptor(
                             basis_cmd->get_option("--set")->as<std::string>())
                             .resolve();
            CriterionReport rep = arithmetic_riesz_basis(
                s, basis_cmd->get_option("--n")->as<long long>(),
                basis_cmd->get_option("--m")->as<long long>());
            std::cout << rep.verdict_text() << ", " << rep.notes << "\n";
        } else if (decompose_cmd->parsed()) {
            IndexSet lam = generate(
                parse_seq_descriptor(
                    decompose_cmd->get_option("--seq")->as<std::string>()),
                window_from(decompose_cmd->get_option("--window")
                                ->as<std::vector<long long>>()));
            long long budget = decompose_cmd->get_option("--budget")->as<long long>();
            auto translates = syndetic_decomposition(lam, budget);
            std::cout << translates.size() << " translates\n";
            std::string set_text =
                decompose_cmd->get_option("--set")->as<std::string>();
            if (!set_text.empty()) {
                ArcUnion s = parse_set_descriptor(set_text).resolve();
                size_t dim = translates.front().members.size();
                for (const IndexSet& t : translates)
                    dim = std::min(dim, t.members.size());
                for (const IndexSet& t : translates) {
                    IndexSet head = t;
                    head.members.resize(dim);
                    auto ev = hermitian_eigenvalues(gram_matrix(s, head));
                    std::cout << "lambda_min = " << fmt(ev.front())
                              << " lambda_max = " << fmt(ev.back()) << "\n";
                }
            }
        } else if (greedy_cmd->parsed()) {
            ArcUnion s = parse_set_descriptor(
                             greedy_cmd->get_option("--set")->as<std::string>())
                             .resolve();
            GreedyResult res = greedy_riesz_subset(
                s,
                window_from(greedy_cmd->get_option("--window")
                                ->as<std::vector<long long>>()),
                greedy_cmd->get_option("--threshold")->as<double>());
            for (size_t i = 0; i < res.selected.members.size(); ++i)
                std::cout << (i ? "," : "") << res.selected.members[i];
            std::cout << "\ndensity = " << fmt(res.density)
                      << "\nverified lambda_min = " << fmt(res.verified_lambda_min)
                      << "\n";
        }
        return 0;
    }

    // ---- witness ----
    auto* wit_cmd = app.get_subcommand("witness");
    if (wit_cmd->parsed()) {
        SetDescriptor sd =
            parse_set_descriptor(wit_cmd->get_option("--set")->as<std::string>());
        ArcUnion s = sd.resolve();
        BohrWitnessConfig cfg;
        cfg.alpha = wit_cmd->get_option("--alpha")->as<double>();
        cfg.delta = wit_cmd->get_option("--delta")->as<double>();
        cfg.grid_resolution = wit_cmd->get_option("--grid")->as<long long>();
        cfg.arc_length =
            Rational::parse(wit_cmd->get_option("--arc-length")->as<std::string>());
        auto* single = wit_cmd->get_subcommand("single");
        auto* sweep_sub = wit_cmd->get_subcommand("sweep");
        if (single->parsed()) {
            cfg.head_m = single->get_option("--M")->as<int>();
            WitnessResult res = witness_ratio(s, cfg);
            res.stage = sd.cantor_stage_index();
            print_witness_header();
            print_witness_row(res);
        } else if (sweep_sub->parsed()) {
            auto ms = sweep_sub->get_option("--Ms")->as<std::vector<int>>();
            double target = sweep_sub->get_option("--target")->as<double>();
            WitnessSweep sw = witness_sweep(s, cfg, ms, target);
            print_witness_header();
            for (const auto& row : sw.rows) {
                if (row.result) {
                    WitnessResult res = *row.result;
                    res.stage = sd.cantor_stage_index();
                    print_witness_row(res);
                } else {
                    std::cout << row.head_m << ",error: " << row.error << "\n";
                }
            }
            std::cout << "min_ratio = " << fmt(sw.min_ratio) << " target = "
                      << fmt(sw.target) << " below_target = "
                      << (sw.below_target ? "true" : "false") << "\n";
        }
        return 0;
    }

    // ---- sweep ----
    auto* sweep_cmd = app.get_subcommand("sweep");
    if (sweep_cmd->parsed()) {
        std::string path = sweep_cmd->get_option("--config")->as<std::string>();
        std::ifstream in(path);
        if (!in) throw IoError("cannot read config file " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        SweepConfig config = parse_config(buf.str());
        if (sweep_cmd->get_option("--out")->count())
            config.out_path = sweep_cmd->get_option("--out")->as<std::string>();
        if (sweep_cmd->get_option("--format")->count())
            config.json = sweep_cmd->get_option("--format")->as<std::string>() ==
                          "json";
        if (sweep_cmd->get_option("--parallelism")->count())
            config.parallelism =
                sweep_cmd->get_option("--parallelism")->as<int>();
        set_parallelism(config.parallelism);
        SweepOutcome outcome = run_sweep(config);
        write_report(config, outcome.rows);
        return outcome.any_error ? 1 : 0;
    }

    std::cerr << app.help() << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"riesz-lab: windowed exponential systems on the circle"};
    app.require_subcommand(0, 1);

    auto add_window = [](CLI::App* cmd) {
        cmd->add_option("--window", "window LO HI")->expected(2);
    };

    auto* set_cmd = app.add_subcommand("set", "arc-union set operations");
    set_cmd->add_option("--set", "set descriptor")->required();
    set_cmd->require_subcommand(1);
    set_cmd->add_subcommand("describe", "canonical arcs and measure");
    set_cmd->add_subcommand("measure", "exact measure");
    auto* fourier = set_cmd->add_subcommand("fourier", "Fourier coefficients");
    fourier->add_option("--k", "single frequency")->default_val(0);
    fourier->add_option("--kmax", "dump k = -kmax..kmax")->default_val(0);

    auto* seq_cmd = app.add_subcommand("seq", "integer sequence operations");
    seq_cmd->add_option("--seq", "sequence descriptor")->required();
    add_window(seq_cmd);
    seq_cmd->require_subcommand(1);
    auto* gen = seq_cmd->add_subcommand("generate", "characteristic digits");
    gen->add_flag("--members", "also print the member list");
    seq_cmd->add_subcommand("densities", "windowed density estimators");
    auto* synd = seq_cmd->add_subcommand("syndetic", "gap/run structure");
    synd->add_option("--budget", "gap budget for the verdict")->default_val(0);
    auto* ap = seq_cmd->add_subcommand("ap-check", "almost periodicity");
    ap->add_option("--m", "pattern radius")->required();
    auto* bc = seq_cmd->add_subcommand("blockcode", "apply sliding block code");
    bc->add_option("--code", "radius and table bits, e.g. \"2 01101001\"")
        ->required();

    auto* gram_cmd = app.add_subcommand("gram", "Gram sections and spectra");
    gram_cmd->add_option("--set", "set descriptor")->required();
    gram_cmd->add_option("--seq", "sequence descriptor")->required();
    add_window(gram_cmd);
    gram_cmd->require_subcommand(1);
    auto* assemble = gram_cmd->add_subcommand("assemble", "dump the matrix");
    assemble->add_option("--out", "output path (default stdout)")->default_val("");
    gram_cmd->add_subcommand("spectrum", "eigenvalues, ascending");
    auto* trend = gram_cmd->add_subcommand("trend", "lambda_min over windows");
    trend->add_option("--sizes", "half-widths, e.g. 8,16,32")
        ->required()
        ->delimiter(',')
        ->expected(1, 1024);

    auto* check_cmd = app.add_subcommand("check", "Riesz criteria");
    check_cmd->require_subcommand(1);
    for (const char* name : {"landau", "mv"}) {
        auto* c = check_cmd->add_subcommand(
            name, std::string(name) + " criterion");
        c->add_option("--set", "set descriptor")->required();
        c->add_option("--seq", "sequence descriptor")->required();
        c->add_option("--window", "window LO HI")->expected(2)->required();
    }
    auto* basis = check_cmd->add_subcommand("basis", "arithmetic Riesz basis");
    basis->add_option("--set", "set descriptor")->required();
    basis->add_option("--n", "progression step")->required();
    basis->add_option("--m", "progression offset")->default_val(0);
    auto* dec = check_cmd->add_subcommand("decompose", "syndetic decomposition");
    dec->add_option("--seq", "sequence descriptor")->required();
    dec->add_option("--window", "window LO HI")->expected(2)->required();
    dec->add_option("--budget", "gap budget (0 = window/16)")->default_val(0);
    dec->add_option("--set", "set descriptor for the shared-spectrum check")
        ->default_val("");
    auto* greedy = check_cmd->add_subcommand("greedy", "greedy Riesz subset");
    greedy->add_option("--set", "set descriptor")->required();
    greedy->add_option("--window", "window LO HI")->expected(2)->required();
    greedy->add_option("--threshold", "lambda_min threshold")->required();

    auto* wit_cmd = app.add_subcommand("witness", "Bohr-set witness ratios");
    wit_cmd->add_option("--set", "set descriptor (typically cantor)")->required();
    wit_cmd->add_option("--alpha", "rotation number")->required();
    wit_cmd->add_option("--delta", "Bohr radius, in (0, 1/4]")->required();
    wit_cmd->add_option("--grid", "quadrature grid (power of two >= 4096)")
        ->default_val(16384);
    wit_cmd->add_option("--arc-length", "witness arc length (rational)")
        ->default_val("1/256");
    wit_cmd->require_subcommand(1);
    auto* single = wit_cmd->add_subcommand("single", "one ratio");
    single->add_option("--M", "Dirac head size")->required();
    auto* wsweep = wit_cmd->add_subcommand("sweep", "ratio trend over M");
    wsweep->add_option("--Ms", "head sizes, e.g. 5,10,20,40")
        ->required()
        ->delimiter(',')
        ->expected(1, 1024);
    wsweep->add_option("--target", "collapse target")->default_val(0.2);

    auto* sweep_cmd = app.add_subcommand("sweep", "config-driven batch");
    sweep_cmd->add_option("--config", "config file path")->required();
    sweep_cmd->add_option("--out", "output path override");
    sweep_cmd->add_option("--format", "csv|json override");
    sweep_cmd->add_option("--parallelism", "worker count override");

    // parent-level options (--set, --seq, --window, ...) may appear after the
    // leaf subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
        cmd->fallthrough(true);
        for (CLI::App* sub : cmd->get_subcommands([](CLI::App*) { return true; }))
            enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return dispatch(app);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const BadDescriptor& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
