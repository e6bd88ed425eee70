#include "errfloat/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace errfloat;
using errfloat::exp::RunManifest;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    std::string config_file;
    int t_bits = 31;
    int te_bits = 21;
    std::string rthd = "1e-3";
    std::string eez = "1e-6";
    std::string qeps = "3e-10";
    std::string kmin = "0", kmax = "2", cmin = "0", cmax = "2";
    std::uint64_t seed = 42;
    int per_depth = 100;
    std::vector<int> depths = {1, 2, 3};
    std::string mode = "k";
    std::string out_dir = "out";
    int threads = 0;
};

// Constants arrive as decimal text and are parsed once, here.
EEConfig build_config(const CommonOpts& o) {
    EEConfig cfg;
    if (!o.config_file.empty()) cfg = load_config_file(o.config_file);
    cfg.t_bits = o.t_bits;
    cfg.te_bits = o.te_bits;
    cfg.rthd = std::stod(o.rthd);
    cfg.eez = std::stod(o.eez);
    cfg.qeps = std::stod(o.qeps);
    cfg.k_min = std::stod(o.kmin);
    cfg.k_max = std::stod(o.kmax);
    cfg.c_min = std::stod(o.cmin);
    cfg.c_max = std::stod(o.cmax);
    cfg.validate();
    return cfg;
}

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--config", o.config_file, "key=value config file");
    cmd->add_option("--t-bits", o.t_bits, "value significand bits T");
    cmd->add_option("--te-bits", o.te_bits, "error significand bits T_e");
    cmd->add_option("--eez", o.eez, "zero-neighborhood scale EEZ");
    cmd->add_option("--qeps", o.qeps, "c-ratio perturbation QEPS");
    cmd->add_option("--kmin", o.kmin);
    cmd->add_option("--kmax", o.kmax);
    cmd->add_option("--cmin", o.cmin);
    cmd->add_option("--cmax", o.cmax);
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--per-depth", o.per_depth, "problems per depth and location");
    cmd->add_option("--depths", o.depths, "iteration depths")->delimiter(',');
    cmd->add_option("--mode", o.mode, "interval mode for predicates: k|c")
        ->check(CLI::IsMember({"k", "c"}));
    cmd->add_option("-o,--out", o.out_dir, "output directory");
    cmd->add_option("--threads", o.threads, "worker threads (0 = auto/ERRFLOAT_THREADS)");
}

std::string join_args(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 0; i < argc; ++i) os << (i ? " " : "") << argv[i];
    return os.str();
}

IntervalMode parse_mode(const std::string& m) {
    return m == "c" ? IntervalMode::c : IntervalMode::k;
}

RunManifest make_manifest(const EEConfig& cfg, const CommonOpts& o, const std::string& command) {
    RunManifest m;
    m.cfg = cfg;
    m.seed = o.seed;
    m.per_depth = o.per_depth;
    m.depths = o.depths;
    m.command = command;
    m.mode = o.mode;
    m.tool_version = kVersion;
    return m;
}

int cmd_run(const CommonOpts& o, const std::string& command) {
    EEConfig cfg = build_config(o);
    fs::create_directories(o.out_dir);

    auto specs = exp::gen_test_set(o.seed, o.per_depth, o.depths);
    auto results = exp::run_experiment(specs, cfg, o.threads, nullptr, parse_mode(o.mode));
    auto summary = exp::summarize(results, exp::default_thresholds(), cfg);

    std::string csv = (fs::path(o.out_dir) / "samples.csv").string();
    std::string sum = (fs::path(o.out_dir) / "summary.json").string();
    std::string man = (fs::path(o.out_dir) / "manifest.json").string();
    exp::write_samples_csv(csv, results);
    exp::write_json(sum, exp::summary_to_json(summary));
    RunManifest manifest = make_manifest(cfg, o, command);
    manifest.outputs = {csv, sum};
    exp::write_json(man, exp::manifest_to_json(manifest));

    std::cout << "problems=" << summary.total_problems
              << " failed=" << summary.failed_problems
              << " samples=" << summary.total_samples << "\n";
    for (const auto& b : summary.buckets) {
        if (!b.constrained || b.threshold != cfg.rthd) continue;
        std::cout << "constrained@rthd=" << b.threshold << ": n=" << b.n_samples
                  << " alpha=" << b.alpha.estimate << " beta=" << b.beta.estimate
                  << " dk=" << b.delta_k << " dc=" << b.delta_c << "\n";
    }
    return 0;
}

int cmd_sweep(const CommonOpts& o, const std::vector<int>& te_list,
              const std::vector<double>& rthd_list, const std::string& command) {
    EEConfig base = build_config(o);
    for (int te : te_list) {
        if (te > base.t_bits || te < 2)
            throw CLI::ValidationError("--te entries must satisfy 2 <= te <= t_bits");
    }
    fs::create_directories(o.out_dir);

    auto specs = exp::gen_test_set(o.seed, o.per_depth, o.depths);
    auto cells = exp::run_sweep(te_list, rthd_list, specs, base, o.threads);

    std::vector<std::string> outputs;
    std::string grid_path = (fs::path(o.out_dir) / "grid.csv").string();
    std::ofstream grid(grid_path, std::ios::binary);
    grid << "te_bits,rthd,n_constrained_samples,alpha,beta,delta_k,delta_c\n";
    for (const auto& cell : cells) {
        std::ostringstream name;
        name << "summary_te" << cell.te_bits << "_rthd" << exp::format_double(cell.rthd)
             << ".json";
        std::string path = (fs::path(o.out_dir) / name.str()).string();
        nlohmann::json j = exp::summary_to_json(cell.summary);
        j["cell"] = {{"te_bits", cell.te_bits}, {"rthd", cell.rthd}};
        exp::write_json(path, j);
        outputs.push_back(path);
        for (const auto& b : cell.summary.buckets) {
            if (!b.constrained || b.threshold != cell.rthd) continue;
            grid << cell.te_bits << ',' << exp::format_double(cell.rthd) << ',' << b.n_samples
                 << ',' << exp::format_double(b.alpha.estimate) << ','
                 << exp::format_double(b.beta.estimate) << ',' << exp::format_double(b.delta_k)
                 << ',' << exp::format_double(b.delta_c) << '\n';
            break;
        }
    }
    grid.close();
    outputs.push_back(grid_path);

    RunManifest manifest = make_manifest(base, o, command);
    manifest.outputs = outputs;
    exp::write_json((fs::path(o.out_dir) / "manifest.json").string(),
                    exp::manifest_to_json(manifest));
    std::cout << "sweep: " << cells.size() << " cells written to " << o.out_dir << "\n";
    return 0;
}

void print_interval(const char* name, const Interval& iv) {
    std::cout << "  " << name << " in [" << iv.lo.to_decimal_string() << ", "
              << iv.hi.to_decimal_string() << "]\n";
}

int cmd_demo(const CommonOpts& o) {
    EEConfig cfg = build_config(o);
    IntervalMode mode = parse_mode(o.mode);
    FpeContext ctx(cfg);

    std::cout << "== equality: ellipse semiaxes computed along different paths ==\n";
    // a = (1/3)*3 and b = (1/11)*11: two inexact routes to 1.
    Fpe one = ctx.literal("1");
    Fpe three = ctx.literal("3");
    Fpe eleven = ctx.literal("11");
    Fpe a = ctx.mul(ctx.div(one, three), three);
    Fpe b = ctx.mul(ctx.div(one, eleven), eleven);
    print_interval("a", confidence_interval(a, cfg, mode));
    print_interval("b", confidence_interval(b, cfg, mode));
    std::cout << "  a.equal(b) -> " << (fpe_equal(a, b, cfg, mode) ? "equal" : "not equal")
              << "  (expected: equal)\n";

    Fpe distinct = ctx.literal("1.001");
    std::cout << "  a.equal(1.001) -> "
              << (fpe_equal(a, distinct, cfg, mode) ? "equal" : "not equal")
              << "  (expected: not equal)\n";

    std::cout << "== parallelism: determinant confidence interval ==\n";
    geom::FpeBackend g(ctx, mode);
    auto pt = [&](const char* x, const char* y) {
        return geom::FpePoint{ctx.literal(x), ctx.literal(y)};
    };
    // Exactly parallel horizontals.
    auto l1 = geom::line_through(g, pt("0", "0"), pt("1", "0"));
    auto l2 = geom::line_through(g, pt("0", "1"), pt("1", "1"));
    auto d1 = ctx.sub(ctx.mul(l1.a, l2.b), ctx.mul(l2.a, l1.b));
    print_interval("D", confidence_interval(d1, cfg, mode));
    std::cout << "  -> " << (contains_zero(d1, cfg, mode) ? "parallel (0 in interval of D)"
                                                          : "not parallel") << "\n";

    // Clearly crossing lines.
    auto l3 = geom::line_through(g, pt("0", "0"), pt("1", "1"));
    auto l4 = geom::line_through(g, pt("1", "0"), pt("0", "1"));
    auto d2 = ctx.sub(ctx.mul(l3.a, l4.b), ctx.mul(l4.a, l3.b));
    print_interval("D", confidence_interval(d2, cfg, mode));
    auto xp = geom::intersect(g, l3, l4);
    if (xp) {
        std::cout << "  -> intersection at (" << softfp::to_report(xp->x.x) << ", "
                  << softfp::to_report(xp->y.x) << ")\n";
    } else {
        std::cout << "  -> parallel\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"floating-point error-estimate simulator and statistics harness"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOpts run_opts;
    auto* run = app.add_subcommand("run", "run the pentagon test set and collect k/c statistics");
    add_common_flags(run, run_opts);
    run->add_option("--rthd", run_opts.rthd, "relative-error threshold RTHD");

    CommonOpts sweep_opts;
    std::vector<int> te_list = {31, 21, 16};
    std::vector<std::string> rthd_list = {"1e-5", "1e-4", "1e-3", "1e-2", "1e-1"};
    auto* sweep = app.add_subcommand("sweep", "grid of runs over T_e and RTHD");
    add_common_flags(sweep, sweep_opts);
    sweep->add_option("--te", te_list, "T_e grid values")->delimiter(',');
    sweep->add_option("--rthd", rthd_list, "RTHD grid values")->delimiter(',');

    CommonOpts demo_opts;
    auto* demo = app.add_subcommand("demo", "equality and parallelism predicates on fixtures");
    add_common_flags(demo, demo_opts);
    demo->add_option("--rthd", demo_opts.rthd, "relative-error threshold RTHD");

    try {
        app.parse(argc, argv);
        std::string command = join_args(argc, argv);
        if (run->parsed()) return cmd_run(run_opts, command);
        if (sweep->parsed()) {
            if (te_list.empty() || rthd_list.empty())
                throw CLI::ValidationError("sweep grid lists must be nonempty");
            std::vector<double> rthds;
            for (const auto& s : rthd_list) rthds.push_back(std::stod(s));
            return cmd_sweep(sweep_opts, te_list, rthds, command);
        }
        if (demo->parsed()) return cmd_demo(demo_opts);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
