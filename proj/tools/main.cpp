#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "smsmx/report.hpp"
#include "smsmx/runspec.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Overrides {
    std::uint64_t seed = 0;
    bool has_seed = false;
    std::string out;
    bool has_out = false;
    std::string snr;
    std::string detector;
};

smsmx::RunSpec load_spec(const std::string& config_path, const Overrides& ov) {
    smsmx::RunSpec spec = smsmx::parse_config(read_file(config_path));
    if (ov.has_seed) spec.seed = ov.seed;
    if (ov.has_out) spec.out_path = ov.out;
    if (!ov.snr.empty()) {
        const smsmx::SnrRange r = smsmx::parse_snr_range(ov.snr);
        spec.snr_start_db = r.start_db;
        spec.snr_step_db = r.step_db;
        spec.snr_stop_db = r.stop_db;
    }
    if (!ov.detector.empty()) spec.detector = smsmx::detector_from_string(ov.detector);
    smsmx::validate(spec);
    return spec;
}

int cmd_run(const std::string& config_path, const Overrides& ov) {
    const smsmx::RunSpec spec = load_spec(config_path, ov);
    const auto points = spec.sim_points();

    std::ofstream file;
    if (!spec.out_path.empty()) {
        file.open(spec.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open output file '" + spec.out_path + "'");
    }
    std::ostream& out = spec.out_path.empty() ? std::cout : file;

    out << smsmx::csv_header();
    out.flush();
    smsmx::run_sweep(points, [&](const smsmx::SimPoint& p, const smsmx::ErrorRecord& rec) {
        out << smsmx::csv_row(p, rec);
        out.flush();
        std::cerr << "snr " << p.snr_db << " dB: " << rec.frames << " frames, " << rec.bit_errors
                  << " bit errors, ber " << rec.ber << " (" << rec.elapsed_seconds << " s)\n";
    });
    if (!out) throw std::runtime_error("write failed");
    return 0;
}

int cmd_table(const std::string& config_path) {
    const smsmx::RunSpec spec = smsmx::parse_config(read_file(config_path));
    const auto c = smsmx::Constellation::build(spec.mod_order);
    smsmx::dump_mapping_table(spec.config(), c, std::cout);
    return 0;
}

int cmd_validate(const std::string& config_path) {
    const smsmx::RunSpec spec = smsmx::parse_config(read_file(config_path));
    const smsmx::SmSmxConfig cfg = spec.config();
    std::cout << "config ok: scheme=" << to_string(cfg.scheme)
              << " detector=" << to_string(spec.detector) << " n=" << cfg.n_tx
              << " k=" << cfg.n_active << " m=" << cfg.mod_order << " nr=" << cfg.n_rx
              << " eta=" << cfg.bits_per_frame() << " groups=" << cfg.group_count()
              << " snr_points=" << spec.snr_points_db().size() << " seed=" << spec.seed << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SM-SMX MIMO link-level Monte Carlo simulator"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides ov;

    auto* run = app.add_subcommand("run", "Run a BER sweep and emit CSV results");
    run->add_option("--config", config_path, "config file (key = value)")->required();
    auto* seed_opt = run->add_option("--seed", ov.seed, "override master seed");
    auto* out_opt = run->add_option("--out", ov.out, "override output path ('' = stdout)");
    run->add_option("--snr", ov.snr, "override SNR grid, start:step:stop in dB");
    run->add_option("--detector", ov.detector, "override detector: ml|two_stage|sm_mrrc");

    auto* table = app.add_subcommand("table", "Print the frame-to-antenna mapping table");
    table->add_option("--config", config_path, "config file")->required();

    auto* validate = app.add_subcommand("validate", "Parse and validate a config, then exit");
    validate->add_option("--config", config_path, "config file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        ov.has_seed = seed_opt->count() > 0;
        ov.has_out = out_opt->count() > 0;
        if (run->parsed()) return cmd_run(config_path, ov);
        if (table->parsed()) return cmd_table(config_path);
        if (validate->parsed()) return cmd_validate(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
