#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "smsmx/montecarlo.hpp"

namespace smsmx {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fully resolved sweep description, parsed from the line-based `key = value`
// config format (keys: n, k, m, nr, scheme, detector, snr, seed, max_frames,
// target_bit_errors, out; `#` starts a comment; snr uses start:step:stop).
struct RunSpec {
    int n_tx = 4;
    int n_active = 2;
    int mod_order = 4;
    int n_rx = 4;
    Scheme scheme = Scheme::SmSmx;
    DetectorKind detector = DetectorKind::Ml;
    double snr_start_db = 0.0;
    double snr_step_db = 2.0;
    double snr_stop_db = 20.0;
    std::uint64_t seed = 1;
    std::uint64_t max_frames = 1'000'000;
    std::uint64_t target_bit_errors = 200;
    std::string out_path;  // empty: write CSV to stdout

    bool operator==(const RunSpec&) const = default;

    SmSmxConfig config() const;
    std::vector<double> snr_points_db() const;
    std::vector<SimPoint> sim_points() const;
};

struct SnrRange {
    double start_db;
    double step_db;
    double stop_db;
};

// "a:b:c" -> {a, b, c}; throws ParseError on malformed input.
SnrRange parse_snr_range(const std::string& text);

// Parse and validate a config document. Required keys: n, k, m; nr defaults
// to n, everything else to the RunSpec defaults. Unknown or duplicate keys
// are errors; messages carry the offending line number.
RunSpec parse_config(const std::string& text);

// Inverse of parse_config up to formatting: parse_config(render_config(s)) == s.
std::string render_config(const RunSpec& spec);

// Semantic checks shared by parse_config and CLI overrides (snr grid shape,
// detector/scheme compatibility, config invariants).
void validate(const RunSpec& spec);

}  // namespace smsmx
