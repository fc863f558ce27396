#include "smsmx/runspec.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace smsmx {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_u64(const std::string& tok, int line, const std::string& key) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        fail(line, "value for '" + key + "' must be a non-negative integer, got '" + tok + "'");
    }
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        fail(line, "value for '" + key + "' is out of range: '" + tok + "'");
    }
    return v;
}

int parse_positive_int(const std::string& tok, int line, const std::string& key) {
    const std::uint64_t v = parse_u64(tok, line, key);
    if (v < 1 || v > 1'000'000) fail(line, "value for '" + key + "' must be in [1, 1000000]");
    return static_cast<int>(v);
}

double parse_double(const std::string& tok, const std::string& what) {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw ParseError(what + ": not a number: '" + tok + "'");
    }
    return v;
}

// shortest decimal form that round-trips the double exactly
std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace

SnrRange parse_snr_range(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos) {
        throw ParseError("snr grid must have the form start:step:stop, got '" + text + "'");
    }
    SnrRange r;
    r.start_db = parse_double(trim(text.substr(0, c1)), "snr start");
    r.step_db = parse_double(trim(text.substr(c1 + 1, c2 - c1 - 1)), "snr step");
    r.stop_db = parse_double(trim(text.substr(c2 + 1)), "snr stop");
    return r;
}

SmSmxConfig RunSpec::config() const { return SmSmxConfig(n_tx, n_active, mod_order, n_rx, scheme); }

std::vector<double> RunSpec::snr_points_db() const {
    // tolerate last-point rounding: 0:0.1:0.3 still yields 4 points
    const int count =
        1 + static_cast<int>(std::floor((snr_stop_db - snr_start_db) / snr_step_db + 1e-9));
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) points.push_back(snr_start_db + i * snr_step_db);
    return points;
}

std::vector<SimPoint> RunSpec::sim_points() const {
    const SmSmxConfig cfg = config();
    std::vector<SimPoint> out;
    for (double snr : snr_points_db()) {
        out.push_back(SimPoint{.cfg = cfg,
                               .detector = detector,
                               .snr_db = snr,
                               .master_seed = seed,
                               .max_frames = max_frames,
                               .target_bit_errors = target_bit_errors,
                               .channel_override = {}});
    }
    return out;
}

void validate(const RunSpec& spec) {
    spec.config();  // throws on any configuration invariant violation
    if (!(spec.snr_step_db > 0)) throw std::invalid_argument("snr step must be > 0");
    if (!(spec.snr_start_db <= spec.snr_stop_db)) {
        throw std::invalid_argument("snr start must be <= stop");
    }
    if (!std::isfinite(spec.snr_start_db) || !std::isfinite(spec.snr_step_db) ||
        !std::isfinite(spec.snr_stop_db)) {
        throw std::invalid_argument("snr grid values must be finite");
    }
    if (spec.max_frames < 1) throw std::invalid_argument("max_frames must be >= 1");
    if (spec.detector == DetectorKind::SmMrrc && spec.scheme != Scheme::PureSm) {
        throw std::invalid_argument("sm_mrrc detector requires the pure_sm scheme");
    }
    if (spec.detector == DetectorKind::TwoStage && spec.n_rx < spec.n_active) {
        throw std::invalid_argument("two_stage detector requires Nr >= K");
    }
}

RunSpec parse_config(const std::string& text) {
    RunSpec spec;
    std::map<std::string, int> seen;  // key -> first line
    bool have_n = false, have_nr = false;

    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (const auto hash = s.find('#'); hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;

        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value', got '" + trim(raw) + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "missing key before '='");
        if (value.empty()) fail(line, "missing value for '" + key + "'");
        if (const auto [it, inserted] = seen.emplace(key, line); !inserted) {
            fail(line, "duplicate key '" + key + "' (first on line " + std::to_string(it->second) + ")");
        }

        try {
            if (key == "n") {
                spec.n_tx = parse_positive_int(value, line, key);
                have_n = true;
            } else if (key == "k") {
                spec.n_active = parse_positive_int(value, line, key);
            } else if (key == "m") {
                spec.mod_order = parse_positive_int(value, line, key);
            } else if (key == "nr") {
                spec.n_rx = parse_positive_int(value, line, key);
                have_nr = true;
            } else if (key == "scheme") {
                spec.scheme = scheme_from_string(value);
            } else if (key == "detector") {
                spec.detector = detector_from_string(value);
            } else if (key == "snr") {
                const SnrRange r = parse_snr_range(value);
                spec.snr_start_db = r.start_db;
                spec.snr_step_db = r.step_db;
                spec.snr_stop_db = r.stop_db;
            } else if (key == "seed") {
                spec.seed = parse_u64(value, line, key);
            } else if (key == "max_frames") {
                spec.max_frames = parse_u64(value, line, key);
            } else if (key == "target_bit_errors") {
                spec.target_bit_errors = parse_u64(value, line, key);
            } else if (key == "out") {
                spec.out_path = value;
            } else {
                fail(line, "unknown key '" + key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            fail(line, e.what());
        }
    }

    if (have_n && !have_nr) spec.n_rx = spec.n_tx;  // nr defaults to n

    validate(spec);
    return spec;
}

std::string render_config(const RunSpec& spec) {
    std::ostringstream out;
    out << "n = " << spec.n_tx << "\n";
    out << "k = " << spec.n_active << "\n";
    out << "m = " << spec.mod_order << "\n";
    out << "nr = " << spec.n_rx << "\n";
    out << "scheme = " << to_string(spec.scheme) << "\n";
    out << "detector = " << to_string(spec.detector) << "\n";
    out << "snr = " << format_double(spec.snr_start_db) << ":" << format_double(spec.snr_step_db)
        << ":" << format_double(spec.snr_stop_db) << "\n";
    out << "seed = " << spec.seed << "\n";
    out << "max_frames = " << spec.max_frames << "\n";
    out << "target_bit_errors = " << spec.target_bit_errors << "\n";
    if (!spec.out_path.empty()) out << "out = " << spec.out_path << "\n";
    return out.str();
}

}  // namespace smsmx
