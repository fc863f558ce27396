#pragma once

#include <cmath>
#include <string>

namespace smsmx {

enum class Scheme {
    SmSmx,    // group index bits + K multiplexed symbols
    PureSm,   // single active antenna (K = 1)
    PureSmx,  // all antennas active (K = N)
};

const char* to_string(Scheme s) noexcept;
// Accepts "sm_smx" | "pure_sm" | "pure_smx"; throws std::invalid_argument otherwise.
Scheme scheme_from_string(const std::string& s);

constexpr bool is_power_of_two(int v) noexcept { return v > 0 && (v & (v - 1)) == 0; }

// log2 of a power of two
constexpr int int_log2(int v) noexcept {
    int b = 0;
    while ((1 << b) < v) ++b;
    return b;
}

// Scheme parameters. Construction validates all invariants; instances are
// immutable value types, safe to share across workers.
struct SmSmxConfig {
    int n_tx;       // N: total transmit antennas
    int n_active;   // K: active antennas (= RF chains) per frame
    int mod_order;  // M: constellation order
    int n_rx;       // Nr: receive antennas
    Scheme scheme;

    SmSmxConfig(int n_tx, int n_active, int mod_order, int n_rx, Scheme scheme);

    int group_count() const noexcept { return n_tx / n_active; }
    int group_bits() const noexcept { return int_log2(group_count()); }
    int symbol_bits() const noexcept { return int_log2(mod_order); }
    int bits_per_frame() const noexcept;
    int active_rf_chains() const noexcept { return n_active; }

    // Per-antenna amplitude scale 1/sqrt(K); keeps total transmit energy at 1
    // for every K so SNR comparisons across schemes are fair.
    double antenna_scale() const noexcept { return 1.0 / std::sqrt(static_cast<double>(n_active)); }

    bool operator==(const SmSmxConfig&) const = default;
};

}  // namespace smsmx
